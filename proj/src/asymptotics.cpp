#include "dioph/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dioph {

const char* verdict_name(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Pass: return "pass";
        case BoundVerdict::Fail: return "fail";
        case BoundVerdict::EmptyConfirmed: return "empty-confirmed";
        case BoundVerdict::FiniteConfirmed: return "finite-confirmed";
    }
    return "?";
}

namespace {

mpq_class q(long long num, long long den = 1) {
    mpq_class r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

long long many_vars_threshold(unsigned degree, const PredictOptions& opts) {
    if (opts.many_vars_threshold >= 0) return opts.many_vars_threshold;
    if (degree >= 62) return std::numeric_limits<long long>::max();
    return 1LL << degree;
}

// Caps an indefinite-form prediction with the many-variables bound k - d.
void apply_many_vars_cap(ExponentPrediction& pred, const EquationClass& cls,
                         const PredictOptions& opts) {
    if (pred.kind != PredictionKind::Exponent) return;
    const long long k = static_cast<long long>(cls.var_count);
    if (k < many_vars_threshold(cls.degree, opts)) return;
    if (k < static_cast<long long>(cls.degree)) return;
    mpq_class cap = q(k - static_cast<long long>(cls.degree));
    if (cap < pred.exponent) {
        pred.exponent = cap;
        pred.method = "circle-method";
        pred.note = "heuristic: many-variables bound k - d applied (k >= threshold)";
    }
}

}  // namespace

ExponentPrediction predicted_exponent(const EquationClass& cls, BoxMode mode,
                                      const PredictOptions& opts) {
    ExponentPrediction out;
    const long long k = static_cast<long long>(cls.var_count);
    const long long d = static_cast<long long>(cls.degree);
    const long long m = static_cast<long long>(cls.pos_count);
    const bool orthant = mode == BoxMode::NaturalOrthant;
    // Sign arguments need d-th powers of one sign: even degree, or positive
    // variables only.
    const bool signs_decided = (d % 2 == 0) || orthant;

    if (d == 0) {
        out.kind = PredictionKind::Empty;
        out.method = "constant-equation";
        out.note = "nonzero constant equation has no solutions";
        return out;
    }

    switch (cls.kind) {
        case EquationKind::DiagonalExplicit: {
            if (signs_decided) {
                out.exponent = q(m - 1, d) + q(k - m);
                out.method = "slice-induction";
            } else {
                // Odd-degree powers take both signs on a centered box, which
                // breaks the slicing count; fall back to the general
                // irreducible-hypersurface bound.
                out.exponent = q(k - 1) + q(1, d);
                out.method = "pila-bound";
                out.note = "odd degree over a signed box: sign-based slicing unavailable";
            }
            return out;
        }

        case EquationKind::DiagonalThue: {
            if (signs_decided && m == k) {
                if (cls.constant > 0) {
                    out.kind = PredictionKind::Empty;
                    out.method = "definite-form";
                    out.note = "all powers one-signed and the constant has the same sign";
                } else {
                    out.kind = PredictionKind::Finite;
                    out.method = "bounded-form";
                    out.note = "every variable satisfies |x|^d <= |c|";
                }
                return out;
            }
            if (signs_decided) {
                out.exponent = q(k - std::max(m, k - m));
                out.method = "signature-slicing";
            } else {
                out.exponent = q(k - 1) + q(1, d);
                out.method = "pila-bound";
            }
            apply_many_vars_cap(out, cls, opts);
            return out;
        }

        case EquationKind::DiagonalHomogeneous: {
            if (signs_decided && m == k) {
                if (orthant) {
                    out.kind = PredictionKind::Empty;
                    out.method = "definite-form";
                    out.note = "a sum of positive terms cannot vanish";
                } else {
                    out.kind = PredictionKind::Finite;
                    out.method = "definite-form";
                    out.note = "definite form: the origin is the only zero";
                }
                return out;
            }
            if (signs_decided) {
                out.exponent = q(k - std::max(m, k - m));
                out.method = "signature-slicing";
            } else {
                out.exponent = q(k - 1) + q(1, d);
                out.method = "pila-bound";
            }
            apply_many_vars_cap(out, cls, opts);
            return out;
        }

        case EquationKind::GeneralIrreducibleAsserted: {
            if (cls.genus_ge1_asserted && k >= 2) {
                // Every two-variable restriction is asserted to be a curve of
                // genus >= 1, so each of the (2N+1)^(k-2) restrictions carries
                // finitely many integer points.
                out.exponent = q(k - 2);
                out.method = "siegel-genus";
                if (k == 2)
                    out.note = "a curve of genus >= 1 has finitely many integer points";
                return out;
            }
            out.exponent = q(k - 1) + q(1, d);
            out.method = "pila-bound";
            return out;
        }

        case EquationKind::GeneralReducibleAllowed: {
            out.exponent = q(k - 1);
            out.method = "degree-fiber-bound";
            out.has_constant_factor = true;
            out.constant_factor = static_cast<long>(d);
            out.note = "exact: each axis line meets the zero set at most d times unless it "
                       "lies inside it";
            return out;
        }
    }
    return out;
}

ExponentFit fit_exponent(const std::vector<FitPoint>& points) {
    if (points.size() < 3)
        throw std::invalid_argument("exponent fit needs at least three sample sizes");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].N < 1) throw std::invalid_argument("sample sizes must be >= 1");
        if (i > 0 && points[i].N <= points[i - 1].N)
            throw std::invalid_argument("sample sizes must be strictly increasing");
    }
    ExponentFit fit;
    fit.points = points;
    for (const auto& pt : points)
        if (pt.count == 0) {
            fit.empty_observed = true;
            return fit;
        }

    const double n = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& pt : points) {
        double x = std::log(static_cast<double>(pt.N));
        double y = std::log(static_cast<double>(pt.count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.alpha = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.log_constant = (sy - fit.alpha * sx) / n;
    for (const auto& pt : points) {
        double x = std::log(static_cast<double>(pt.N));
        double y = std::log(static_cast<double>(pt.count));
        fit.max_residual =
            std::max(fit.max_residual, std::fabs(y - (fit.log_constant + fit.alpha * x)));
    }
    return fit;
}

BoundCheck check_bound(const Polynomial& p, BoxMode mode, const std::vector<long long>& Ns,
                       double slack, const ClassifyOptions& copts, const PredictOptions& popts,
                       const EngineOptions& eopts) {
    if (Ns.empty()) throw std::invalid_argument("no sample sizes");
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1])
            throw std::invalid_argument("sample sizes must be strictly increasing");

    EquationClass cls = classify(p, copts);
    BoundCheck out;
    out.slack = slack;
    out.prediction = predicted_exponent(cls, mode, popts);
    for (long long N : Ns)
        out.points.push_back({N, count_auto(p, Box{N, mode}, eopts).count});

    const auto all_zero = std::all_of(out.points.begin(), out.points.end(),
                                      [](const FitPoint& pt) { return pt.count == 0; });
    const auto all_equal = std::all_of(out.points.begin(), out.points.end(),
                                       [&](const FitPoint& pt) {
                                           return pt.count == out.points.front().count;
                                       });

    switch (out.prediction.kind) {
        case PredictionKind::Empty:
            if (all_zero) {
                out.verdict = BoundVerdict::EmptyConfirmed;
                out.detail = "no solutions at any sampled size";
            } else {
                out.verdict = BoundVerdict::Fail;
                out.detail = "solutions found although the prediction is empty";
            }
            return out;

        case PredictionKind::Finite:
            if (all_equal) {
                out.verdict = BoundVerdict::FiniteConfirmed;
                out.detail = "count is stable at " + std::to_string(out.points.front().count);
                return out;
            }
            if (out.points.size() >= 3 && !all_zero) {
                out.fit = fit_exponent(out.points);
                if (!out.fit.empty_observed && out.fit.alpha <= slack) {
                    out.verdict = BoundVerdict::Pass;
                    out.detail = "growth within slack of constant";
                    return out;
                }
            }
            out.verdict = BoundVerdict::Fail;
            out.detail = "count still grows although the prediction is finite";
            return out;

        case PredictionKind::Exponent:
            break;
    }

    if (out.prediction.has_constant_factor) {
        const std::size_t k = p.var_count();
        for (const auto& pt : out.points) {
            mpz_class side(static_cast<long>(2 * pt.N + 1));
            mpz_class bound;
            mpz_pow_ui(bound.get_mpz_t(), side.get_mpz_t(), k - 1);
            bound *= out.prediction.constant_factor;
            if (mpz_class(static_cast<unsigned long>(pt.count)) > bound) {
                out.verdict = BoundVerdict::Fail;
                out.detail = "count " + std::to_string(pt.count) + " exceeds the exact bound at N=" +
                             std::to_string(pt.N);
                return out;
            }
        }
        out.verdict = BoundVerdict::Pass;
        out.detail = "exact per-size bound holds at every sampled size";
        if (out.points.size() >= 3 && !all_zero &&
            std::none_of(out.points.begin(), out.points.end(),
                         [](const FitPoint& pt) { return pt.count == 0; }))
            out.fit = fit_exponent(out.points);
        return out;
    }

    out.fit = fit_exponent(out.points);
    if (out.fit.empty_observed) {
        if (all_zero) {
            out.verdict = BoundVerdict::EmptyConfirmed;
            out.detail = "no solutions at any sampled size";
        } else {
            out.verdict = BoundVerdict::Pass;
            out.detail = "zero counts at some sizes prevent a fit; an upper bound is not "
                         "contradicted";
        }
        return out;
    }
    const double predicted = out.prediction.exponent.get_d();
    if (out.fit.alpha <= predicted + slack) {
        out.verdict = BoundVerdict::Pass;
        out.detail = "fitted exponent within slack of the prediction";
    } else {
        out.verdict = BoundVerdict::Fail;
        out.detail = "fitted exponent exceeds the prediction by more than the slack";
    }
    return out;
}

}  // namespace dioph
