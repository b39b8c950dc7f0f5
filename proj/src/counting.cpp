#include "dioph/counting.hpp"

#include "dioph/classify.hpp"
#include "dioph/numeric.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace dioph {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Brute: return "brute";
        case Engine::Explicit: return "explicit";
        case Engine::Sliced: return "sliced";
        case Engine::MeetInMiddle: return "mitm";
    }
    return "?";
}

const char* mode_name(BoxMode m) {
    return m == BoxMode::IntegerBox ? "box" : "orthant";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

mpz_class pow_z(unsigned long long base, std::size_t exp) {
    mpz_class r;
    mpz_class b = mpz_class(static_cast<unsigned long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

void require_budget(const mpz_class& required, unsigned long long budget, const char* what) {
    mpz_class limit = mpz_class(static_cast<unsigned long>(budget));
    if (required > limit)
        throw BudgetExceeded(std::string("refusing ") + what + ": needs " + required.get_str() +
                                 ", budget is " + limit.get_str(),
                             required);
}

// Visits [lo,hi]^k in ascending lexicographic order, with a separate range
// for the first coordinate. f returns false to stop early.
template <class F>
void for_each_point(std::size_t k, long long lo, long long hi, long long lo0, long long hi0,
                    F&& f) {
    if (k == 0) {
        std::vector<long long> x;
        f(x);
        return;
    }
    if (lo0 > hi0 || (k > 1 && lo > hi)) return;
    std::vector<long long> x(k, lo);
    x[0] = lo0;
    while (true) {
        if (!f(x)) return;
        std::size_t i = k;
        for (;;) {
            if (i == 0) return;
            --i;
            long long limit = (i == 0) ? hi0 : hi;
            if (x[i] < limit) {
                ++x[i];
                std::fill(x.begin() + i + 1, x.end(), lo);
                break;
            }
        }
    }
}

template <class F>
void for_each_point(std::size_t k, long long lo, long long hi, F&& f) {
    for_each_point(k, lo, hi, lo, hi, std::forward<F>(f));
}

// Exact evaluation at box points. When the coefficient mass cannot exceed
// 2^62 at any box point, a plain int64 accumulation is used (no overflow by
// construction); otherwise everything goes through GMP.
class ExactEvaluator {
  public:
    ExactEvaluator(const Polynomial& p, long long max_abs) : p_(&p) {
        mpz_class bound = 0, power;
        mpz_class base(static_cast<long>(std::max<long long>(max_abs, 1)));
        for (const auto& [e, c] : p.terms()) {
            unsigned total = std::accumulate(e.begin(), e.end(), 0u);
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), total);
            bound += abs(c) * power;
        }
        i64_ok_ = bound < (mpz_class(1) << 62);
        if (i64_ok_) {
            for (const auto& [e, c] : p.terms()) {
                TermI64 t;
                t.coeff = static_cast<long long>(c.get_si());
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] > 0) t.pows.emplace_back(i, e[i]);
                terms_.push_back(std::move(t));
            }
        }
    }

    bool zero_at(const std::vector<long long>& x) const {
        if (i64_ok_) return value_i64(x) == 0;
        return p_->evaluate(x) == 0;
    }

    bool fits_int64() const { return i64_ok_; }

    long long value_i64(const std::vector<long long>& x) const {
        long long acc = 0;
        for (const auto& t : terms_) {
            long long v = t.coeff;
            for (const auto& [var, exp] : t.pows) {
                long long b = x[var];
                for (unsigned j = 0; j < exp; ++j) v *= b;
            }
            acc += v;
        }
        return acc;
    }

    mpz_class value(const std::vector<long long>& x) const {
        if (i64_ok_) return mpz_class(static_cast<long>(value_i64(x)));
        return p_->evaluate(x);
    }

  private:
    struct TermI64 {
        long long coeff;
        std::vector<std::pair<std::size_t, unsigned>> pows;
    };
    const Polynomial* p_;
    bool i64_ok_ = false;
    std::vector<TermI64> terms_;
};

unsigned long long brute_range_nocheck(const Polynomial& p, const Box& box, long long lo0,
                                       long long hi0) {
    const std::size_t k = p.var_count();
    if (k == 0) return p.evaluate(std::vector<long long>{}) == 0 ? 1 : 0;
    ExactEvaluator ev(p, box.radius);
    unsigned long long count = 0;
    for_each_point(k, box.lo(), box.hi(), lo0, hi0, [&](const std::vector<long long>& x) {
        if (ev.zero_at(x)) ++count;
        return true;
    });
    return count;
}

__int128 to_i128(const mpz_class& v) {
    mpz_class a = abs(v);
    mpz_class hi = a >> 64;
    mpz_class lo = a - (hi << 64);
    unsigned __int128 r =
        (static_cast<unsigned __int128>(hi.get_ui()) << 64) | static_cast<unsigned __int128>(lo.get_ui());
    return v < 0 ? -static_cast<__int128>(r) : static_cast<__int128>(r);
}

struct I128Hash {
    std::size_t operator()(__int128 v) const {
        auto u = static_cast<unsigned __int128>(v);
        std::uint64_t x = static_cast<std::uint64_t>(u) ^
                          (static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

struct DiagonalTerm {
    std::size_t var;
    unsigned exp;
    __int128 coeff;
};

__int128 half_value(const std::vector<DiagonalTerm>& terms, const std::vector<long long>& x,
                    std::size_t base) {
    __int128 acc = 0;
    for (const auto& t : terms) {
        __int128 v = t.coeff;
        long long b = x[t.var - base];
        for (unsigned j = 0; j < t.exp; ++j) v *= b;
        acc += v;
    }
    return acc;
}

}  // namespace

CountResult count_brute(const Polynomial& p, const Box& box, const EngineOptions& opts) {
    auto t0 = Clock::now();
    const std::size_t k = p.var_count();
    require_budget(pow_z(box.side(), k), opts.budget, "brute-force enumeration");

    CountResult r;
    r.box = box;
    r.engine = Engine::Brute;
    if (k > 0 && box.side() == 0) {
        r.elapsed_seconds = elapsed_since(t0);
        return r;
    }

    unsigned threads = std::max(1u, opts.threads);
    unsigned long long span = k == 0 ? 1 : box.side();
    if (k == 0 || threads == 1 || span < 2ULL * threads) {
        r.count = brute_range_nocheck(p, box, box.lo(), box.hi());
    } else {
        // Contiguous chunks of the first coordinate, summed in chunk order.
        long long lo = box.lo(), hi = box.hi();
        unsigned long long chunk = (span + threads - 1) / threads;
        std::vector<unsigned long long> partial(threads, 0);
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            long long a = lo + static_cast<long long>(t * chunk);
            if (a > hi) break;
            long long b = std::min(hi, a + static_cast<long long>(chunk) - 1);
            workers.emplace_back(
                [&, a, b, t] { partial[t] = brute_range_nocheck(p, box, a, b); });
        }
        for (auto& w : workers) w.join();
        for (unsigned long long c : partial) r.count += c;
    }
    r.elapsed_seconds = elapsed_since(t0);
    return r;
}

unsigned long long count_brute_range(const Polynomial& p, const Box& box, long long x1_lo,
                                     long long x1_hi, const EngineOptions& opts) {
    if (p.var_count() == 0) throw std::invalid_argument("range counting needs at least one variable");
    if (x1_lo > x1_hi) return 0;
    if (x1_lo < box.lo() || x1_hi > box.hi())
        throw std::invalid_argument("x1 range outside the box");
    mpz_class width(static_cast<long>(x1_hi - x1_lo + 1));
    require_budget(width * pow_z(box.side(), p.var_count() - 1), opts.budget,
                   "brute-force enumeration");
    return brute_range_nocheck(p, box, x1_lo, x1_hi);
}

CountResult count_explicit(const Polynomial& p, const Box& box, const EngineOptions& opts) {
    auto t0 = Clock::now();
    EquationClass cls = classify(p);
    if (cls.kind != EquationKind::DiagonalExplicit)
        throw std::invalid_argument("equation has no linearly solvable variable");
    const std::size_t k = p.var_count();
    const std::size_t e = *cls.explicit_var;
    require_budget(pow_z(box.side(), k - 1), opts.budget, "explicit-variable enumeration");

    CountResult r;
    r.box = box;
    r.engine = Engine::Explicit;
    if (box.side() == 0) {
        r.elapsed_seconds = elapsed_since(t0);
        return r;
    }

    Exponents unit(k, 0);
    unit[e] = 1;
    mpz_class eps = p.coefficient(unit);
    Polynomial q = p;
    q.add_term(unit, -eps);  // q = p without the solved variable's term
    long long eps_ll = eps > 0 ? 1 : -1;

    ExactEvaluator ev(q, box.radius);
    const long long lo = box.lo(), hi = box.hi();
    std::vector<long long> full(k, 0);
    std::vector<std::size_t> free_vars;
    for (std::size_t i = 0; i < k; ++i)
        if (i != e) free_vars.push_back(i);

    unsigned long long count = 0;
    if (ev.fits_int64()) {
        for_each_point(k - 1, lo, hi, [&](const std::vector<long long>& sub) {
            for (std::size_t i = 0; i < free_vars.size(); ++i) full[free_vars[i]] = sub[i];
            long long v = -eps_ll * ev.value_i64(full);
            if (v >= lo && v <= hi) ++count;
            return true;
        });
    } else {
        for_each_point(k - 1, lo, hi, [&](const std::vector<long long>& sub) {
            for (std::size_t i = 0; i < free_vars.size(); ++i) full[free_vars[i]] = sub[i];
            mpz_class v = -eps * ev.value(full);
            if (v >= static_cast<long>(lo) && v <= static_cast<long>(hi)) ++count;
            return true;
        });
    }
    r.count = count;
    r.elapsed_seconds = elapsed_since(t0);
    return r;
}

std::vector<std::size_t> default_slice_vars(const Polynomial& p) {
    std::vector<bool> used = p.used_vars();
    std::size_t active = std::count(used.begin(), used.end(), true);
    if (active <= 2) return {};

    EquationClass cls;
    bool have_cls = false;
    try {
        cls = classify(p);
        have_cls = true;
    } catch (const std::exception&) {
    }

    std::vector<std::size_t> order;
    bool diagonal =
        have_cls && (cls.kind == EquationKind::DiagonalExplicit ||
                     cls.kind == EquationKind::DiagonalThue ||
                     cls.kind == EquationKind::DiagonalHomogeneous);
    if (diagonal) {
        // After sign normalization the negative-coefficient group is never
        // larger; slice it first, higher indices first within a group.
        std::vector<std::size_t> neg, pos;
        for (const auto& [e, c] : p.terms()) {
            std::size_t var = 0, nz = 0;
            for (std::size_t i = 0; i < p.var_count(); ++i)
                if (e[i] > 0) {
                    ++nz;
                    var = i;
                }
            if (nz != 1) continue;
            if (cls.explicit_var && var == *cls.explicit_var) continue;
            mpz_class s = cls.negated ? mpz_class(-c) : c;
            (s < 0 ? neg : pos).push_back(var);
        }
        std::sort(neg.rbegin(), neg.rend());
        std::sort(pos.rbegin(), pos.rend());
        order = neg;
        order.insert(order.end(), pos.begin(), pos.end());
    } else {
        for (std::size_t i = p.var_count(); i-- > 0;)
            if (used[i]) order.push_back(i);
    }
    order.resize(std::min(order.size(), active - 2));
    return order;
}

namespace {

unsigned long long sliced_rec(const Polynomial& q, const Box& box,
                              std::vector<std::size_t> svars) {
    if (svars.empty()) return brute_range_nocheck(q, box, box.lo(), box.hi());
    std::size_t v = svars.front();
    std::vector<std::size_t> rest(svars.begin() + 1, svars.end());
    for (auto& s : rest)
        if (s > v) --s;
    unsigned long long sum = 0;
    for (long long h = box.lo(); h <= box.hi(); ++h)
        sum += sliced_rec(q.substitute(v, mpz_class(static_cast<long>(h))), box, rest);
    return sum;
}

}  // namespace

CountResult count_sliced(const Polynomial& p, const Box& box, std::vector<std::size_t> slice_vars,
                         const EngineOptions& opts) {
    auto t0 = Clock::now();
    const std::size_t k = p.var_count();
    if (slice_vars.empty() && k > 2)
        throw std::invalid_argument("slicing more than two variables needs an explicit "
                                    "slice order");
    std::vector<bool> seen(k, false);
    for (std::size_t v : slice_vars) {
        if (v >= k) throw std::invalid_argument("slice variable out of range");
        if (seen[v]) throw std::invalid_argument("duplicate slice variable");
        if (!p.uses_var(v))
            throw std::invalid_argument("slice variable x" + std::to_string(v + 1) +
                                        " does not occur in the equation");
        seen[v] = true;
    }
    require_budget(pow_z(box.side(), k), opts.budget, "sliced enumeration");

    CountResult r;
    r.box = box;
    r.engine = Engine::Sliced;
    if (k > 0 && box.side() == 0) {
        r.elapsed_seconds = elapsed_since(t0);
        return r;
    }
    if (slice_vars.empty()) {
        r.count = brute_range_nocheck(p, box, box.lo(), box.hi());
        r.elapsed_seconds = elapsed_since(t0);
        return r;
    }

    std::size_t v0 = slice_vars.front();
    std::vector<std::size_t> rest(slice_vars.begin() + 1, slice_vars.end());
    for (auto& s : rest)
        if (s > v0) --s;
    for (long long h = box.lo(); h <= box.hi(); ++h) {
        unsigned long long c =
            sliced_rec(p.substitute(v0, mpz_class(static_cast<long>(h))), box, rest);
        r.slice_counts.emplace_back(h, c);
        r.count += c;
    }
    r.elapsed_seconds = elapsed_since(t0);
    return r;
}

CountResult count_mitm(const Polynomial& p, const Box& box, const EngineOptions& opts) {
    auto t0 = Clock::now();
    const std::size_t k = p.var_count();

    std::vector<DiagonalTerm> all;
    std::vector<bool> seen(k, false);
    mpz_class c0 = 0;
    mpz_class bound = 0, power;
    mpz_class base(static_cast<long>(std::max<long long>(box.radius, 1)));
    for (const auto& [e, c] : p.terms()) {
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (e[i] > 0) {
                ++nz;
                var = i;
            }
        if (nz == 0) {
            c0 = c;
            bound += abs(c);
            continue;
        }
        if (nz > 1 || seen[var])
            throw std::invalid_argument("meet-in-the-middle needs a diagonal equation");
        seen[var] = true;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e[var]);
        bound += abs(c) * power;
        all.push_back({var, e[var], 0});
    }
    if (bound >= (mpz_class(1) << 126))
        throw std::overflow_error("coefficient range too large for the join-table keys");
    for (auto& t : all) {
        Exponents e(k, 0);
        e[t.var] = t.exp;
        t.coeff = to_i128(p.coefficient(e));
    }

    const std::size_t h = (k + 1) / 2;  // first-half width; the table gets the smaller half
    require_budget(pow_z(box.side(), h) + pow_z(box.side(), k - h), opts.budget,
                   "meet-in-the-middle enumeration");
    require_budget(pow_z(box.side(), k - h), opts.table_budget,
                   "meet-in-the-middle join table");

    CountResult r;
    r.box = box;
    r.engine = Engine::MeetInMiddle;
    if (k > 0 && box.side() == 0) {
        r.elapsed_seconds = elapsed_since(t0);
        return r;
    }

    std::vector<DiagonalTerm> first, second;
    for (const auto& t : all) (t.var < h ? first : second).push_back(t);

    const long long lo = box.lo(), hi = box.hi();
    std::unordered_map<__int128, unsigned long long, I128Hash> table;
    for_each_point(k - h, lo, hi, [&](const std::vector<long long>& x) {
        ++table[half_value(second, x, h)];
        return true;
    });

    __int128 c0_128 = to_i128(c0);
    unsigned long long count = 0;
    for_each_point(h, lo, hi, [&](const std::vector<long long>& x) {
        __int128 v = c0_128 + half_value(first, x, 0);
        auto it = table.find(-v);
        if (it != table.end()) count += it->second;
        return true;
    });
    r.count = count;
    r.elapsed_seconds = elapsed_since(t0);
    return r;
}

Engine choose_engine(const Polynomial& p) {
    if (p.var_count() == 0 || p.is_zero()) return Engine::Brute;
    EquationClass cls;
    try {
        cls = classify(p);
    } catch (const DegenerateEquation&) {
        return Engine::Brute;
    }
    switch (cls.kind) {
        case EquationKind::DiagonalExplicit:
            return Engine::Explicit;
        case EquationKind::DiagonalThue:
        case EquationKind::DiagonalHomogeneous:
            return Engine::MeetInMiddle;
        default: {
            auto used = p.used_vars();
            std::size_t active = std::count(used.begin(), used.end(), true);
            return active > 2 ? Engine::Sliced : Engine::Brute;
        }
    }
}

CountResult count_auto(const Polynomial& p, const Box& box, const EngineOptions& opts) {
    const Engine choice = choose_engine(p);
    if (choice == Engine::Explicit) return count_explicit(p, box, opts);
    if (choice == Engine::Sliced) return count_sliced(p, box, default_slice_vars(p), opts);
    if (choice == Engine::MeetInMiddle) {
        try {
            return count_mitm(p, box, opts);
        } catch (const std::overflow_error&) {
            // join keys would not fit; enumerate directly
        }
    }
    return count_brute(p, box, opts);
}

std::vector<std::vector<long long>> enumerate_solutions(const Polynomial& p, const Box& box,
                                                        std::size_t limit,
                                                        const EngineOptions& opts) {
    std::vector<std::vector<long long>> out;
    if (limit == 0) return out;
    const std::size_t k = p.var_count();
    if (k > 0 && box.side() == 0) return out;
    ExactEvaluator ev(p, box.radius);
    unsigned long long visited = 0;
    bool over_budget = false;
    for_each_point(k, box.lo(), box.hi(), [&](const std::vector<long long>& x) {
        if (visited == opts.budget) {
            over_budget = true;
            return false;
        }
        ++visited;
        if (ev.zero_at(x)) {
            out.push_back(x);
            if (out.size() == limit) return false;
        }
        return true;
    });
    if (over_budget)
        throw BudgetExceeded("enumeration stopped: budget of " + std::to_string(opts.budget) +
                                 " points exhausted",
                             mpz_class(static_cast<unsigned long>(opts.budget)));
    return out;
}

}  // namespace dioph
