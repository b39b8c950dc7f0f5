#pragma once

// Growth predictions for solution counts and their empirical verification.
//
// predicted_exponent maps an equation class to the best applicable upper
// bound for the count of box solutions as N grows: either a growth exponent
// (count = O(N^{e+eps})), or the stronger verdicts Empty / Finite. The
// exponent is exact rational arithmetic; only the empirical fit uses floating
// point.

#include "dioph/classify.hpp"
#include "dioph/counting.hpp"

#include <string>
#include <vector>

namespace dioph {

enum class PredictionKind { Exponent, Empty, Finite };

struct ExponentPrediction {
    PredictionKind kind = PredictionKind::Exponent;
    mpq_class exponent;  // meaningful only when kind == Exponent
    std::string method;  // bound family the prediction comes from
    std::string note;
    // When set, the stronger exact statement count <= constant_factor *
    // (2N+1)^(k-1) holds for every N.
    bool has_constant_factor = false;
    mpz_class constant_factor;
};

struct PredictOptions {
    // Variable count at which the many-variables bound k - d applies to
    // degree-d diagonal forms; negative means the default threshold 2^d.
    long long many_vars_threshold = -1;
};

ExponentPrediction predicted_exponent(const EquationClass& cls, BoxMode mode,
                                      const PredictOptions& opts = {});

struct FitPoint {
    long long N;
    unsigned long long count;
};

struct ExponentFit {
    bool empty_observed = false;  // a zero count blocks the log-log fit
    double alpha = 0.0;           // least-squares slope of log count vs log N
    double log_constant = 0.0;
    double max_residual = 0.0;
    std::vector<FitPoint> points;
};

// Needs at least three strictly increasing N >= 1.
ExponentFit fit_exponent(const std::vector<FitPoint>& points);

enum class BoundVerdict { Pass, Fail, EmptyConfirmed, FiniteConfirmed };
const char* verdict_name(BoundVerdict v);

struct BoundCheck {
    BoundVerdict verdict = BoundVerdict::Fail;
    ExponentPrediction prediction;
    ExponentFit fit;  // populated when a fit was possible
    double slack = 0.25;
    std::string detail;
    std::vector<FitPoint> points;
};

// Counts solutions at every N (auto engine), then tests the observed growth
// against the predicted bound. Exponent predictions pass when the fitted
// slope is at most predicted + slack; explicit-constant predictions are
// checked exactly, point by point.
BoundCheck check_bound(const Polynomial& p, BoxMode mode, const std::vector<long long>& Ns,
                       double slack = 0.25, const ClassifyOptions& copts = {},
                       const PredictOptions& popts = {}, const EngineOptions& eopts = {});

}  // namespace dioph
