#pragma once

// Exact solution counting over hypercube boxes.
//
// Every engine returns the exact number of integer zeros of p inside the box
// and refuses up front (BudgetExceeded) when the work estimate is over
// budget; there are no partial results. Engines differ only in cost:
//
//   Brute         every lattice point, any equation
//   Explicit      one variable solved linearly, loop over the rest
//   Sliced        fix chosen variables one value at a time, recurse
//   MeetInMiddle  value tables joined across a variable split (diagonal only)

#include "dioph/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

enum class BoxMode { IntegerBox, NaturalOrthant };

// IntegerBox: [-N, N]^k. NaturalOrthant: [1, N]^k.
struct Box {
    long long radius = 0;
    BoxMode mode = BoxMode::IntegerBox;

    long long lo() const { return mode == BoxMode::IntegerBox ? -radius : 1; }
    long long hi() const { return radius; }
    unsigned long long side() const {
        if (radius < 0) throw std::invalid_argument("negative box radius");
        if (mode == BoxMode::IntegerBox) return 2ULL * static_cast<unsigned long long>(radius) + 1;
        return static_cast<unsigned long long>(radius);
    }
};

struct EngineOptions {
    // Maximum number of lattice points an engine may visit.
    unsigned long long budget = 1'000'000'000ULL;
    // Maximum entries in a meet-in-the-middle join table.
    unsigned long long table_budget = 1ULL << 26;
    // Worker threads for the brute-force engine.
    unsigned threads = 1;
};

struct BudgetExceeded : std::runtime_error {
    mpz_class required;
    BudgetExceeded(const std::string& msg, mpz_class req)
        : std::runtime_error(msg), required(std::move(req)) {}
};

enum class Engine { Brute, Explicit, Sliced, MeetInMiddle };
const char* engine_name(Engine e);
const char* mode_name(BoxMode m);

struct CountResult {
    unsigned long long count = 0;
    Box box;
    Engine engine = Engine::Brute;
    double elapsed_seconds = 0.0;
    // Sliced engine only: (value of the outermost sliced variable, count).
    std::vector<std::pair<long long, unsigned long long>> slice_counts;
};

CountResult count_brute(const Polynomial& p, const Box& box, const EngineOptions& opts = {});

// Brute-force restricted to x1 in [x1_lo, x1_hi] (the remaining variables
// range over the whole box). Summing disjoint ranges that cover the box
// reproduces count_brute exactly; this is the parallel partition unit.
unsigned long long count_brute_range(const Polynomial& p, const Box& box, long long x1_lo,
                                     long long x1_hi, const EngineOptions& opts = {});

CountResult count_explicit(const Polynomial& p, const Box& box, const EngineOptions& opts = {});

// slice_vars: 0-based variable indices of p, substituted outermost-first.
// Each listed variable must occur in p. An empty list is allowed only for
// k <= 2 (plain enumeration); larger equations must name a slice order,
// e.g. default_slice_vars(p).
CountResult count_sliced(const Polynomial& p, const Box& box, std::vector<std::size_t> slice_vars,
                         const EngineOptions& opts = {});

CountResult count_mitm(const Polynomial& p, const Box& box, const EngineOptions& opts = {});

Engine choose_engine(const Polynomial& p);
CountResult count_auto(const Polynomial& p, const Box& box, const EngineOptions& opts = {});

// Default slicing order: diagonal equations slice the minority-sign group
// first (ties toward higher index), general ones go by descending index;
// the solved variable of an explicit equation is never sliced. Keeps two
// active variables unsliced.
std::vector<std::size_t> default_slice_vars(const Polynomial& p);

// Solutions in ascending lexicographic order, at most `limit` of them. The
// budget bounds the number of points visited.
std::vector<std::vector<long long>> enumerate_solutions(const Polynomial& p, const Box& box,
                                                        std::size_t limit,
                                                        const EngineOptions& opts = {});

}  // namespace dioph
