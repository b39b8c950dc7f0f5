#pragma once

// Exact rotations, homotheties, and integer deformation matrices.
//
// Matrix entries are values r + s*sqrt(rad) with rational r, s and a
// squarefree radicand. Arithmetic stays inside one quadratic field: mixing
// two different radicands in one operation throws MixedRadicands. A matrix
// as a whole may still hold entries with different radicands; such matrices
// can be classified (homothety_case) but not multiplied or inverted.

#include "dioph/counting.hpp"
#include "dioph/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

struct MixedRadicands : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// r + s*sqrt(rad). Canonical: rad squarefree; s == 0 forces rad == 1; a
// square factor of rad is folded into s.
struct SurdEntry {
    mpq_class r;
    mpq_class s;
    unsigned long rad = 1;

    SurdEntry() = default;
    SurdEntry(const mpq_class& rational);  // NOLINT: implicit by design
    SurdEntry(long value) : SurdEntry(mpq_class(value)) {}
    SurdEntry(const mpq_class& r_, const mpq_class& s_, unsigned long rad_);

    bool is_zero() const { return r == 0 && s == 0; }
    bool is_rational() const { return s == 0; }
    bool is_pure_surd() const { return r == 0 && s != 0; }

    SurdEntry operator+(const SurdEntry& o) const;
    SurdEntry operator-(const SurdEntry& o) const;
    SurdEntry operator*(const SurdEntry& o) const;
    SurdEntry operator-() const;
    SurdEntry inverse() const;
    bool operator==(const SurdEntry& o) const = default;

    std::string str() const;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Square matrix over a quadratic field plus a rational translation part.
struct TransformMatrix {
    std::size_t size = 0;
    std::vector<SurdEntry> entries;      // row-major, size*size
    std::vector<mpq_class> translation;  // length size, zeros by default

    static TransformMatrix identity(std::size_t k);

    SurdEntry& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
    const SurdEntry& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }

    TransformMatrix transpose() const;
    // Affine composition: (*this) after o, i.e. x -> A(Bx + tb) + ta.
    TransformMatrix operator*(const TransformMatrix& o) const;
    bool operator==(const TransformMatrix& o) const = default;

    SurdEntry det() const;
    // Exact test of M^T M == I and det == 1.
    bool is_proper_rotation() const;
};

// [[ (u^2-v^2)/w, -2uv/w ], [ 2uv/w, (u^2-v^2)/w ]] with w = u^2 + v^2.
// Requires u > v >= 1.
TransformMatrix pythagorean_rotation(long long u, long long v);

struct PlaneRotation {
    std::size_t axis_a;
    std::size_t axis_b;
    TransformMatrix rot;  // 2x2 proper rotation
};

// Embeds each plane rotation into k dimensions and multiplies them in list
// order (the first rotation is the leftmost factor).
TransformMatrix compose_rotations(const std::vector<PlaneRotation>& rotations, std::size_t k);

// lambda = t * sqrt(rad); exists == false for cases 3 and 4.
struct HomothetyCase {
    int case_id = 1;  // 1 rational, 2 pure surd, 3 distinct radicands, 4 mixed
    bool exists = true;
    mpz_class t = 1;
    unsigned long rad = 1;
    std::string reason;
};

// Total classification: the minimal positive lambda making lambda*M integer,
// when one exists.
HomothetyCase homothety_case(const TransformMatrix& m);

// lambda * M for cases 1 and 2; throws std::invalid_argument otherwise.
IntMatrix deformation_matrix(const TransformMatrix& m, const HomothetyCase& hc);

bool check_integer_translation(const TransformMatrix& m);

enum class DiagStatus { AlreadyDiagonal, Deformed, NoIntegerHomothety };

// Exact diagonalization data for a11*x^2 + 2*a12*x*y + a22*y^2.
struct BinaryDiagonalization {
    DiagStatus status = DiagStatus::AlreadyDiagonal;
    mpz_class disc;  // (a22-a11)^2 + 4*a12^2
    std::optional<mpq_class> tan_plus, tan_minus;
    std::optional<TransformMatrix> rotation;
    std::optional<HomothetyCase> homothety;
    IntMatrix deformation;  // empty when no integer route exists
    // F(D x') = multiplier * (diag_x * x'^2 + diag_y * y'^2) for D above.
    mpz_class diag_x, diag_y;
    mpz_class multiplier = 1;
    std::string note;
};

enum class TanBranch { Plus, Minus };

BinaryDiagonalization diagonalize_binary_quadratic(const mpz_class& a11, const mpz_class& a12,
                                                   const mpz_class& a22,
                                                   TanBranch branch = TanBranch::Plus);

// Integer affine map x = M y + c.
struct IntAffine {
    IntMatrix matrix;
    std::vector<mpz_class> translation;
};

struct TransformedEquation {
    Polynomial image;            // p(M y + c), divided by content when normalized
    mpz_class content_removed;   // 1 when nothing was removed
};

TransformedEquation apply_transform(const Polynomial& p, const IntAffine& t,
                                    bool normalize = true);

mpz_class determinant(const IntMatrix& m);

struct PreservationReport {
    unsigned long long original_count = 0;     // zeros of p in the box
    unsigned long long transformed_count = 0;  // zeros of p(My+c) in the box
    unsigned long long inflated_count = 0;     // zeros of p in the inflated box
    long long inflated_radius = 0;
    mpz_class det;
    bool unimodular = false;
    unsigned long long forward_violations = 0;  // transformed solutions whose image misses p
    unsigned long long pulled_back = 0;         // unimodular only
    bool bijection_ok = true;                   // unimodular only
    bool inflation_ok = false;
    bool pass = false;
};

// Exact bookkeeping for how the map x = M y + c moves box solutions:
// every solution of the transformed equation must map onto a solution of p
// inside the inflated box (radius ||M||_inf * N + ||c||_inf), and a
// unimodular map must put them in bijection with the p-solutions whose
// preimage lies in the box. IntegerBox mode only.
PreservationReport verify_count_preservation(const Polynomial& p, const IntAffine& t,
                                             const Box& box, const EngineOptions& opts = {});

}  // namespace dioph
