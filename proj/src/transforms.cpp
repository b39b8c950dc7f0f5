#include "dioph/transforms.hpp"

#include "dioph/numeric.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dioph {

SurdEntry::SurdEntry(const mpq_class& rational) : r(rational), s(0), rad(1) {}

SurdEntry::SurdEntry(const mpq_class& r_, const mpq_class& s_, unsigned long rad_)
    : r(r_), s(s_), rad(rad_) {
    if (rad == 0) throw std::invalid_argument("radicand must be positive");
    if (s == 0) {
        rad = 1;
        return;
    }
    if (rad > 1) {
        mpz_class f, m;
        squarefree_split(mpz_class(rad), f, m);
        if (f != 1) s *= f;
        rad = m.get_ui();
    }
    if (rad == 1) {
        r += s;
        s = 0;
    }
}

namespace {

unsigned long common_rad(const SurdEntry& a, const SurdEntry& b, const char* op) {
    if (a.s != 0 && b.s != 0 && a.rad != b.rad)
        throw MixedRadicands(std::string("cannot ") + op + " sqrt(" + std::to_string(a.rad) +
                             ") and sqrt(" + std::to_string(b.rad) + ") values exactly");
    return a.s != 0 ? a.rad : b.rad;
}

}  // namespace

SurdEntry SurdEntry::operator+(const SurdEntry& o) const {
    unsigned long m = common_rad(*this, o, "add");
    return SurdEntry(r + o.r, s + o.s, m);
}

SurdEntry SurdEntry::operator-(const SurdEntry& o) const { return *this + (-o); }

SurdEntry SurdEntry::operator-() const {
    SurdEntry e;
    e.r = -r;
    e.s = -s;
    e.rad = rad;
    return e;
}

SurdEntry SurdEntry::operator*(const SurdEntry& o) const {
    unsigned long m = common_rad(*this, o, "multiply");
    return SurdEntry(r * o.r + s * o.s * mpq_class(m), r * o.s + s * o.r, m);
}

SurdEntry SurdEntry::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // (r - s*sqrt(m)) / (r^2 - s^2 m); the denominator cannot vanish because
    // m is squarefree and > 1 whenever s != 0.
    mpq_class den = r * r - s * s * mpq_class(rad);
    return SurdEntry(r / den, -s / den, rad);
}

std::string SurdEntry::str() const {
    if (s == 0) return rational_to_string(r);
    mpq_class a = abs(s);
    std::string surd = (a == 1 ? std::string() : rational_to_string(a) + "*") + "sqrt(" +
                       std::to_string(rad) + ")";
    if (r == 0) return (s < 0 ? "-" : "") + surd;
    return rational_to_string(r) + (s < 0 ? " - " : " + ") + surd;
}

TransformMatrix TransformMatrix::identity(std::size_t k) {
    TransformMatrix m;
    m.size = k;
    m.entries.assign(k * k, SurdEntry());
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = SurdEntry(mpq_class(1));
    m.translation.assign(k, mpq_class(0));
    return m;
}

TransformMatrix TransformMatrix::transpose() const {
    TransformMatrix m;
    m.size = size;
    m.entries.assign(size * size, SurdEntry());
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m.at(i, j) = at(j, i);
    m.translation.assign(size, mpq_class(0));  // transposition drops the affine part
    return m;
}

TransformMatrix TransformMatrix::operator*(const TransformMatrix& o) const {
    if (size != o.size) throw std::invalid_argument("matrix size mismatch");
    TransformMatrix m;
    m.size = size;
    m.entries.assign(size * size, SurdEntry());
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            SurdEntry acc;
            for (std::size_t l = 0; l < size; ++l) acc = acc + at(i, l) * o.at(l, j);
            m.at(i, j) = acc;
        }
    m.translation.assign(size, mpq_class(0));
    for (std::size_t i = 0; i < size; ++i) {
        SurdEntry acc{translation[i]};
        for (std::size_t l = 0; l < size; ++l)
            acc = acc + at(i, l) * SurdEntry(o.translation[l]);
        if (!acc.is_rational())
            throw std::invalid_argument("translation becomes irrational under composition");
        m.translation[i] = acc.r;
    }
    return m;
}

SurdEntry TransformMatrix::det() const {
    std::vector<SurdEntry> a = entries;
    auto at2 = [&](std::size_t i, std::size_t j) -> SurdEntry& { return a[i * size + j]; };
    SurdEntry d{mpq_class(1)};
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && at2(pivot, col).is_zero()) ++pivot;
        if (pivot == size) return SurdEntry{mpq_class(0)};
        if (pivot != col) {
            for (std::size_t j = 0; j < size; ++j) std::swap(at2(pivot, j), at2(col, j));
            d = -d;
        }
        d = d * at2(col, col);
        SurdEntry inv = at2(col, col).inverse();
        for (std::size_t row = col + 1; row < size; ++row) {
            if (at2(row, col).is_zero()) continue;
            SurdEntry f = at2(row, col) * inv;
            for (std::size_t j = col; j < size; ++j)
                at2(row, j) = at2(row, j) - f * at2(col, j);
        }
    }
    return d;
}

bool TransformMatrix::is_proper_rotation() const {
    TransformMatrix gram = transpose() * (*this);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            SurdEntry want{mpq_class(i == j ? 1 : 0)};
            if (!(gram.at(i, j) == want)) return false;
        }
    return det() == SurdEntry{mpq_class(1)};
}

TransformMatrix pythagorean_rotation(long long u, long long v) {
    if (v < 1 || u <= v) throw std::invalid_argument("pythagorean rotation needs u > v >= 1");
    mpz_class U(static_cast<long>(u)), V(static_cast<long>(v));
    mpz_class w = U * U + V * V;
    mpq_class cosv(U * U - V * V, w), sinv(2 * U * V, w);
    cosv.canonicalize();
    sinv.canonicalize();
    TransformMatrix m = TransformMatrix::identity(2);
    m.at(0, 0) = cosv;
    m.at(0, 1) = mpq_class(-sinv);
    m.at(1, 0) = sinv;
    m.at(1, 1) = cosv;
    return m;
}

TransformMatrix compose_rotations(const std::vector<PlaneRotation>& rotations, std::size_t k) {
    TransformMatrix acc = TransformMatrix::identity(k);
    for (const auto& pr : rotations) {
        if (pr.axis_a >= k || pr.axis_b >= k || pr.axis_a == pr.axis_b)
            throw std::invalid_argument("rotation axes must be two distinct indices below k");
        if (pr.rot.size != 2) throw std::invalid_argument("plane rotation must be 2x2");
        if (!pr.rot.is_proper_rotation())
            throw std::invalid_argument("plane rotation is not a proper rotation");
        TransformMatrix e = TransformMatrix::identity(k);
        e.at(pr.axis_a, pr.axis_a) = pr.rot.at(0, 0);
        e.at(pr.axis_a, pr.axis_b) = pr.rot.at(0, 1);
        e.at(pr.axis_b, pr.axis_a) = pr.rot.at(1, 0);
        e.at(pr.axis_b, pr.axis_b) = pr.rot.at(1, 1);
        acc = acc * e;
    }
    return acc;
}

HomothetyCase homothety_case(const TransformMatrix& m) {
    bool any_irrational = false, any_rational_nonzero = false, any_mixed_entry = false;
    std::set<unsigned long> rads;
    for (const auto& e : m.entries) {
        if (e.s != 0 && e.r != 0)
            any_mixed_entry = true;
        else if (e.s != 0) {
            any_irrational = true;
            rads.insert(e.rad);
        } else if (e.r != 0) {
            any_rational_nonzero = true;
        }
    }

    HomothetyCase hc;
    if (!any_irrational && !any_mixed_entry) {
        hc.case_id = 1;
        hc.exists = true;
        hc.rad = 1;
        std::vector<mpq_class> parts;
        for (const auto& e : m.entries) parts.push_back(e.r);
        hc.t = denominator_lcm(parts);
        hc.reason = "rational matrix; the multiplier clears all denominators";
        return hc;
    }
    if (any_mixed_entry || any_rational_nonzero) {
        hc.case_id = 4;
        hc.exists = false;
        hc.t = 0;
        hc.reason = "rational and irrational parts occur together; no single multiplier "
                    "makes all entries integer";
        return hc;
    }
    if (rads.size() > 1) {
        hc.case_id = 3;
        hc.exists = false;
        hc.t = 0;
        hc.reason = "entries carry distinct radicands; no single multiplier makes all "
                    "entries integer";
        return hc;
    }
    hc.case_id = 2;
    hc.exists = true;
    hc.rad = *rads.begin();
    std::vector<mpq_class> parts;
    for (const auto& e : m.entries)
        if (e.s != 0) parts.push_back(e.s * mpq_class(hc.rad));
    hc.t = denominator_lcm(parts);
    hc.reason = "pure surd matrix; the multiplier is a multiple of sqrt(" +
                std::to_string(hc.rad) + ")";
    return hc;
}

IntMatrix deformation_matrix(const TransformMatrix& m, const HomothetyCase& hc) {
    if (!hc.exists)
        throw std::invalid_argument("no integer homothety exists for this matrix (case " +
                                    std::to_string(hc.case_id) + ")");
    IntMatrix d(m.size, std::vector<mpz_class>(m.size));
    for (std::size_t i = 0; i < m.size; ++i)
        for (std::size_t j = 0; j < m.size; ++j) {
            const SurdEntry& e = m.at(i, j);
            mpq_class v = hc.case_id == 1
                              ? mpq_class(e.r * mpq_class(hc.t))
                              : mpq_class(e.s * mpq_class(hc.t) * mpq_class(hc.rad));
            v.canonicalize();
            if (v.get_den() != 1)
                throw std::invalid_argument("homothety data does not match the matrix");
            d[i][j] = v.get_num();
        }
    return d;
}

bool check_integer_translation(const TransformMatrix& m) {
    for (const auto& c : m.translation) {
        mpq_class v = c;
        v.canonicalize();
        if (v.get_den() != 1) return false;
    }
    return true;
}

BinaryDiagonalization diagonalize_binary_quadratic(const mpz_class& a11, const mpz_class& a12,
                                                   const mpz_class& a22, TanBranch branch) {
    BinaryDiagonalization out;
    mpz_class delta = a22 - a11;
    out.disc = delta * delta + 4 * a12 * a12;

    if (a12 == 0) {
        out.status = DiagStatus::AlreadyDiagonal;
        out.rotation = TransformMatrix::identity(2);
        out.homothety = homothety_case(*out.rotation);
        out.deformation = {{1, 0}, {0, 1}};
        out.diag_x = a11;
        out.diag_y = a22;
        out.multiplier = 1;
        out.note = "no cross term to remove";
        return out;
    }

    if (!is_perfect_square(out.disc)) {
        out.status = DiagStatus::NoIntegerHomothety;
        out.note = "the rotation tangent is irrational and its cosine leaves every "
                   "single-radicand field; no integer deformation exists";
        return out;
    }

    mpz_class sq = isqrt(out.disc);
    mpq_class tp(delta + sq, 2 * a12), tm(delta - sq, 2 * a12);
    tp.canonicalize();
    tm.canonicalize();
    out.tan_plus = tp;
    out.tan_minus = tm;

    mpq_class tan = branch == TanBranch::Plus ? tp : tm;
    mpz_class pnum = tan.get_num(), qden = tan.get_den();  // qden > 0
    mpz_class w = pnum * pnum + qden * qden;
    mpz_class f, mrad;
    squarefree_split(w, f, mrad);

    TransformMatrix rot = TransformMatrix::identity(2);
    if (mrad == 1) {
        mpq_class c(qden, f), s(pnum, f);
        c.canonicalize();
        s.canonicalize();
        rot.at(0, 0) = c;
        rot.at(0, 1) = mpq_class(-s);
        rot.at(1, 0) = s;
        rot.at(1, 1) = c;
    } else {
        mpq_class c(qden, f * mrad), s(pnum, f * mrad);
        c.canonicalize();
        s.canonicalize();
        unsigned long radv = mrad.get_ui();
        rot.at(0, 0) = SurdEntry(0, c, radv);
        rot.at(0, 1) = SurdEntry(0, mpq_class(-s), radv);
        rot.at(1, 0) = SurdEntry(0, s, radv);
        rot.at(1, 1) = SurdEntry(0, c, radv);
    }
    out.rotation = rot;
    out.homothety = homothety_case(rot);
    out.deformation = deformation_matrix(rot, *out.homothety);

    // The diagonal entries are the eigenvalues of [[a11,a12],[a12,a22]];
    // with a square discriminant they are integers.
    mpz_class num1 = a11 * qden * qden + 2 * a12 * pnum * qden + a22 * pnum * pnum;
    mpz_class num2 = a11 * pnum * pnum - 2 * a12 * pnum * qden + a22 * qden * qden;
    if (num1 % w != 0 || num2 % w != 0)
        throw std::logic_error("diagonal coefficients failed to be integral");
    out.diag_x = num1 / w;
    out.diag_y = num2 / w;
    const HomothetyCase& hc = *out.homothety;
    out.multiplier = hc.case_id == 1 ? mpz_class(hc.t * hc.t)
                                     : mpz_class(hc.t * hc.t * mpz_class(hc.rad));
    out.status = DiagStatus::Deformed;
    out.note = hc.case_id == 1 ? "rational rotation scaled to an integer matrix"
                               : "surd rotation scaled to an integer matrix";
    return out;
}

TransformedEquation apply_transform(const Polynomial& p, const IntAffine& t, bool normalize) {
    const std::size_t k = p.var_count();
    if (t.matrix.size() != k || t.translation.size() != k)
        throw std::invalid_argument("transform dimension mismatch");
    for (const auto& row : t.matrix)
        if (row.size() != k) throw std::invalid_argument("transform matrix is not square");

    std::vector<Polynomial> forms;
    forms.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial L(k);
        for (std::size_t j = 0; j < k; ++j) {
            Exponents e(k, 0);
            e[j] = 1;
            L.add_term(std::move(e), t.matrix[i][j]);
        }
        L.add_term(Exponents(k, 0), t.translation[i]);
        forms.push_back(std::move(L));
    }

    // Lazy power cache per variable.
    std::vector<std::vector<Polynomial>> pows(k);
    auto form_pow = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(k, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * forms[i]);
        return cache[e];
    };

    Polynomial image(k);
    for (const auto& [e, c] : p.terms()) {
        Polynomial prod = Polynomial::constant(k, c);
        for (std::size_t i = 0; i < k; ++i)
            if (e[i] > 0) prod = prod * form_pow(i, e[i]);
        image = image + prod;
    }

    TransformedEquation out{std::move(image), 1};
    if (normalize && !out.image.is_zero()) {
        mpz_class g = out.image.content();
        if (g > 1) {
            out.image = out.image.divided_by(g);
            out.content_removed = g;
        }
    }
    return out;
}

mpz_class determinant(const IntMatrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("matrix is not square");
    std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = mpq_class(m[i][j]);
    mpq_class det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (a[row][col] == 0) continue;
            mpq_class f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
        }
    }
    det.canonicalize();
    return det.get_num();  // integer by construction from integer input
}

namespace {

std::vector<std::vector<mpq_class>> invert(const IntMatrix& m) {
    const std::size_t k = m.size();
    std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = mpq_class(m[i][j]);
        a[i][k + i] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) throw std::invalid_argument("transform matrix is singular");
        std::swap(a[pivot], a[col]);
        mpq_class d = a[col][col];
        for (auto& v : a[col]) v /= d;
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || a[row][col] == 0) continue;
            mpq_class f = a[row][col];
            for (std::size_t j = 0; j < 2 * k; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<mpq_class>> inv(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) inv[i][j] = a[i][k + j];
    return inv;
}

}  // namespace

PreservationReport verify_count_preservation(const Polynomial& p, const IntAffine& t,
                                             const Box& box, const EngineOptions& opts) {
    if (box.mode != BoxMode::IntegerBox)
        throw std::invalid_argument("preservation checks run on centered boxes only");
    const std::size_t k = p.var_count();

    PreservationReport rep;
    rep.det = determinant(t.matrix);
    if (rep.det == 0) throw std::invalid_argument("transform matrix is singular");
    rep.unimodular = (rep.det == 1 || rep.det == -1);

    Polynomial q = apply_transform(p, t, false).image;
    rep.original_count = count_brute(p, box, opts).count;

    auto ys = enumerate_solutions(q, box, std::numeric_limits<std::size_t>::max(), opts);
    rep.transformed_count = ys.size();

    // Forward check by the independent evaluation route: map each solution of
    // the transformed equation through the affine map and evaluate p there.
    std::vector<mpz_class> x(k);
    for (const auto& y : ys) {
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = t.translation[i];
            for (std::size_t j = 0; j < k; ++j)
                x[i] += t.matrix[i][j] * static_cast<long>(y[j]);
        }
        if (p.evaluate(x) != 0) ++rep.forward_violations;
    }

    mpz_class row_norm = 0, c_norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < k; ++j) s += abs(t.matrix[i][j]);
        row_norm = std::max(row_norm, s);
        c_norm = std::max(c_norm, mpz_class(abs(t.translation[i])));
    }
    mpz_class irad = row_norm * mpz_class(static_cast<long>(box.radius)) + c_norm;
    rep.inflated_radius = to_ll(irad);
    Box inflated{rep.inflated_radius, BoxMode::IntegerBox};
    rep.inflated_count = count_brute(p, inflated, opts).count;
    rep.inflation_ok = rep.transformed_count <= rep.inflated_count;

    if (rep.unimodular) {
        auto inv = invert(t.matrix);
        auto xs = enumerate_solutions(p, inflated, std::numeric_limits<std::size_t>::max(), opts);
        std::vector<mpz_class> y(k);
        std::vector<long long> yll(k);
        for (const auto& sol : xs) {
            bool integral = true, inside = true;
            for (std::size_t i = 0; i < k && integral; ++i) {
                mpq_class acc = 0;
                for (std::size_t j = 0; j < k; ++j)
                    acc += inv[i][j] * mpq_class(mpz_class(static_cast<long>(sol[j])) -
                                                 t.translation[j]);
                acc.canonicalize();
                if (acc.get_den() != 1) {
                    integral = false;
                    break;
                }
                y[i] = acc.get_num();
                const long r = static_cast<long>(box.radius);
                if (y[i] < -r || y[i] > r) inside = false;
            }
            if (!integral || !inside) continue;
            ++rep.pulled_back;
            for (std::size_t i = 0; i < k; ++i) yll[i] = to_ll(y[i]);
            if (q.evaluate(yll) != 0) rep.bijection_ok = false;
        }
        if (rep.pulled_back != rep.transformed_count) rep.bijection_ok = false;
    }

    rep.pass = rep.forward_violations == 0 && rep.inflation_ok &&
               (!rep.unimodular || rep.bijection_ok);
    return rep;
}

}  // namespace dioph
