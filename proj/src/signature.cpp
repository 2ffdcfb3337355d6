/*
   Copyright 2026 hqmaps contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hqmaps/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "hqmaps/errors.hpp"
#include "hqmaps/fpq.hpp"
#include "hqmaps/invariant.hpp"

namespace hqmaps {

// ------------------------------------------------------------- CoeffMatrix

CoeffMatrix CoeffMatrix::from_poly(const HermPoly& P) {
    if (!P.is_hermitian_symmetric())
        throw NotHermitian("coefficient matrix: polynomial is not Hermitian "
                           "symmetric");
    std::set<Mono> basis_set;
    for (const auto& [key, c] : P.terms()) {
        BiMonomial bm = HermPoly::split_key(key);
        basis_set.insert(bm.alpha);
        basis_set.insert(bm.beta);
    }
    CoeffMatrix M;
    M.basis_.assign(basis_set.begin(), basis_set.end());
    size_t n = M.basis_.size();
    M.entries_.assign(n * n, CycNum());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            M.entries_[i * n + j] = P.coeff(M.basis_[i], M.basis_[j]);
    return M;
}

CoeffMatrix CoeffMatrix::from_entries(std::vector<Mono> basis,
                                      std::vector<CycNum> entries) {
    CoeffMatrix M;
    M.basis_ = std::move(basis);
    M.entries_ = std::move(entries);
    size_t n = M.basis_.size();
    if (M.entries_.size() != n * n)
        throw DimensionMismatch("from_entries: entry count must be basis^2");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(M.at(i, j) == M.at(j, i).conj()))
                throw NotHermitian("from_entries: matrix is not Hermitian");
    return M;
}

bool CoeffMatrix::is_diagonal() const {
    size_t n = size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

unsigned CoeffMatrix::exact_rank() const {
    size_t n = size();
    std::vector<CycNum> a = entries_;
    auto at_rc = [&](size_t i, size_t j) -> CycNum& { return a[i * n + j]; };
    unsigned rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t pivot = rank;
        while (pivot < n && at_rc(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue;
        for (size_t j = 0; j < n; ++j) std::swap(at_rc(pivot, j), at_rc(rank, j));
        CycNum inv = at_rc(rank, col).inverse();
        for (size_t i = rank + 1; i < n; ++i) {
            if (at_rc(i, col).is_zero()) continue;
            CycNum f = at_rc(i, col) * inv;
            for (size_t j = col; j < n; ++j)
                at_rc(i, j) -= f * at_rc(rank, j);
        }
        ++rank;
    }
    return rank;
}

// ----------------------------------------------------- certified eigen data

namespace {

using CMat = std::vector<std::vector<ComplexInterval>>;

CMat embed_matrix(const CoeffMatrix& M, bool conjugate, mpfr_prec_t prec) {
    size_t n = M.size();
    CMat F(n, std::vector<ComplexInterval>(n, ComplexInterval(prec)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            ComplexInterval e = M.at(i, j).embed(prec);
            F[i][j] = conjugate ? e.conj() : e;
        }
    }
    return F;
}

// fixed-precision mpfr scratch array with RAII
class MpfrArray {
   public:
    MpfrArray(size_t n, mpfr_prec_t prec) : v_(n) {
        for (auto& x : v_) mpfr_init2(&x, prec);
    }
    MpfrArray(const MpfrArray&) = delete;
    MpfrArray& operator=(const MpfrArray&) = delete;
    ~MpfrArray() {
        for (auto& x : v_) mpfr_clear(&x);
    }
    mpfr_ptr operator[](size_t i) { return &v_[i]; }

   private:
    std::vector<__mpfr_struct> v_;
};

// Dense point-complex matrix at fixed precision (plain RNDN arithmetic).
// Used for the Jacobi iteration itself; rigor comes afterwards from one
// interval evaluation of U^dagger M U with the converged point U.
struct PointMatrix {
    size_t n;
    MpfrArray re, im;
    PointMatrix(size_t n_, mpfr_prec_t prec)
        : n(n_), re(n_ * n_, prec), im(n_ * n_, prec) {
        for (size_t i = 0; i < n * n; ++i) {
            mpfr_set_zero(re[i], 1);
            mpfr_set_zero(im[i], 1);
        }
    }
    mpfr_ptr rat(size_t i, size_t j) { return re[i * n + j]; }
    mpfr_ptr iat(size_t i, size_t j) { return im[i * n + j]; }
};

// c, (sr, si) with [[c, s], [-conj(s), c]] zeroing the (i, j) entry of the
// Hermitian block [[a, f], [conj(f), b]]; false when |f| is at the noise
// floor relative to the diagonal.
bool rotation_params(mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr fr, mpfr_srcptr fi,
                     mpfr_prec_t prec, mpfr_ptr c, mpfr_ptr sr, mpfr_ptr si) {
    mpfr_t fa, th, root, t, w;
    mpfr_inits2(prec, fa, th, root, t, w, static_cast<mpfr_ptr>(nullptr));
    bool ok = false;
    mpfr_hypot(fa, fr, fi, MPFR_RNDN);
    mpfr_abs(th, a, MPFR_RNDN);
    mpfr_abs(w, b, MPFR_RNDN);
    mpfr_add(w, w, th, MPFR_RNDN);
    mpfr_add_ui(w, w, 1, MPFR_RNDN);
    mpfr_mul_2si(w, w, -(prec - 8), MPFR_RNDN);
    if (!mpfr_zero_p(fa) && mpfr_cmp(fa, w) > 0) {
        // zeroing root of t^2 - 2*theta*t - 1 with |t| <= 1
        mpfr_sub(th, b, a, MPFR_RNDN);
        mpfr_div(th, th, fa, MPFR_RNDN);
        mpfr_div_2ui(th, th, 1, MPFR_RNDN);
        mpfr_sqr(root, th, MPFR_RNDN);
        mpfr_add_ui(root, root, 1, MPFR_RNDN);
        mpfr_sqrt(root, root, MPFR_RNDN);
        if (mpfr_sgn(th) > 0)
            mpfr_sub(t, th, root, MPFR_RNDN);
        else
            mpfr_add(t, th, root, MPFR_RNDN);
        mpfr_sqr(c, t, MPFR_RNDN);
        mpfr_add_ui(c, c, 1, MPFR_RNDN);
        mpfr_sqrt(c, c, MPFR_RNDN);
        mpfr_ui_div(c, 1, c, MPFR_RNDN);
        mpfr_mul(t, t, c, MPFR_RNDN);  // s = t * c
        mpfr_div(sr, fr, fa, MPFR_RNDN);
        mpfr_div(si, fi, fa, MPFR_RNDN);
        mpfr_mul(sr, sr, t, MPFR_RNDN);
        mpfr_mul(si, si, t, MPFR_RNDN);
        ok = true;
    }
    mpfr_clears(fa, th, root, t, w, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

// Point Jacobi iteration on A (Hermitian), accumulating U so that columns of
// U approximate eigenvectors of the initial A. Runs until the largest
// off-diagonal drops below (1 + max|diag|) * 2^-(prec-24) or the sweep
// budget is exhausted.
void point_jacobi(PointMatrix& A, PointMatrix& U, mpfr_prec_t prec) {
    size_t n = A.n;
    if (n < 2) return;
    constexpr int kMaxSweeps = 50;
    mpfr_t c, sr, si, nsr, nsi, oi_r, oi_i, oj_r, oj_i, m1, m2, off, scale;
    mpfr_inits2(prec, c, sr, si, nsr, nsi, oi_r, oi_i, oj_r, oj_i, m1, m2, off,
                scale, static_cast<mpfr_ptr>(nullptr));

    // out += (mr + i*mi) * (xr + i*xi)
    auto cmul_add = [&](mpfr_ptr outr, mpfr_ptr outi, mpfr_srcptr mr,
                        mpfr_srcptr mi, mpfr_srcptr xr, mpfr_srcptr xi) {
        mpfr_fmms(m1, mr, xr, mi, xi, MPFR_RNDN);  // mr*xr - mi*xi
        mpfr_fmma(m2, mr, xi, mi, xr, MPFR_RNDN);  // mr*xi + mi*xr
        mpfr_add(outr, outr, m1, MPFR_RNDN);
        mpfr_add(outi, outi, m2, MPFR_RNDN);
    };
    // (outr, outi) = c*(xr, xi), then += (mr + i*mi) * (yr, yi)
    auto combine = [&](mpfr_ptr outr, mpfr_ptr outi, mpfr_srcptr xr,
                       mpfr_srcptr xi, mpfr_srcptr mr, mpfr_srcptr mi,
                       mpfr_srcptr yr, mpfr_srcptr yi) {
        mpfr_mul(outr, xr, c, MPFR_RNDN);
        mpfr_mul(outi, xi, c, MPFR_RNDN);
        cmul_add(outr, outi, mr, mi, yr, yi);
    };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        mpfr_set_zero(off, 1);
        mpfr_set_ui(scale, 1, MPFR_RNDN);
        for (size_t i = 0; i < n; ++i) {
            mpfr_abs(m1, A.rat(i, i), MPFR_RNDN);
            mpfr_max(scale, scale, m1, MPFR_RNDN);
            for (size_t j = i + 1; j < n; ++j) {
                mpfr_hypot(m1, A.rat(i, j), A.iat(i, j), MPFR_RNDN);
                mpfr_max(off, off, m1, MPFR_RNDN);
            }
        }
        mpfr_mul_2si(scale, scale, -(prec - 24), MPFR_RNDN);
        if (mpfr_cmp(off, scale) <= 0) break;

        for (size_t i = 0; i + 1 < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                if (!rotation_params(A.rat(i, i), A.rat(j, j), A.rat(i, j),
                                     A.iat(i, j), prec, c, sr, si))
                    continue;
                mpfr_neg(nsr, sr, MPFR_RNDN);
                mpfr_neg(nsi, si, MPFR_RNDN);
                // rows: row_i' = c*row_i + s*row_j,
                //       row_j' = c*row_j - conj(s)*row_i
                for (size_t k = 0; k < n; ++k) {
                    mpfr_set(oi_r, A.rat(i, k), MPFR_RNDN);
                    mpfr_set(oi_i, A.iat(i, k), MPFR_RNDN);
                    mpfr_set(oj_r, A.rat(j, k), MPFR_RNDN);
                    mpfr_set(oj_i, A.iat(j, k), MPFR_RNDN);
                    combine(A.rat(i, k), A.iat(i, k), oi_r, oi_i, sr, si, oj_r,
                            oj_i);
                    combine(A.rat(j, k), A.iat(j, k), oj_r, oj_i, nsr, si, oi_r,
                            oi_i);
                }
                // cols: col_i' = c*col_i + conj(s)*col_j,
                //       col_j' = c*col_j - s*col_i
                for (size_t k = 0; k < n; ++k) {
                    mpfr_set(oi_r, A.rat(k, i), MPFR_RNDN);
                    mpfr_set(oi_i, A.iat(k, i), MPFR_RNDN);
                    mpfr_set(oj_r, A.rat(k, j), MPFR_RNDN);
                    mpfr_set(oj_i, A.iat(k, j), MPFR_RNDN);
                    combine(A.rat(k, i), A.iat(k, i), oi_r, oi_i, sr, nsi, oj_r,
                            oj_i);
                    combine(A.rat(k, j), A.iat(k, j), oj_r, oj_i, nsr, nsi, oi_r,
                            oi_i);
                }
                for (size_t k = 0; k < n; ++k) {
                    mpfr_set(oi_r, U.rat(k, i), MPFR_RNDN);
                    mpfr_set(oi_i, U.iat(k, i), MPFR_RNDN);
                    mpfr_set(oj_r, U.rat(k, j), MPFR_RNDN);
                    mpfr_set(oj_i, U.iat(k, j), MPFR_RNDN);
                    combine(U.rat(k, i), U.iat(k, i), oi_r, oi_i, sr, nsi, oj_r,
                            oj_i);
                    combine(U.rat(k, j), U.iat(k, j), oj_r, oj_i, nsr, nsi, oi_r,
                            oi_i);
                }
            }
        }
    }
    mpfr_clears(c, sr, si, nsr, nsi, oi_r, oi_i, oj_r, oj_i, m1, m2, off, scale,
                static_cast<mpfr_ptr>(nullptr));
}

// Gershgorin discs of every Hermitian matrix enclosed by F, grouped into
// connected components on the real line. Certifies per-index sign labels
// when the zero-containing components carry exactly n_zero discs.
std::optional<std::vector<int>> gershgorin_classify(const CMat& F, unsigned n_zero,
                                                    mpfr_prec_t prec) {
    size_t n = F.size();
    mpfr_t radius, t, lo, hi;
    mpfr_init2(radius, prec);
    mpfr_init2(t, prec);
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);

    struct Disc {
        double lo_d, hi_d;
        size_t index;
    };
    std::vector<Disc> discs(n);
    for (size_t i = 0; i < n; ++i) {
        mpfr_set_zero(radius, 1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            F[i][j].sup_abs(t);
            mpfr_add(radius, radius, t, MPFR_RNDU);
        }
        mpfr_sub(lo, F[i][i].re().lo(), radius, MPFR_RNDD);
        mpfr_add(hi, F[i][i].re().hi(), radius, MPFR_RNDU);
        discs[i] = {mpfr_get_d(lo, MPFR_RNDD), mpfr_get_d(hi, MPFR_RNDU), i};
    }
    mpfr_clears(radius, t, lo, hi, static_cast<mpfr_ptr>(nullptr));

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return discs[a].lo_d < discs[b].lo_d;
    });

    std::vector<int> labels(n, 0);
    unsigned unresolved = 0;
    size_t pos = 0;
    while (pos < n) {
        double comp_hi = discs[order[pos]].hi_d;
        size_t start = pos;
        ++pos;
        while (pos < n && discs[order[pos]].lo_d <= comp_hi) {
            comp_hi = std::max(comp_hi, discs[order[pos]].hi_d);
            ++pos;
        }
        double comp_lo = discs[order[start]].lo_d;
        int label;
        if (comp_lo > 0.0)
            label = 1;
        else if (comp_hi < 0.0)
            label = -1;
        else {
            label = 0;
            unresolved += static_cast<unsigned>(pos - start);
        }
        for (size_t k = start; k < pos; ++k) labels[discs[order[k]].index] = label;
    }
    if (unresolved != n_zero) return std::nullopt;
    return labels;
}

struct EigenData {
    bool certified = false;
    std::vector<int> labels;                 // +1 / -1 / 0 per index
    std::vector<RealInterval> eigenvalues;   // certified enclosures (diagonal)
    // point eigenvector matrix as exact dyadic rationals, [i][k] = U_ik
    std::vector<std::vector<std::pair<Rational, Rational>>> eigvec;
};

// Converge in point arithmetic, then certify by one interval evaluation of
// U^dagger M U (congruence by the exact dyadic U preserves inertia).
EigenData eigen_classify(const CoeffMatrix& M, bool conjugate, unsigned n_zero,
                         mpfr_prec_t prec, bool want_vectors) {
    size_t n = M.size();
    CMat Mi = embed_matrix(M, conjugate, prec);

    PointMatrix A(n, prec), U(n, prec);
    mpfr_t mid;
    mpfr_init2(mid, prec);
    for (size_t i = 0; i < n; ++i) {
        mpfr_set_ui(U.rat(i, i), 1, MPFR_RNDN);
        for (size_t j = 0; j < n; ++j) {
            Mi[i][j].re().mid(mid);
            mpfr_set(A.rat(i, j), mid, MPFR_RNDN);
            Mi[i][j].im().mid(mid);
            mpfr_set(A.iat(i, j), mid, MPFR_RNDN);
        }
    }
    mpfr_clear(mid);

    point_jacobi(A, U, prec);

    // interval triple product F = U^dagger Mi U with point-interval U
    CMat Up(n, std::vector<ComplexInterval>(n, ComplexInterval(prec)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            Up[i][j] = ComplexInterval(RealInterval::point(U.rat(i, j), prec),
                                       RealInterval::point(U.iat(i, j), prec));
    CMat T(n, std::vector<ComplexInterval>(n, ComplexInterval(prec)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            ComplexInterval acc(prec);
            for (size_t k = 0; k < n; ++k) acc = acc + Mi[i][k] * Up[k][j];
            T[i][j] = std::move(acc);
        }
    }
    CMat F(n, std::vector<ComplexInterval>(n, ComplexInterval(prec)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            ComplexInterval acc(prec);
            for (size_t k = 0; k < n; ++k)
                acc = acc + Up[k][i].conj() * T[k][j];
            F[i][j] = std::move(acc);
        }
    }

    EigenData data;
    auto labels = gershgorin_classify(F, n_zero, prec);
    if (!labels) return data;
    data.certified = true;
    data.labels = std::move(*labels);
    data.eigenvalues.reserve(n);
    for (size_t k = 0; k < n; ++k) data.eigenvalues.push_back(F[k][k].re());
    if (want_vectors) {
        data.eigvec.assign(n, std::vector<std::pair<Rational, Rational>>(n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t k = 0; k < n; ++k) {
                Rational re, im;
                mpfr_get_q(re.get_mpq_t(), U.rat(i, k));
                mpfr_get_q(im.get_mpq_t(), U.iat(i, k));
                data.eigvec[i][k] = {re, im};
            }
        }
    }
    return data;
}

int certified_sign(const CycNum& v) {
    if (v.is_zero()) return 0;
    if (v.is_rational()) return sgn(v.rational_value());
    for (mpfr_prec_t prec = 128; prec <= kMaxPrecisionBits; prec *= 2) {
        RealInterval re = v.embed(prec).re();
        if (re.is_strictly_positive()) return 1;
        if (re.is_strictly_negative()) return -1;
    }
    throw PrecisionExhausted("certified_sign: interval still straddles zero at "
                             "maximum precision");
}

}  // namespace

namespace detail {

std::optional<Inertia> inertia_via_intervals(const CoeffMatrix& M, unsigned n_zero,
                                             mpfr_prec_t precision_bits) {
    EigenData data = eigen_classify(M, /*conjugate=*/false, n_zero, precision_bits,
                                    /*want_vectors=*/false);
    if (!data.certified) return std::nullopt;
    Inertia r;
    for (int label : data.labels) {
        if (label > 0)
            ++r.n_plus;
        else if (label < 0)
            ++r.n_minus;
        else
            ++r.n_zero;
    }
    return r;
}

}  // namespace detail

Inertia matrix_inertia(const CoeffMatrix& M, mpfr_prec_t precision_bits) {
    size_t n = M.size();
    Inertia r;
    if (n == 0) return r;
    if (M.is_diagonal()) {
        for (size_t i = 0; i < n; ++i) {
            int s = certified_sign(M.at(i, i));
            if (s > 0)
                ++r.n_plus;
            else if (s < 0)
                ++r.n_minus;
            else
                ++r.n_zero;
        }
        return r;
    }
    unsigned rank = M.exact_rank();
    unsigned n_zero = static_cast<unsigned>(n) - rank;
    for (mpfr_prec_t prec = precision_bits; prec <= kMaxPrecisionBits; prec *= 2) {
        if (auto res = detail::inertia_via_intervals(M, n_zero, prec)) return *res;
    }
    throw PrecisionExhausted("matrix_inertia: certification failed up to " +
                             std::to_string(kMaxPrecisionBits) + " bits");
}

// --------------------------------------------------------------- QuadMap

unsigned QuadMap::degree() const {
    unsigned d = 0;
    if (exact) {
        for (const auto& c : plus_exact) d = std::max(d, c.monomial.degree());
        for (const auto& c : minus_exact) d = std::max(d, c.monomial.degree());
    } else {
        for (const auto* vec : {&plus_numeric, &minus_numeric})
            for (const auto& c : *vec)
                for (const auto& [m, v] : c.coeffs) d = std::max(d, m.degree());
    }
    return d;
}

std::vector<std::vector<std::pair<Rational, Rational>>> sphere_sample_points(
    unsigned n, unsigned count, unsigned seed) {
    // inverse stereographic projection of rational points in R^(2n-1)
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<std::vector<std::pair<Rational, Rational>>> points;
    points.reserve(count);
    while (points.size() < count) {
        std::vector<Rational> u(2 * n - 1);
        Rational norm2(0);
        for (auto& v : u) {
            v = Rational(num(rng), den(rng));
            v.canonicalize();
            norm2 += v * v;
        }
        Rational d = norm2 + 1;
        std::vector<Rational> x(2 * n);
        for (unsigned i = 0; i + 1 < 2 * n; ++i) x[i] = 2 * u[i] / d;
        x[2 * n - 1] = (norm2 - 1) / d;
        std::vector<std::pair<Rational, Rational>> z(n);
        for (unsigned j = 0; j < n; ++j) z[j] = {x[2 * j], x[2 * j + 1]};
        points.push_back(std::move(z));
    }
    return points;
}

namespace {

CycNum gaussian_to_cyc(const Rational& re, const Rational& im) {
    CycNum v(re);
    if (im != 0) v += CycNum(im) * CycNum::root_of_unity(4, 1);
    return v;
}

// |component(z)|^2 evaluated exactly over Q(i, zeta)
CycNum numeric_component_norm_sq(const NumericComponent& comp,
                                 const std::vector<CycNum>& z) {
    CycNum val;
    for (const auto& [m, c] : comp.coeffs) {
        CycNum term = gaussian_to_cyc(c.first, c.second);
        for (unsigned j = 0; j < m.nvars; ++j)
            if (m[j] > 0) term *= z[j].pow(m[j]);
        val += term;
    }
    return val * val.conj();
}

Rational pow2_inverse(unsigned bits) {
    BigInt d(1);
    d <<= bits;
    Rational r(BigInt(1), d);
    r.canonicalize();
    return r;
}

}  // namespace

QuadMap decompose(const HermPoly& P, mpfr_prec_t precision_bits) {
    CoeffMatrix M = CoeffMatrix::from_poly(P);
    unsigned dim = P.dim();
    QuadMap qm;
    qm.dim = dim;

    if (M.is_diagonal()) {
        bool all_rational = true;
        for (size_t i = 0; i < M.size(); ++i)
            if (!M.at(i, i).is_rational()) all_rational = false;
        if (all_rational) {
            qm.exact = true;
            for (size_t i = 0; i < M.size(); ++i) {
                Rational c = M.at(i, i).rational_value();
                if (c > 0)
                    qm.plus_exact.push_back({M.basis()[i], c});
                else if (c < 0)
                    qm.minus_exact.push_back({M.basis()[i], -c});
            }
            return qm;
        }
    }

    qm.exact = false;
    unsigned rank = M.exact_rank();
    unsigned n_zero = static_cast<unsigned>(M.size()) - rank;
    auto samples = sphere_sample_points(dim, 8);

    for (mpfr_prec_t prec = precision_bits; prec <= kMaxPrecisionBits; prec *= 2) {
        // Phi = u^dagger conj(M) u for the monomial vector u, so the spectral
        // data comes from the conjugate matrix
        EigenData data = eigen_classify(M, /*conjugate=*/true, n_zero, prec,
                                        /*want_vectors=*/true);
        if (!data.certified) continue;

        size_t n = M.size();
        QuadMap candidate;
        candidate.dim = dim;
        candidate.exact = false;
        mpfr_t scale, t;
        mpfr_init2(scale, prec);
        mpfr_init2(t, prec);
        for (size_t k = 0; k < n; ++k) {
            if (data.labels[k] == 0) continue;
            data.eigenvalues[k].mid(scale);
            mpfr_abs(scale, scale, MPFR_RNDN);
            mpfr_sqrt(scale, scale, MPFR_RNDN);
            Rational scale_q;
            mpfr_get_q(scale_q.get_mpq_t(), scale);
            NumericComponent comp;
            for (size_t i = 0; i < n; ++i) {
                // conj(U_ik) * sqrt(|lambda_k|)
                Rational re = data.eigvec[i][k].first * scale_q;
                Rational im = -data.eigvec[i][k].second * scale_q;
                if (re == 0 && im == 0) continue;
                comp.coeffs.emplace(M.basis()[i], std::make_pair(re, im));
            }
            if (data.labels[k] > 0)
                candidate.plus_numeric.push_back(std::move(comp));
            else
                candidate.minus_numeric.push_back(std::move(comp));
        }
        mpfr_clears(scale, t, static_cast<mpfr_ptr>(nullptr));

        // certify: exact residual at the sample points
        Rational threshold = pow2_inverse(static_cast<unsigned>(prec / 2));
        bool ok = true;
        for (const auto& pt : samples) {
            std::vector<CycNum> z(dim);
            for (unsigned j = 0; j < dim; ++j)
                z[j] = gaussian_to_cyc(pt[j].first, pt[j].second);
            CycNum recon;
            for (const auto& comp : candidate.plus_numeric)
                recon += numeric_component_norm_sq(comp, z);
            for (const auto& comp : candidate.minus_numeric)
                recon -= numeric_component_norm_sq(comp, z);
            CycNum diff = P.eval_exact(z, z) - recon;
            mpfr_t bound;
            mpfr_init2(bound, 128);
            diff.embed(std::max<mpfr_prec_t>(prec, 128)).sup_abs(bound);
            bool below = mpfr_cmp_q(bound, threshold.get_mpq_t()) <= 0;
            if (std::getenv("HQMAPS_DEBUG_DECOMPOSE")) {
                mpfr_fprintf(stderr, "residual bound %.6Re (prec %ld)\n", bound,
                             static_cast<long>(prec));
            }
            mpfr_clear(bound);
            if (!below) {
                ok = false;
                break;
            }
        }
        if (ok) return candidate;
    }
    throw PrecisionExhausted("decompose: residual certification failed up to " +
                             std::to_string(kMaxPrecisionBits) + " bits");
}

// ---------------------------------------------------------------- sweeps

GroupFamily family_gamma_p1() {
    return {"gamma-p-1",
            [](unsigned p) { return make_gamma_pq(p, 1); },
            [](unsigned p) { return fpq_compute(p, 1); }};
}

GroupFamily family_gamma_p2() {
    return {"gamma-p-2",
            [](unsigned p) { return make_gamma_pq(p, 2); },
            [](unsigned p) { return fpq_compute(p, 2); }};
}

GroupFamily family_gamma_p_pm1() {
    return {"gamma-p-pm1",
            [](unsigned p) { return make_gamma_pq(p, p - 1); },
            [](unsigned p) { return fpq_compute(p, p - 1); }};
}

GroupFamily family_gamma_pq_fixed(unsigned q) {
    return {"gamma-p-q" + std::to_string(q),
            [q](unsigned p) { return make_gamma_pq(p, q); },
            [q](unsigned p) { return fpq_compute(p, q); }};
}

GroupFamily family_dihedral() {
    return {"dihedral", [](unsigned p) { return make_dihedral(p); }, nullptr};
}

std::vector<SweepRow> signature_ratio(const GroupFamily& family, unsigned p_lo,
                                      unsigned p_hi, mpfr_prec_t precision_bits) {
    if (p_lo > p_hi) throw BadParameters("signature_ratio: empty range");
    std::vector<SweepRow> rows;
    for (unsigned p = p_lo; p <= p_hi; ++p) {
        SweepRow row;
        row.p = p;
        CoeffMatrix M;
        if (family.moment_fast) {
            MomentPoly f = family.moment_fast(p);
            M = CoeffMatrix::from_poly(moment_to_herm(f));
            row.order = p;
        } else {
            UnitaryGroup G = family.make(p);
            row.order = G.order();
            M = CoeffMatrix::from_poly(phi_gamma(G).diagonal());
        }
        row.inertia = matrix_inertia(M, precision_bits);
        unsigned denom = row.inertia.n_plus + row.inertia.n_minus;
        row.ratio = denom == 0 ? Rational(0) : Rational(row.inertia.n_plus, denom);
        row.ratio.canonicalize();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hqmaps
