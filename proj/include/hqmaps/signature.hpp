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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hqmaps/hermpoly.hpp"
#include "hqmaps/unitary.hpp"

namespace hqmaps {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 128;
inline constexpr mpfr_prec_t kMaxPrecisionBits = 4096;

/// Hermitian coefficient matrix of a diagonal-form polynomial: the basis is
/// the ordered list of holomorphic monomials appearing, and entry (i, j) is
/// the coefficient of z^basis[i] * conj(z)^basis[j].
class CoeffMatrix {
   public:
    /// Throws NotHermitian when the coefficient map violates symmetry.
    static CoeffMatrix from_poly(const HermPoly& P);

    /// Direct construction from row-major entries (validated Hermitian).
    static CoeffMatrix from_entries(std::vector<Mono> basis,
                                    std::vector<CycNum> entries);

    size_t size() const { return basis_.size(); }
    const std::vector<Mono>& basis() const { return basis_; }
    const CycNum& at(size_t i, size_t j) const { return entries_[i * size() + j]; }

    bool is_diagonal() const;

    /// Rank over the cyclotomic field, by exact elimination.
    unsigned exact_rank() const;

   private:
    std::vector<Mono> basis_;
    std::vector<CycNum> entries_;
};

struct Inertia {
    unsigned n_plus = 0, n_minus = 0, n_zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
    std::string target() const {
        return "Q(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + ")";
    }
};

/// Eigenvalue sign counts. n_zero is pinned exactly by the rank; the nonzero
/// signs come from interval Jacobi reduction with Gershgorin certification,
/// retried at doubled precision up to the maximum. Throws PrecisionExhausted
/// when certification never succeeds.
Inertia matrix_inertia(const CoeffMatrix& M,
                       mpfr_prec_t precision_bits = kDefaultPrecisionBits);

namespace detail {
/// Interval-certified path regardless of matrix shape (testing hook).
std::optional<Inertia> inertia_via_intervals(const CoeffMatrix& M, unsigned n_zero,
                                             mpfr_prec_t precision_bits);
}  // namespace detail

/// One component sqrt(coeff_sq) * z^monomial of an exact decomposition.
struct ExactComponent {
    Mono monomial;
    Rational coeff_sq;  // positive
};

/// One component of a numeric decomposition: a holomorphic polynomial with
/// dyadic-rational complex coefficients (exact values of the computed
/// floating-point data).
struct NumericComponent {
    std::map<Mono, std::pair<Rational, Rational>> coeffs;  // (re, im)
};

/// Holomorphic map data for Phi = |F|^2 - |G|^2. Exact maps hold monomial
/// components with exact squared coefficients; numeric maps hold certified
/// floating-coefficient polynomials.
struct QuadMap {
    unsigned dim = 0;
    bool exact = true;
    std::vector<ExactComponent> plus_exact, minus_exact;
    std::vector<NumericComponent> plus_numeric, minus_numeric;

    size_t n_plus() const { return exact ? plus_exact.size() : plus_numeric.size(); }
    size_t n_minus() const { return exact ? minus_exact.size() : minus_numeric.size(); }
    unsigned degree() const;
    std::string signature_string() const {
        return "Q(" + std::to_string(n_plus()) + "," + std::to_string(n_minus()) + ")";
    }
};

/// Holomorphic decomposition of a diagonal-form Hermitian polynomial.
/// Diagonal coefficient matrices with rational entries give the exact path;
/// otherwise an interval Jacobi eigendecomposition is used and the result is
/// certified by exact residual evaluation at fixed sphere sample points
/// (residual below 2^-(precision_bits/2)).
QuadMap decompose(const HermPoly& P, mpfr_prec_t precision_bits = kDefaultPrecisionBits);

/// Rational points on the unit sphere in C^n (stereographic construction),
/// deterministic in `count` and `seed`.
std::vector<std::vector<std::pair<Rational, Rational>>> sphere_sample_points(
    unsigned n, unsigned count, unsigned seed = 1);

/// A parametrized family of groups for signature sweeps. `moment_fast`,
/// when set, supplies the diagonal-family moment polynomial directly and
/// skips the full bidegree expansion.
struct GroupFamily {
    std::string name;
    std::function<UnitaryGroup(unsigned)> make;
    std::function<MomentPoly(unsigned)> moment_fast;
};

GroupFamily family_gamma_p1();
GroupFamily family_gamma_p2();
GroupFamily family_gamma_p_pm1();
GroupFamily family_gamma_pq_fixed(unsigned q);
GroupFamily family_dihedral();

struct SweepRow {
    unsigned p = 0;
    size_t order = 0;
    Inertia inertia;
    Rational ratio;  // n_plus / (n_plus + n_minus)
};

/// Per-p inertia and ratio table over [p_lo, p_hi].
std::vector<SweepRow> signature_ratio(const GroupFamily& family, unsigned p_lo,
                                      unsigned p_hi,
                                      mpfr_prec_t precision_bits = kDefaultPrecisionBits);

}  // namespace hqmaps
