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

#include <map>
#include <string>
#include <vector>

#include "hqmaps/cyclotomic.hpp"
#include "hqmaps/momentpoly.hpp"
#include "hqmaps/monomial.hpp"

namespace hqmaps {

class UnitaryMatrix;

/// Bidegree index of one term: exponents over z (alpha) and over the
/// conjugated variables (beta).
struct BiMonomial {
    Mono alpha, beta;
};

/// Holomorphic polynomial over the cyclotomic field (sparse, exact).
class HoloPoly {
   public:
    using Terms = std::map<Mono, CycNum>;

    explicit HoloPoly(unsigned dim = 1) : dim_(Mono::check_vars(dim)) {}
    static HoloPoly constant(unsigned dim, const CycNum& c);
    static HoloPoly monomial(unsigned dim, const Mono& m, const CycNum& c);

    unsigned dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    void add_term(const Mono& m, const CycNum& c);

    friend HoloPoly operator+(const HoloPoly& a, const HoloPoly& b);
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
    HoloPoly scaled(const CycNum& c) const;
    HoloPoly pow(unsigned e) const;
    friend bool operator==(const HoloPoly& a, const HoloPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    /// Composition with a linear change of variables: z -> g z.
    HoloPoly composed_with(const UnitaryMatrix& g) const;

    /// Divide by the coefficient of the leading (graded-lex greatest) term.
    HoloPoly normalized() const;

    CycNum eval(const std::vector<CycNum>& z) const;

    std::string str() const;

   private:
    unsigned dim_;
    Terms terms_;
};

/// Memoized expansion of monomials z^alpha under a linear substitution
/// z -> g z (optionally through the conjugated matrix entries).
class LinearSubstitution {
   public:
    LinearSubstitution(const UnitaryMatrix& g, bool conjugate_entries);
    const HoloPoly& expand(const Mono& alpha);

   private:
    std::vector<HoloPoly> forms_;
    std::map<Mono, HoloPoly> memo_;
    std::vector<std::vector<HoloPoly>> powers_;
};

/// Hermitian-format polynomial in (z, conjugate-variables): a sparse map from
/// bidegree monomials to exact cyclotomic coefficients. Depending on context
/// the conjugated block refers to an independent polarized variable (w-bar)
/// or to z-bar; the term map is the same either way, and the diagonal
/// restriction w := z is the identity on stored terms.
///
/// Keys interleave the two exponent blocks as
/// (alpha_1, beta_1, alpha_2, beta_2, ...), so graded-lex on keys puts
/// z_1*conj(z_1) first among the degree-2 diagonal monomials; that is the
/// divisor's leading term in sphere reduction.
class HermPoly {
   public:
    using Terms = std::map<Mono, CycNum>;

    explicit HermPoly(unsigned dim = 1);

    static HermPoly constant(unsigned dim, const CycNum& c);
    /// c * z^alpha * conj^beta
    static HermPoly term(unsigned dim, const Mono& alpha, const Mono& beta,
                         const CycNum& c);

    unsigned dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    static BiMonomial split_key(const Mono& key);
    static Mono join_key(unsigned dim, const Mono& alpha, const Mono& beta);

    CycNum coeff(const Mono& alpha, const Mono& beta) const;
    void add_term(const Mono& alpha, const Mono& beta, const CycNum& c);

    unsigned degree_z() const;
    unsigned degree_conj() const;
    CycNum constant_term() const;

    friend HermPoly operator+(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator-(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
    HermPoly operator-() const;
    HermPoly scaled(const CycNum& c) const;

    friend bool operator==(const HermPoly& a, const HermPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    /// coeff(alpha, beta) == conj(coeff(beta, alpha)) for every stored term.
    bool is_hermitian_symmetric() const;

    /// Substitute z -> g z (side z) or w -> g w (side w; acts on the
    /// conjugated block through conj(g)). Exact re-expansion.
    enum class Side { z, w };
    HermPoly substituted(const UnitaryMatrix& g, Side side) const;

    /// Restriction w := z. Identity on the stored term map; returned as a
    /// separate value for call-site clarity.
    HermPoly diagonal() const { return *this; }

    /// Requires diagonal support (alpha == beta termwise) and rational
    /// coefficients; returns the polynomial in x_j = |z_j|^2.
    MomentPoly to_moment() const;
    bool has_diagonal_support() const;

    /// Canonical remainder modulo (sum_j z_j conj(z_j) - 1) under graded-lex;
    /// zero iff the polynomial lies in the ideal.
    HermPoly reduce_sphere() const;

    /// Certified interval evaluation at Gaussian-rational points
    /// (z and w given as (re, im) rational pairs).
    ComplexInterval eval_interval(const std::vector<std::pair<Rational, Rational>>& z,
                                  const std::vector<std::pair<Rational, Rational>>& w,
                                  mpfr_prec_t precision_bits) const;

    /// Exact evaluation with cyclotomic point coordinates; zbar/wbar are
    /// taken as conjugates of the given coordinates.
    CycNum eval_exact(const std::vector<CycNum>& z, const std::vector<CycNum>& w) const;

    std::string str() const;

   private:
    unsigned dim_;   // number of z variables (key has 2*dim slots)
    Terms terms_;
};

/// Build a MomentPoly as a Hermitian polynomial: each moment monomial
/// x^m becomes z^m conj(z)^m.
HermPoly moment_to_herm(const MomentPoly& f);

}  // namespace hqmaps
