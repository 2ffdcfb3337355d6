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

#include "hqmaps/monomial.hpp"
#include "hqmaps/numeric.hpp"

namespace hqmaps {

/// Real polynomial in nonnegative moment variables x_j = |z_j|^2 with exact
/// rational coefficients. Sparse; zero coefficients are never stored.
class MomentPoly {
   public:
    using Terms = std::map<Mono, Rational>;

    explicit MomentPoly(unsigned dim = 1) : dim_(Mono::check_vars(dim)) {}

    static MomentPoly constant(unsigned dim, const Rational& c);
    static MomentPoly variable(unsigned dim, unsigned j);

    unsigned dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;

    Rational coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rational& c);

    friend MomentPoly operator+(const MomentPoly& a, const MomentPoly& b);
    friend MomentPoly operator-(const MomentPoly& a, const MomentPoly& b);
    friend MomentPoly operator*(const MomentPoly& a, const MomentPoly& b);
    MomentPoly operator-() const;
    MomentPoly scaled(const Rational& c) const;
    MomentPoly pow(unsigned e) const;

    friend bool operator==(const MomentPoly& a, const MomentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    Rational eval(const std::vector<Rational>& x) const;

    /// Substitute variable j by an affine form c0 + sum_k coeffs[k] * x_k.
    MomentPoly substitute_affine(unsigned j, const Rational& c0,
                                 const std::vector<Rational>& coeffs) const;

    /// Reinterpret in a larger variable set; var_map[old] = new index.
    MomentPoly with_dim(unsigned new_dim, const std::vector<unsigned>& var_map) const;

    /// True when every coefficient is an integer.
    bool has_integer_coefficients() const;

    std::string str(const std::vector<std::string>& names = {}) const;

   private:
    unsigned dim_;
    Terms terms_;
};

}  // namespace hqmaps
