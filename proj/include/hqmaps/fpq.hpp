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

#include <optional>
#include <utility>
#include <vector>

#include "hqmaps/momentpoly.hpp"
#include "hqmaps/numeric.hpp"

namespace hqmaps {

/// The diagonal-family polynomial f_{p,q}(x, y), x = |z_1|^2, y = |z_2|^2.
/// Computed by a bivariate product over the group-generated roots of unity
/// (not by full bidegree expansion); coefficients are verified integers, and
/// f(x, 1-x) = 1 is verified as a polynomial identity.
MomentPoly fpq_compute(unsigned p, unsigned q);

/// f_{p,2} from the order-2 linear recurrence a_k = x a_{k-1} + y a_{k-2}
/// (a_0 = 2, a_1 = x) plus the (-1)^(p+1) y^p correction. Defined for p >= 2;
/// equals fpq_compute(p, 2) whenever the latter is defined.
MomentPoly fp2_recurrence(unsigned p);

struct PrimalityResult {
    unsigned p = 0, q = 0;
    bool is_prime = false;
    /// First offending term when composite: monomial and its coefficient.
    std::optional<std::pair<Mono, BigInt>> witness;
};

/// Coefficient congruence test: p is prime iff every coefficient of
/// f_{p,q} - x^p - y^p is divisible by p.
PrimalityResult prime_test(unsigned p, unsigned q);

struct GoldenRatioScalar {
    Rational s_p;        // coefficient sum f_{p,2}(1,1), exact
    RealInterval root;   // certified p-th root
};

GoldenRatioScalar golden_ratio_scalar(unsigned p, mpfr_prec_t precision_bits = 128);

struct FpPm1Structure {
    unsigned p = 0;
    /// The coefficients n_j of (xy)^j, j >= 1, in index order.
    std::vector<std::pair<unsigned, BigInt>> n_j;
    unsigned positive_count = 0;  // over all coefficients, including x^p, y^p
    unsigned negative_count = 0;
};

/// Shape report for f_{p,p-1} = x^p + y^p + sum n_j (xy)^j. Throws
/// StructureViolation when the support, the sign alternation, the vanishing
/// range 2j > p, or the p mod 4 count rule fails.
FpPm1Structure fp_pm1_structure(unsigned p);

struct LimitGapRow {
    Rational x, y;
    RealInterval f_root;   // f_{p,2}(x,y)^(1/p)
    RealInterval target;   // (x + sqrt(x^2+4y))/2
    RealInterval gap;      // f / target^p - 1
};

/// Convergence monitor for the p-th root of f_{p,2} against its limit.
/// Sample points must satisfy x >= 0, y >= 0 and x + sqrt(x^2+4y) > 2y
/// (checked exactly); otherwise DomainViolation.
std::vector<LimitGapRow> proposition41_check(
    unsigned p, const std::vector<std::pair<Rational, Rational>>& points,
    mpfr_prec_t precision_bits = 128);

}  // namespace hqmaps
