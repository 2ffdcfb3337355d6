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

#include <string>

#include "hqmaps/momentpoly.hpp"
#include "hqmaps/signature.hpp"

namespace hqmaps {

/// Hyperquadric variable convention used throughout this module: for the
/// source Q(a, b) in n = a + b complex variables, the FIRST b variables sit
/// on the negative side and the LAST a variables on the positive side, i.e.
/// the defining set is  -sum_{j<=b} |z_j|^2 + sum_{j>b} |z_j|^2 = 1.
inline constexpr const char* kQuadricConvention =
    "Q(a,b): first b variables negative, last a positive; "
    "-sum(neg) + sum(pos) = 1";

struct SplitPolyReport {
    unsigned p = 0;
    /// W over (X_1..X_{2p+1}, Y_1, Y_2); variable order X's first, then Y's.
    MomentPoly W;
    unsigned positive_terms = 0;  // N(p), computed, never assumed
    unsigned negative_terms = 0;  // always 2p+1
};

/// Sign-flip and variable-splitting pipeline from f_{2p,2}:
/// (i) only even x-powers may appear (OddPowerPresent otherwise),
/// (ii) x -> -x, (iii) y -> Y_1 + Y_2, (iv) x -> X_1 + ... + X_{2p+1}.
/// The result is verified to equal 1 on the plane -sum X + sum Y = 1
/// by exact reduction (VerificationFailed otherwise).
SplitPolyReport build_W(unsigned p);

/// The degree-2p monomial map with squared coefficients from the terms of W
/// under X_j = |z_j|^2, Y_k = |z_{2p+1+k}|^2. Plus-components sorted
/// graded-lex, then minus-components; signature (N(p), 2p+1).
QuadMap build_gp(unsigned p);

struct QuadMapVerification {
    bool exact_zero = false;
    MomentPoly remainder{1};
    std::string convention = kQuadricConvention;
};

/// Forms |F|^2 - |G|^2 in the moment variables and reduces it minus 1
/// modulo the source hyperquadric's defining polynomial; reports the exact
/// remainder. Requires an exact-coefficient map.
QuadMapVerification verify_quadmap(const QuadMap& g, unsigned source_pos,
                                   unsigned source_neg);

}  // namespace hqmaps
