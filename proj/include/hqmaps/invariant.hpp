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

#include <vector>

#include "hqmaps/hermpoly.hpp"
#include "hqmaps/unitary.hpp"

namespace hqmaps {

/// The bilinear pairing <g z, w> as a bidegree-(1,1) polynomial.
HermPoly inner_form(const UnitaryMatrix& g);

/// The canonical group-invariant polynomial
///     Phi(z, w-bar) = 1 - prod_{g in G} (1 - <g z, w>),
/// expanded exactly. Satisfies: zero constant term, degree_z = |G|,
/// value 1 on the unit sphere (diagonal restriction), invariance in z
/// under every group element, and Hermitian symmetry.
HermPoly phi_gamma(const UnitaryGroup& G);

/// Specialized factorization through the invariant polynomial of the
/// cyclic part: Phi = 1 - prod_{j<q} (1 - Phi_C(z, B^{-j} z)) with
/// C generated by diag(zeta_p, zeta_p^{-1}). Requires the B^j A^k
/// enumeration to cover the group exactly once (EnumerationInvalid
/// otherwise). Returns the diagonal (z, z-bar) form, whose term map equals
/// phi_gamma's on the corresponding group.
HermPoly phi_metacyclic(unsigned p, unsigned q, const UnitaryMatrix& B);

/// Dihedral invariant via the two-variable family:
///     f(x, y) + f(s, t) - f(x, y) f(s, t)
/// with f = f_{p,p-1}, x = |z1|^2, y = |z2|^2, s = z2 conj(z1),
/// t = z1 conj(z2).
HermPoly phi_dihedral(unsigned p);

/// Reynolds averages (1/|G|) sum_g z^alpha o g over all monomials of total
/// degree <= |G|, filtered to the nonzero results and deduplicated up to
/// scalar multiples (leading coefficient normalized to 1).
std::vector<HoloPoly> noether_basis(const UnitaryGroup& G);

struct InvariantPropertyReport {
    bool constant_term_zero = false;
    bool degree_equals_order = false;
    bool sphere_normalized = false;   // reduce_sphere(diagonal(Phi) - 1) == 0
    bool invariant_under_group = false;
    bool hermitian_symmetric = false;
    bool all() const {
        return constant_term_zero && degree_equals_order && sphere_normalized &&
               invariant_under_group && hermitian_symmetric;
    }
};

/// Exact verification of the defining properties of an invariant polynomial
/// against its group.
InvariantPropertyReport verify_invariant_properties(const UnitaryGroup& G,
                                                    const HermPoly& phi);

}  // namespace hqmaps
