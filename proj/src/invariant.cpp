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

#include "hqmaps/invariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hqmaps/errors.hpp"
#include "hqmaps/fpq.hpp"

namespace hqmaps {

HermPoly inner_form(const UnitaryMatrix& g) {
    unsigned n = g.dim();
    HermPoly form(n);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned k = 0; k < n; ++k) {
            const CycNum& a = g.at(j, k);
            if (a.is_zero()) continue;
            // <g z, w> picks up z_k against conj(w_j)
            form.add_term(Mono::unit(n, k), Mono::unit(n, j), a);
        }
    }
    return form;
}

HermPoly phi_gamma(const UnitaryGroup& G) {
    if (G.order() == 0) throw BadParameters("phi_gamma: empty group");
    unsigned n = G.dim();
    HermPoly one = HermPoly::constant(n, CycNum(1L));
    HermPoly prod = one;
    for (const auto& g : G.elements()) {
        prod = prod * (one - inner_form(g));
    }
    return one - prod;
}

HermPoly phi_metacyclic(unsigned p, unsigned q, const UnitaryMatrix& B) {
    if (p < 2 || q < 1) throw BadParameters("phi_metacyclic: need p >= 2, q >= 1");
    if (B.dim() != 2) throw BadParameters("phi_metacyclic: B must be 2x2");
    if (!B.is_unitary()) throw NotUnitary("phi_metacyclic: B is not unitary");
    if (!B.pow(q).is_identity())
        throw BadParameters("phi_metacyclic: B^q != I");

    CycNum w = CycNum::root_of_unity(p, 1);
    UnitaryMatrix a = UnitaryMatrix::diagonal({w, w.pow(-1)});

    // the factorization is valid only when B^j A^k enumerates the group
    // exactly once
    {
        std::set<UnitaryMatrix, UnitaryMatrixLess> seen;
        unsigned conductor = std::lcm(a.conductor_lcm(), B.conductor_lcm());
        for (unsigned j = 0; j < q; ++j) {
            UnitaryMatrix bj = B.pow(j).lifted_to(conductor);
            for (unsigned k = 0; k < p; ++k) {
                if (!seen.insert((bj * a.pow(k)).lifted_to(conductor)).second)
                    throw EnumerationInvalid(
                        "phi_metacyclic: B^j A^k enumeration has collisions");
            }
        }
        UnitaryMatrix al = a.lifted_to(conductor);
        UnitaryMatrix bl = B.lifted_to(conductor);
        for (const auto& m : seen) {
            if (!seen.count(m * al) || !seen.count(m * bl))
                throw EnumerationInvalid(
                    "phi_metacyclic: enumerated set is not closed");
        }
    }

    HermPoly phi_c = phi_gamma(make_gamma_pq(p, p - 1));
    HermPoly one = HermPoly::constant(2, CycNum(1L));
    HermPoly prod = one;
    for (unsigned j = 0; j < q; ++j) {
        HermPoly factor =
            phi_c.substituted(B.pow(-static_cast<long>(j)), HermPoly::Side::w)
                .diagonal();
        prod = prod * (one - factor);
    }
    return one - prod;
}

HermPoly phi_dihedral(unsigned p) {
    if (p < 2) throw BadParameters("phi_dihedral: need p >= 2");
    MomentPoly f = fpq_compute(p, p - 1);

    // f in (x, y) = (|z1|^2, |z2|^2)
    HermPoly fxy = moment_to_herm(f);
    // f in (s, t) = (z2 conj(z1), z1 conj(z2)): s^a t^b -> z^(b,a) conj^(a,b)
    HermPoly fst(2);
    for (const auto& [m, c] : f.terms()) {
        fst.add_term(Mono(2, {m[1], m[0]}), Mono(2, {m[0], m[1]}), CycNum(c));
    }
    return fxy + fst - fxy * fst;
}

std::vector<HoloPoly> noether_basis(const UnitaryGroup& G) {
    unsigned n = G.dim();
    size_t order = G.order();
    std::vector<Mono> monos = monomials_up_to_degree(n, static_cast<unsigned>(order));
    std::vector<HoloPoly> sums(monos.size(), HoloPoly(n));

    for (const auto& g : G.elements()) {
        LinearSubstitution sub(g, /*conjugate_entries=*/false);
        for (size_t i = 0; i < monos.size(); ++i) {
            sums[i] = sums[i] + sub.expand(monos[i]);
        }
    }

    CycNum scale = CycNum(Rational(1, static_cast<unsigned long>(order)));
    std::vector<HoloPoly> basis;
    std::set<std::string> seen;
    for (auto& s : sums) {
        if (s.is_zero()) continue;
        HoloPoly avg = s.scaled(scale).normalized();
        std::string key = avg.str();
        if (seen.insert(std::move(key)).second) basis.push_back(std::move(avg));
    }
    return basis;
}

InvariantPropertyReport verify_invariant_properties(const UnitaryGroup& G,
                                                    const HermPoly& phi) {
    InvariantPropertyReport rep;
    rep.constant_term_zero = phi.constant_term().is_zero();
    rep.degree_equals_order = (phi.degree_z() == G.order());

    HermPoly diag = phi.diagonal();
    HermPoly shifted = diag - HermPoly::constant(phi.dim(), CycNum(1L));
    rep.sphere_normalized = shifted.reduce_sphere().is_zero();

    rep.invariant_under_group = true;
    for (const auto& g : G.elements()) {
        if (!(phi.substituted(g, HermPoly::Side::z) == phi)) {
            rep.invariant_under_group = false;
            break;
        }
    }
    rep.hermitian_symmetric = phi.is_hermitian_symmetric();
    return rep;
}

}  // namespace hqmaps
