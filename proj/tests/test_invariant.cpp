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

#include <doctest.h>

#include "hqmaps/errors.hpp"
#include "hqmaps/fpq.hpp"
#include "hqmaps/invariant.hpp"

using namespace hqmaps;

namespace {

HermPoly pairing_pow(unsigned dim, unsigned e) {
    HermPoly u(dim);
    for (unsigned j = 0; j < dim; ++j)
        u.add_term(Mono::unit(dim, j), Mono::unit(dim, j), CycNum(1L));
    HermPoly acc = HermPoly::constant(dim, CycNum(1L));
    for (unsigned k = 0; k < e; ++k) acc = acc * u;
    return acc;
}

}  // namespace

TEST_CASE("one-dimensional groups") {
    // trivial group: Phi = z conj(w)
    UnitaryGroup trivial = make_scalar_cyclic(1, 1);
    HermPoly phi = phi_gamma(trivial);
    CHECK(phi == pairing_pow(1, 1));

    // full group of p-th roots of unity: Phi = (z conj(w))^p
    for (unsigned p : {2u, 3u, 5u, 8u}) {
        HermPoly f = phi_gamma(make_scalar_cyclic(p, 1));
        CHECK(f == pairing_pow(1, p));
    }
}

TEST_CASE("scalar group in two variables gives the binomial form") {
    HermPoly phi = phi_gamma(make_scalar_cyclic(6, 2));
    CHECK(phi == pairing_pow(2, 6));
}

TEST_CASE("defining properties hold across constructors") {
    std::vector<UnitaryGroup> groups;
    groups.push_back(make_gamma_pq(7, 3));
    groups.push_back(make_scalar_cyclic(5, 2));
    groups.push_back(make_scalar_cyclic(3, 3));
    groups.push_back(make_dihedral(4));
    groups.push_back(make_swap_cyclic(3));
    groups.push_back(make_metacyclic(3, 4,
        UnitaryMatrix::diagonal({CycNum::root_of_unity(4, 1),
                                 CycNum::root_of_unity(4, 1)})));
    for (const auto& g : groups) {
        HermPoly phi = phi_gamma(g);
        InvariantPropertyReport rep = verify_invariant_properties(g, phi);
        CHECK(rep.constant_term_zero);
        CHECK(rep.degree_equals_order);
        CHECK(rep.sphere_normalized);
        CHECK(rep.invariant_under_group);
        CHECK(rep.hermitian_symmetric);
    }
}

TEST_CASE("metacyclic factorization matches the direct product") {
    // single factor
    HermPoly viaC = phi_metacyclic(5, 1, UnitaryMatrix::identity(2));
    CHECK(viaC == phi_gamma(make_gamma_pq(5, 4)).diagonal());

    // two factors through the swap: dihedral
    for (unsigned p : {2u, 4u, 5u}) {
        HermPoly meta = phi_metacyclic(p, 2, UnitaryMatrix::swap2());
        CHECK(meta == phi_gamma(make_dihedral(p)).diagonal());
    }

    // order-four scalar twist
    CycNum i = CycNum::root_of_unity(4, 1);
    UnitaryMatrix b = UnitaryMatrix::diagonal({i, i});
    HermPoly meta = phi_metacyclic(3, 4, b);
    CHECK(meta == phi_gamma(make_metacyclic(3, 4, b)).diagonal());
}

TEST_CASE("metacyclic factorization rejects bad enumerations") {
    // B = A makes B^j A^k collide
    CycNum w = CycNum::root_of_unity(4, 1);
    UnitaryMatrix a = UnitaryMatrix::diagonal({w, w.pow(-1)});
    CHECK_THROWS_AS(phi_metacyclic(4, 4, a), EnumerationInvalid);
    // B^q != I
    CHECK_THROWS_AS(phi_metacyclic(4, 3, UnitaryMatrix::swap2()), BadParameters);
}

TEST_CASE("dihedral assembly equals the product formula") {
    for (unsigned p : {2u, 3u, 4u, 5u}) {
        CHECK(phi_dihedral(p) == phi_gamma(make_dihedral(p)).diagonal());
    }
}

TEST_CASE("dihedral assembly uses the degree-four family member") {
    // the f ingredient at p = 4 is x^4 + y^4 + 4xy - 2x^2y^2
    MomentPoly x = MomentPoly::variable(2, 0);
    MomentPoly y = MomentPoly::variable(2, 1);
    MomentPoly f43 =
        x.pow(4) + y.pow(4) + (x * y).scaled(4) - (x * y).pow(2).scaled(2);
    REQUIRE(fpq_compute(4, 3) == f43);
    CHECK(phi_dihedral(4) == phi_gamma(make_dihedral(4)).diagonal());
}

TEST_CASE("noether basis of the trivial group") {
    auto basis = noether_basis(make_scalar_cyclic(1, 1));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == HoloPoly::constant(1, CycNum(1L)));
    CHECK(basis[1] == HoloPoly::monomial(1, Mono(1, {1u}), CycNum(1L)));
}

TEST_CASE("noether basis of the conjugate-pair group of order six") {
    // oracle for a diagonal group: the average of z^alpha survives exactly
    // when the character sum over the group is nonzero
    UnitaryGroup g = make_gamma_pq(6, 5);
    std::vector<Mono> expected;
    for (const Mono& m : monomials_up_to_degree(2, 6)) {
        CycNum chi_sum;
        for (const auto& e : g.elements()) {
            chi_sum += e.at(0, 0).pow(m[0]) * e.at(1, 1).pow(m[1]);
        }
        if (!chi_sum.is_zero()) expected.push_back(m);
    }
    auto basis = noether_basis(g);
    REQUIRE(basis.size() == expected.size());
    for (const auto& m : expected) {
        bool found = false;
        for (const auto& f : basis)
            if (f == HoloPoly::monomial(2, m, CycNum(1L))) found = true;
        CHECK(found);
    }
    // the list includes z1 z2, z1^6, z2^6, z1^3 z2^3
    auto has = [&](std::initializer_list<unsigned> exps) {
        Mono m(2, exps);
        for (const auto& f : basis)
            if (f == HoloPoly::monomial(2, m, CycNum(1L))) return true;
        return false;
    };
    CHECK(has({1u, 1u}));
    CHECK(has({6u, 0u}));
    CHECK(has({0u, 6u}));
    CHECK(has({3u, 3u}));
}

TEST_CASE("noether basis of the twisted-swap group of order six") {
    UnitaryGroup g = make_swap_cyclic(3);
    auto basis = noether_basis(g);
    CycNum eta = CycNum::root_of_unity(3, 1);

    // contains scalar multiples of z1^3 + z2^3 and z1^2 z2 + eta z1 z2^2
    HoloPoly cubes(2);
    cubes.add_term(Mono(2, {3u, 0u}), CycNum(1L));
    cubes.add_term(Mono(2, {0u, 3u}), CycNum(1L));
    HoloPoly twisted(2);
    twisted.add_term(Mono(2, {2u, 1u}), CycNum(1L));
    twisted.add_term(Mono(2, {1u, 2u}), eta);

    bool found_cubes = false, found_twisted = false;
    for (const auto& f : basis) {
        if (f == cubes.normalized()) found_cubes = true;
        if (f == twisted.normalized()) found_twisted = true;
    }
    CHECK(found_cubes);
    CHECK(found_twisted);
}

TEST_CASE("every noether basis element is exactly invariant") {
    for (const auto& g : {make_gamma_pq(4, 3), make_swap_cyclic(2)}) {
        for (const auto& f : noether_basis(g)) {
            for (const auto& e : g.elements()) {
                CHECK(f.composed_with(e) == f);
            }
        }
    }
}
