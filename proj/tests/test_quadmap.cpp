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

#include <map>
#include <set>
#include <random>
#include <vector>

#include "hqmaps/errors.hpp"
#include "hqmaps/quadmap_construct.hpp"

using namespace hqmaps;

namespace {

// Tiny standalone polynomial engine, independent of the library's sparse
// types, used as the oracle for the variable-splitting pipeline.
using NaivePoly = std::map<std::vector<int>, Rational>;

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
    NaivePoly r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
        }
    }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second == 0)
            it = r.erase(it);
        else
            ++it;
    }
    return r;
}

NaivePoly naive_pow(const NaivePoly& a, unsigned e, size_t nvars) {
    NaivePoly acc{{std::vector<int>(nvars, 0), Rational(1)}};
    for (unsigned k = 0; k < e; ++k) acc = naive_mul(acc, a);
    return acc;
}

// f_{2p,2}(-x, y) with x = X_1+...+X_{2p+1}, y = Y_1+Y_2, expanded naively
NaivePoly naive_W(unsigned p) {
    const unsigned nx = 2 * p + 1;
    const size_t nvars = nx + 2;
    // base coefficients of f_{2p,2} from the recurrence, tracked as a
    // bivariate tableash[i][j]
    std::map<std::pair<int, int>, Rational> prev{{{0, 0}, Rational(2)}};
    std::map<std::pair<int, int>, Rational> cur{{{1, 0}, Rational(1)}};
    for (unsigned k = 2; k <= 2 * p; ++k) {
        std::map<std::pair<int, int>, Rational> next;
        for (const auto& [m, c] : cur) next[{m.first + 1, m.second}] += c;
        for (const auto& [m, c] : prev) next[{m.first, m.second + 1}] += c;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur[{0, static_cast<int>(2 * p)}] += Rational(-1);  // even 2p
    // substitute
    NaivePoly sum_x, sum_y;
    for (unsigned k = 0; k < nx; ++k) {
        std::vector<int> m(nvars, 0);
        m[k] = 1;
        sum_x[m] = 1;
    }
    for (unsigned k = 0; k < 2; ++k) {
        std::vector<int> m(nvars, 0);
        m[nx + k] = 1;
        sum_y[m] = 1;
    }
    NaivePoly result;
    for (const auto& [m, c] : cur) {
        if (c == 0) continue;
        REQUIRE(m.first % 2 == 0);  // only even x powers
        Rational flipped = (m.first % 2 == 0) ? c : -c;
        NaivePoly term = naive_pow(sum_x, static_cast<unsigned>(m.first), nvars);
        term = naive_mul(term, naive_pow(sum_y, static_cast<unsigned>(m.second), nvars));
        for (auto& [tm, tc] : term) result[tm] += tc * flipped;
    }
    for (auto it = result.begin(); it != result.end();) {
        if (it->second == 0)
            it = result.erase(it);
        else
            ++it;
    }
    return result;
}

NaivePoly to_naive(const MomentPoly& f) {
    NaivePoly r;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> key(f.dim());
        for (unsigned i = 0; i < f.dim(); ++i) key[i] = static_cast<int>(m[i]);
        r[key] = c;
    }
    return r;
}

}  // namespace

TEST_CASE("split polynomial at p = 1") {
    SplitPolyReport rep = build_W(1);
    CHECK(rep.positive_terms == 8);
    CHECK(rep.negative_terms == 3);

    // W lives in 2p+3 = 5 variables: X1..X3, then Y1, Y2
    const unsigned dim = rep.W.dim();
    REQUIRE(dim == 5);

    // positive part reconstructs as (X1+X2+X3)^2 + 2(Y1+Y2)
    MomentPoly pos(dim);
    for (const auto& [m, c] : rep.W.terms())
        if (c > 0) pos.add_term(m, c);
    MomentPoly xs(dim), ys(dim);
    for (unsigned k = 0; k < 3; ++k) xs = xs + MomentPoly::variable(dim, k);
    for (unsigned k = 3; k < 5; ++k) ys = ys + MomentPoly::variable(dim, k);
    CHECK(pos == xs.pow(2) + ys.scaled(2));

    // negative part is -(Y1+Y2)^2
    MomentPoly neg(dim);
    for (const auto& [m, c] : rep.W.terms())
        if (c < 0) neg.add_term(m, -c);
    CHECK(neg == ys.pow(2));
}

TEST_CASE("split polynomial matches the naive engine") {
    for (unsigned p : {1u, 2u}) {
        SplitPolyReport rep = build_W(p);
        CHECK(to_naive(rep.W) == naive_W(p));
    }
    CHECK(build_W(2).negative_terms == 5);
}

TEST_CASE("split polynomial takes the value one on the defining plane") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (unsigned p : {1u, 2u, 3u}) {
        SplitPolyReport rep = build_W(p);
        unsigned nx = 2 * p + 1;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> point(nx + 2);
            Rational sum_x(0);
            for (unsigned k = 0; k < nx; ++k) {
                point[k] = Rational(num(rng), den(rng));
                point[k].canonicalize();
                sum_x += point[k];
            }
            point[nx + 1] = Rational(num(rng), den(rng));
            point[nx + 1].canonicalize();
            // place Y1 on the plane -sum X + Y1 + Y2 = 1
            point[nx] = Rational(1) + sum_x - point[nx + 1];
            CHECK(rep.W.eval(point) == 1);
        }
    }
}

TEST_CASE("map construction at p = 1 matches the explicit degree-two map") {
    QuadMap g = build_gp(1);
    REQUIRE(g.exact);
    CHECK(g.dim == 5);
    CHECK(g.degree() == 2);
    CHECK(g.n_plus() == 8);
    CHECK(g.n_minus() == 3);

    std::map<Mono, Rational> plus, minus;
    for (const auto& c : g.plus_exact) plus[c.monomial] = c.coeff_sq;
    for (const auto& c : g.minus_exact) minus[c.monomial] = c.coeff_sq;

    std::map<Mono, Rational> expected_plus{
        {Mono(5, {2u, 0u, 0u, 0u, 0u}), Rational(1)},
        {Mono(5, {0u, 2u, 0u, 0u, 0u}), Rational(1)},
        {Mono(5, {0u, 0u, 2u, 0u, 0u}), Rational(1)},
        {Mono(5, {1u, 1u, 0u, 0u, 0u}), Rational(2)},
        {Mono(5, {1u, 0u, 1u, 0u, 0u}), Rational(2)},
        {Mono(5, {0u, 1u, 1u, 0u, 0u}), Rational(2)},
        {Mono(5, {0u, 0u, 0u, 1u, 0u}), Rational(2)},
        {Mono(5, {0u, 0u, 0u, 0u, 1u}), Rational(2)},
    };
    std::map<Mono, Rational> expected_minus{
        {Mono(5, {0u, 0u, 0u, 2u, 0u}), Rational(1)},
        {Mono(5, {0u, 0u, 0u, 1u, 1u}), Rational(2)},
        {Mono(5, {0u, 0u, 0u, 0u, 2u}), Rational(1)},
    };
    CHECK(plus == expected_plus);
    CHECK(minus == expected_minus);
}

TEST_CASE("map degree equals twice the parameter") {
    CHECK(build_gp(3).degree() == 6);
}

TEST_CASE("verification pipeline") {
    QuadMap g1 = build_gp(1);
    QuadMapVerification v = verify_quadmap(g1, 2, 3);
    CHECK(v.exact_zero);
    CHECK(v.remainder.is_zero());

    // identity map on the sphere
    QuadMap identity;
    identity.dim = 3;
    identity.exact = true;
    for (unsigned j = 0; j < 3; ++j)
        identity.plus_exact.push_back({Mono::unit(3, j), Rational(1)});
    CHECK(verify_quadmap(identity, 3, 0).exact_zero);

    // a perturbed coefficient is caught
    QuadMap bad = g1;
    bad.plus_exact[0].coeff_sq += 1;
    QuadMapVerification vbad = verify_quadmap(bad, 2, 3);
    CHECK_FALSE(vbad.exact_zero);
    CHECK_FALSE(vbad.remainder.is_zero());
}

TEST_CASE("negative component count and nondegeneracy across the range") {
    for (unsigned p = 1; p <= 4; ++p) {
        QuadMap g = build_gp(p);
        CHECK(g.n_minus() == 2 * p + 1);
        CHECK(g.degree() == 2 * p);
        CHECK(verify_quadmap(g, 2, 2 * p + 1).exact_zero);

        // no zero components, no two components proportional (distinct
        // monomials cannot be scalar multiples)
        std::set<Mono> seen;
        for (const auto& c : g.plus_exact) {
            CHECK(c.coeff_sq > 0);
            CHECK(seen.insert(c.monomial).second);
        }
        for (const auto& c : g.minus_exact) {
            CHECK(c.coeff_sq > 0);
            CHECK(seen.insert(c.monomial).second);
        }
    }
}

TEST_CASE("capacity limit is a clean error") {
    CHECK_THROWS_AS(build_W(7), CapacityExceeded);
    CHECK_THROWS_AS(build_W(0), BadParameters);
}
