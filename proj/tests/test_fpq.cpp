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

bool trial_division_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

MomentPoly via_group_product(unsigned p, unsigned q) {
    return phi_gamma(make_gamma_pq(p, q)).diagonal().to_moment();
}

}  // namespace

TEST_CASE("q = 1 collapses to the binomial expansion") {
    MomentPoly x = MomentPoly::variable(2, 0);
    MomentPoly y = MomentPoly::variable(2, 1);
    for (unsigned p : {2u, 3u, 7u}) {
        CHECK(fpq_compute(p, 1) == (x + y).pow(p));
    }
}

TEST_CASE("degree-five fixture") {
    MomentPoly x = MomentPoly::variable(2, 0);
    MomentPoly y = MomentPoly::variable(2, 1);
    CHECK(fpq_compute(5, 4) ==
          x.pow(5) + y.pow(5) + (x * y).scaled(5) - (x * y).pow(2).scaled(5));
}

TEST_CASE("fast path equals the full bidegree route") {
    CHECK(fpq_compute(3, 2) == via_group_product(3, 2));
    for (unsigned p = 2; p <= 10; ++p) {
        for (unsigned q : {1u, 2u, p - 1}) {
            if (q >= p) continue;
            CHECK(fpq_compute(p, q) == via_group_product(p, q));
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(fpq_compute(1, 1), BadParameters);
    CHECK_THROWS_AS(fpq_compute(5, 0), BadParameters);
    CHECK_THROWS_AS(fpq_compute(5, 5), BadParameters);
}

TEST_CASE("the q = 2 recurrence") {
    MomentPoly x = MomentPoly::variable(2, 0);
    MomentPoly y = MomentPoly::variable(2, 1);

    CHECK(fp2_recurrence(2) == x.pow(2) + y.scaled(2) - y.pow(2));
    CHECK(fp2_recurrence(3) == fpq_compute(3, 2));
    CHECK(fp2_recurrence(4) ==
          x.pow(4) + (x * x * y).scaled(4) + (y * y).scaled(2) - y.pow(4));
    CHECK(fp2_recurrence(4) == fpq_compute(4, 2));
    CHECK(fp2_recurrence(7) == fpq_compute(7, 2));
}

TEST_CASE("coefficient signs for the q = 2 family") {
    for (unsigned p = 3; p <= 30; ++p) {
        MomentPoly f = fp2_recurrence(p);
        for (const auto& [m, c] : f.terms()) {
            if (m[0] == 0 && m[1] == p) {
                CHECK(c == ((p % 2 == 0) ? Rational(-1) : Rational(1)));
            } else {
                CHECK(c > 0);
            }
        }
        // aside from the pure y^p term, the support is x^(p-2j) y^j
        for (const auto& [m, c] : f.terms()) {
            if (m[0] == 0 && m[1] == p) continue;
            CHECK(m[0] + 2 * m[1] == p);
        }
    }
}

TEST_CASE("normalization on the moment line") {
    for (auto [p, q] : {std::pair<unsigned, unsigned>{6, 5}, {9, 2}, {12, 7}}) {
        MomentPoly f = fpq_compute(p, q);
        MomentPoly g = f.substitute_affine(1, Rational(1), {Rational(-1), Rational(0)});
        CHECK(g == MomentPoly::constant(2, Rational(1)));
    }
}

TEST_CASE("primality fixtures") {
    CHECK(prime_test(5, 4).is_prime);
    PrimalityResult r = prime_test(6, 5);
    CHECK_FALSE(r.is_prime);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == Mono(2, {2u, 2u}));
    CHECK(r.witness->second == -9);
    CHECK(prime_test(7, 2).is_prime == trial_division_prime(7));
}

TEST_CASE("primality matches trial division") {
    for (unsigned p = 2; p <= 30; ++p) {
        for (unsigned q : {2u, 3u, p - 1}) {
            if (q < 1 || q >= p) continue;
            CHECK(prime_test(p, q).is_prime == trial_division_prime(p));
        }
    }
}

TEST_CASE("coefficient-sum scalars") {
    auto g3 = golden_ratio_scalar(3);
    CHECK(g3.s_p == fpq_compute(3, 2).eval({Rational(1), Rational(1)}));
    CHECK(g3.s_p == 5);
    auto g4 = golden_ratio_scalar(4);
    CHECK(g4.s_p == fp2_recurrence(4).eval({Rational(1), Rational(1)}));
    CHECK(g4.s_p == 6);
}

TEST_CASE("scalar roots stay within (1, 2) and approach the golden ratio") {
    RealInterval golden = (RealInterval::from_long(1, 256) +
                           RealInterval::from_long(5, 256).sqrt()) *
                          RealInterval::from_rational(Rational(1, 2), 256);
    RealInterval prev_gap(256);
    bool have_prev = false;
    for (unsigned p = 5; p <= 45; p += 5) {
        auto g = golden_ratio_scalar(p, 256);
        CHECK(RealInterval::from_long(1, 256).certainly_less(g.root));
        CHECK(g.root.certainly_less(RealInterval::from_long(2, 256)));
        RealInterval gap = (g.root - golden).abs();
        if (have_prev) CHECK(gap.certainly_less(prev_gap));
        prev_gap = gap;
        have_prev = true;
    }
}

TEST_CASE("shape of the conjugate-pair family") {
    auto s4 = fp_pm1_structure(4);
    REQUIRE(s4.n_j.size() == 2);
    CHECK(s4.n_j[0] == std::pair<unsigned, BigInt>{1, BigInt(4)});
    CHECK(s4.n_j[1] == std::pair<unsigned, BigInt>{2, BigInt(-2)});
    CHECK(s4.positive_count == 3);
    CHECK(s4.negative_count == 1);

    auto s6 = fp_pm1_structure(6);
    REQUIRE(s6.n_j.size() == 3);
    CHECK(s6.n_j[0].second == 6);
    CHECK(s6.n_j[1].second == -9);
    CHECK(s6.n_j[2].second == 2);
    CHECK(s6.positive_count == 4);
    CHECK(s6.negative_count == 1);

    auto s7 = fp_pm1_structure(7);
    CHECK(s7.n_j[0].second == 7);
    CHECK(s7.n_j[1].second == -14);
    CHECK(s7.n_j[2].second == 7);
    CHECK(s7.positive_count == 4);
    CHECK(s7.negative_count == 1);
}

TEST_CASE("limit gap monitor") {
    auto rows = proposition41_check(
        50, {{Rational(1), Rational(1)}}, 192);
    REQUIRE(rows.size() == 1);
    // |f^(1/p) - target| certified below 0.02
    RealInterval diff = (rows[0].f_root - rows[0].target).abs();
    CHECK(diff.upper_at_most(Rational(1, 50)));
    CHECK(rows[0].gap.upper_at_most(Rational(1, 50)));

    auto rows2 = proposition41_check(30, {{Rational(2), Rational(1)}}, 192);
    // target = 1 + sqrt(2)
    RealInterval expect =
        RealInterval::from_long(1, 192) + RealInterval::from_long(2, 192).sqrt();
    CHECK((rows2[0].target - expect).contains_zero());

    auto rows3 = proposition41_check(10, {{Rational(1), Rational(0)}}, 128);
    CHECK(rows3[0].f_root.contains_rational(Rational(1)));
    CHECK(rows3[0].target.contains_rational(Rational(1)));
    CHECK(rows3[0].gap.contains_rational(Rational(0)));

    CHECK_THROWS_AS(proposition41_check(10, {{Rational(0), Rational(2)}}, 128),
                    DomainViolation);
    CHECK_THROWS_AS(proposition41_check(10, {{Rational(0), Rational(0)}}, 128),
                    DomainViolation);
}
