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

#include <numeric>
#include <random>

#include "hqmaps/cyclotomic.hpp"
#include "hqmaps/errors.hpp"

using namespace hqmaps;

namespace {

// randomized values with small rational coefficients at a given conductor
CycNum random_cyc(std::mt19937& rng, unsigned conductor) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    unsigned d = euler_phi(conductor);
    std::vector<Rational> coeffs(d);
    for (auto& c : coeffs) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return CycNum(conductor, std::move(coeffs));
}

long order_of(const CycNum& v, unsigned bound) {
    CycNum acc(1L);
    for (unsigned k = 1; k <= bound; ++k) {
        acc = acc * v;
        if (acc == CycNum(1L)) return k;
    }
    return -1;
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);
    // Phi_6 = x^2 - x + 1
    const auto& p6 = cyclotomic_polynomial(6);
    CHECK(p6.size() == 3);
    CHECK(p6[0] == 1);
    CHECK(p6[1] == -1);
    CHECK(p6[2] == 1);
    // Phi_8 = x^4 + 1
    const auto& p8 = cyclotomic_polynomial(8);
    CHECK(p8.size() == 5);
    CHECK(p8[0] == 1);
    CHECK(p8[1] == 0);
    CHECK(p8[4] == 1);
}

TEST_CASE("roots of unity") {
    CHECK(CycNum::root_of_unity(1, 0) == CycNum(1L));

    CycNum i = CycNum::root_of_unity(4, 1);
    CHECK(i * i == CycNum(-1L));

    // zeta_6^3 = -1; numeric oracle: the embedding of exp(2*pi*i*3/6)
    CycNum v = CycNum::root_of_unity(6, 3);
    CHECK(v == CycNum(-1L));
    auto e = v.embed(100);
    CHECK(e.re().contains_rational(Rational(-1)));
    CHECK(e.im().contains_rational(Rational(0)));
}

TEST_CASE("multiplicative order is n / gcd(n, k)") {
    for (unsigned n : {4u, 6u, 12u}) {
        for (long k = 1; k < static_cast<long>(n); ++k) {
            CycNum z = CycNum::root_of_unity(n, k);
            CHECK(order_of(z, 2 * n) ==
                  static_cast<long>(n / std::gcd(n, static_cast<unsigned>(k))));
        }
    }
}

TEST_CASE("arithmetic fixtures") {
    CycNum z6 = CycNum::root_of_unity(6, 1);
    CHECK(z6 * z6.pow(5) == CycNum(1L));

    // sum of the primitive cube roots equals the Moebius value at 3
    CycNum sum = CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2);
    CHECK(sum == CycNum(-1L));

    // (1 + i) / (1 - i) = i, cross-checked through the 100-bit embedding
    CycNum i = CycNum::root_of_unity(4, 1);
    CycNum q = (CycNum(1L) + i) / (CycNum(1L) - i);
    CHECK(q == i);
    auto diff = (q - i).embed(100);
    CHECK(diff.contains_zero());
    CHECK(diff.re().width_double() < 1e-25);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(CycNum(1L) / CycNum(0L), DivisionByZero);
    CHECK_THROWS_AS(CycNum().inverse(), DivisionByZero);
}

TEST_CASE("embedding fixtures") {
    auto one = CycNum(1L).embed(128);
    CHECK(one.re().contains_rational(Rational(1)));
    CHECK(one.re().width_double() == 0.0);

    auto i = CycNum::root_of_unity(4, 1).embed(128);
    CHECK(i.re().contains_rational(Rational(0)));
    CHECK(i.im().contains_rational(Rational(1)));

    // zeta_6 = 1/2 + i*sqrt(3)/2; oracle: high-precision cos/sin of pi/3
    auto z6 = CycNum::root_of_unity(6, 1).embed(128);
    CHECK(z6.re().contains_rational(Rational(1, 2)));
    mpfr_t s;
    mpfr_init2(s, 192);
    mpfr_const_pi(s, MPFR_RNDN);
    mpfr_div_ui(s, s, 3, MPFR_RNDN);
    mpfr_sin(s, s, MPFR_RNDN);
    RealInterval sin_pi3 = RealInterval::point(s, 192);
    mpfr_clear(s);
    CHECK((z6.im() - sin_pi3).contains_zero());
    CHECK(z6.im().width_double() < 1e-30);
}

TEST_CASE("field axioms on randomized triples, conductors up to 24") {
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<unsigned> cond(1, 24);
    for (int trial = 0; trial < 60; ++trial) {
        CycNum a = random_cyc(rng, cond(rng));
        CycNum b = random_cyc(rng, cond(rng));
        CycNum c = random_cyc(rng, cond(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == CycNum());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum(1L));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> cond(1, 24);
    for (int trial = 0; trial < 40; ++trial) {
        CycNum a = random_cyc(rng, cond(rng));
        CycNum b = random_cyc(rng, cond(rng));
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * a.conj()).is_real());
    }
}

TEST_CASE("embedding commutes with conjugation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned> cond(1, 24);
    for (int trial = 0; trial < 20; ++trial) {
        CycNum a = random_cyc(rng, cond(rng));
        auto e = a.embed(128);
        auto ec = a.conj().embed(128);
        CHECK((e.re() - ec.re()).contains_zero());
        CHECK((e.im() + ec.im()).contains_zero());
    }
}

TEST_CASE("representation invariants") {
    CycNum z12 = CycNum::root_of_unity(12, 1);
    CHECK(z12.coeffs().size() == euler_phi(12));
    CHECK(z12.conductor() == 12);
    // mixed-conductor arithmetic lands at the lcm
    CycNum z4 = CycNum::root_of_unity(4, 1);
    CycNum z6 = CycNum::root_of_unity(6, 1);
    CHECK((z4 * z6).conductor() == 12);
    CHECK((z4 + z6).conductor() == 12);
    // rationality flags
    CHECK(CycNum(Rational(3, 2)).is_rational());
    CHECK_FALSE(z4.is_rational());
    CHECK_THROWS_AS(z4.rational_value(), NonRationalCoefficient);
    CHECK(z4.lifted_to(12) == z4);
}

TEST_CASE("conductor compression finds the minimal field") {
    CycNum z6 = CycNum::root_of_unity(6, 1);
    CycNum v = z6 * z6;  // = zeta_3, still stored at conductor 6
    CHECK(v.conductor() == 6);
    CycNum compressed = v.compressed();
    CHECK(compressed.conductor() == 3);
    CHECK(compressed == v);

    CycNum minus1 = z6.pow(3).compressed();
    CHECK(minus1.conductor() == 1);
    CHECK(minus1 == CycNum(-1L));

    // already minimal stays put
    CHECK(CycNum::root_of_unity(5, 1).compressed().conductor() == 5);
}
