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
#include "hqmaps/numeric.hpp"

using namespace hqmaps;

TEST_CASE("interval arithmetic encloses exact results") {
    auto a = RealInterval::from_rational(Rational(1, 3), 128);
    auto b = RealInterval::from_rational(Rational(2, 7), 128);
    CHECK((a + b).contains_rational(Rational(13, 21)));
    CHECK((a - b).contains_rational(Rational(1, 21)));
    CHECK((a * b).contains_rational(Rational(2, 21)));
    CHECK((a / b).contains_rational(Rational(7, 6)));
    CHECK((-a).contains_rational(Rational(-1, 3)));
    CHECK_FALSE(a.contains_zero());
    CHECK(a.is_strictly_positive());
    CHECK((-a).is_strictly_negative());
}

TEST_CASE("interval mul sign cases") {
    auto neg = RealInterval::from_long(-3, 64);
    auto pos = RealInterval::from_long(5, 64);
    auto span = RealInterval::hull(neg, pos);  // [-3, 5]
    CHECK((neg * pos).contains_rational(Rational(-15)));
    CHECK((span * span).contains_rational(Rational(-15)));
    CHECK((span * span).contains_rational(Rational(25)));
    CHECK(span.contains_zero());
}

TEST_CASE("certified roots") {
    auto four = RealInterval::from_long(4, 128);
    CHECK(four.sqrt().contains_rational(Rational(2)));
    auto v = RealInterval::from_long(1024, 128);
    CHECK(v.rootn(10).contains_rational(Rational(2)));
    CHECK(v.pown(2).contains_rational(Rational(1048576)));
}

TEST_CASE("division by an interval containing zero is rejected") {
    auto a = RealInterval::from_long(1, 64);
    auto z = RealInterval::hull(RealInterval::from_long(-1, 64),
                                RealInterval::from_long(1, 64));
    CHECK_THROWS_AS(a / z, DivisionByZero);
}

TEST_CASE("unit roots: quarter turns are exact") {
    auto one = unit_root_interval(4, 0, 128);
    CHECK(one.re().contains_rational(Rational(1)));
    CHECK(one.re().width_double() == 0.0);
    CHECK(one.im().width_double() == 0.0);

    auto i = unit_root_interval(4, 1, 128);
    CHECK(i.re().contains_rational(Rational(0)));
    CHECK(i.im().contains_rational(Rational(1)));

    auto minus1 = unit_root_interval(8, 4, 128);
    CHECK(minus1.re().contains_rational(Rational(-1)));
}

TEST_CASE("unit roots have modulus one") {
    for (unsigned n : {3u, 5u, 7u, 12u}) {
        for (long k = 0; k < static_cast<long>(n); ++k) {
            auto z = unit_root_interval(n, k, 128);
            CHECK(z.sqr_norm().contains_rational(Rational(1)));
            CHECK(z.sqr_norm().width_double() < 1e-30);
        }
    }
}

TEST_CASE("negative k wraps around") {
    auto a = unit_root_interval(6, -1, 128);
    auto b = unit_root_interval(6, 5, 128);
    CHECK((a - b).contains_zero());
}
