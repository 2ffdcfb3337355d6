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

#include <cstdint>
#include <string>
#include <vector>

#include "hqmaps/numeric.hpp"

namespace hqmaps {

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic),
/// index = power. Results are cached; the cache is read-only after fill.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power
/// basis 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the n-th cyclotomic
/// polynomial. Values are immutable; all operations are pure.
///
/// Mixed-conductor operands are lifted to the lcm conductor. No conductor
/// compression happens implicitly; see `compressed()`.
class CycNum {
   public:
    CycNum() : n_(1), c_{Rational(0)} {}
    explicit CycNum(long v) : n_(1), c_{Rational(v)} {}
    explicit CycNum(const Rational& v) : n_(1), c_{v} {}
    /// Conductor-n element from an arbitrary-degree polynomial in zeta_n.
    CycNum(unsigned n, std::vector<Rational> poly);

    /// zeta_n^k (k arbitrary, reduced mod n).
    static CycNum root_of_unity(unsigned n, long k);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws NonRationalCoefficient when the value is not in Q.
    Rational rational_value() const;
    bool is_real() const;

    CycNum conj() const;
    /// Re-express in Q(zeta_m); m must be a multiple of the conductor.
    CycNum lifted_to(unsigned m) const;
    /// Equivalent value at the minimal conductor (optional normalization).
    CycNum compressed() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    CycNum inverse() const;
    CycNum pow(long e) const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
    /// Total order compatible with equality (lift to common conductor, then
    /// lexicographic on coefficients). Used for canonical sorting.
    static int compare(const CycNum& a, const CycNum& b);

    /// Certified complex interval for the principal embedding
    /// zeta_n -> exp(2*pi*i/n).
    ComplexInterval embed(mpfr_prec_t precision_bits) const;

    std::string str() const;

   private:
    unsigned n_;
    std::vector<Rational> c_;  // length phi(n_)
};

CycNum operator*(const Rational& a, const CycNum& b);

}  // namespace hqmaps
