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

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace hqmaps {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
/// Every operation returns an interval that rigorously contains the exact
/// result. Endpoints share one precision, fixed at construction.
class RealInterval {
   public:
    explicit RealInterval(mpfr_prec_t prec = 128);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static RealInterval from_long(long v, mpfr_prec_t prec);
    static RealInterval from_rational(const Rational& q, mpfr_prec_t prec);
    static RealInterval from_bigint(const BigInt& z, mpfr_prec_t prec);
    /// Degenerate interval [v, v] (v is an exact binary value).
    static RealInterval point(mpfr_srcptr v, mpfr_prec_t prec);
    /// [value - err, value + err]; err must be >= 0.
    static RealInterval from_point_with_error(mpfr_srcptr value, mpfr_srcptr err,
                                              mpfr_prec_t prec);
    static RealInterval pi(mpfr_prec_t prec);
    static RealInterval hull(const RealInterval& a, const RealInterval& b);

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    /// Division; the divisor interval must not contain zero.
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const;

    RealInterval sqrt() const;       // requires lo >= 0
    RealInterval rootn(unsigned long n) const;  // requires lo >= 0
    RealInterval abs() const;
    /// Interval of x^n (integer n >= 0).
    RealInterval pown(unsigned long n) const;

    bool contains_zero() const;
    bool is_strictly_positive() const;
    bool is_strictly_negative() const;
    /// True when the whole interval is <= the rational bound.
    bool upper_at_most(const Rational& bound) const;
    /// True when the whole interval is < that of `other` (certified).
    bool certainly_less(const RealInterval& other) const;
    bool contains_rational(const Rational& q) const;

    /// Upper bound for |x| over the interval, rounded up.
    void sup_abs(mpfr_ptr out) const;
    /// Midpoint (lo+hi)/2, rounded to nearest at out's precision.
    void mid(mpfr_ptr out) const;
    double width_double() const;
    double mid_double() const;
    std::string str(int digits = 20) const;

   private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    friend class ComplexInterval;
};

/// Rectangular complex interval (independent real and imaginary parts).
class ComplexInterval {
   public:
    explicit ComplexInterval(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    ComplexInterval(RealInterval re, RealInterval im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexInterval from_rationals(const Rational& re, const Rational& im,
                                          mpfr_prec_t prec);

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    ComplexInterval operator-() const;
    ComplexInterval conj() const;

    /// Interval containing |z|^2.
    RealInterval sqr_norm() const;
    /// Upper bound for |z| (modulus), rounded up.
    void sup_abs(mpfr_ptr out) const;
    bool contains_zero() const;
    std::string str(int digits = 20) const;

   private:
    RealInterval re_, im_;
};

/// Certified interval for exp(2*pi*i*k/n). Quarter-turn angles are exact.
ComplexInterval unit_root_interval(unsigned n, long k, mpfr_prec_t prec);

}  // namespace hqmaps
