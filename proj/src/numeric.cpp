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

#include "hqmaps/numeric.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "hqmaps/errors.hpp"

namespace hqmaps {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_bigint(const BigInt& z, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::point(mpfr_srcptr v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set(r.lo_, v, MPFR_RNDD);
    mpfr_set(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_point_with_error(mpfr_srcptr value, mpfr_srcptr err,
                                                 mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_sub(r.lo_, value, err, MPFR_RNDD);
    mpfr_add(r.hi_, value, err, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower bound: min of the four endpoint products, rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper bound: max of the four, rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw DivisionByZero("interval divisor contains zero");
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainViolation("sqrt of interval with negative part");
    RealInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::rootn(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0) throw DomainViolation("rootn of interval with negative part");
    RealInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::abs() const {
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pown(unsigned long n) const {
    RealInterval acc = RealInterval::from_long(1, prec_);
    RealInterval base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool RealInterval::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool RealInterval::upper_at_most(const Rational& bound) const {
    return mpfr_cmp_q(hi_, bound.get_mpq_t()) <= 0;
}

bool RealInterval::certainly_less(const RealInterval& other) const {
    return mpfr_cmp(hi_, other.lo_) < 0;
}

bool RealInterval::contains_rational(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

void RealInterval::sup_abs(mpfr_ptr out) const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_abs(t, lo_, MPFR_RNDU);
    mpfr_abs(out, hi_, MPFR_RNDU);
    mpfr_max(out, out, t, MPFR_RNDU);
    mpfr_clear(t);
}

void RealInterval::mid(mpfr_ptr out) const {
    mpfr_add(out, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

double RealInterval::width_double() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

double RealInterval::mid_double() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    double m = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return m;
}

namespace {
std::string mpfr_str(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*R*g", digits, rnd, v) < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}
}  // namespace

std::string RealInterval::str(int digits) const {
    return "[" + mpfr_str(lo_, digits, MPFR_RNDD) + ", " + mpfr_str(hi_, digits, MPFR_RNDU) + "]";
}

ComplexInterval ComplexInterval::from_rationals(const Rational& re, const Rational& im,
                                                mpfr_prec_t prec) {
    return ComplexInterval(RealInterval::from_rational(re, prec),
                           RealInterval::from_rational(im, prec));
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return ComplexInterval(a.re_ * b.re_ - a.im_ * b.im_,
                           a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexInterval ComplexInterval::operator-() const {
    return ComplexInterval(-re_, -im_);
}

ComplexInterval ComplexInterval::conj() const {
    return ComplexInterval(re_, -im_);
}

RealInterval ComplexInterval::sqr_norm() const {
    return re_ * re_ + im_ * im_;
}

void ComplexInterval::sup_abs(mpfr_ptr out) const {
    mpfr_t a, b;
    mpfr_init2(a, re_.precision());
    mpfr_init2(b, im_.precision());
    re_.sup_abs(a);
    im_.sup_abs(b);
    mpfr_sqr(a, a, MPFR_RNDU);
    mpfr_sqr(b, b, MPFR_RNDU);
    mpfr_add(a, a, b, MPFR_RNDU);
    mpfr_sqrt(out, a, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
}

bool ComplexInterval::contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
}

std::string ComplexInterval::str(int digits) const {
    return re_.str(digits) + " + " + im_.str(digits) + "*i";
}

ComplexInterval unit_root_interval(unsigned n, long k, mpfr_prec_t prec) {
    if (n == 0) throw BadParameters("unit_root_interval: n must be positive");
    long r = k % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    unsigned kk = static_cast<unsigned>(r);

    // quarter turns are exact
    if (4ULL * kk % n == 0) {
        unsigned quarter = static_cast<unsigned>(4ULL * kk / n);  // 0..3
        long re = (quarter == 0) ? 1 : (quarter == 2) ? -1 : 0;
        long im = (quarter == 1) ? 1 : (quarter == 3) ? -1 : 0;
        return ComplexInterval(RealInterval::from_long(re, prec),
                               RealInterval::from_long(im, prec));
    }

    // theta = 2*pi*k/n as a tight interval, then cos/sin at the midpoint with a
    // Lipschitz error bound (|cos'|,|sin'| <= 1).
    RealInterval theta = RealInterval::pi(prec) *
                         RealInterval::from_rational(Rational(2L * kk, n), prec);

    mpfr_t mid, delta, t, c, s, err, ulp;
    mpfr_init2(mid, prec);
    mpfr_init2(delta, prec);
    mpfr_init2(t, prec);
    mpfr_init2(c, prec);
    mpfr_init2(s, prec);
    mpfr_init2(err, prec);
    mpfr_init2(ulp, prec);

    mpfr_add(mid, theta.lo(), theta.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(delta, theta.hi(), mid, MPFR_RNDU);
    mpfr_sub(t, mid, theta.lo(), MPFR_RNDU);
    mpfr_max(delta, delta, t, MPFR_RNDU);

    mpfr_cos(c, mid, MPFR_RNDN);
    mpfr_sin(s, mid, MPFR_RNDN);

    // rounding error of correctly-rounded cos/sin is at most one ulp of a
    // value bounded by 1 in magnitude
    mpfr_set_ui_2exp(ulp, 1, -(prec - 2), MPFR_RNDU);
    mpfr_add(err, delta, ulp, MPFR_RNDU);

    RealInterval re = RealInterval::from_point_with_error(c, err, prec);
    RealInterval im = RealInterval::from_point_with_error(s, err, prec);

    mpfr_clears(mid, delta, t, c, s, err, ulp, static_cast<mpfr_ptr>(nullptr));
    return ComplexInterval(std::move(re), std::move(im));
}

}  // namespace hqmaps
