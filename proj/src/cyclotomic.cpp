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

#include "hqmaps/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hqmaps/errors.hpp"

namespace hqmaps {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

namespace {

// exact division of integer polynomials, divisor monic
std::vector<BigInt> int_poly_divide_exact(std::vector<BigInt> num,
                                          const std::vector<BigInt>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {BigInt(0)};
    std::vector<BigInt> quot(num.size() - dd, BigInt(0));
    for (size_t i = num.size(); i-- > dd;) {
        BigInt q = num[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    return quot;
}

std::map<unsigned, std::vector<BigInt>>& cyclo_cache() {
    static std::map<unsigned, std::vector<BigInt>> cache;
    return cache;
}
std::mutex cyclo_mutex;

std::vector<BigInt> compute_cyclotomic(unsigned n);

const std::vector<BigInt>& cyclotomic_locked(unsigned n) {
    auto& cache = cyclo_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto poly = compute_cyclotomic(n);
    return cache.emplace(n, std::move(poly)).first->second;
}

std::vector<BigInt> compute_cyclotomic(unsigned n) {
    if (n == 1) return {BigInt(-1), BigInt(1)};  // x - 1
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        num = int_poly_divide_exact(std::move(num), cyclotomic_locked(d));
    }
    return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw BadParameters("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_locked(n);
}

namespace {

// canonical reduction of a polynomial in zeta_n modulo Phi_n
std::vector<Rational> reduce_mod_cyclo(std::vector<Rational> poly, unsigned n) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    const size_t d = phi_poly.size() - 1;  // = phi(n)
    if (poly.size() < d) poly.resize(d, Rational(0));
    for (size_t i = poly.size(); i-- > d;) {
        if (poly[i] == 0) continue;
        Rational q = poly[i];
        poly[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            if (phi_poly[j] != 0) poly[i - d + j] -= q * Rational(phi_poly[j]);
        }
    }
    poly.resize(d);
    return poly;
}

int poly_degree(const std::vector<Rational>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace

CycNum::CycNum(unsigned n, std::vector<Rational> poly) : n_(n) {
    if (n == 0) throw BadParameters("CycNum: conductor must be positive");
    c_ = reduce_mod_cyclo(std::move(poly), n);
}

CycNum CycNum::root_of_unity(unsigned n, long k) {
    if (n == 0) throw BadParameters("root_of_unity: n must be positive");
    long r = k % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    std::vector<Rational> poly(static_cast<size_t>(r) + 1, Rational(0));
    poly[static_cast<size_t>(r)] = 1;
    return CycNum(n, std::move(poly));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational())
        throw NonRationalCoefficient("value is not rational: " + str());
    return c_[0];
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum CycNum::conj() const {
    // zeta -> zeta^(n-1), i.e. exponent i -> n - i
    std::vector<Rational> poly(n_, Rational(0));
    poly[0] = c_[0];
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) poly[n_ - i] += c_[i];
    }
    return CycNum(n_, std::move(poly));
}

CycNum CycNum::lifted_to(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw BadParameters("lifted_to: target conductor must be a multiple");
    const unsigned step = m / n_;
    std::vector<Rational> poly(static_cast<size_t>(c_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) poly[i * step] = c_[i];
    return CycNum(m, std::move(poly));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }
}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
    unsigned m = lcm_u(a.n_, b.n_);
    CycNum x = a.lifted_to(m), y = b.lifted_to(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    unsigned m = lcm_u(a.n_, b.n_);
    CycNum x = a.lifted_to(m), y = b.lifted_to(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycNum CycNum::operator-() const {
    CycNum x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    unsigned m = lcm_u(a.n_, b.n_);
    CycNum x = a.lifted_to(m), y = b.lifted_to(m);
    std::vector<Rational> prod(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return CycNum(m, std::move(prod));
}

CycNum operator*(const Rational& a, const CycNum& b) {
    CycNum x = b;
    return x * CycNum(a);
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return CycNum(Rational(1) / c_[0]).lifted_to(n_);

    // extended Euclid: s*value = gcd (mod Phi_n); Phi_n irreducible over Q,
    // so the gcd is a nonzero constant
    const auto& phi = cyclotomic_polynomial(n_);
    std::vector<Rational> r0(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) r0[i] = Rational(phi[i]);
    std::vector<Rational> r1 = c_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};

    while (true) {
        int d1 = poly_degree(r1);
        if (d1 <= 0) break;
        // r0 = q*r1 + r2; s2 = s0 - q*s1
        std::vector<Rational> r2 = r0;
        std::vector<Rational> q(r0.size(), Rational(0));
        int d0 = poly_degree(r2);
        const Rational lead = r1[d1];
        while (d0 >= d1) {
            Rational f = r2[d0] / lead;
            q[d0 - d1] += f;
            for (int j = 0; j <= d1; ++j) r2[d0 - d1 + j] -= f * r1[j];
            r2[d0] = 0;
            d0 = poly_degree(r2);
        }
        std::vector<Rational> s2 = s0;
        size_t need = q.size() + s1.size();
        if (s2.size() < need) s2.resize(need, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }

    int d = poly_degree(r1);
    if (d != 0) throw DivisionByZero("inverse: unexpected gcd degree");
    const Rational g = r1[0];
    for (auto& v : s1) v /= g;
    return CycNum(n_, std::move(s1));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc(1L);
    CycNum base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base * base;
    }
    return acc.lifted_to(n_);
}

bool operator==(const CycNum& a, const CycNum& b) {
    unsigned m = lcm_u(a.n_, b.n_);
    CycNum x = a.lifted_to(m), y = b.lifted_to(m);
    return x.c_ == y.c_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
    unsigned m = lcm_u(a.n_, b.n_);
    CycNum x = a.lifted_to(m), y = b.lifted_to(m);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

CycNum CycNum::compressed() const {
    CycNum cur = *this;
    bool again = true;
    while (again && cur.n_ > 1) {
        again = false;
        unsigned n = cur.n_;
        for (unsigned p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            // try to express the value in Q(zeta_{n/p}) by solving the lift map
            unsigned m = n / p;
            unsigned dm = euler_phi(m);
            unsigned dn = euler_phi(n);
            // columns: reductions of zeta_n^(k*n/m) for k < phi(m)
            std::vector<std::vector<Rational>> cols(dm);
            for (unsigned k = 0; k < dm; ++k) {
                std::vector<Rational> e(static_cast<size_t>(k) * (n / m) + 1, Rational(0));
                e.back() = 1;
                cols[k] = reduce_mod_cyclo(std::move(e), n);
            }
            // solve sum_k x_k * cols[k] = cur.c_ by Gaussian elimination
            std::vector<std::vector<Rational>> A(dn, std::vector<Rational>(dm + 1));
            for (unsigned i = 0; i < dn; ++i) {
                for (unsigned k = 0; k < dm; ++k) A[i][k] = cols[k][i];
                A[i][dm] = cur.c_[i];
            }
            std::vector<int> pivot_col(dn, -1);
            unsigned row = 0;
            for (unsigned col = 0; col < dm && row < dn; ++col) {
                unsigned sel = row;
                while (sel < dn && A[sel][col] == 0) ++sel;
                if (sel == dn) continue;
                std::swap(A[sel], A[row]);
                for (unsigned i = 0; i < dn; ++i) {
                    if (i == row || A[i][col] == 0) continue;
                    Rational f = A[i][col] / A[row][col];
                    for (unsigned j = col; j <= dm; ++j) A[i][j] -= f * A[row][j];
                }
                pivot_col[row] = static_cast<int>(col);
                ++row;
            }
            bool consistent = true;
            for (unsigned i = row; i < dn; ++i)
                if (A[i][dm] != 0) { consistent = false; break; }
            if (!consistent) continue;
            std::vector<Rational> sol(dm, Rational(0));
            for (unsigned i = 0; i < row; ++i)
                sol[pivot_col[i]] = A[i][dm] / A[i][pivot_col[i]];
            cur = CycNum(m, std::move(sol));
            again = true;
            break;
        }
    }
    return cur;
}

ComplexInterval CycNum::embed(mpfr_prec_t precision_bits) const {
    if (precision_bits < 53) precision_bits = 53;
    ComplexInterval acc(precision_bits);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        ComplexInterval coeff = ComplexInterval::from_rationals(c_[i], Rational(0),
                                                                precision_bits);
        acc = acc + coeff * unit_root_interval(n_, static_cast<long>(i), precision_bits);
    }
    return acc;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*w" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hqmaps
