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

#include "hqmaps/hermpoly.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "hqmaps/unitary.hpp"

namespace hqmaps {

// ---------------------------------------------------------------- HoloPoly

HoloPoly HoloPoly::constant(unsigned dim, const CycNum& c) {
    HoloPoly p(dim);
    p.add_term(Mono(dim), c);
    return p;
}

HoloPoly HoloPoly::monomial(unsigned dim, const Mono& m, const CycNum& c) {
    HoloPoly p(dim);
    p.add_term(m, c);
    return p;
}

unsigned HoloPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void HoloPoly::add_term(const Mono& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HoloPoly operator+(const HoloPoly& a, const HoloPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("HoloPoly +: dim mismatch");
    HoloPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("HoloPoly *: dim mismatch");
    HoloPoly r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.plus(mb), ca * cb);
    }
    return r;
}

HoloPoly HoloPoly::scaled(const CycNum& c) const {
    HoloPoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

HoloPoly HoloPoly::pow(unsigned e) const {
    HoloPoly acc = HoloPoly::constant(dim_, CycNum(1L));
    HoloPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

LinearSubstitution::LinearSubstitution(const UnitaryMatrix& g, bool conjugate_entries) {
    unsigned n = g.dim();
    forms_.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        HoloPoly f(n);
        for (unsigned k = 0; k < n; ++k) {
            const CycNum& a = g.at(j, k);
            if (a.is_zero()) continue;
            f.add_term(Mono::unit(n, k), conjugate_entries ? a.conj() : a);
        }
        forms_.push_back(std::move(f));
    }
    powers_.resize(n);
}

const HoloPoly& LinearSubstitution::expand(const Mono& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    HoloPoly acc = HoloPoly::constant(forms_.front().dim(), CycNum(1L));
    for (unsigned j = 0; j < forms_.size(); ++j) {
        if (alpha[j] == 0) continue;
        auto& vec = powers_[j];
        if (vec.empty()) vec.push_back(HoloPoly::constant(forms_[j].dim(), CycNum(1L)));
        while (vec.size() <= alpha[j]) vec.push_back(vec.back() * forms_[j]);
        acc = acc * vec[alpha[j]];
    }
    return memo_.emplace(alpha, std::move(acc)).first->second;
}

HoloPoly HoloPoly::composed_with(const UnitaryMatrix& g) const {
    if (g.dim() != dim_) throw DimensionMismatch("composed_with: dim mismatch");
    LinearSubstitution sub(g, /*conjugate_entries=*/false);
    HoloPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        for (const auto& [em, ec] : sub.expand(m).terms()) r.add_term(em, c * ec);
    }
    return r;
}

HoloPoly HoloPoly::normalized() const {
    if (terms_.empty()) return *this;
    const CycNum& lead = terms_.rbegin()->second;
    return scaled(lead.inverse());
}

CycNum HoloPoly::eval(const std::vector<CycNum>& z) const {
    if (z.size() != dim_) throw DimensionMismatch("HoloPoly eval: bad point size");
    CycNum total;
    for (const auto& [m, c] : terms_) {
        CycNum t = c;
        for (unsigned j = 0; j < dim_; ++j)
            if (m[j] > 0) t *= z[j].pow(m[j]);
        total += t;
    }
    return total;
}

std::string HoloPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        if (!it->first.is_constant()) os << "*" << it->first.str("z");
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- HermPoly

HermPoly::HermPoly(unsigned dim) : dim_(dim) {
    if (dim == 0 || 2 * dim > Mono::kMaxVars)
        throw CapacityExceeded("HermPoly: dimension out of range");
}

HermPoly HermPoly::constant(unsigned dim, const CycNum& c) {
    HermPoly p(dim);
    p.add_term(Mono(dim), Mono(dim), c);
    return p;
}

HermPoly HermPoly::term(unsigned dim, const Mono& alpha, const Mono& beta,
                        const CycNum& c) {
    HermPoly p(dim);
    p.add_term(alpha, beta, c);
    return p;
}

BiMonomial HermPoly::split_key(const Mono& key) {
    unsigned n = key.nvars / 2;
    BiMonomial bm{Mono(n), Mono(n)};
    for (unsigned j = 0; j < n; ++j) {
        bm.alpha.set(j, key[2 * j]);
        bm.beta.set(j, key[2 * j + 1]);
    }
    return bm;
}

Mono HermPoly::join_key(unsigned dim, const Mono& alpha, const Mono& beta) {
    if (alpha.nvars != dim || beta.nvars != dim)
        throw DimensionMismatch("HermPoly key: exponent dimension mismatch");
    Mono key(2 * dim);
    for (unsigned j = 0; j < dim; ++j) {
        key.set(2 * j, alpha[j]);
        key.set(2 * j + 1, beta[j]);
    }
    return key;
}

CycNum HermPoly::coeff(const Mono& alpha, const Mono& beta) const {
    auto it = terms_.find(join_key(dim_, alpha, beta));
    return it == terms_.end() ? CycNum() : it->second;
}

void HermPoly::add_term(const Mono& alpha, const Mono& beta, const CycNum& c) {
    if (c.is_zero()) return;
    Mono key = join_key(dim_, alpha, beta);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned HermPoly::degree_z() const {
    unsigned d = 0;
    for (const auto& [key, c] : terms_) {
        unsigned s = 0;
        for (unsigned j = 0; j < dim_; ++j) s += key[2 * j];
        d = std::max(d, s);
    }
    return d;
}

unsigned HermPoly::degree_conj() const {
    unsigned d = 0;
    for (const auto& [key, c] : terms_) {
        unsigned s = 0;
        for (unsigned j = 0; j < dim_; ++j) s += key[2 * j + 1];
        d = std::max(d, s);
    }
    return d;
}

CycNum HermPoly::constant_term() const {
    auto it = terms_.find(Mono(2 * dim_));
    return it == terms_.end() ? CycNum() : it->second;
}

HermPoly operator+(const HermPoly& a, const HermPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("HermPoly +: dim mismatch");
    HermPoly r = a;
    for (const auto& [key, c] : b.terms_) {
        auto [it, inserted] = r.terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

HermPoly operator-(const HermPoly& a, const HermPoly& b) {
    return a + (-b);
}

HermPoly HermPoly::operator-() const {
    HermPoly r(dim_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("HermPoly *: dim mismatch");
    HermPoly r(a.dim_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            CycNum prod = ca * cb;
            if (prod.is_zero()) continue;
            Mono key = ka.plus(kb);
            auto it = r.terms_.find(key);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(key), std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

HermPoly HermPoly::scaled(const CycNum& c) const {
    HermPoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) {
        CycNum prod = v * c;
        if (!prod.is_zero()) r.terms_.emplace(key, std::move(prod));
    }
    return r;
}

bool HermPoly::is_hermitian_symmetric() const {
    for (const auto& [key, c] : terms_) {
        BiMonomial bm = split_key(key);
        CycNum mirror = coeff(bm.beta, bm.alpha);
        if (mirror.conj() != c) return false;
    }
    return true;
}

HermPoly HermPoly::substituted(const UnitaryMatrix& g, Side side) const {
    if (g.dim() != dim_) throw DimensionMismatch("substituted: dim mismatch");

    if (g.is_diagonal()) {
        // z_j -> g_jj z_j is a pure coefficient rescale
        std::vector<std::vector<CycNum>> pow_cache(dim_);
        auto diag_power = [&](unsigned j, unsigned e) -> const CycNum& {
            auto& vec = pow_cache[j];
            if (vec.empty()) vec.push_back(CycNum(1L));
            while (vec.size() <= e) {
                CycNum base = (side == Side::z) ? g.at(j, j) : g.at(j, j).conj();
                vec.push_back(vec.back() * base);
            }
            return vec[e];
        };
        HermPoly r(dim_);
        for (const auto& [key, c] : terms_) {
            CycNum factor = c;
            for (unsigned j = 0; j < dim_; ++j) {
                unsigned e = (side == Side::z) ? key[2 * j] : key[2 * j + 1];
                if (e > 0) factor *= diag_power(j, e);
            }
            if (!factor.is_zero()) r.terms_.emplace(key, std::move(factor));
        }
        return r;
    }

    LinearSubstitution sub(g, /*conjugate_entries=*/side == Side::w);
    HermPoly r(dim_);
    for (const auto& [key, c] : terms_) {
        BiMonomial bm = split_key(key);
        const Mono& target = (side == Side::z) ? bm.alpha : bm.beta;
        const Mono& fixed = (side == Side::z) ? bm.beta : bm.alpha;
        const HoloPoly& expanded = sub.expand(target);
        for (const auto& [em, ec] : expanded.terms()) {
            if (side == Side::z)
                r.add_term(em, fixed, c * ec);
            else
                r.add_term(fixed, em, c * ec);
        }
    }
    return r;
}

bool HermPoly::has_diagonal_support() const {
    for (const auto& [key, c] : terms_) {
        for (unsigned j = 0; j < dim_; ++j)
            if (key[2 * j] != key[2 * j + 1]) return false;
    }
    return true;
}

MomentPoly HermPoly::to_moment() const {
    MomentPoly out(dim_);
    for (const auto& [key, c] : terms_) {
        Mono m(dim_);
        for (unsigned j = 0; j < dim_; ++j) {
            if (key[2 * j] != key[2 * j + 1])
                throw NotDiagonalSupport(
                    "to_moment: term with alpha != beta: " + key.str());
            m.set(j, key[2 * j]);
        }
        out.add_term(m, c.rational_value());
    }
    return out;
}

HermPoly HermPoly::reduce_sphere() const {
    auto divisible = [](const Mono& k) { return k[0] >= 1 && k[1] >= 1; };

    Terms work = terms_;
    // Largest-first processing: every rewrite produces strictly smaller keys,
    // so each key is reduced at most once and the pass is linear in the
    // number of distinct keys touched.
    std::priority_queue<Mono> pending;
    for (const auto& [key, c] : work)
        if (divisible(key)) pending.push(key);

    auto update = [&](const Mono& key, const CycNum& delta) {
        auto [it, inserted] = work.emplace(key, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second.is_zero()) {
                work.erase(it);
                return;
            }
        }
        if (inserted && divisible(key)) pending.push(key);
    };

    while (!pending.empty()) {
        Mono key = pending.top();
        pending.pop();
        auto it = work.find(key);
        if (it == work.end()) continue;
        CycNum c = it->second;
        work.erase(it);
        // replace c * m by c * (m / (z1 zb1)) * (1 - sum_{j>=2} zj zbj)
        Mono base = key;
        base.set(0, key[0] - 1);
        base.set(1, key[1] - 1);
        update(base, c);
        for (unsigned j = 1; j < dim_; ++j) {
            Mono k2 = base;
            k2.set(2 * j, base[2 * j] + 1);
            k2.set(2 * j + 1, base[2 * j + 1] + 1);
            update(k2, -c);
        }
    }

    HermPoly r(dim_);
    r.terms_ = std::move(work);
    return r;
}

ComplexInterval HermPoly::eval_interval(
    const std::vector<std::pair<Rational, Rational>>& z,
    const std::vector<std::pair<Rational, Rational>>& w,
    mpfr_prec_t precision_bits) const {
    if (z.size() != dim_ || w.size() != dim_)
        throw DimensionMismatch("eval_interval: bad point size");
    std::vector<std::vector<ComplexInterval>> zp(dim_), wp(dim_);
    auto powers = [&](std::vector<ComplexInterval>& vec, const ComplexInterval& base,
                      unsigned e) -> const ComplexInterval& {
        if (vec.empty())
            vec.push_back(ComplexInterval::from_rationals(Rational(1), Rational(0),
                                                          precision_bits));
        while (vec.size() <= e) vec.push_back(vec.back() * base);
        return vec[e];
    };
    ComplexInterval total(precision_bits);
    for (const auto& [key, c] : terms_) {
        ComplexInterval t = c.embed(precision_bits);
        for (unsigned j = 0; j < dim_; ++j) {
            unsigned ez = key[2 * j], ew = key[2 * j + 1];
            if (ez > 0) {
                ComplexInterval base = ComplexInterval::from_rationals(
                    z[j].first, z[j].second, precision_bits);
                t = t * powers(zp[j], base, ez);
            }
            if (ew > 0) {
                // conjugate of w_j
                ComplexInterval base = ComplexInterval::from_rationals(
                    w[j].first, -w[j].second, precision_bits);
                t = t * powers(wp[j], base, ew);
            }
        }
        total = total + t;
    }
    return total;
}

CycNum HermPoly::eval_exact(const std::vector<CycNum>& z,
                            const std::vector<CycNum>& w) const {
    if (z.size() != dim_ || w.size() != dim_)
        throw DimensionMismatch("eval_exact: bad point size");
    CycNum total;
    for (const auto& [key, c] : terms_) {
        CycNum t = c;
        for (unsigned j = 0; j < dim_; ++j) {
            if (key[2 * j] > 0) t *= z[j].pow(key[2 * j]);
            if (key[2 * j + 1] > 0) t *= w[j].conj().pow(key[2 * j + 1]);
        }
        total += t;
    }
    return total;
}

std::string HermPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BiMonomial bm = split_key(it->first);
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        std::string za = bm.alpha.str("z");
        std::string zb = bm.beta.str("zb");
        if (za != "1") os << "*" << za;
        if (zb != "1") os << "*" << zb;
        first = false;
    }
    return os.str();
}

HermPoly moment_to_herm(const MomentPoly& f) {
    HermPoly r(f.dim());
    for (const auto& [m, c] : f.terms()) {
        r.add_term(m, m, CycNum(c));
    }
    return r;
}

}  // namespace hqmaps
