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

#include "hqmaps/momentpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hqmaps {

std::vector<Mono> monomials_up_to_degree(unsigned nvars, unsigned max_deg) {
    std::vector<Mono> out;
    Mono cur(nvars);
    // depth-first enumeration, then canonical sort
    std::vector<std::pair<unsigned, unsigned>> stack;  // (var index, remaining)
    std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned left) {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur.set(var, v);
            rec(var + 1, left - v);
        }
        cur.set(var, 0);
    };
    rec(0, max_deg);
    std::sort(out.begin(), out.end());
    return out;
}

MomentPoly MomentPoly::constant(unsigned dim, const Rational& c) {
    MomentPoly p(dim);
    p.add_term(Mono(dim), c);
    return p;
}

MomentPoly MomentPoly::variable(unsigned dim, unsigned j) {
    MomentPoly p(dim);
    p.add_term(Mono::unit(dim, j), Rational(1));
    return p;
}

unsigned MomentPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational MomentPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MomentPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MomentPoly operator+(const MomentPoly& a, const MomentPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("MomentPoly +: dim mismatch");
    MomentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MomentPoly operator-(const MomentPoly& a, const MomentPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("MomentPoly -: dim mismatch");
    MomentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

MomentPoly operator*(const MomentPoly& a, const MomentPoly& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("MomentPoly *: dim mismatch");
    MomentPoly r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma.plus(mb), ca * cb);
        }
    }
    return r;
}

MomentPoly MomentPoly::operator-() const {
    MomentPoly r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MomentPoly MomentPoly::scaled(const Rational& c) const {
    MomentPoly r(dim_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MomentPoly MomentPoly::pow(unsigned e) const {
    MomentPoly acc = MomentPoly::constant(dim_, Rational(1));
    MomentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Rational MomentPoly::eval(const std::vector<Rational>& x) const {
    if (x.size() != dim_) throw DimensionMismatch("MomentPoly eval: bad point size");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < dim_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= x[i];
        }
        total += t;
    }
    return total;
}

MomentPoly MomentPoly::substitute_affine(unsigned j, const Rational& c0,
                                         const std::vector<Rational>& coeffs) const {
    if (j >= dim_) throw DimensionMismatch("substitute_affine: bad variable");
    if (coeffs.size() != dim_) throw DimensionMismatch("substitute_affine: bad form");
    // affine form as a polynomial
    MomentPoly form = MomentPoly::constant(dim_, c0);
    for (unsigned k = 0; k < dim_; ++k) {
        if (coeffs[k] != 0)
            form = form + MomentPoly::variable(dim_, k).scaled(coeffs[k]);
    }
    // power cache
    std::vector<MomentPoly> powers{MomentPoly::constant(dim_, Rational(1))};
    MomentPoly r(dim_);
    for (const auto& [m, c] : terms_) {
        unsigned ej = m[j];
        while (powers.size() <= ej) powers.push_back(powers.back() * form);
        Mono rest = m;
        rest.set(j, 0);
        MomentPoly term = powers[ej].scaled(c);
        for (const auto& [tm, tc] : term.terms()) r.add_term(tm.plus(rest), tc);
    }
    return r;
}

MomentPoly MomentPoly::with_dim(unsigned new_dim,
                                const std::vector<unsigned>& var_map) const {
    if (var_map.size() != dim_) throw DimensionMismatch("with_dim: bad map size");
    MomentPoly r(new_dim);
    for (const auto& [m, c] : terms_) {
        Mono nm(new_dim);
        for (unsigned i = 0; i < dim_; ++i) {
            if (m[i] == 0) continue;
            nm.set(var_map[i], nm[var_map[i]] + m[i]);
        }
        r.add_term(nm, c);
    }
    return r;
}

bool MomentPoly::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

std::string MomentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        std::string mono;
        for (unsigned i = 0; i < dim_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << mono;
        } else {
            os << a.get_str() << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace hqmaps
