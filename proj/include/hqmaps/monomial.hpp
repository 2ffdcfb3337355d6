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

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hqmaps/errors.hpp"

namespace hqmaps {

/// Exponent vector with a fixed inline capacity. Ordered graded-lex:
/// total degree first, then lexicographic on the exponents.
struct Mono {
    static constexpr unsigned kMaxVars = 16;

    uint8_t nvars = 0;
    std::array<uint16_t, kMaxVars> e{};

    Mono() = default;
    explicit Mono(unsigned n) : nvars(check_vars(n)) {}
    Mono(unsigned n, std::initializer_list<unsigned> exps) : nvars(check_vars(n)) {
        unsigned i = 0;
        for (unsigned v : exps) set(i++, v);
    }

    static uint8_t check_vars(unsigned n) {
        if (n == 0 || n > kMaxVars)
            throw CapacityExceeded("monomial variable count out of range");
        return static_cast<uint8_t>(n);
    }

    static Mono unit(unsigned n, unsigned j, unsigned exp = 1) {
        Mono m(n);
        m.set(j, exp);
        return m;
    }

    unsigned operator[](unsigned i) const { return e[i]; }
    void set(unsigned i, unsigned v) {
        if (i >= nvars) throw CapacityExceeded("monomial index out of range");
        if (v > 0xffff) throw CapacityExceeded("monomial exponent too large");
        e[i] = static_cast<uint16_t>(v);
    }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned i = 0; i < nvars; ++i) d += e[i];
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    Mono plus(const Mono& o) const {
        Mono r(nvars);
        for (unsigned i = 0; i < nvars; ++i) {
            unsigned s = e[i] + o.e[i];
            if (s > 0xffff) throw CapacityExceeded("monomial exponent overflow");
            r.e[i] = static_cast<uint16_t>(s);
        }
        return r;
    }

    bool divisible_by(const Mono& o) const {
        for (unsigned i = 0; i < nvars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }

    Mono minus(const Mono& o) const {
        Mono r(nvars);
        for (unsigned i = 0; i < nvars; ++i)
            r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        if (a.nvars != b.nvars) return false;
        for (unsigned i = 0; i < a.nvars; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }

    // graded-lex
    friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
        for (unsigned i = 0; i < a.nvars && i < b.nvars; ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
        }
        return a.nvars <=> b.nvars;
    }

    std::string str(const char* var = "x") const {
        std::string s;
        for (unsigned i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += var + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

/// Enumerate all monomials in `nvars` variables of total degree <= max_deg,
/// in graded-lex order.
std::vector<Mono> monomials_up_to_degree(unsigned nvars, unsigned max_deg);

}  // namespace hqmaps
