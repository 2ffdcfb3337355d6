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

#include "hqmaps/unitary.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hqmaps/errors.hpp"

namespace hqmaps {

UnitaryMatrix::UnitaryMatrix(unsigned dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw BadParameters("UnitaryMatrix: dim must be positive");
}

UnitaryMatrix UnitaryMatrix::identity(unsigned dim) {
    UnitaryMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = CycNum(1L);
    return m;
}

UnitaryMatrix UnitaryMatrix::diagonal(std::vector<CycNum> entries) {
    UnitaryMatrix m(static_cast<unsigned>(entries.size()));
    for (unsigned i = 0; i < m.dim_; ++i) m.at(i, i) = std::move(entries[i]);
    return m;
}

UnitaryMatrix UnitaryMatrix::swap2() {
    UnitaryMatrix m(2);
    m.at(0, 1) = CycNum(1L);
    m.at(1, 0) = CycNum(1L);
    return m;
}

bool UnitaryMatrix::is_diagonal() const {
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool UnitaryMatrix::is_identity() const {
    return *this == identity(dim_);
}

bool UnitaryMatrix::is_unitary() const {
    UnitaryMatrix prod = *this * conj_transpose();
    return prod == identity(dim_);
}

UnitaryMatrix UnitaryMatrix::conj_transpose() const {
    UnitaryMatrix m(dim_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) m.at(i, j) = at(j, i).conj();
    return m;
}

unsigned UnitaryMatrix::conductor_lcm() const {
    unsigned n = 1;
    for (const auto& x : a_) n = std::lcm(n, x.conductor());
    return n;
}

UnitaryMatrix UnitaryMatrix::lifted_to(unsigned conductor) const {
    UnitaryMatrix m(dim_);
    for (unsigned i = 0; i < dim_ * dim_; ++i) m.a_[i] = a_[i].lifted_to(conductor);
    return m;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product: dim mismatch");
    UnitaryMatrix m(a.dim_);
    for (unsigned i = 0; i < a.dim_; ++i) {
        for (unsigned j = 0; j < a.dim_; ++j) {
            CycNum s;
            for (unsigned k = 0; k < a.dim_; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                s += a.at(i, k) * b.at(k, j);
            }
            m.at(i, j) = std::move(s);
        }
    }
    return m;
}

UnitaryMatrix UnitaryMatrix::pow(long e) const {
    if (e < 0) return conj_transpose().pow(-e);  // unitary inverse
    UnitaryMatrix acc = identity(dim_);
    UnitaryMatrix base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base * base;
    }
    return acc;
}

bool operator==(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix::compare(a, b) == 0;
}

int UnitaryMatrix::compare(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_ ? -1 : 1;
    for (unsigned i = 0; i < a.dim_ * a.dim_; ++i) {
        int c = CycNum::compare(a.a_[i], b.a_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string UnitaryMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < dim_; ++i) {
        os << "[";
        for (unsigned j = 0; j < dim_; ++j) {
            os << at(i, j).str();
            if (j + 1 < dim_) os << ", ";
        }
        os << "]";
        if (i + 1 < dim_) os << "; ";
    }
    os << "]";
    return os.str();
}

UnitaryGroup::UnitaryGroup(unsigned dim, std::vector<UnitaryMatrix> elements,
                           std::map<std::string, std::string> labels)
    : dim_(dim), elements_(std::move(elements)), labels_(std::move(labels)) {
    std::sort(elements_.begin(), elements_.end(), UnitaryMatrixLess{});
}

bool UnitaryGroup::contains(const UnitaryMatrix& m) const {
    // lift to the group's working conductor before comparing
    unsigned n = elements_.empty() ? 1 : elements_.front().conductor_lcm();
    n = std::lcm(n, m.conductor_lcm());
    UnitaryMatrix probe = m.lifted_to(n);
    for (const auto& e : elements_)
        if (e.lifted_to(n) == probe) return true;
    return false;
}

UnitaryGroup close_group(const std::vector<UnitaryMatrix>& generators,
                         unsigned max_order) {
    if (generators.empty()) throw BadParameters("close_group: no generators");
    if (max_order < 1) throw BadParameters("close_group: max_order must be >= 1");
    unsigned dim = generators.front().dim();
    unsigned conductor = 1;
    for (const auto& g : generators) {
        if (g.dim() != dim) throw DimensionMismatch("close_group: mixed dimensions");
        if (!g.is_unitary())
            throw NotUnitary("close_group: generator is not unitary: " + g.str());
        conductor = std::lcm(conductor, g.conductor_lcm());
    }
    std::vector<UnitaryMatrix> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(g.lifted_to(conductor));

    std::set<UnitaryMatrix, UnitaryMatrixLess> seen;
    std::vector<UnitaryMatrix> frontier;
    UnitaryMatrix id = UnitaryMatrix::identity(dim).lifted_to(conductor);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<UnitaryMatrix> next;
        for (const auto& m : frontier) {
            for (const auto& g : gens) {
                UnitaryMatrix prod = m * g;
                if (seen.insert(prod).second) {
                    if (seen.size() > max_order)
                        throw OrderExceeded(
                            "close_group: closure exceeds max_order = " +
                            std::to_string(max_order));
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<UnitaryMatrix> elements(seen.begin(), seen.end());
    return UnitaryGroup(dim, std::move(elements), {{"constructor", "closure"}});
}

UnitaryGroup make_gamma_pq(unsigned p, unsigned q) {
    if (p < 2 || q < 1 || q > p - 1)
        throw BadParameters("make_gamma_pq: need p >= 2 and 1 <= q <= p-1");
    CycNum w = CycNum::root_of_unity(p, 1);
    std::vector<UnitaryMatrix> elems;
    elems.reserve(p);
    for (unsigned k = 0; k < p; ++k) {
        elems.push_back(UnitaryMatrix::diagonal(
            {w.pow(k), w.pow(static_cast<long>(q) * k)}));
    }
    return UnitaryGroup(2, std::move(elems),
                        {{"constructor", "gamma_pq"},
                         {"p", std::to_string(p)},
                         {"q", std::to_string(q)}});
}

UnitaryGroup make_scalar_cyclic(unsigned p, unsigned n) {
    if (p < 1 || n < 1) throw BadParameters("make_scalar_cyclic: need p, n >= 1");
    CycNum w = CycNum::root_of_unity(p, 1);
    std::vector<UnitaryMatrix> elems;
    elems.reserve(p);
    for (unsigned k = 0; k < p; ++k) {
        std::vector<CycNum> diag(n, w.pow(k));
        elems.push_back(UnitaryMatrix::diagonal(std::move(diag)));
    }
    return UnitaryGroup(n, std::move(elems),
                        {{"constructor", "scalar_cyclic"},
                         {"p", std::to_string(p)},
                         {"dim", std::to_string(n)}});
}

UnitaryGroup make_dihedral(unsigned p) {
    if (p < 2) throw BadParameters("make_dihedral: need p >= 2");
    CycNum w = CycNum::root_of_unity(p, 1);
    UnitaryMatrix a = UnitaryMatrix::diagonal({w, w.pow(-1)});
    UnitaryMatrix b = UnitaryMatrix::swap2();
    std::vector<UnitaryMatrix> elems;
    elems.reserve(2 * p);
    for (unsigned j = 0; j < 2; ++j) {
        UnitaryMatrix bj = b.pow(j);
        for (unsigned k = 0; k < p; ++k) elems.push_back(bj * a.pow(k));
    }
    unsigned conductor = 1;
    for (const auto& e : elems) conductor = std::lcm(conductor, e.conductor_lcm());
    for (auto& e : elems) e = e.lifted_to(conductor);
    return UnitaryGroup(2, std::move(elems),
                        {{"constructor", "dihedral"}, {"p", std::to_string(p)}});
}

UnitaryGroup make_metacyclic(unsigned p, unsigned q, const UnitaryMatrix& B,
                             unsigned max_order) {
    if (p < 2 || q < 1) throw BadParameters("make_metacyclic: need p >= 2, q >= 1");
    if (B.dim() != 2) throw BadParameters("make_metacyclic: B must be 2x2");
    if (!B.is_unitary()) throw NotUnitary("make_metacyclic: B is not unitary");
    if (!B.pow(q).is_identity())
        throw BadParameters("make_metacyclic: B^q != I");
    CycNum w = CycNum::root_of_unity(p, 1);
    UnitaryMatrix a = UnitaryMatrix::diagonal({w, w.pow(-1)});

    unsigned conductor = std::lcm(a.conductor_lcm(), B.conductor_lcm());
    std::set<UnitaryMatrix, UnitaryMatrixLess> seen;
    std::vector<UnitaryMatrix> elems;
    bool enumeration_valid = true;
    for (unsigned j = 0; j < q && enumeration_valid; ++j) {
        UnitaryMatrix bj = B.pow(j).lifted_to(conductor);
        for (unsigned k = 0; k < p; ++k) {
            UnitaryMatrix m = (bj * a.pow(k)).lifted_to(conductor);
            if (!seen.insert(m).second) {
                enumeration_valid = false;
                break;
            }
            elems.push_back(std::move(m));
        }
    }
    if (enumeration_valid) {
        // the enumerated set must be closed under both generators
        auto in_set = [&](const UnitaryMatrix& m) { return seen.count(m) > 0; };
        UnitaryMatrix bl = B.lifted_to(conductor);
        UnitaryMatrix al = a.lifted_to(conductor);
        for (const auto& m : elems) {
            if (!in_set(m * al) || !in_set(m * bl)) {
                enumeration_valid = false;
                break;
            }
        }
    }
    if (enumeration_valid) {
        return UnitaryGroup(2, std::move(elems),
                            {{"constructor", "metacyclic"},
                             {"p", std::to_string(p)},
                             {"q", std::to_string(q)},
                             {"enumeration", "bj_ak"}});
    }
    UnitaryGroup g = close_group({a, B}, max_order);
    return UnitaryGroup(2, g.elements(),
                        {{"constructor", "metacyclic"},
                         {"p", std::to_string(p)},
                         {"q", std::to_string(q)},
                         {"enumeration", "generic_closure"}});
}

UnitaryGroup make_swap_cyclic(unsigned m) {
    if (m < 1) throw BadParameters("make_swap_cyclic: need m >= 1");
    UnitaryMatrix b(2);
    b.at(0, 1) = CycNum(1L);
    b.at(1, 0) = CycNum::root_of_unity(m, 1);
    UnitaryGroup g = close_group({b});
    return UnitaryGroup(2, g.elements(),
                        {{"constructor", "swap_cyclic"}, {"m", std::to_string(m)}});
}

}  // namespace hqmaps
