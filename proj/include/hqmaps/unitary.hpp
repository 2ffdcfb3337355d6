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

#include <map>
#include <string>
#include <vector>

#include "hqmaps/cyclotomic.hpp"

namespace hqmaps {

/// Square matrix over the cyclotomic field.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(unsigned dim);
    static UnitaryMatrix identity(unsigned dim);
    static UnitaryMatrix diagonal(std::vector<CycNum> entries);
    /// The coordinate-swap matrix in U(2).
    static UnitaryMatrix swap2();

    unsigned dim() const { return dim_; }
    const CycNum& at(unsigned i, unsigned j) const { return a_[i * dim_ + j]; }
    CycNum& at(unsigned i, unsigned j) { return a_[i * dim_ + j]; }

    bool is_diagonal() const;
    bool is_identity() const;
    bool is_unitary() const;

    UnitaryMatrix conj_transpose() const;
    UnitaryMatrix lifted_to(unsigned conductor) const;
    unsigned conductor_lcm() const;

    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
    UnitaryMatrix pow(long e) const;

    friend bool operator==(const UnitaryMatrix& a, const UnitaryMatrix& b);
    static int compare(const UnitaryMatrix& a, const UnitaryMatrix& b);

    std::string str() const;

   private:
    unsigned dim_;
    std::vector<CycNum> a_;  // row-major
};

struct UnitaryMatrixLess {
    bool operator()(const UnitaryMatrix& a, const UnitaryMatrix& b) const {
        return UnitaryMatrix::compare(a, b) < 0;
    }
};

/// Explicit finite unitary group: duplicate-free element list, sorted in a
/// canonical order, closed under product, containing the identity.
class UnitaryGroup {
   public:
    UnitaryGroup(unsigned dim, std::vector<UnitaryMatrix> elements,
                 std::map<std::string, std::string> labels);

    unsigned dim() const { return dim_; }
    size_t order() const { return elements_.size(); }
    const std::vector<UnitaryMatrix>& elements() const { return elements_; }
    const std::map<std::string, std::string>& labels() const { return labels_; }

    bool contains(const UnitaryMatrix& m) const;

   private:
    unsigned dim_;
    std::vector<UnitaryMatrix> elements_;
    std::map<std::string, std::string> labels_;
};

inline constexpr unsigned kDefaultMaxGroupOrder = 10000;

/// Breadth-first closure of the generated group. Throws NotUnitary when a
/// generator fails the exact unitarity test, OrderExceeded when the closure
/// passes max_order.
UnitaryGroup close_group(const std::vector<UnitaryMatrix>& generators,
                         unsigned max_order = kDefaultMaxGroupOrder);

/// Cyclic group of order p generated by diag(zeta_p, zeta_p^q); 1 <= q <= p-1.
UnitaryGroup make_gamma_pq(unsigned p, unsigned q);

/// Cyclic group of order p generated by zeta_p * I_n.
UnitaryGroup make_scalar_cyclic(unsigned p, unsigned n);

/// Order-2p group generated by diag(zeta_p, zeta_p^{-1}) and the swap.
UnitaryGroup make_dihedral(unsigned p);

/// Group generated by A = diag(zeta_p, zeta_p^{-1}) and B with B^q = I.
/// Uses the B^j A^k enumeration when it is valid, otherwise falls back to
/// generic closure.
UnitaryGroup make_metacyclic(unsigned p, unsigned q, const UnitaryMatrix& B,
                             unsigned max_order = kDefaultMaxGroupOrder);

/// Cyclic group of order 2m generated by [[0, 1], [zeta_m, 0]].
UnitaryGroup make_swap_cyclic(unsigned m);

}  // namespace hqmaps
