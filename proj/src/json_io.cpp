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

#include "hqmaps/json_io.hpp"

#include <sstream>

#include "hqmaps/errors.hpp"

namespace hqmaps {

namespace {

Json bigint_to_json(const BigInt& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected integer or integer string");
}

Mono mono_from_json(const Json& j, unsigned expected_vars) {
    if (!j.is_array() || j.size() != expected_vars)
        throw ParseError("bad exponent vector");
    Mono m(expected_vars);
    for (unsigned i = 0; i < expected_vars; ++i) m.set(i, j[i].get<unsigned>());
    return m;
}

Json mono_to_json(const Mono& m) {
    Json a = Json::array();
    for (unsigned i = 0; i < m.nvars; ++i) a.push_back(m[i]);
    return a;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return Json::array({bigint_to_json(BigInt(q.get_num())),
                        bigint_to_json(BigInt(q.get_den()))});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("bad rational");
    Rational q(bigint_from_json(j[0]), bigint_from_json(j[1]));
    q.canonicalize();
    return q;
}

Json cyc_to_json(const CycNum& v) {
    Json j;
    j["n"] = v.conductor();
    Json c = Json::array();
    for (const auto& x : v.coeffs()) c.push_back(rational_to_json(x));
    j["c"] = c;
    return j;
}

CycNum cyc_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("c")) throw ParseError("bad CycNum");
    unsigned n = j["n"].get<unsigned>();
    std::vector<Rational> coeffs;
    for (const auto& e : j["c"]) coeffs.push_back(rational_from_json(e));
    if (coeffs.size() != euler_phi(n))
        throw ParseError("CycNum coefficient count must equal phi(n)");
    return CycNum(n, std::move(coeffs));
}

Json matrix_to_json(const UnitaryMatrix& m) {
    Json rows = Json::array();
    for (unsigned i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.dim(); ++j) row.push_back(cyc_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

UnitaryMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("bad matrix");
    unsigned dim = static_cast<unsigned>(j.size());
    UnitaryMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i) {
        if (!j[i].is_array() || j[i].size() != dim)
            throw ParseError("matrix rows must be square");
        for (unsigned k = 0; k < dim; ++k) m.at(i, k) = cyc_from_json(j[i][k]);
    }
    return m;
}

Json group_to_json(const UnitaryGroup& g) {
    Json j;
    j["dim"] = g.dim();
    Json elems = Json::array();
    for (const auto& e : g.elements()) elems.push_back(matrix_to_json(e));
    j["elements"] = elems;
    j["labels"] = g.labels();
    return j;
}

UnitaryGroup group_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("elements")) throw ParseError("bad group");
    unsigned dim = j["dim"].get<unsigned>();
    std::vector<UnitaryMatrix> elems;
    for (const auto& e : j["elements"]) elems.push_back(matrix_from_json(e));
    std::map<std::string, std::string> labels;
    if (j.contains("labels")) {
        for (const auto& [k, v] : j["labels"].items())
            labels[k] = v.get<std::string>();
    }
    for (const auto& e : elems) {
        if (e.dim() != dim) throw ParseError("group element dimension mismatch");
    }
    return UnitaryGroup(dim, std::move(elems), std::move(labels));
}

Json herm_to_json(const HermPoly& p) {
    Json j;
    j["dim"] = p.dim();
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms()) {
        BiMonomial bm = HermPoly::split_key(key);
        Json t;
        t["alpha"] = mono_to_json(bm.alpha);
        t["beta"] = mono_to_json(bm.beta);
        t["coeff"] = cyc_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

HermPoly herm_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("terms")) throw ParseError("bad polynomial");
    unsigned dim = j["dim"].get<unsigned>();
    HermPoly p(dim);
    for (const auto& t : j["terms"]) {
        Mono alpha = mono_from_json(t.at("alpha"), dim);
        Mono beta = mono_from_json(t.at("beta"), dim);
        p.add_term(alpha, beta, cyc_from_json(t.at("coeff")));
    }
    return p;
}

Json moment_to_json(const MomentPoly& p) {
    Json j;
    j["dim"] = p.dim();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = mono_to_json(m);
        t["coeff"] = rational_to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MomentPoly moment_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("terms")) throw ParseError("bad polynomial");
    unsigned dim = j["dim"].get<unsigned>();
    MomentPoly p(dim);
    for (const auto& t : j["terms"]) {
        p.add_term(mono_from_json(t.at("exp"), dim), rational_from_json(t.at("coeff")));
    }
    return p;
}

Json quadmap_to_json(const QuadMap& q) {
    Json j;
    j["dim"] = q.dim;
    j["exact"] = q.exact;
    auto exact_side = [](const std::vector<ExactComponent>& side) {
        Json arr = Json::array();
        for (const auto& comp : side) {
            Json c;
            c["monomial"] = mono_to_json(comp.monomial);
            c["coeff_sq"] = rational_to_json(comp.coeff_sq);
            arr.push_back(c);
        }
        return arr;
    };
    auto numeric_side = [](const std::vector<NumericComponent>& side) {
        Json arr = Json::array();
        for (const auto& comp : side) {
            Json terms = Json::array();
            for (const auto& [m, c] : comp.coeffs) {
                Json t;
                t["monomial"] = mono_to_json(m);
                t["re"] = rational_to_json(c.first);
                t["im"] = rational_to_json(c.second);
                terms.push_back(t);
            }
            arr.push_back(Json{{"coeffs", terms}});
        }
        return arr;
    };
    if (q.exact) {
        j["plus"] = exact_side(q.plus_exact);
        j["minus"] = exact_side(q.minus_exact);
    } else {
        j["plus"] = numeric_side(q.plus_numeric);
        j["minus"] = numeric_side(q.minus_numeric);
    }
    return j;
}

std::string quadmap_to_text(const QuadMap& q) {
    std::ostringstream os;
    auto emit_exact = [&](const std::vector<ExactComponent>& side, const char* name) {
        os << name << " (" << side.size() << "):\n";
        for (const auto& comp : side) {
            if (comp.coeff_sq == 1)
                os << "  " << comp.monomial.str("z") << "\n";
            else
                os << "  sqrt(" << comp.coeff_sq.get_str() << ")*"
                   << comp.monomial.str("z") << "\n";
        }
    };
    if (q.exact) {
        emit_exact(q.plus_exact, "positive components");
        emit_exact(q.minus_exact, "negative components");
    } else {
        os << "numeric map with " << q.plus_numeric.size() << " positive and "
           << q.minus_numeric.size() << " negative components\n";
    }
    return os.str();
}

}  // namespace hqmaps
