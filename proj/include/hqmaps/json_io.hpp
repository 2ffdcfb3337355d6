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

#include <json.hpp>

#include "hqmaps/hermpoly.hpp"
#include "hqmaps/momentpoly.hpp"
#include "hqmaps/signature.hpp"
#include "hqmaps/unitary.hpp"

namespace hqmaps {

using Json = nlohmann::ordered_json;

/// {"n": conductor, "c": [[num, den], ...]}; big integers render as strings.
Json cyc_to_json(const CycNum& v);
CycNum cyc_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const UnitaryMatrix& m);
UnitaryMatrix matrix_from_json(const Json& j);

/// {"dim": n, "elements": [...], "labels": {...}}
Json group_to_json(const UnitaryGroup& g);
UnitaryGroup group_from_json(const Json& j);

/// {"dim": n, "terms": [{"alpha": [...], "beta": [...], "coeff": {...}}, ...]}
Json herm_to_json(const HermPoly& p);
HermPoly herm_from_json(const Json& j);

/// {"dim": n, "terms": [{"exp": [...], "coeff": [num, den]}, ...]}
Json moment_to_json(const MomentPoly& p);
MomentPoly moment_from_json(const Json& j);

/// {"dim", "exact", "plus": [...], "minus": [...]}
Json quadmap_to_json(const QuadMap& q);

/// Human-readable component list with square-root coefficients.
std::string quadmap_to_text(const QuadMap& q);

}  // namespace hqmaps
