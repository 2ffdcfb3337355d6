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

#include <stdexcept>
#include <string>

namespace hqmaps {

/// Base class for all engine errors. The `kind()` string is stable and
/// machine-readable (used by the CLI for error JSON and exit codes).
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define HQMAPS_DEFINE_ERROR(ClassName, kind_string)                  \
    class ClassName : public Error {                                 \
       public:                                                       \
        explicit ClassName(const std::string& msg)                   \
            : Error(kind_string, msg) {}                             \
    }

HQMAPS_DEFINE_ERROR(DivisionByZero, "division_by_zero");
HQMAPS_DEFINE_ERROR(BadParameters, "bad_parameters");
HQMAPS_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
HQMAPS_DEFINE_ERROR(NotUnitary, "not_unitary");
HQMAPS_DEFINE_ERROR(OrderExceeded, "order_exceeded");
HQMAPS_DEFINE_ERROR(NotDiagonalSupport, "not_diagonal_support");
HQMAPS_DEFINE_ERROR(NonRationalCoefficient, "non_rational_coefficient");
HQMAPS_DEFINE_ERROR(NonIntegerCoefficient, "non_integer_coefficient");
HQMAPS_DEFINE_ERROR(NotHermitian, "not_hermitian");
HQMAPS_DEFINE_ERROR(PrecisionExhausted, "precision_exhausted");
HQMAPS_DEFINE_ERROR(EnumerationInvalid, "enumeration_invalid");
HQMAPS_DEFINE_ERROR(OddPowerPresent, "odd_power_present");
HQMAPS_DEFINE_ERROR(VerificationFailed, "verification_failed");
HQMAPS_DEFINE_ERROR(StructureViolation, "structure_violation");
HQMAPS_DEFINE_ERROR(DomainViolation, "domain_violation");
HQMAPS_DEFINE_ERROR(CapacityExceeded, "capacity_exceeded");
HQMAPS_DEFINE_ERROR(ParseError, "parse_error");

#undef HQMAPS_DEFINE_ERROR

}  // namespace hqmaps
