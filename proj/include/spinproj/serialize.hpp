#pragma once

// JSON forms. Rationals are "p/q" strings, half-integers {"twice": n},
// polynomials {"coeffs": [...]} ascending, operators
// {"twoS": n, "basis": "m-descending", "diag": [...]}, reports
// {"twoS": n, "checks": [{"name", "pass", "witness"}]}.
//
// The *_from_json functions throw std::invalid_argument on schema violations.

#include "spinproj/exact.hpp"
#include "spinproj/opcalc.hpp"
#include "spinproj/poly.hpp"
#include "spinproj/spin.hpp"

#include <json.hpp>

namespace spinproj {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kBasisName = "m-descending";

Json to_json(const BigRational& value);
Json to_json(const HalfInt& value);
Json to_json(const Polynomial& p);
Json to_json(const DiagonalOperator& op);
Json to_json(const VerificationReport& report);
Json to_json(std::span<const BigRational> values);

BigRational rational_from_json(const Json& j);
HalfInt half_int_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
DiagonalOperator operator_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);
std::vector<BigRational> rationals_from_json(const Json& j);

}  // namespace spinproj
