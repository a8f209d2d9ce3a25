#include "spinproj/serialize.hpp"

#include <stdexcept>

namespace spinproj {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("JSON object missing key '") + key + "'");
  }
  return j.at(key);
}

long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace

Json to_json(const BigRational& value) { return value.to_string(); }

Json to_json(const HalfInt& value) { return Json{{"twice", to_long(value.twice())}}; }

Json to_json(std::span<const BigRational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const Polynomial& p) { return Json{{"coeffs", to_json(p.coefficients())}}; }

Json to_json(const DiagonalOperator& op) {
  return Json{{"twoS", op.spin().twice()}, {"basis", kBasisName}, {"diag", to_json(op.diagonal())}};
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness ? Json(*c.witness) : Json()}});
  }
  return Json{{"twoS", report.spin.twice()}, {"checks", std::move(checks)}};
}

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string, got " + j.dump());
}

std::vector<BigRational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
  std::vector<BigRational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

HalfInt half_int_from_json(const Json& j) { return HalfInt::from_twice(BigInt(integer_field(j, "twice"))); }

Polynomial polynomial_from_json(const Json& j) {
  auto coeffs = rationals_from_json(field(j, "coeffs"));
  if (!coeffs.empty() && coeffs.back().is_zero()) {
    throw std::invalid_argument("polynomial coefficients must not end in zero");
  }
  return Polynomial(std::move(coeffs));
}

DiagonalOperator operator_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  if (!basis.is_string() || basis.get<std::string>() != kBasisName) {
    throw std::invalid_argument("unsupported basis " + basis.dump());
  }
  return DiagonalOperator(SpinQuantum::from_twice(integer_field(j, "twoS")), rationals_from_json(field(j, "diag")));
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport report{SpinQuantum::from_twice(integer_field(j, "twoS")), {}};
  const Json& checks = field(j, "checks");
  if (!checks.is_array()) throw std::invalid_argument("'checks' must be an array");
  for (const auto& c : checks) {
    const Json& name = field(c, "name");
    const Json& ok = field(c, "pass");
    const Json& w = field(c, "witness");
    if (!name.is_string() || !ok.is_boolean() || !(w.is_null() || w.is_string())) {
      throw std::invalid_argument("malformed check entry " + c.dump());
    }
    report.checks.push_back({name.get<std::string>(), ok.get<bool>(),
                             w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>())});
  }
  return report;
}

}  // namespace spinproj
