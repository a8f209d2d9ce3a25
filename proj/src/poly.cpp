#include "spinproj/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinproj {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(); }

const BigRational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

namespace {

// Coefficients over a common denominator: c_i = numerators[i] / common.
struct IntegerForm {
  std::vector<BigInt> numerators;
  BigInt common = 1;
};

IntegerForm integer_form(std::span<const BigRational> coeffs) {
  IntegerForm out;
  for (const auto& c : coeffs) {
    const BigInt den = c.denominator();
    if (den != 1) mpz_lcm(out.common.get_mpz_t(), out.common.get_mpz_t(), den.get_mpz_t());
  }
  out.numerators.reserve(coeffs.size());
  for (const auto& c : coeffs) out.numerators.push_back(c.numerator() * (out.common / c.denominator()));
  return out;
}

// Horner over the integers: with x = p/q the value is
// (sum_i a_i p^i q^(n-i)) / (common q^n).
BigRational evaluate(const IntegerForm& f, const BigRational& x) {
  const BigInt p = x.numerator();
  const BigInt q = x.denominator();
  BigInt acc = f.numerators.back();
  BigInt q_power = 1;
  for (std::size_t i = f.numerators.size() - 1; i-- > 0;) {
    q_power *= q;
    acc *= p;
    if (f.numerators[i] != 0) acc += f.numerators[i] * q_power;
  }
  return BigRational(acc, f.common * q_power);
}

}  // namespace

BigRational Polynomial::operator()(const BigRational& x) const {
  if (coeffs_.empty()) return {};
  return evaluate(integer_form(coeffs_), x);
}

std::vector<BigRational> Polynomial::evaluate_at(std::span<const BigRational> xs) const {
  std::vector<BigRational> out(xs.size());
  if (coeffs_.empty()) return out;
  const IntegerForm f = integer_form(coeffs_);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = evaluate(f, xs[i]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

NodeSet::NodeSet(std::vector<BigRational> nodes) : nodes_(std::move(nodes)) {
  std::vector<BigRational> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw std::invalid_argument("duplicate interpolation node " + dup->to_string());
}

namespace {

// (x - root) * p
Polynomial times_linear(const Polynomial& p, const BigRational& root) {
  return p * Polynomial(std::vector<BigRational>{-root, BigRational(1)});
}

}  // namespace

Polynomial node_polynomial(const NodeSet& nodes) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& node : nodes.nodes()) out = times_linear(out, node);
  return out;
}

Polynomial lagrange_basis(const NodeSet& nodes, std::size_t k) {
  if (k >= nodes.size()) {
    throw std::out_of_range("basis index " + std::to_string(k) + " out of range for " +
                            std::to_string(nodes.size()) + " nodes");
  }
  Polynomial numerator = Polynomial::constant(1);
  BigRational denominator(1);
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    if (l == k) continue;
    numerator = times_linear(numerator, nodes[l]);
    denominator *= nodes[k] - nodes[l];
  }
  return numerator * (BigRational(1) / denominator);
}

Polynomial interpolate(const NodeSet& nodes, std::span<const BigRational> values) {
  if (values.size() != nodes.size()) {
    throw std::invalid_argument("interpolate: " + std::to_string(values.size()) + " values for " +
                                std::to_string(nodes.size()) + " nodes");
  }
  Polynomial out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (values[k].is_zero()) continue;
    out += values[k] * lagrange_basis(nodes, k);
  }
  return out;
}

DivMod divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZero();
  const auto dc = d.coefficients();
  const std::size_t dn = dc.size() - 1;
  const BigRational inv_lead = BigRational(1) / dc.back();

  std::vector<BigRational> rem(p.coefficients().begin(), p.coefficients().end());
  if (rem.size() <= dn) return {Polynomial(), p};

  std::vector<BigRational> quot(rem.size() - dn);
  for (std::size_t i = rem.size(); i-- > dn;) {
    const BigRational factor = rem[i] * inv_lead;
    quot[i - dn] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= factor * dc[j];
  }
  rem.resize(dn);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial reduce_mod(const Polynomial& p, const Polynomial& d) { return divmod(p, d).remainder; }

}  // namespace spinproj
