#include "spinproj/spin.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinproj {

SpinQuantum::SpinQuantum(HalfInt s) : s_(std::move(s)) {
  if (s_.sign() < 0) throw std::invalid_argument("spin must be nonnegative, got " + s_.to_string());
}

NodeSet SpinQuantum::nodes() const {
  std::vector<BigRational> out;
  for (const auto& m : spectrum()) out.push_back(m.to_rational());
  return NodeSet(std::move(out));
}

MagneticQuantum::MagneticQuantum(SpinQuantum spin, HalfInt m) : spin_(std::move(spin)), m_(std::move(m)) {
  const auto& s = spin_.value();
  if (m_ > s || m_ < -s) {
    throw std::invalid_argument("m = " + m_.to_string() + " out of range for S = " + s.to_string());
  }
  if (m_.is_integer() != s.is_integer()) {
    throw std::invalid_argument("m = " + m_.to_string() + " has wrong parity for S = " + s.to_string() +
                                " (S - m must be an integer)");
  }
}

std::size_t MagneticQuantum::index() const {
  return static_cast<std::size_t>(to_long((spin_.value().twice() - m_.twice()) / 2));
}

DiagonalOperator::DiagonalOperator(SpinQuantum spin, std::vector<BigRational> diagonal)
    : spin_(std::move(spin)), diag_(std::move(diagonal)) {
  if (diag_.size() != spin_.dimension()) {
    throw std::invalid_argument("diagonal has " + std::to_string(diag_.size()) + " entries, spin " +
                                spin_.value().to_string() + " needs " + std::to_string(spin_.dimension()));
  }
}

DiagonalOperator DiagonalOperator::identity(const SpinQuantum& spin) {
  return DiagonalOperator(spin, std::vector<BigRational>(spin.dimension(), BigRational(1)));
}

DiagonalOperator DiagonalOperator::zero(const SpinQuantum& spin) {
  return DiagonalOperator(spin, std::vector<BigRational>(spin.dimension()));
}

bool DiagonalOperator::is_zero() const {
  return std::all_of(diag_.begin(), diag_.end(), [](const BigRational& d) { return d.is_zero(); });
}

namespace {

void require_same_spin(const DiagonalOperator& a, const DiagonalOperator& b) {
  if (!(a.spin() == b.spin())) throw std::invalid_argument("operators act on different spins");
}

}  // namespace

DiagonalOperator operator*(const DiagonalOperator& a, const DiagonalOperator& b) {
  require_same_spin(a, b);
  std::vector<BigRational> out(a.diag_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.diag_[i] * b.diag_[i];
  return DiagonalOperator(a.spin_, std::move(out));
}

DiagonalOperator operator+(const DiagonalOperator& a, const DiagonalOperator& b) {
  require_same_spin(a, b);
  std::vector<BigRational> out(a.diag_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.diag_[i] + b.diag_[i];
  return DiagonalOperator(a.spin_, std::move(out));
}

int alpha(const SpinQuantum& spin) { return spin.is_half_odd() ? 1 : 0; }

DiagonalOperator sz_operator(const SpinQuantum& spin) {
  std::vector<BigRational> diag;
  for (const auto& m : spin.spectrum()) diag.push_back(m.to_rational());
  return DiagonalOperator(spin, std::move(diag));
}

BigRational projector_coefficient(const MagneticQuantum& q) {
  const BigInt& two_s = q.spin().value().twice();
  const BigInt& two_m = q.m().twice();
  // S - m and S + m are integers by the MagneticQuantum invariant.
  const long s_minus_m = to_long((two_s - two_m) / 2);
  const long s_plus_m = to_long((two_s + two_m) / 2);
  const long exponent = s_plus_m + alpha(q.spin());
  const BigInt denominator = factorial(s_minus_m) * factorial(s_plus_m);
  return BigRational(BigInt(exponent % 2 == 0 ? 1 : -1), denominator);
}

std::vector<BigRational> projector_roots(const MagneticQuantum& q) {
  std::vector<BigRational> roots;
  for (const auto& n : q.spin().spectrum()) {
    if (n != q.m()) roots.push_back(n.to_rational());
  }
  return roots;
}

Polynomial projector_polynomial(const MagneticQuantum& q) {
  // prod_{n != m} (x - n) = 2^-(2S) prod_{n != m} (2x - 2n), built over the integers.
  std::vector<BigInt> scaled{BigInt(1)};
  for (const auto& n : q.spin().spectrum()) {
    if (n == q.m()) continue;
    std::vector<BigInt> next(scaled.size() + 1);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      next[i + 1] += 2 * scaled[i];
      next[i] -= n.twice() * scaled[i];
    }
    scaled = std::move(next);
  }
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(scaled.size() - 1));
  const BigRational c = projector_coefficient(q);
  const BigInt num = c.numerator();
  const BigInt den = c.denominator() * two_pow;
  std::vector<BigRational> coeffs;
  coeffs.reserve(scaled.size());
  for (const auto& a : scaled) coeffs.emplace_back(num * a, den);
  return Polynomial(std::move(coeffs));
}

Polynomial operator_function(const SpinQuantum& spin, std::span<const BigRational> values) {
  if (values.size() != spin.dimension()) {
    throw std::invalid_argument("operator function needs " + std::to_string(spin.dimension()) +
                                " values for S = " + spin.value().to_string() + ", got " +
                                std::to_string(values.size()));
  }
  const auto spectrum = spin.spectrum();
  Polynomial out;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (values[i].is_zero()) continue;
    out += values[i] * projector_polynomial(MagneticQuantum(spin, spectrum[i]));
  }
  return out;
}

Polynomial operator_function(const SpinQuantum& spin, const Polynomial& f) {
  return reduce_mod(f, node_polynomial(spin.nodes()));
}

Polynomial reduce_power(const SpinQuantum& spin, unsigned long n) {
  const Polynomial annihilator = node_polynomial(spin.nodes());
  // Square-and-multiply, reducing after every product.
  Polynomial result = reduce_mod(Polynomial::constant(1), annihilator);
  Polynomial base = reduce_mod(Polynomial::x(), annihilator);
  for (; n > 0; n >>= 1) {
    if (n & 1U) result = reduce_mod(result * base, annihilator);
    base = reduce_mod(base * base, annihilator);
  }
  return result;
}

}  // namespace spinproj
