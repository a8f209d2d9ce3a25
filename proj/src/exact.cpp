#include "spinproj/exact.hpp"

#include <algorithm>
#include <cctype>

namespace spinproj {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

long to_long(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer out of range: " + value.get_str());
  return value.get_si();
}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  return BigRational(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.value_ = -value_;
  return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::pow(unsigned long n) const {
  BigRational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), n);
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), n);
  return out;
}

HalfInt HalfInt::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_bigint(text));
  if (text.substr(slash + 1) != "2") {
    throw std::invalid_argument("half-integer must be 'n' or 'n/2', got '" + std::string(text) + "'");
  }
  auto num_text = text.substr(0, slash);
  return from_twice(parse_bigint(num_text));
}

BigInt factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial of negative number " + std::to_string(k));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

std::vector<HalfInt> spin_range(const HalfInt& spin) {
  if (spin.sign() < 0) throw std::invalid_argument("spin must be nonnegative, got " + spin.to_string());
  const long twice = to_long(spin.twice());
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(twice) + 1);
  for (long t = twice; t >= -twice; t -= 2) out.push_back(HalfInt::from_twice(BigInt(t)));
  return out;
}

}  // namespace spinproj
