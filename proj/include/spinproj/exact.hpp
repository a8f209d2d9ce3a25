#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP-backed),
// half-integer quantum numbers and factorials.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinproj {

using BigInt = mpz_class;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Parse a signed decimal integer. Throws std::invalid_argument on anything
/// that is not `[+-]?[0-9]+`.
BigInt parse_bigint(std::string_view text);

/// Exact rational number, always in canonical form: positive denominator,
/// coprime numerator and denominator, zero stored as 0/1.
class BigRational {
public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT: implicit from integers
  BigRational(const BigInt& value) : value_(value) {}  // NOLINT
  BigRational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p/q" or "p" (optional sign on p, q nonzero).
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", abbreviated to "p" when the denominator is 1.
  std::string to_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// a^n for n >= 0.
  BigRational pow(unsigned long n) const;

private:
  mpq_class value_;
};

/// A value in (1/2)Z, stored as twice its value.
class HalfInt {
public:
  HalfInt() = default;

  static HalfInt from_twice(BigInt twice) { return HalfInt(std::move(twice)); }
  static HalfInt from_integer(const BigInt& value) { return HalfInt(value * 2); }
  /// Accepts "n", "n/2" (with optional sign). Anything else is rejected.
  static HalfInt parse(std::string_view text);

  const BigInt& twice() const { return twice_; }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  bool is_half_odd() const { return !is_integer(); }
  int sign() const { return sgn(twice_); }

  BigRational to_rational() const { return BigRational(twice_, BigInt(2)); }
  /// Integer or "p/2".
  std::string to_string() const { return to_rational().to_string(); }

  friend HalfInt operator+(const HalfInt& a, const HalfInt& b) { return HalfInt(a.twice_ + b.twice_); }
  friend HalfInt operator-(const HalfInt& a, const HalfInt& b) { return HalfInt(a.twice_ - b.twice_); }
  HalfInt operator-() const { return HalfInt(-twice_); }

  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
  friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
    return cmp(a.twice_, b.twice_) <=> 0;
  }

private:
  explicit HalfInt(BigInt twice) : twice_(std::move(twice)) {}
  BigInt twice_;
};

/// k! for k >= 0; negative k throws std::invalid_argument.
BigInt factorial(long k);

/// m = S, S-1, ..., -S (descending). Throws std::invalid_argument if S < 0.
std::vector<HalfInt> spin_range(const HalfInt& spin);

/// Narrow a BigInt that must fit in a long; throws std::overflow_error otherwise.
long to_long(const BigInt& value);

}  // namespace spinproj
