#pragma once

// Spin-specific constructions on the S_z eigenbasis. Basis order is fixed
// globally as m-descending: index i holds m = S - i.

#include "spinproj/exact.hpp"
#include "spinproj/poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace spinproj {

/// Spin quantum number S in {0, 1/2, 1, ...}.
class SpinQuantum {
public:
  /// Throws std::invalid_argument for negative S.
  explicit SpinQuantum(HalfInt s);
  static SpinQuantum from_twice(long twice) { return SpinQuantum(HalfInt::from_twice(BigInt(twice))); }
  static SpinQuantum parse(std::string_view text) { return SpinQuantum(HalfInt::parse(text)); }

  const HalfInt& value() const { return s_; }
  long twice() const { return to_long(s_.twice()); }
  std::size_t dimension() const { return static_cast<std::size_t>(twice()) + 1; }
  bool is_half_odd() const { return s_.is_half_odd(); }

  /// Eigenvalues of S_z, descending.
  std::vector<HalfInt> spectrum() const { return spin_range(s_); }
  NodeSet nodes() const;

  friend bool operator==(const SpinQuantum&, const SpinQuantum&) = default;

private:
  HalfInt s_;
};

/// A valid (S, m) pair: -S <= m <= S and S - m integral.
class MagneticQuantum {
public:
  /// Throws std::invalid_argument when m is out of range or has the wrong parity.
  MagneticQuantum(SpinQuantum spin, HalfInt m);

  const SpinQuantum& spin() const { return spin_; }
  const HalfInt& m() const { return m_; }
  /// Position of m in the descending basis.
  std::size_t index() const;

private:
  SpinQuantum spin_;
  HalfInt m_;
};

/// Operator diagonal in the S_z eigenbasis.
class DiagonalOperator {
public:
  /// Throws std::invalid_argument unless diagonal has 2S+1 entries.
  DiagonalOperator(SpinQuantum spin, std::vector<BigRational> diagonal);

  static DiagonalOperator identity(const SpinQuantum& spin);
  static DiagonalOperator zero(const SpinQuantum& spin);

  const SpinQuantum& spin() const { return spin_; }
  std::span<const BigRational> diagonal() const { return diag_; }
  std::size_t dimension() const { return diag_.size(); }
  const BigRational& operator[](std::size_t i) const { return diag_[i]; }

  bool is_zero() const;

  /// Operator product and sum; both sides must share the same spin.
  friend DiagonalOperator operator*(const DiagonalOperator& a, const DiagonalOperator& b);
  friend DiagonalOperator operator+(const DiagonalOperator& a, const DiagonalOperator& b);

  friend bool operator==(const DiagonalOperator&, const DiagonalOperator&) = default;

private:
  SpinQuantum spin_;
  std::vector<BigRational> diag_;
};

/// 1 for half-odd S, 0 for integer S.
int alpha(const SpinQuantum& spin);

DiagonalOperator sz_operator(const SpinQuantum& spin);

/// (-1)^(S+m+alpha_S) / ((S-m)! (S+m)!)
BigRational projector_coefficient(const MagneticQuantum& q);

/// coefficient * prod_{n != m} (x - n), expanded. Degree 2S.
Polynomial projector_polynomial(const MagneticQuantum& q);

/// Roots {n != m} of the projector polynomial, descending.
std::vector<BigRational> projector_roots(const MagneticQuantum& q);

/// Sum_m values[i] P_m(x), values listed m-descending. Throws on length mismatch.
Polynomial operator_function(const SpinQuantum& spin, std::span<const BigRational> values);

/// f(S_z) for polynomial f: f reduced modulo the annihilating polynomial of S_z.
Polynomial operator_function(const SpinQuantum& spin, const Polynomial& f);

/// x^n reduced modulo prod_m (x - m). Degree <= 2S.
Polynomial reduce_power(const SpinQuantum& spin, unsigned long n);

}  // namespace spinproj
