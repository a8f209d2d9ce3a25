#pragma once

#include "spinproj/exact.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace spinproj {

/// Univariate polynomial over BigRational in dense ascending form.
/// The top coefficient is never zero; the zero polynomial has no coefficients.
class Polynomial {
public:
  /// Degree reported for the zero polynomial; below every real degree.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, std::size_t power);
  static Polynomial x() { return monomial(BigRational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigRational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigRational coeff(std::size_t i) const;
  const BigRational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == BigRational(1); }

  /// Horner evaluation.
  BigRational operator()(const BigRational& x) const;
  /// Values at several points, sharing the setup work.
  std::vector<BigRational> evaluate_at(std::span<const BigRational> xs) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const BigRational& c) { return p *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial p) { return p *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Pairwise-distinct interpolation nodes, in caller order.
class NodeSet {
public:
  NodeSet() = default;
  /// Throws std::invalid_argument on duplicate nodes.
  explicit NodeSet(std::vector<BigRational> nodes);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const BigRational& operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const BigRational> nodes() const { return nodes_; }

private:
  std::vector<BigRational> nodes_;
};

/// Monic prod_l (x - x_l). Empty set gives 1.
Polynomial node_polynomial(const NodeSet& nodes);

/// L_k(x) = prod_{l != k} (x - x_l) / (x_k - x_l). Throws std::out_of_range on bad k.
Polynomial lagrange_basis(const NodeSet& nodes, std::size_t k);

/// Sum_k values[k] * L_k(x): the unique interpolant of degree < |nodes|.
/// Throws std::invalid_argument on length mismatch.
Polynomial interpolate(const NodeSet& nodes, std::span<const BigRational> values);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division: p = q*d + r, deg r < deg d. Throws DivisionByZero if d is zero.
DivMod divmod(const Polynomial& p, const Polynomial& d);

/// Remainder of divmod(p, d).
Polynomial reduce_mod(const Polynomial& p, const Polynomial& d);

}  // namespace spinproj
