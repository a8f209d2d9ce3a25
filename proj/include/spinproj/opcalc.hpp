#pragma once

// Evaluating polynomials on operators, and the exact verification suite for
// the projector family of a spin.

#include "spinproj/exact.hpp"
#include "spinproj/poly.hpp"
#include "spinproj/spin.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinproj {

/// Row-major rectangular matrix of BigRational.
class DenseMatrix {
public:
  /// Throws std::invalid_argument for zero rows or cols.
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument if entries.size() != rows * cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_diagonal(const DiagonalOperator& op);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Gauss-Jordan inverse. Throws std::invalid_argument if not square,
  /// std::domain_error if singular.
  DenseMatrix inverse() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const BigRational& c, const DenseMatrix& a);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> entries_;
};

/// p(D): entrywise p(d_i).
DiagonalOperator eval_on_diagonal(const Polynomial& p, const DiagonalOperator& op);

/// p(A) by Horner's rule with a matrix argument. Throws std::invalid_argument
/// for non-square A.
DenseMatrix eval_on_matrix(const Polynomial& p, const DenseMatrix& a);

/// Diagonal action on a state vector. Throws std::invalid_argument on
/// dimension mismatch.
std::vector<BigRational> apply_to_state(const DiagonalOperator& op, std::span<const BigRational> state);

struct CheckResult {
  std::string name;
  bool pass = false;
  /// First offending entry, as "m=.. m'=.. pos=(r,c): got .. expected ..". Empty on pass.
  std::optional<std::string> witness;
};

struct VerificationReport {
  SpinQuantum spin;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Names of the suite's checks, in report order.
std::span<const std::string_view> suite_check_names();

CheckResult annihilator_check(const SpinQuantum& spin);
CheckResult idempotency_check(const SpinQuantum& spin);
CheckResult orthogonality_check(const SpinQuantum& spin);
CheckResult completeness_check(const SpinQuantum& spin);
CheckResult kronecker_check(const SpinQuantum& spin);
CheckResult degree_check(const SpinQuantum& spin);

/// Runs every check of the suite, in suite_check_names() order.
VerificationReport run_suite(const SpinQuantum& spin);

}  // namespace spinproj
