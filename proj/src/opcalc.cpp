#include "spinproj/opcalc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace spinproj {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : DenseMatrix(rows, cols, std::vector<BigRational>(rows * cols)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<BigRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

DenseMatrix DenseMatrix::from_diagonal(const DiagonalOperator& op) {
  DenseMatrix out(op.dimension(), op.dimension());
  for (std::size_t i = 0; i < op.dimension(); ++i) out(i, i) = op[i];
  return out;
}

DenseMatrix DenseMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  DenseMatrix work = *this;
  DenseMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const BigRational scale = BigRational(1) / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const BigRational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

DenseMatrix operator*(const BigRational& c, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (auto& e : out.entries_) e *= c;
  return out;
}

DiagonalOperator eval_on_diagonal(const Polynomial& p, const DiagonalOperator& op) {
  return DiagonalOperator(op.spin(), p.evaluate_at(op.diagonal()));
}

DenseMatrix eval_on_matrix(const Polynomial& p, const DenseMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  DenseMatrix acc(n, n);
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::vector<BigRational> apply_to_state(const DiagonalOperator& op, std::span<const BigRational> state) {
  if (state.size() != op.dimension()) {
    throw std::invalid_argument("state has dimension " + std::to_string(state.size()) + ", operator has " +
                                std::to_string(op.dimension()));
  }
  std::vector<BigRational> out(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) out[i] = op[i] * state[i];
  return out;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

constexpr std::array<std::string_view, 6> kCheckNames = {
    "annihilator", "idempotency", "orthogonality", "completeness", "kronecker", "degree"};

std::string witness(const std::optional<HalfInt>& m, const std::optional<HalfInt>& m_prime, std::size_t row,
                    std::size_t col, const BigRational& got, const BigRational& expected) {
  std::string out;
  out += "m=" + (m ? m->to_string() : std::string("-"));
  out += " m'=" + (m_prime ? m_prime->to_string() : std::string("-"));
  out += " pos=(" + std::to_string(row) + "," + std::to_string(col) + ")";
  out += ": got " + got.to_string() + " expected " + expected.to_string();
  return out;
}

CheckResult pass(std::string_view name) { return {std::string(name), true, std::nullopt}; }
CheckResult fail(std::string_view name, std::string w) { return {std::string(name), false, std::move(w)}; }

// First diagonal position where got and expected differ.
std::optional<std::size_t> first_mismatch(const DiagonalOperator& got, const DiagonalOperator& expected) {
  for (std::size_t i = 0; i < got.dimension(); ++i) {
    if (got[i] != expected[i]) return i;
  }
  return std::nullopt;
}

struct ProjectorFamily {
  std::vector<HalfInt> spectrum;
  std::vector<Polynomial> polys;
  std::vector<DiagonalOperator> ops;
};

ProjectorFamily build_family(const SpinQuantum& spin) {
  ProjectorFamily fam;
  fam.spectrum = spin.spectrum();
  const DiagonalOperator sz = sz_operator(spin);
  for (const auto& m : fam.spectrum) {
    fam.polys.push_back(projector_polynomial(MagneticQuantum(spin, m)));
    fam.ops.push_back(eval_on_diagonal(fam.polys.back(), sz));
  }
  return fam;
}

CheckResult annihilator_impl(const SpinQuantum& spin) {
  const auto name = kCheckNames[0];
  const DiagonalOperator got = eval_on_diagonal(node_polynomial(spin.nodes()), sz_operator(spin));
  const DiagonalOperator zero = DiagonalOperator::zero(spin);
  if (auto i = first_mismatch(got, zero)) {
    return fail(name, witness(spin.spectrum()[*i], std::nullopt, *i, *i, got[*i], zero[*i]));
  }
  return pass(name);
}

CheckResult idempotency_impl(const ProjectorFamily& fam) {
  const auto name = kCheckNames[1];
  for (std::size_t a = 0; a < fam.ops.size(); ++a) {
    const DiagonalOperator sq = fam.ops[a] * fam.ops[a];
    if (auto i = first_mismatch(sq, fam.ops[a])) {
      return fail(name, witness(fam.spectrum[a], fam.spectrum[a], *i, *i, sq[*i], fam.ops[a][*i]));
    }
  }
  return pass(name);
}

CheckResult orthogonality_impl(const SpinQuantum& spin, const ProjectorFamily& fam) {
  const auto name = kCheckNames[2];
  const DiagonalOperator zero = DiagonalOperator::zero(spin);
  for (std::size_t a = 0; a < fam.ops.size(); ++a) {
    for (std::size_t b = 0; b < fam.ops.size(); ++b) {
      if (a == b) continue;
      const DiagonalOperator prod = fam.ops[a] * fam.ops[b];
      if (auto i = first_mismatch(prod, zero)) {
        return fail(name, witness(fam.spectrum[a], fam.spectrum[b], *i, *i, prod[*i], zero[*i]));
      }
    }
  }
  return pass(name);
}

CheckResult completeness_impl(const SpinQuantum& spin, const ProjectorFamily& fam) {
  const auto name = kCheckNames[3];
  DiagonalOperator sum = DiagonalOperator::zero(spin);
  for (const auto& op : fam.ops) sum = sum + op;
  const DiagonalOperator id = DiagonalOperator::identity(spin);
  if (auto i = first_mismatch(sum, id)) {
    return fail(name, witness(std::nullopt, std::nullopt, *i, *i, sum[*i], id[*i]));
  }
  return pass(name);
}

// P_m(m') = delta_{m m'}, and P_m e_{m'} = delta_{m m'} e_{m'} on states. The
// operators hold p(m') for every eigenvalue m' already, so they serve both.
CheckResult kronecker_impl(const ProjectorFamily& fam) {
  const auto name = kCheckNames[4];
  const std::size_t dim = fam.spectrum.size();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const BigRational expected(a == b ? 1 : 0);
      const BigRational& value = fam.ops[a][b];
      if (value != expected) {
        return fail(name, witness(fam.spectrum[a], fam.spectrum[b], b, b, value, expected));
      }
      std::vector<BigRational> basis(dim);
      basis[b] = 1;
      const auto image = apply_to_state(fam.ops[a], basis);
      for (std::size_t r = 0; r < dim; ++r) {
        const BigRational want(a == b && r == b ? 1 : 0);
        if (image[r] != want) return fail(name, witness(fam.spectrum[a], fam.spectrum[b], r, b, image[r], want));
      }
    }
  }
  return pass(name);
}

CheckResult degree_impl(const SpinQuantum& spin, const ProjectorFamily& fam) {
  const auto name = kCheckNames[5];
  for (std::size_t a = 0; a < fam.polys.size(); ++a) {
    if (fam.polys[a].degree() != spin.twice()) {
      return fail(name, "m=" + fam.spectrum[a].to_string() + " degree " + std::to_string(fam.polys[a].degree()) +
                            " expected " + std::to_string(spin.twice()));
    }
  }
  return pass(name);
}

}  // namespace

std::span<const std::string_view> suite_check_names() { return kCheckNames; }

CheckResult annihilator_check(const SpinQuantum& spin) { return annihilator_impl(spin); }
CheckResult idempotency_check(const SpinQuantum& spin) { return idempotency_impl(build_family(spin)); }
CheckResult orthogonality_check(const SpinQuantum& spin) { return orthogonality_impl(spin, build_family(spin)); }
CheckResult completeness_check(const SpinQuantum& spin) { return completeness_impl(spin, build_family(spin)); }
CheckResult kronecker_check(const SpinQuantum& spin) { return kronecker_impl(build_family(spin)); }
CheckResult degree_check(const SpinQuantum& spin) { return degree_impl(spin, build_family(spin)); }

VerificationReport run_suite(const SpinQuantum& spin) {
  const ProjectorFamily fam = build_family(spin);
  VerificationReport report{spin, {}};
  report.checks.push_back(annihilator_impl(spin));
  report.checks.push_back(idempotency_impl(fam));
  report.checks.push_back(orthogonality_impl(spin, fam));
  report.checks.push_back(completeness_impl(spin, fam));
  report.checks.push_back(kronecker_impl(fam));
  report.checks.push_back(degree_impl(spin, fam));
  return report;
}

}  // namespace spinproj
