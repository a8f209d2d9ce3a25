#pragma once

// Human-readable text and LaTeX rendering. Polynomials print in ascending
// powers ("1/2 + Sz", "1 - Sz^2").

#include "spinproj/exact.hpp"
#include "spinproj/poly.hpp"
#include "spinproj/spin.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinproj {

enum class Style { Text, Latex };

/// Spelling of the S_z operator in each style.
std::string_view sz_symbol(Style style);

std::string render_rational(const BigRational& value, Style style);
std::string render_polynomial(const Polynomial& p, std::string_view var, Style style);

/// coefficient * prod (x - root), with roots known.
struct FactoredForm {
  BigRational coefficient;
  std::vector<BigRational> roots;

  Polynomial expand() const;
};

FactoredForm projector_factored(const MagneticQuantum& q);

/// Factored rendering. A root at 0 prints as the bare variable, a root pair
/// {n, -n} as "(n + x)(n - x)" and any other root r as "(x - r)"; the leading
/// coefficient absorbs the sign changes, so the rendered product equals expand().
std::string render_factored(const FactoredForm& f, std::string_view var, Style style);

/// "diag(a, b, ...)" or "\mathrm{diag}(a, b, ...)".
std::string render_diagonal(const DiagonalOperator& op, Style style);

}  // namespace spinproj
