#include "spinproj/render.hpp"

#include <algorithm>

namespace spinproj {

std::string_view sz_symbol(Style style) { return style == Style::Latex ? "\\hat S_z" : "Sz"; }

namespace {

std::string render_magnitude(const BigRational& value, Style style) {
  const BigInt num = abs(value.numerator());
  if (value.is_integer()) return num.get_str();
  if (style == Style::Latex) return "\\frac{" + num.get_str() + "}{" + value.denominator().get_str() + "}";
  return num.get_str() + "/" + value.denominator().get_str();
}

std::string render_power(std::string_view var, std::size_t power, Style style) {
  std::string out(var);
  if (power == 1) return out;
  if (style == Style::Latex) return out + "^{" + std::to_string(power) + "}";
  return out + "^" + std::to_string(power);
}

// Joins signed terms as "a + b - c"; a leading negative term gets a bare "-".
void append_term(std::string& out, bool negative, const std::string& magnitude) {
  if (out.empty()) {
    out = negative ? "-" + magnitude : magnitude;
  } else {
    out += negative ? " - " : " + ";
    out += magnitude;
  }
}

}  // namespace

std::string render_rational(const BigRational& value, Style style) {
  return (value.sign() < 0 ? "-" : "") + render_magnitude(value, style);
}

std::string render_polynomial(const Polynomial& p, std::string_view var, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigRational& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = render_magnitude(c, style);
    } else {
      const bool unit = c == BigRational(1) || c == BigRational(-1);
      const std::string sep = style == Style::Latex ? "\\," : "*";
      term = unit ? render_power(var, k, style) : render_magnitude(c, style) + sep + render_power(var, k, style);
    }
    append_term(out, c.sign() < 0, term);
  }
  return out;
}

Polynomial FactoredForm::expand() const {
  Polynomial out = Polynomial::constant(coefficient);
  for (const auto& r : roots) out = out * Polynomial(std::vector<BigRational>{-r, BigRational(1)});
  return out;
}

FactoredForm projector_factored(const MagneticQuantum& q) {
  return {projector_coefficient(q), projector_roots(q)};
}

std::string render_factored(const FactoredForm& f, std::string_view var, Style style) {
  std::vector<BigRational> roots = f.roots;
  std::sort(roots.begin(), roots.end(), std::greater<>());
  BigRational coefficient = f.coefficient;

  std::string factors;
  auto take = [&roots](const BigRational& r) {
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) return false;
    roots.erase(it);
    return true;
  };

  if (take(BigRational())) factors += std::string(var);
  for (const auto& r : std::vector<BigRational>(roots)) {
    if (r.sign() <= 0) continue;
    if (std::find(roots.begin(), roots.end(), -r) == roots.end()) continue;
    take(r);
    take(-r);
    // (x - r)(x + r) = -(r + x)(r - x)
    coefficient = -coefficient;
    const std::string n = render_magnitude(r, style);
    factors += "(" + n + " + " + std::string(var) + ")(" + n + " - " + std::string(var) + ")";
  }
  for (const auto& r : roots) {
    factors += "(" + std::string(var) + (r.sign() < 0 ? " + " : " - ") + render_magnitude(r, style) + ")";
  }

  if (factors.empty()) return render_rational(coefficient, style);
  if (coefficient == BigRational(1)) return factors;
  if (coefficient == BigRational(-1)) return "-" + factors;
  return render_rational(coefficient, style) + (style == Style::Latex ? "\\," : " ") + factors;
}

std::string render_diagonal(const DiagonalOperator& op, Style style) {
  std::string out = style == Style::Latex ? "\\mathrm{diag}(" : "diag(";
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    if (i > 0) out += ", ";
    out += render_rational(op[i], style);
  }
  return out + ")";
}

}  // namespace spinproj
