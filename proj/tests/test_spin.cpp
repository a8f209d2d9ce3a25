#include "spinproj/spin.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace spinproj;
using spinproj::testing::coeffs_of;
using spinproj::testing::expand_roots;
using spinproj::testing::q;

namespace {

SpinQuantum S(const char* s) { return SpinQuantum::parse(s); }
MagneticQuantum Q(const char* s, const char* m) { return MagneticQuantum(S(s), HalfInt::parse(m)); }
Polynomial P(std::vector<BigRational> c) { return Polynomial(std::move(c)); }

// 1 / prod_{n != m} (m - n), by brute force over the spectrum.
BigRational lagrange_denominator_oracle(const MagneticQuantum& mq) {
  BigRational prod(1);
  for (const auto& n : mq.spin().spectrum()) {
    if (n != mq.m()) prod *= mq.m().to_rational() - n.to_rational();
  }
  return BigRational(1) / prod;
}

}  // namespace

TEST_CASE("quantum number validation") {
  CHECK_THROWS_AS(S("-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1", "1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1/2", "0"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1", "2"), std::invalid_argument);
  CHECK_THROWS_AS(Q("3/2", "-5/2"), std::invalid_argument);
  CHECK(Q("3/2", "3/2").index() == 0);
  CHECK(Q("3/2", "-3/2").index() == 3);
  CHECK(Q("1", "0").index() == 1);
}

TEST_CASE("alpha is the half-integer flag") {
  CHECK(alpha(S("1/2")) == 1);
  CHECK(alpha(S("1")) == 0);
  CHECK(alpha(S("0")) == 0);
  CHECK(alpha(S("7/2")) == 1);
}

TEST_CASE("S_z operator") {
  auto diag = [](const DiagonalOperator& op) { return std::vector<BigRational>(op.diagonal().begin(), op.diagonal().end()); };
  CHECK(diag(sz_operator(S("1/2"))) == std::vector<BigRational>{q(1, 2), q(-1, 2)});
  CHECK(diag(sz_operator(S("1"))) == std::vector<BigRational>{1, 0, -1});
  CHECK(diag(sz_operator(S("0"))) == std::vector<BigRational>{0});
  CHECK_THROWS_AS(DiagonalOperator(S("1"), {1, 2}), std::invalid_argument);
}

TEST_CASE("projector coefficient") {
  CHECK(projector_coefficient(Q("1", "0")) == BigRational(-1));
  CHECK(projector_coefficient(Q("1/2", "1/2")) == BigRational(1));
  CHECK(projector_coefficient(Q("1/2", "-1/2")) == BigRational(-1));
  const auto mq = Q("3/2", "3/2");
  CHECK(lagrange_denominator_oracle(mq) == q(1, 6));
  CHECK(projector_coefficient(mq) == q(1, 6));
}

TEST_CASE("projector polynomials from the worked examples") {
  CHECK(projector_polynomial(Q("1/2", "1/2")) == P({q(1, 2), 1}));
  CHECK(projector_polynomial(Q("1/2", "-1/2")) == P({q(1, 2), -1}));
  CHECK(projector_polynomial(Q("1", "0")) == P({1, 0, -1}));
  // (1/2) Sz (Sz +- 1)
  CHECK(projector_polynomial(Q("1", "1")) == P({0, q(1, 2), q(1, 2)}));
  CHECK(projector_polynomial(Q("1", "-1")) == P({0, q(-1, 2), q(1, 2)}));
  // (1/2)(3/2 + x)(3/2 - x)(1/2 + x) = -(1/2)(x + 3/2)(x - 3/2)(x + 1/2)
  CHECK(coeffs_of(projector_polynomial(Q("3/2", "1/2"))) == expand_roots(q(-1, 2), {q(-3, 2), q(3, 2), q(-1, 2)}));
  // (1/2)(3/2 + x)(3/2 - x)(1/2 - x) = (1/2)(x + 3/2)(x - 3/2)(x - 1/2)
  CHECK(coeffs_of(projector_polynomial(Q("3/2", "-1/2"))) == expand_roots(q(1, 2), {q(-3, 2), q(3, 2), q(1, 2)}));
}

TEST_CASE("S = 3/2, m = +-3/2 follows the general formula, not the printed example") {
  // The printed form (1/6)(1/2 + x)(1/2 - x)(3/2 +- x) is the negative of the true projector
  // and evaluates to -1 on its own eigenvalue. With 3/2 +- x = +-(x + m):
  for (int sign : {1, -1}) {
    CAPTURE(sign);
    const BigRational m = q(3 * sign, 2);
    const auto printed = Polynomial(expand_roots(q(-sign, 6), {q(-1, 2), q(1, 2), -m}));
    CHECK(printed(m) == BigRational(-1));

    // Corrected: (1/6)(x + 1/2)(x - 1/2)(3/2 +- x).
    const auto corrected = Polynomial(expand_roots(q(sign, 6), {q(-1, 2), q(1, 2), -m}));
    const auto actual = projector_polynomial(Q("3/2", sign > 0 ? "3/2" : "-3/2"));
    CHECK(actual == corrected);
    CHECK(actual == -printed);
    CHECK(actual(m) == BigRational(1));
  }
}

TEST_CASE("projector polynomial properties for 2S <= 30") {
  for (long twice = 0; twice <= 30; ++twice) {
    const auto spin = SpinQuantum::from_twice(twice);
    const NodeSet ns = spin.nodes();
    const auto spectrum = spin.spectrum();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      const MagneticQuantum mq(spin, spectrum[i]);
      CHECK(mq.index() == i);
      CHECK(projector_coefficient(mq) == lagrange_denominator_oracle(mq));
      const Polynomial p = projector_polynomial(mq);
      CHECK(p.degree() == twice);
      CHECK(p == lagrange_basis(ns, i));
      for (std::size_t j = 0; j < spectrum.size(); ++j) {
        CHECK(p(spectrum[j].to_rational()) == BigRational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("operator functions") {
  const std::vector<BigRational> quarter{q(1, 4), q(1, 4)};
  CHECK(operator_function(S("1/2"), quarter) == Polynomial::constant(q(1, 4)));
  for (long twice = 0; twice <= 12; ++twice) {
    const auto spin = SpinQuantum::from_twice(twice);
    const std::vector<BigRational> ones(spin.dimension(), BigRational(1));
    CHECK(operator_function(spin, ones) == Polynomial::constant(1));
  }
  const std::vector<BigRational> cubes{1, 0, -1};
  const Polynomial f = operator_function(S("1"), cubes);
  CHECK(f == Polynomial::x());
  CHECK(f == reduce_mod(Polynomial::monomial(1, 3), P({0, -1, 0, 1})));
  CHECK_THROWS_AS(operator_function(S("1"), quarter), std::invalid_argument);

  // Value-table and polynomial routes agree, and both equal the spectral sum.
  std::mt19937_64 rng(5);
  for (long twice = 0; twice <= 10; ++twice) {
    const auto spin = SpinQuantum::from_twice(twice);
    const Polynomial g = spinproj::testing::random_polynomial(rng, static_cast<std::size_t>(2 * twice + 3), 20);
    std::vector<BigRational> values;
    Polynomial spectral_sum;
    for (const auto& m : spin.spectrum()) {
      values.push_back(g(m.to_rational()));
      spectral_sum += values.back() * projector_polynomial(MagneticQuantum(spin, m));
    }
    const Polynomial from_values = operator_function(spin, values);
    CHECK(from_values == operator_function(spin, g));
    CHECK(from_values == spectral_sum);
    CHECK(from_values == interpolate(spin.nodes(), values));
    CHECK(from_values.degree() <= twice);
  }
}

TEST_CASE("power reduction") {
  CHECK(reduce_power(S("1/2"), 2) == Polynomial::constant(q(1, 4)));
  CHECK(reduce_power(S("1"), 3) == Polynomial::x());
  // x^4 mod (x^2 - 1/4)(x^2 - 9/4); check at every eigenvalue as well.
  const Polynomial r = reduce_power(S("3/2"), 4);
  CHECK(r == P({q(-9, 16), 0, q(5, 2)}));
  for (const auto& m : {q(1, 2), q(-1, 2), q(3, 2), q(-3, 2)}) CHECK(r(m) == m.pow(4));
  CHECK(reduce_power(S("0"), 0) == Polynomial::constant(1));
  CHECK(reduce_power(S("0"), 5).is_zero());
  CHECK(reduce_power(S("2"), 3) == Polynomial::monomial(1, 3));

  for (long twice = 0; twice <= 20; ++twice) {
    const auto spin = SpinQuantum::from_twice(twice);
    for (unsigned long n = 0; n <= static_cast<unsigned long>(2 * twice + 2); ++n) {
      const Polynomial red = reduce_power(spin, n);
      CHECK(red.degree() <= twice);
      if (n <= static_cast<unsigned long>(twice)) CHECK(red == Polynomial::monomial(1, n));
      for (const auto& m : spin.spectrum()) CHECK(red(m.to_rational()) == m.to_rational().pow(n));
    }
  }
}
