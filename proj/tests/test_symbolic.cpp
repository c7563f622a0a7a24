#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clumpstat/errors.hpp"
#include "clumpstat/multipoly.hpp"
#include "clumpstat/ratfun.hpp"

using namespace clumpstat;

namespace {

const MultiPoly kOne = MultiPoly::constant(1);
const MultiPoly kZ = MultiPoly::variable(var::z);

RationalFunction geometric() {  // 1/(1-z)
  return RationalFunction(kOne, kOne - kZ);
}

std::vector<Rat> z_series(const RationalFunction& f, int n) {
  SeriesTable t = series_coefficients(f, n);
  std::vector<Rat> out;
  for (const auto& c : t.coeff) out.push_back(c.as_constant());
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic canonical form") {
  MultiPoly p = kZ * kZ + kZ - kZ;  // z^2
  CHECK(p == MultiPoly::variable(var::z, 2));
  CHECK(p.term_count() == 1);
  CHECK((p - p).is_zero());
  MultiPoly q = (kOne + kZ).pow(3);
  CHECK(q.coefficient_of(var::z, 2).as_constant() == 3);
}

TEST_CASE("rf_arith basics") {
  RationalFunction g = geometric();
  CHECK(rf_arith(g, g, RatOp::Add) == RationalFunction(Rat(2)) * g);

  RationalFunction a(kZ, kOne - kZ);
  RationalFunction b(kOne - kZ, kZ);
  CHECK(rf_arith(a, b, RatOp::Mul) == RationalFunction::one());

  CHECK(rf_arith(g, g, RatOp::Sub).is_zero());
  CHECK_THROWS_AS(rf_arith(g, RationalFunction(), RatOp::Div), MathError);
}

TEST_CASE("substitution") {
  RationalFunction g = geometric();
  RationalFunction zt(kZ * MultiPoly::variable(var::t));
  CHECK(g.substitute(var::z, zt) ==
        RationalFunction(kOne, kOne - kZ * MultiPoly::variable(var::t)));

  RationalFunction x2(MultiPoly::variable(var::x, 2));
  RationalFunction uy(MultiPoly::variable(var::u) * MultiPoly::variable(var::v));
  CHECK(x2.substitute(var::x, uy) ==
        RationalFunction(MultiPoly::variable(var::u, 2) *
                         MultiPoly::variable(var::v, 2)));

  // Substitution by a genuine rational function.
  RationalFunction f(MultiPoly::variable(var::x), kOne + MultiPoly::variable(var::x));
  RationalFunction inv_z(kOne, kZ);
  CHECK(f.substitute(var::x, inv_z) == RationalFunction(kOne, kOne + kZ));
}

TEST_CASE("derivative") {
  // d/dx of x/(1-xz) at x=1 is 1/(1-z)^2.
  RationalFunction f(MultiPoly::variable(var::x),
                     kOne - MultiPoly::variable(var::x) * kZ);
  RationalFunction d = f.derivative(var::x).set_one(var::x);
  CHECK(d == RationalFunction(kOne, (kOne - kZ) * (kOne - kZ)));

  CHECK(RationalFunction(Rat(7)).derivative(var::z).is_zero());
}

TEST_CASE("series extraction") {
  CHECK(z_series(geometric(), 4) ==
        std::vector<Rat>{1, 1, 1, 1, 1});
  // 1/(1-z-z^2): the Fibonacci recurrence c_n = c_{n-1} + c_{n-2}.
  RationalFunction fib(kOne, kOne - kZ - kZ * kZ);
  CHECK(z_series(fib, 5) == std::vector<Rat>{1, 1, 2, 3, 5, 8});

  RationalFunction singular(kOne, kZ);
  CHECK_THROWS_AS(series_coefficients(singular, 3), MathError);
}

TEST_CASE("series of a product is the Cauchy product") {
  RationalFunction f(kOne + kZ, kOne - kZ - kZ * kZ);
  RationalFunction g(kZ, kOne - MultiPoly::monomial(rat(1, 2), var::z, 1));
  const int n = 16;
  auto sf = series_coefficients(f, n), sg = series_coefficients(g, n);
  auto sfg = series_coefficients(f * g, n);
  for (int i = 0; i <= n; ++i) {
    MultiPoly conv;
    for (int j = 0; j <= i; ++j) conv += sf[j] * sg[i - j];
    CHECK(sfg[i] == conv);
  }
}

TEST_CASE("series commutes with derivative-at-one") {
  RationalFunction f(MultiPoly::variable(var::x),
                     kOne - MultiPoly::variable(var::x) * kZ);
  const int n = 10;
  auto direct = series_coefficients(f.derivative(var::x).set_one(var::x), n);
  auto table = series_coefficients(f, n);
  for (int i = 0; i <= n; ++i) {
    MultiPoly termwise = table[i].derivative(var::x).set_var(var::x, Rat(1));
    CHECK(direct[i] == termwise);
  }
}

TEST_CASE("substitute-then-extract equals extract-then-substitute") {
  RationalFunction f(kOne, kOne - MultiPoly::variable(var::x) * kZ);
  MultiPoly sub = MultiPoly::variable(var::u) + MultiPoly::variable(var::u, 2);
  const int n = 8;
  auto substituted = series_coefficients(f.substitute(var::x, sub), n);
  auto plain = series_coefficients(f, n);
  for (int i = 0; i <= n; ++i)
    CHECK(substituted[i] == plain[i].substitute(var::x, sub));
}

TEST_CASE("taylor coefficients in a mark variable") {
  // f = 1/(1 - u g) has [u^k] = g^k.
  RationalFunction g(kZ, kOne - kZ);
  RationalFunction f = RationalFunction::one() /
                       (RationalFunction::one() -
                        RationalFunction(MultiPoly::variable(var::u)) * g);
  CHECK(taylor_coefficient(f, var::u, 0) == RationalFunction::one());
  CHECK(taylor_coefficient(f, var::u, 2) == g * g);
  CHECK(taylor_coefficient(f, var::u, 3) == g * g * g);
}

TEST_CASE("matrix solve") {
  // (I - 0)^{-1} B = B.
  RFMatrix zero(2, std::vector<RationalFunction>(2));
  RFMatrix b = rf_identity(2);
  b[0][1] = RationalFunction(kZ);
  RFMatrix solved = rf_matrix_solve(zero, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(solved[i][j] == b[i][j]);

  // Scalar star: (1 - K)^{-1} b = b/(1-K).
  RFMatrix k(1, std::vector<RationalFunction>(1));
  k[0][0] = RationalFunction(MultiPoly::monomial(rat(1, 2), var::z, 1));
  RFMatrix one(1, std::vector<RationalFunction>(1, RationalFunction::one()));
  RFMatrix star = rf_matrix_solve(k, one);
  CHECK(star[0][0] ==
        RationalFunction(kOne, kOne - MultiPoly::monomial(rat(1, 2), var::z, 1)));

  // Random-ish 3x3 against a hand inverse: solve A X = I then check A X = I.
  RFMatrix m(3, std::vector<RationalFunction>(3));
  m[0][1] = RationalFunction(kZ);
  m[1][2] = RationalFunction(MultiPoly::variable(var::x) * kZ);
  m[2][0] = RationalFunction(kZ, kOne - kZ);
  m[2][2] = RationalFunction(MultiPoly::monomial(rat(1, 3), var::z, 2));
  RFMatrix inverse = rf_matrix_solve(m, rf_identity(3));
  RFMatrix i_minus_m = rf_identity(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) i_minus_m[i][j] -= m[i][j];
  RFMatrix product = rf_matrix_mul(i_minus_m, inverse);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(product[i][j] == (i == j ? RationalFunction::one() : RationalFunction()));

  // Singular system: I - M has a zero column.
  RFMatrix singular(2, std::vector<RationalFunction>(2));
  singular[0][0] = RationalFunction::one();
  CHECK_THROWS_AS(rf_matrix_solve(singular, rf_identity(2)), MathError);
}

TEST_CASE("truncated series extraction is flagged") {
  // Denominator constant term 1 - x is invertible only as a series.
  RationalFunction f(kOne,
                     kOne - MultiPoly::variable(var::x) - kZ);
  SeriesOptions opts;
  opts.mark_degree_cap = 4;
  SeriesTable table = series_coefficients(f, 3, opts);
  CHECK(table.truncated);
  // [z^0] = 1/(1-x) = 1 + x + x^2 + ... up to the cap.
  MultiPoly expect;
  for (unsigned i = 0; i <= 4; ++i) expect += MultiPoly::variable(var::x, i);
  CHECK(table[0] == expect);
}
