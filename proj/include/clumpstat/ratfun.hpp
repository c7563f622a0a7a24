#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clumpstat/multipoly.hpp"

namespace clumpstat {

// Ratio of sparse multivariate polynomials; the carrier of every generating
// function. Normalized so the denominator's constant term is 1 when nonzero
// (leading coefficient 1 otherwise); common monomial factors are cancelled,
// and a full GCD reduction is applied when both parts are univariate in z.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(MultiPoly::constant(1)) {}
  explicit RationalFunction(MultiPoly num)
      : num_(std::move(num)), den_(MultiPoly::constant(1)) {}
  RationalFunction(MultiPoly num, MultiPoly den);
  explicit RationalFunction(const Rat& c)
      : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}

  static RationalFunction one() { return RationalFunction(Rat(1)); }
  static RationalFunction variable(int v) {
    return RationalFunction(MultiPoly::variable(v));
  }

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  // Equality of the represented functions (cross multiplication).
  bool operator==(const RationalFunction& o) const;

  // Exact composition f[var := g]. Substituting z -> z*t implements the
  // kernel shift used by the coverage marking.
  RationalFunction substitute(int v, const RationalFunction& g) const;
  RationalFunction substitute(int v, const MultiPoly& g) const;
  RationalFunction set_var(int v, const Rat& value) const;
  RationalFunction set_one(int v) const { return set_var(v, Rat(1)); }

  RationalFunction derivative(int v) const;  // quotient rule

  Rat eval(const std::array<Rat, var::kCount>& point) const;
  // Evaluate as a univariate function of z (all other variables must be
  // absent).
  Rat eval_z(const Rat& z_value) const;

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

enum class RatOp { Add, Sub, Mul, Div };
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RatOp op);

// Taylor coefficient [v^k] f, itself a rational function of the remaining
// variables (exact; peels constant terms and divides by v repeatedly).
RationalFunction taylor_coefficient(const RationalFunction& f, int v, int k);

// Power-series coefficients of z^0..z^N. Coefficient n is a polynomial in
// the non-z variables.
struct SeriesTable {
  int horizon = 0;
  std::vector<MultiPoly> coeff;
  bool truncated = false;  // set when mark-degree truncation was in effect

  const MultiPoly& operator[](int n) const { return coeff[static_cast<size_t>(n)]; }
};

struct SeriesOptions {
  // Cap on the degree of every non-z variable during extraction. Required
  // (and defaulted to N) when the denominator's z-constant term is not a
  // plain rational; in that case the result is flagged truncated.
  std::optional<unsigned> mark_degree_cap;
};

// Denominator-driven linear recurrence; throws MathError(SingularAtZero)
// when the denominator vanishes at z = 0.
SeriesTable series_coefficients(const RationalFunction& f, int N,
                                const SeriesOptions& options = {});

using PolyMatrix = std::vector<std::vector<MultiPoly>>;
using RFMatrix = std::vector<std::vector<RationalFunction>>;

RFMatrix rf_identity(int n);

// Solution of A X = B kept on the single common denominator det(A): the
// Cramer numerators X_ij = num[i][j] / den. Fraction-free (Bareiss) forward
// elimination, exact-division back substitution.
struct PolyLinearSolution {
  PolyMatrix num;
  MultiPoly den;
};
PolyLinearSolution poly_matrix_solve_common(PolyMatrix a, PolyMatrix b);

// Same, as per-entry rational functions. Throws MathError(SingularMatrix)
// if A is singular.
RFMatrix poly_matrix_solve(PolyMatrix a, PolyMatrix b);

// Fraction-free determinant (zero for singular input).
MultiPoly poly_determinant(PolyMatrix a);

// Cofactor transpose: A * adj(A) = det(A) I. Intended for small r; keeps
// matrix inverses on a single explicit denominator.
PolyMatrix poly_adjugate(const PolyMatrix& a);

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);

// (I - M)^{-1} B. Row denominators are cleared first, then Bareiss.
RFMatrix rf_matrix_solve(const RFMatrix& m, const RFMatrix& b);

RFMatrix rf_matrix_mul(const RFMatrix& a, const RFMatrix& b);

}  // namespace clumpstat
