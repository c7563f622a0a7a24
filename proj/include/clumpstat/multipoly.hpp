#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clumpstat/rational.hpp"

namespace clumpstat {

// Variable universe shared by every generating function:
//   z  - text length            x  - occurrences (single word)
//   t  - covered positions      u  - clump count
//   v  - k-clump count          x1..x8 - per-word occurrences
namespace var {
constexpr int z = 0, x = 1, t = 2, u = 3, v = 4;
constexpr int kCount = 13;
constexpr int xi(int i) { return 4 + i; }  // i in 1..8
std::string name(int id);
}  // namespace var

struct Monomial {
  std::array<uint16_t, var::kCount> exp{};

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < var::kCount; ++i)
      if (exp[static_cast<size_t>(i)] > m.exp[static_cast<size_t>(i)]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < var::kCount; ++i)
      r.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(
          exp[static_cast<size_t>(i)] + m.exp[static_cast<size_t>(i)]);
    return r;
  }
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < var::kCount; ++i)
      r.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(
          exp[static_cast<size_t>(i)] - m.exp[static_cast<size_t>(i)]);
    return r;
  }
  bool operator==(const Monomial& m) const { return exp == m.exp; }
};

// Graded lexicographic order (admissible: compatible with multiplication).
struct GlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (int i = 0; i < var::kCount; ++i)
      if (a.exp[static_cast<size_t>(i)] != b.exp[static_cast<size_t>(i)])
        return a.exp[static_cast<size_t>(i)] < b.exp[static_cast<size_t>(i)];
    return false;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical: the term map stores no zero coefficients, so equal polynomials
// have identical representations.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GlexLess>;

  MultiPoly() = default;  // zero
  static MultiPoly constant(Rat c);
  static MultiPoly variable(int v, unsigned exp = 1);
  static MultiPoly monomial(Rat c, int v, unsigned exp);
  static MultiPoly from_term(Rat c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  // The unique coefficient when constant; throws otherwise.
  Rat as_constant() const;

  unsigned degree(int v) const;
  bool uses(int v) const { return degree(v) > 0; }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator*(const Rat& c) const;
  MultiPoly& operator*=(const Rat& c);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(unsigned k) const;

  // Coefficients when viewed as a polynomial in v: index = exponent of v.
  std::vector<MultiPoly> coefficients_in(int v) const;
  // Single coefficient of v^k (a polynomial in the remaining variables).
  MultiPoly coefficient_of(int v, unsigned k) const;

  MultiPoly substitute(int v, const MultiPoly& replacement) const;  // Horner
  MultiPoly set_var(int v, const Rat& value) const;
  MultiPoly derivative(int v) const;
  Rat eval(const std::array<Rat, var::kCount>& point) const;

  // Quotient of an exact division; throws MathError(Internal) when the
  // division does not come out even.
  MultiPoly exact_div(const MultiPoly& d) const;

  // Componentwise-min exponent vector over all terms (zero when empty).
  Monomial monomial_content() const;
  MultiPoly shift_down(const Monomial& m) const;  // divide by a monomial

  // Drops terms whose exponent in any non-z variable exceeds cap.
  // Returns true when something was dropped.
  bool truncate_marks(unsigned cap);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

}  // namespace clumpstat
