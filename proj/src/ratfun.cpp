#include "clumpstat/ratfun.hpp"

#include <algorithm>

#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace {

bool univariate_in_z(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms())
    for (int v = 1; v < var::kCount; ++v)
      if (m.exp[static_cast<size_t>(v)] != 0) return false;
  return true;
}

std::vector<Rat> z_coeffs(const MultiPoly& p) {
  std::vector<Rat> out(p.degree(var::z) + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) out[m.exp[var::z]] = c;
  return out;
}

MultiPoly poly_from_z_coeffs(const std::vector<Rat>& coeffs) {
  MultiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p += MultiPoly::monomial(coeffs[i], var::z, static_cast<unsigned>(i));
  return p;
}

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Monic Euclidean GCD over Q[z].
std::vector<Rat> univariate_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rat factor = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero())
    throw MathError(MathError::Kind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  // Cancel the common monomial factor.
  Monomial cn = num_.monomial_content(), cd = den_.monomial_content();
  Monomial common;
  bool any = false;
  for (int v = 0; v < var::kCount; ++v) {
    common.exp[static_cast<size_t>(v)] =
        std::min(cn.exp[static_cast<size_t>(v)], cd.exp[static_cast<size_t>(v)]);
    if (common.exp[static_cast<size_t>(v)] > 0) any = true;
  }
  if (any) {
    num_ = num_.shift_down(common);
    den_ = den_.shift_down(common);
  }
  // Full reduction in the univariate case keeps the language GFs tidy and
  // makes removable singularities actually removable.
  if (univariate_in_z(num_) && univariate_in_z(den_) && den_.degree(var::z) > 0 &&
      num_.degree(var::z) > 0) {
    auto g = univariate_gcd(z_coeffs(num_), z_coeffs(den_));
    if (g.size() > 1) {
      MultiPoly gp = poly_from_z_coeffs(g);
      num_ = num_.exact_div(gp);
      den_ = den_.exact_div(gp);
    }
  }
  Rat c0 = den_.constant_term();
  Rat scale = (c0 != 0) ? c0 : den_.terms().rbegin()->second;
  if (scale != 1) {
    Rat inv = 1 / scale;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero())
    throw MathError(MathError::Kind::DivisionByZero, "division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = *this + o;
  return *this;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = *this - o;
  return *this;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  *this = *this / o;
  return *this;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::substitute(int v, const RationalFunction& g) const {
  // Horner over the v-coefficients of both parts, with denominators cleared
  // by the appropriate power of g's denominator.
  unsigned dn = num_.degree(v), dd = den_.degree(v);
  unsigned d = std::max(dn, dd);
  if (d == 0) return *this;
  std::vector<MultiPoly> ncs = num_.coefficients_in(v);
  std::vector<MultiPoly> dcs = den_.coefficients_in(v);
  ncs.resize(d + 1);
  dcs.resize(d + 1);
  std::vector<MultiPoly> gden_pow(d + 1), gnum_pow(d + 1);
  gden_pow[0] = MultiPoly::constant(1);
  gnum_pow[0] = MultiPoly::constant(1);
  for (unsigned k = 1; k <= d; ++k) {
    gden_pow[k] = gden_pow[k - 1] * g.denominator();
    gnum_pow[k] = gnum_pow[k - 1] * g.numerator();
  }
  MultiPoly new_num, new_den;
  for (unsigned k = 0; k <= d; ++k) {
    new_num += ncs[k] * gnum_pow[k] * gden_pow[d - k];
    new_den += dcs[k] * gnum_pow[k] * gden_pow[d - k];
  }
  return RationalFunction(std::move(new_num), std::move(new_den));
}

RationalFunction RationalFunction::substitute(int v, const MultiPoly& g) const {
  return RationalFunction(num_.substitute(v, g), den_.substitute(v, g));
}

RationalFunction RationalFunction::set_var(int v, const Rat& value) const {
  return RationalFunction(num_.set_var(v, value), den_.set_var(v, value));
}

RationalFunction RationalFunction::derivative(int v) const {
  MultiPoly dn = num_.derivative(v), dd = den_.derivative(v);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

Rat RationalFunction::eval(const std::array<Rat, var::kCount>& point) const {
  Rat d = den_.eval(point);
  if (d == 0)
    throw MathError(MathError::Kind::DivisionByZero, "evaluation at a pole");
  return num_.eval(point) / d;
}

Rat RationalFunction::eval_z(const Rat& z_value) const {
  std::array<Rat, var::kCount> point;
  point.fill(Rat(0));
  point[var::z] = z_value;
  for (int v = 1; v < var::kCount; ++v)
    if (num_.uses(v) || den_.uses(v))
      throw MathError(MathError::Kind::Internal,
                      "eval_z on a multivariate function");
  return eval(point);
}

std::string RationalFunction::to_string() const {
  if (den_ == MultiPoly::constant(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b,
                          RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  throw MathError(MathError::Kind::Internal, "bad op");
}

RationalFunction taylor_coefficient(const RationalFunction& f, int v, int k) {
  RationalFunction rest = f;
  RationalFunction vr = RationalFunction::variable(v);
  for (int i = 0; i < k; ++i) {
    RationalFunction head = rest.set_var(v, Rat(0));
    rest = (rest - head) / vr;
  }
  return rest.set_var(v, Rat(0));
}

SeriesTable series_coefficients(const RationalFunction& f, int N,
                                const SeriesOptions& options) {
  SeriesTable table;
  table.horizon = N;
  table.coeff.resize(static_cast<size_t>(N) + 1);

  std::vector<MultiPoly> q = f.denominator().coefficients_in(var::z);
  std::vector<MultiPoly> p = f.numerator().coefficients_in(var::z);
  const MultiPoly& q0 = q[0];
  Rat c0 = q0.constant_term();
  if (c0 == 0)
    throw MathError(MathError::Kind::SingularAtZero,
                    "denominator constant term not invertible at z=0");

  bool q0_constant = q0.is_constant();
  std::optional<unsigned> cap = options.mark_degree_cap;
  if (!q0_constant && !cap) cap = static_cast<unsigned>(N);

  auto truncate = [&](MultiPoly& m) {
    if (cap && m.truncate_marks(*cap)) table.truncated = true;
  };

  // Truncated inverse of q0 in the mark variables: q0 = c0 (1 - s).
  MultiPoly q0_inv;
  if (!q0_constant) {
    table.truncated = true;
    MultiPoly s = (MultiPoly::constant(c0) - q0) * (1 / c0);
    MultiPoly power = MultiPoly::constant(1);
    q0_inv = MultiPoly::constant(1);
    while (true) {
      power *= s;
      truncate(power);
      if (power.is_zero()) break;
      q0_inv += power;
    }
    q0_inv *= 1 / c0;
  }

  for (int n = 0; n <= N; ++n) {
    MultiPoly rhs = (static_cast<size_t>(n) < p.size()) ? p[static_cast<size_t>(n)]
                                                        : MultiPoly();
    for (size_t i = 1; i < q.size() && i <= static_cast<size_t>(n); ++i)
      rhs -= q[i] * table.coeff[static_cast<size_t>(n) - i];
    if (q0_constant) {
      rhs *= 1 / c0;
    } else {
      rhs *= q0_inv;
    }
    truncate(rhs);
    table.coeff[static_cast<size_t>(n)] = std::move(rhs);
  }
  return table;
}

RFMatrix rf_identity(int n) {
  RFMatrix id(static_cast<size_t>(n),
              std::vector<RationalFunction>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    id[static_cast<size_t>(i)][static_cast<size_t>(i)] = RationalFunction::one();
  return id;
}

PolyLinearSolution poly_matrix_solve_common(PolyMatrix a, PolyMatrix b) {
  const size_t n = a.size();
  const size_t m = b.empty() ? 0 : b[0].size();
  MultiPoly prev = MultiPoly::constant(1);
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n)
        throw MathError(MathError::Kind::SingularMatrix, "singular matrix");
      std::swap(a[k], a[swap_row]);
      std::swap(b[k], b[swap_row]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      bool zero_ik = a[i][k].is_zero();
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly value = a[k][k] * a[i][j];
        if (!zero_ik) value -= a[i][k] * a[k][j];
        a[i][j] = value.exact_div(prev);
      }
      for (size_t j = 0; j < m; ++j) {
        MultiPoly value = a[k][k] * b[i][j];
        if (!zero_ik) value -= a[i][k] * b[k][j];
        b[i][j] = value.exact_div(prev);
      }
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  // After forward elimination the last pivot is det(A) up to the row-swap
  // sign, which cancels against the swapped B. Cramer: x_i det is a
  // polynomial, so each pivot division below is exact.
  PolyLinearSolution sol;
  sol.den = n == 0 ? MultiPoly::constant(1) : a[n - 1][n - 1];
  sol.num.assign(n, std::vector<MultiPoly>(m));
  for (size_t i = n; i-- > 0;) {
    for (size_t j = 0; j < m; ++j) {
      MultiPoly acc = b[i][j] * sol.den;
      for (size_t l = i + 1; l < n; ++l)
        if (!a[i][l].is_zero()) acc -= a[i][l] * sol.num[l][j];
      sol.num[i][j] = acc.exact_div(a[i][i]);
    }
  }
  return sol;
}

RFMatrix poly_matrix_solve(PolyMatrix a, PolyMatrix b) {
  PolyLinearSolution sol = poly_matrix_solve_common(std::move(a), std::move(b));
  const size_t n = sol.num.size();
  const size_t m = n == 0 ? 0 : sol.num[0].size();
  RFMatrix x(n, std::vector<RationalFunction>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      x[i][j] = RationalFunction(sol.num[i][j], sol.den);
  return x;
}

MultiPoly poly_determinant(PolyMatrix a) {
  const size_t n = a.size();
  MultiPoly prev = MultiPoly::constant(1);
  bool negate = false;
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly value = a[k][k] * a[i][j];
        if (!a[i][k].is_zero()) value -= a[i][k] * a[k][j];
        a[i][j] = value.exact_div(prev);
      }
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  MultiPoly det = n == 0 ? MultiPoly::constant(1) : a[n - 1][n - 1];
  return negate ? -det : det;
}

PolyMatrix poly_adjugate(const PolyMatrix& a) {
  const size_t n = a.size();
  PolyMatrix adj(n, std::vector<MultiPoly>(n));
  if (n == 1) {
    adj[0][0] = MultiPoly::constant(1);
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, std::vector<MultiPoly>(n - 1));
      for (size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[mr][mc++] = a[r][c];
        }
        ++mr;
      }
      MultiPoly cof = poly_determinant(std::move(minor));
      adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix out(n, std::vector<MultiPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

RFMatrix rf_matrix_solve(const RFMatrix& m, const RFMatrix& b) {
  const size_t n = m.size();
  if (b.size() != n)
    throw MathError(MathError::Kind::Internal, "dimension mismatch");
  PolyMatrix a_poly(n), b_poly(n);
  for (size_t i = 0; i < n; ++i) {
    // Row i of [I - M | B]; clear denominators by the product of the
    // distinct denominator polynomials of the row.
    std::vector<RationalFunction> row(n);
    for (size_t j = 0; j < n; ++j) {
      row[j] = (i == j ? RationalFunction::one() : RationalFunction()) - m[i][j];
    }
    std::vector<MultiPoly> dens;
    auto note = [&](const MultiPoly& d) {
      if (d.is_constant()) return;
      for (const auto& seen : dens)
        if (seen == d) return;
      dens.push_back(d);
    };
    for (const auto& e : row) note(e.denominator());
    for (const auto& e : b[i]) note(e.denominator());
    MultiPoly scale = MultiPoly::constant(1);
    for (const auto& d : dens) scale *= d;
    a_poly[i].resize(n);
    b_poly[i].resize(b[i].size());
    for (size_t j = 0; j < n; ++j) {
      MultiPoly cleared = (scale * row[j].numerator()).exact_div(row[j].denominator());
      a_poly[i][j] = std::move(cleared);
    }
    for (size_t j = 0; j < b[i].size(); ++j)
      b_poly[i][j] = (scale * b[i][j].numerator()).exact_div(b[i][j].denominator());
  }
  return poly_matrix_solve(std::move(a_poly), std::move(b_poly));
}

RFMatrix rf_matrix_mul(const RFMatrix& a, const RFMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RFMatrix out(n, std::vector<RationalFunction>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      RationalFunction acc;
      for (size_t l = 0; l < k; ++l) acc += a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  return out;
}

}  // namespace clumpstat
