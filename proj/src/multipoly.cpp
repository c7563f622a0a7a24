#include "clumpstat/multipoly.hpp"

#include <sstream>

#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace var {
std::string name(int id) {
  switch (id) {
    case z: return "z";
    case x: return "x";
    case t: return "t";
    case u: return "u";
    case v: return "v";
    default: return "x" + std::to_string(id - 4);
  }
}
}  // namespace var

MultiPoly MultiPoly::constant(Rat c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(int v, unsigned exp) {
  return monomial(Rat(1), v, exp);
}

MultiPoly MultiPoly::monomial(Rat c, int v, unsigned exp) {
  MultiPoly p;
  if (c == 0) return p;
  Monomial m;
  m.exp[static_cast<size_t>(v)] = static_cast<uint16_t>(exp);
  p.terms_.emplace(m, std::move(c));
  return p;
}

MultiPoly MultiPoly::from_term(Rat c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

Rat MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::as_constant() const {
  if (!is_constant())
    throw MathError(MathError::Kind::Internal, "polynomial is not constant");
  return constant_term();
}

unsigned MultiPoly::degree(int v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<unsigned>(m.exp[static_cast<size_t>(v)]));
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  *this = *this * c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int v) const {
  std::vector<MultiPoly> out(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned e = rest.exp[static_cast<size_t>(v)];
    rest.exp[static_cast<size_t>(v)] = 0;
    out[e].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient_of(int v, unsigned k) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exp[static_cast<size_t>(v)] != k) continue;
    Monomial rest = m;
    rest.exp[static_cast<size_t>(v)] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(int v, const MultiPoly& replacement) const {
  if (!uses(v)) return *this;
  std::vector<MultiPoly> coeffs = coefficients_in(v);
  MultiPoly result;
  for (size_t k = coeffs.size(); k-- > 0;) {
    result = result * replacement + coeffs[k];
  }
  return result;
}

MultiPoly MultiPoly::set_var(int v, const Rat& value) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned e = rest.exp[static_cast<size_t>(v)];
    rest.exp[static_cast<size_t>(v)] = 0;
    if (e == 0) {
      out.add_term(rest, c);
    } else if (value != 0) {
      Rat scaled = c;
      for (unsigned i = 0; i < e; ++i) scaled *= value;
      out.add_term(rest, scaled);
    }
  }
  return out;
}

MultiPoly MultiPoly::derivative(int v) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp[static_cast<size_t>(v)];
    if (e == 0) continue;
    Monomial d = m;
    d.exp[static_cast<size_t>(v)] = static_cast<uint16_t>(e - 1);
    out.add_term(d, c * Rat(static_cast<long>(e)));
  }
  return out;
}

Rat MultiPoly::eval(const std::array<Rat, var::kCount>& point) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < var::kCount; ++v)
      for (unsigned i = 0; i < m.exp[static_cast<size_t>(v)]; ++i)
        term *= point[static_cast<size_t>(v)];
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero())
    throw MathError(MathError::Kind::DivisionByZero, "polynomial division by zero");
  MultiPoly rem = *this, quot;
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto rlead = *rem.terms_.rbegin();
    if (!dlead.first.divides(rlead.first))
      throw MathError(MathError::Kind::Internal, "polynomial division not exact");
    Monomial qm = rlead.first / dlead.first;
    Rat qc = rlead.second / dlead.second;
    quot.terms_.emplace(qm, qc);
    rem -= MultiPoly::from_term(qc, qm) * d;
  }
  return quot;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial content = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < var::kCount; ++v)
      content.exp[static_cast<size_t>(v)] =
          std::min(content.exp[static_cast<size_t>(v)], m.exp[static_cast<size_t>(v)]);
  return content;
}

MultiPoly MultiPoly::shift_down(const Monomial& m) const {
  MultiPoly out;
  for (const auto& [mono, c] : terms_) {
    if (!m.divides(mono))
      throw MathError(MathError::Kind::Internal, "monomial shift not exact");
    out.terms_.emplace(mono / m, c);
  }
  return out;
}

bool MultiPoly::truncate_marks(unsigned cap) {
  bool dropped = false;
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool over = false;
    for (int v = 1; v < var::kCount; ++v)
      if (it->first.exp[static_cast<size_t>(v)] > cap) over = true;
    if (over) {
      it = terms_.erase(it);
      dropped = true;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading (highest glex) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < var::kCount; ++v) {
      unsigned e = m.exp[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var::name(v);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << rat_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << rat_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace clumpstat
