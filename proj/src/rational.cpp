#include "clumpstat/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace clumpstat {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw std::invalid_argument("bad rational: " + text);
    Rat q(s);
    q.canonicalize();
    return q;
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw std::invalid_argument("bad rational: " + text);
  Rat q(num + "/" + den);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_decimal(const Rat& q, int digits) {
  mpf_class f(q, 256);
  mp_exp_t exp;
  std::string mant = f.get_str(exp, 10, digits);
  if (mant.empty() || mant == "-") return "0";
  bool neg = mant[0] == '-';
  if (neg) mant.erase(mant.begin());
  // Scientific normalization: mant = d1 d2 ... with value 0.d1d2... * 10^exp.
  std::string out;
  if (exp >= 1 && exp <= digits) {
    out = mant.substr(0, static_cast<size_t>(exp));
    while (out.size() < static_cast<size_t>(exp)) out += '0';
    std::string frac = mant.size() > static_cast<size_t>(exp)
                           ? mant.substr(static_cast<size_t>(exp))
                           : "";
    if (!frac.empty()) out += "." + frac;
  } else if (exp <= 0 && exp > -4) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace clumpstat
