#include "latzeta/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace latzeta {

IVec primitive(const IVec& a) {
  BigInt g = 0;
  for (long x : a) g = gcd(g, BigInt(x));
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IVec r(a.size());
  long gl = g.get_si();
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / gl;
  return r;
}

long to_ll(const BigRational& x) {
  BigRational c = x;
  c.canonicalize();
  if (c.get_den() != 1) throw std::domain_error("to_ll: not an integer");
  if (!c.get_num().fits_slong_p()) throw std::overflow_error("to_ll: overflow");
  return c.get_num().get_si();
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, long eq, long et) {
  LaurentPoly p;
  p.add_term({eq, et}, c);
  return p;
}

void LaurentPoly::add_term(Exp2 e, const BigRational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1.q + e2.q, e1.t + e2.t}, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(const BigRational& c, long eq, long et) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(Exp2{e.q + eq, e.t + et}, k * c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exp2{-e.q, -e.t}, c);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_by_cyclo(long a, long b) const {
  if (a == 0 && b == 0) throw std::invalid_argument("divided_by_cyclo: zero factor");
  if (is_zero()) return LaurentPoly();

  // Weight functional with w(a, b) > 0; the constant term of (1 - q^a t^b)
  // is the unique minimal term under (w, e_t, e_q), which makes the
  // min-term division below well-founded.
  auto w = [&](const Exp2& e) { return a * e.q + b * e.t; };
  auto less = [&](const Exp2& x, const Exp2& y) {
    long wx = w(x), wy = w(y);
    if (wx != wy) return wx < wy;
    return x < y;
  };

  long wmax = w(terms_.begin()->first);
  for (const auto& [e, c] : terms_) wmax = std::max(wmax, w(e));
  const long bound = wmax - (a * a + b * b);  // max weight of any quotient term

  std::map<Exp2, BigRational, decltype(less)> rem(less);
  for (const auto& [e, c] : terms_) rem.emplace(e, c);

  LaurentPoly quot;
  while (!rem.empty()) {
    auto [e, c] = *rem.begin();
    if (w(e) > bound) return std::nullopt;
    quot.add_term(e, c);
    rem.erase(rem.begin());
    Exp2 up{e.q + a, e.t + b};
    auto it = rem.find(up);
    if (it == rem.end()) {
      rem.emplace(up, c);
    } else {
      it->second += c;
      if (it->second == 0) rem.erase(it);
    }
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (ac == 1);
    bool has_var = (e.q != 0 || e.t != 0);
    if (!unit || !has_var) os << ac.get_str();
    if (!unit && has_var) os << "*";
    if (e.q != 0) {
      os << "q";
      if (e.q != 1) os << "^" << e.q;
      if (e.t != 0) os << "*";
    }
    if (e.t != 0) {
      os << "t";
      if (e.t != 1) os << "^" << e.t;
    }
  }
  return os.str();
}

}  // namespace latzeta
