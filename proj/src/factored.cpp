#include "latzeta/factored.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latzeta {

LaurentPoly CycloFactor::poly() const {
  LaurentPoly p = LaurentPoly::one();
  p.add_term({a, b}, -1);
  return p;
}

void FactoredRational::fix() {
  if (num_.is_zero()) den_.clear();
  std::sort(den_.begin(), den_.end());
}

FactoredRational FactoredRational::from_poly(LaurentPoly num) {
  FactoredRational r;
  r.num_ = std::move(num);
  return r;
}

FactoredRational FactoredRational::make(
    LaurentPoly num, const std::vector<std::pair<long, long>>& raw_factors) {
  FactoredRational r;
  r.num_ = std::move(num);
  for (auto [a, b] : raw_factors) {
    if (a == 0 && b == 0) throw std::invalid_argument("FactoredRational: (1 - 1) factor");
    CycloFactor f{a, b};
    if (!f.canonical()) {
      // 1/(1 - x^{-1}) = (-x)/(1 - x) with x = q^{-a} t^{-b} canonical.
      f = {-a, -b};
      r.num_ = r.num_.shifted(-1, f.a, f.b);
    }
    r.den_.push_back(f);
  }
  r.fix();
  return r;
}

LaurentPoly FactoredRational::denominator_expanded() const {
  LaurentPoly d = LaurentPoly::one();
  for (const auto& f : den_) d = d * f.poly();
  return d;
}

namespace {

LaurentPoly expand_factors(const std::vector<CycloFactor>& fs) {
  LaurentPoly d = LaurentPoly::one();
  for (const auto& f : fs) d = d * f.poly();
  return d;
}

// Multiset difference a \ b over sorted factor vectors.
std::vector<CycloFactor> factor_diff(const std::vector<CycloFactor>& a,
                                     const std::vector<CycloFactor>& b) {
  std::vector<CycloFactor> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FactoredRational add(const FactoredRational& x, const FactoredRational& y) {
  // Least common denominator over the factor multisets.
  std::vector<CycloFactor> lcd;
  std::set_union(x.den_.begin(), x.den_.end(), y.den_.begin(), y.den_.end(),
                 std::back_inserter(lcd));
  FactoredRational r;
  r.num_ = x.num_ * expand_factors(factor_diff(lcd, x.den_)) +
           y.num_ * expand_factors(factor_diff(lcd, y.den_));
  r.den_ = lcd;
  r.fix();
  return r;
}

FactoredRational mul(const FactoredRational& x, const FactoredRational& y) {
  FactoredRational r;
  r.num_ = x.num_ * y.num_;
  r.den_ = x.den_;
  r.den_.insert(r.den_.end(), y.den_.begin(), y.den_.end());
  r.fix();
  return r;
}

FactoredRational normalize(const FactoredRational& x) {
  FactoredRational r = x;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (size_t i = 0; i < r.den_.size(); ++i) {
      auto q = r.num_.divided_by_cyclo(r.den_[i].a, r.den_[i].b);
      if (q) {
        r.num_ = std::move(*q);
        r.den_.erase(r.den_.begin() + i);
        progressed = true;
        break;
      }
    }
  }
  r.fix();
  return r;
}

bool eq_rational(const FactoredRational& x, const FactoredRational& y) {
  // Shared factors cancel before cross multiplication.
  std::vector<CycloFactor> xonly = factor_diff(x.denominator(), y.denominator());
  std::vector<CycloFactor> yonly = factor_diff(y.denominator(), x.denominator());
  return x.numerator() * expand_factors(yonly) == y.numerator() * expand_factors(xonly);
}

FactoredRational invert_variables(const FactoredRational& x) {
  std::vector<std::pair<long, long>> raw;
  raw.reserve(x.denominator().size());
  for (const auto& f : x.denominator()) raw.emplace_back(-f.a, -f.b);
  return FactoredRational::make(x.numerator().inverted(), raw);
}

std::optional<MonomialRatio> monomial_ratio_test(const FactoredRational& x,
                                                 const FactoredRational& y) {
  if (y.is_zero()) throw std::invalid_argument("monomial_ratio_test: y is zero");
  std::vector<CycloFactor> xonly = factor_diff(x.denominator(), y.denominator());
  std::vector<CycloFactor> yonly = factor_diff(y.denominator(), x.denominator());
  LaurentPoly p = x.numerator() * expand_factors(yonly);
  LaurentPoly q = y.numerator() * expand_factors(xonly);
  if (p.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  const auto& [pe, pc] = *p.terms().begin();
  const auto& [qe, qc] = *q.terms().begin();
  BigRational c = pc / qc;
  if (c != 1 && c != -1) return std::nullopt;
  long da = pe.q - qe.q, db = pe.t - qe.t;
  if (!(p == q.shifted(c, da, db))) return std::nullopt;
  return MonomialRatio{c == 1 ? 1 : -1, da, db};
}

FactoredRational specialize_monomials(const MultiGenFun& g, const IVec& C, const IVec& B) {
  if ((int)C.size() != g.nvars || (int)B.size() != g.nvars)
    throw std::invalid_argument("specialize_monomials: vector length mismatch");
  std::vector<std::pair<long, long>> raw;
  for (const auto& u : g.den) {
    long bu = dot(B, IVec(u.begin(), u.end()));
    if (bu <= 0)
      throw std::domain_error("specialize_monomials: denominator factor with B.u <= 0");
    raw.emplace_back(dot(C, IVec(u.begin(), u.end())), bu);
  }
  LaurentPoly num;
  for (const auto& [e, c] : g.num) {
    IVec ev(e.begin(), e.end());
    num.add_term({dot(C, ev), dot(B, ev)}, c);
  }
  return FactoredRational::make(std::move(num), raw);
}

std::string FactoredRational::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (!den_.empty()) {
    os << "/(";
    for (size_t i = 0; i < den_.size(); ++i) {
      if (i) os << "*";
      os << "(1 - " << LaurentPoly::monomial(1, den_[i].a, den_[i].b).to_string() << ")";
    }
    os << ")";
  }
  return os.str();
}

namespace {

std::string qs_exponent(long a, long b) {
  // q^a t^b with t = q^{-s}: exponent a - b s.
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else {
    if (a != 0) os << a;
    long bs = -b;
    if (bs > 0 && a != 0) os << "+";
    if (bs == -1)
      os << "-";
    else if (bs != 1)
      os << bs;
    os << "s";
  }
  return os.str();
}

}  // namespace

std::string FactoredRational::to_string_qs() const {
  std::ostringstream os;
  if (num_.is_zero()) return "0";
  os << "(";
  bool first = true;
  for (const auto& [e, c] : num_.terms()) {
    BigRational ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e.q == 0 && e.t == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "q^(" << qs_exponent(e.q, e.t) << ")";
    }
  }
  os << ")";
  if (!den_.empty()) {
    os << " / (";
    for (size_t i = 0; i < den_.size(); ++i) {
      if (i) os << " * ";
      os << "(1 - q^(" << qs_exponent(den_[i].a, den_[i].b) << "))";
    }
    os << ")";
  }
  return os.str();
}

std::string MultiGenFun::to_string() const {
  auto mono = [&](const std::vector<long>& e) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < (int)e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << "X" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
    if (!any) os << "1";
    return os.str();
  };
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [e, c] : num) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigRational ac = abs(c);
    if (ac != 1) os << ac.get_str() << "*";
    os << mono(e);
  }
  os << ")";
  if (!den.empty()) {
    os << " / (";
    for (size_t i = 0; i < den.size(); ++i) {
      if (i) os << "*";
      os << "(1 - " << mono(den[i]) << ")";
    }
    os << ")";
  }
  return os.str();
}

}  // namespace latzeta
