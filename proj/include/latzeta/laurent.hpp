#pragma once

#include <map>
#include <optional>
#include <string>

#include "latzeta/core.hpp"

namespace latzeta {

// Exponent pair of a monomial q^e_q t^e_t, with t standing for q^{-s}.
struct Exp2 {
  long q = 0;
  long t = 0;

  friend bool operator==(const Exp2& a, const Exp2& b) {
    return a.q == b.q && a.t == b.t;
  }
  // Canonical term order: lexicographic by (e_t, e_q).
  friend bool operator<(const Exp2& a, const Exp2& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.q < b.q;
  }
};

/// Bivariate Laurent polynomial in (q, t) with exact rational coefficients.
/// No zero coefficients are stored; terms are kept in the canonical
/// (e_t, e_q) order used by the serialization.
class LaurentPoly {
 public:
  using TermMap = std::map<Exp2, BigRational>;

  LaurentPoly() = default;

  static LaurentPoly one() { return monomial(1, 0, 0); }
  static LaurentPoly monomial(const BigRational& c, long eq, long et);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(Exp2 e, const BigRational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  /// Multiplication by c * q^eq t^et.
  LaurentPoly shifted(const BigRational& c, long eq, long et) const;

  /// The substitution q -> q^{-1}, t -> t^{-1}.
  LaurentPoly inverted() const;

  /// Exact division by (1 - q^a t^b), (a, b) != (0, 0). Returns the quotient
  /// when the factor divides exactly, nothing otherwise.
  std::optional<LaurentPoly> divided_by_cyclo(long a, long b) const;

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.terms_ == y.terms_;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace latzeta
