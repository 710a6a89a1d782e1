#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latzeta/laurent.hpp"

namespace latzeta {

// Denominator factor (1 - q^a t^b) in canonical orientation:
// b > 0, or b == 0 and a > 0.
struct CycloFactor {
  long a = 0;
  long b = 0;

  bool canonical() const { return b > 0 || (b == 0 && a > 0); }
  LaurentPoly poly() const;  // 1 - q^a t^b

  friend bool operator==(const CycloFactor& x, const CycloFactor& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const CycloFactor& x, const CycloFactor& y) {
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
  }
};

/// A rational function in (q, t) kept in factored form: a Laurent numerator
/// over a multiset of (1 - q^a t^b) factors. Denominators are never expanded
/// except inside equality testing. Zero is the zero numerator with an empty
/// denominator.
class FactoredRational {
 public:
  FactoredRational() = default;  // zero

  static FactoredRational from_poly(LaurentPoly num);
  /// Builds num / prod (1 - q^a t^b) from raw (a, b) pairs, flipping
  /// anti-canonical factors via (1 - x^{-1}) = (-x^{-1})(1 - x) and
  /// absorbing the extracted monomials into the numerator.
  static FactoredRational make(LaurentPoly num,
                               const std::vector<std::pair<long, long>>& raw_factors);
  static FactoredRational one() { return from_poly(LaurentPoly::one()); }
  static FactoredRational q_power(long k) {
    return from_poly(LaurentPoly::monomial(1, k, 0));
  }

  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& numerator() const { return num_; }
  const std::vector<CycloFactor>& denominator() const { return den_; }

  LaurentPoly denominator_expanded() const;
  std::string to_string() const;
  /// Rendering in the variables q and q^{-s} (t printed as q^{-s}).
  std::string to_string_qs() const;

 private:
  LaurentPoly num_;
  std::vector<CycloFactor> den_;  // sorted, with multiplicity

  void fix();
  friend FactoredRational add(const FactoredRational&, const FactoredRational&);
  friend FactoredRational mul(const FactoredRational&, const FactoredRational&);
  friend FactoredRational normalize(const FactoredRational&);
  friend FactoredRational invert_variables(const FactoredRational&);
};

FactoredRational add(const FactoredRational& x, const FactoredRational& y);
FactoredRational mul(const FactoredRational& x, const FactoredRational& y);

/// Cancels every denominator factor that divides the numerator exactly.
FactoredRational normalize(const FactoredRational& x);

/// Equality as rational functions, decided by cross multiplication.
bool eq_rational(const FactoredRational& x, const FactoredRational& y);

/// The simultaneous substitution q -> q^{-1}, t -> t^{-1}.
FactoredRational invert_variables(const FactoredRational& x);

struct MonomialRatio {
  int sign = 1;      // +1 or -1
  long a = 0;   // q-exponent
  long b = 0;   // t-exponent
};

/// Decides whether x = sign * q^a t^b * y and returns the monomial if so.
/// Throws if y is zero.
std::optional<MonomialRatio> monomial_ratio_test(const FactoredRational& x,
                                                 const FactoredRational& y);

/// Multivariate generating function in formal variables X_1..X_m: a finite
/// numerator over factors (1 - X^u). Input side of specialize_monomials.
struct MultiGenFun {
  int nvars = 0;
  std::map<std::vector<long>, BigRational> num;
  std::vector<std::vector<long>> den;

  std::string to_string() const;
};

/// Substitutes X^e -> q^{C.e} t^{B.e}. Throws if some denominator exponent u
/// has B.u <= 0.
FactoredRational specialize_monomials(const MultiGenFun& g, const IVec& C, const IVec& B);

}  // namespace latzeta
