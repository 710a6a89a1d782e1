#pragma once

#include "latzeta/genfun.hpp"

namespace latzeta {

/// t-series truncated at degree N, one Laurent polynomial in q per t-degree.
struct TruncatedSeries {
  long order = 0;
  std::map<long, std::map<long, BigRational>> coeff;  // t-degree -> (q-exp -> c)

  void add(long tdeg, long qexp, const BigRational& c);
  bool operator==(const TruncatedSeries& o) const = default;
  std::string to_string() const;
};

struct SeriesMismatch {
  bool equal = true;
  long degree = 0;  // first mismatching t-degree when not equal
};

/// Exact comparison; throws on order mismatch.
SeriesMismatch compare(const TruncatedSeries& a, const TruncatedSeries& b);

/// Direct evaluation of the defining sum over C_I: enumerates every lattice
/// point of the region with B.e <= N and adds q^{(A+gamma(F_e)).e} t^{B.e}.
TruncatedSeries lattice_sum_truncated(const CellComplex& cx, const std::set<int>& I,
                                      const GenFunSpec& spec, long N);

/// Geometric-series expansion of a factored rational to t-degree N. Every
/// denominator factor must have t-exponent b >= 1.
TruncatedSeries series_expand(const FactoredRational& x, long N);

}  // namespace latzeta
