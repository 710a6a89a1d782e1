#pragma once

#include "latzeta/factored.hpp"

namespace latzeta::testing {

struct Term {
  long c;
  long eq;
  long et;
};

inline LaurentPoly lp(std::initializer_list<Term> terms) {
  LaurentPoly p;
  for (const auto& t : terms) p.add_term({t.eq, t.et}, t.c);
  return p;
}

inline FactoredRational fr(std::initializer_list<Term> num,
                           std::initializer_list<std::pair<long, long>> den) {
  return FactoredRational::make(lp(num), std::vector<std::pair<long, long>>(den));
}

}  // namespace latzeta::testing
