#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace latzeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Integer vectors for hyperplane normals, rays, lattice points, weights.
// Entries stay small at desk scale; exact linear algebra is done in mpq.
using IVec = std::vector<long>;

/// Malformed input document or value.
class schema_error : public std::runtime_error {
 public:
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis required by the requested operation does not hold.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

inline long dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec negate(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IVec& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

/// Divides by the gcd of the entries. Throws on the zero vector.
IVec primitive(const IVec& a);

/// Converts an exact rational to long, throwing if it is not an integer
/// or does not fit.
long to_ll(const BigRational& x);

}  // namespace latzeta
