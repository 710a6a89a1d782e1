#pragma once

#include <set>

#include "latzeta/linalg.hpp"

namespace latzeta {

enum class CartanType { A, B, C, D };

CartanType parse_cartan_type(const std::string& s);

/// Roots in the standard ambient coordinates (dimension l+1 for type A,
/// l otherwise), so every reflection is an integer matrix.
struct RootSystem {
  CartanType type = CartanType::A;
  int rank = 0;
  int ambient = 0;
  std::vector<IVec> simple_roots;
  std::vector<IVec> positive_roots;

  /// Root system with the given simple roots, positive roots closed under
  /// reflection. Used for explicit simple-root input.
  static RootSystem from_simple_roots(std::vector<IVec> simple);
};

RootSystem build_root_system(CartanType type, int l);

struct WeylElement {
  std::vector<IVec> matrix;  // rows, acting on column vectors
  int length = 0;
  std::vector<int> word;     // reduced word of 0-based simple-reflection indices
};

/// Reflection matrix of a root: x -> x - <x, a*> a with a* = 2a/(a,a).
std::vector<IVec> reflection_matrix(const IVec& root);

/// The whole group by breadth-first closure under the simple reflections.
/// Lengths are BFS depths. Throws when the group exceeds the bound.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t bound = 10000);

const WeylElement& longest_element(const std::vector<WeylElement>& w);

IVec act(const std::vector<IVec>& matrix, const IVec& v);

/// I_w = { i : alpha_i in w(Phi^-) }, 0-based.
std::set<int> descent_set(const RootSystem& rs, const WeylElement& w);

}  // namespace latzeta
