#include <doctest.h>

#include <algorithm>
#include <map>

#include "latzeta/weyl.hpp"

using namespace latzeta;

namespace {

// Poincare polynomial coefficients prod_i (1 + q + ... + q^{d_i - 1}).
std::map<int, long> poincare(const std::vector<int>& degrees) {
  std::map<int, long> p{{0, 1}};
  for (int d : degrees) {
    std::map<int, long> next;
    for (const auto& [e, c] : p)
      for (int k = 0; k < d; ++k) next[e + k] += c;
    p = std::move(next);
  }
  return p;
}

std::map<int, long> length_distribution(const std::vector<WeylElement>& w) {
  std::map<int, long> d;
  for (const auto& x : w) d[x.length]++;
  return d;
}

std::vector<int> classical_degrees(CartanType t, int l) {
  std::vector<int> d;
  switch (t) {
    case CartanType::A:
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case CartanType::B:
    case CartanType::C:
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case CartanType::D:
      for (int i = 1; i + 1 <= l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
  }
  return d;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(build_root_system(CartanType::A, 1).positive_roots.size() == 1);
  CHECK(build_root_system(CartanType::A, 2).positive_roots.size() == 3);
  CHECK(build_root_system(CartanType::B, 2).positive_roots.size() == 4);
  CHECK(build_root_system(CartanType::C, 3).positive_roots.size() == 9);
  CHECK(build_root_system(CartanType::D, 4).positive_roots.size() == 12);
  CHECK_THROWS_AS(build_root_system(CartanType::D, 1), schema_error);
  CHECK_THROWS_AS(build_root_system(CartanType::A, 0), schema_error);
}

TEST_CASE("positive roots decompose over the simple roots") {
  for (auto [t, l] : std::vector<std::pair<CartanType, int>>{
           {CartanType::A, 3}, {CartanType::B, 2}, {CartanType::C, 3}, {CartanType::D, 4}}) {
    RootSystem rs = build_root_system(t, l);
    QMat cols(rs.ambient, QVec(rs.rank));
    for (int k = 0; k < rs.rank; ++k)
      for (int x = 0; x < rs.ambient; ++x) cols[x][k] = BigRational(rs.simple_roots[k][x]);
    for (const auto& beta : rs.positive_roots) {
      auto c = solve_full_col_rank(cols, to_qvec(beta));
      REQUIRE(c);
      for (const auto& ck : *c) {
        CHECK(ck >= 0);
        CHECK(ck.get_den() == 1);
      }
    }
  }
}

TEST_CASE("group enumeration") {
  auto a1 = enumerate_weyl(build_root_system(CartanType::A, 1));
  CHECK(a1.size() == 2);
  CHECK(length_distribution(a1) == std::map<int, long>{{0, 1}, {1, 1}});

  auto a2 = enumerate_weyl(build_root_system(CartanType::A, 2));
  CHECK(a2.size() == 6);
  CHECK(length_distribution(a2) == std::map<int, long>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});

  auto b2 = enumerate_weyl(build_root_system(CartanType::B, 2));
  CHECK(b2.size() == 8);
  CHECK(longest_element(b2).length == 4);

  CHECK_THROWS_AS(enumerate_weyl(build_root_system(CartanType::B, 3), 10), hypothesis_error);
}

TEST_CASE("longest element") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  auto w = enumerate_weyl(a2);
  const WeylElement& w0 = longest_element(w);
  CHECK(w0.length == 3);
  // w0 sends the negative roots onto the positive roots.
  std::set<IVec> pos(a2.positive_roots.begin(), a2.positive_roots.end());
  for (const auto& a : a2.positive_roots) CHECK(pos.count(act(w0.matrix, negate(a))));
  // w0^2 = identity.
  for (int x = 0; x < a2.ambient; ++x) {
    IVec e(a2.ambient, 0);
    e[x] = 1;
    CHECK(act(w0.matrix, act(w0.matrix, e)) == e);
  }
}

TEST_CASE("descent sets") {
  RootSystem a2 = build_root_system(CartanType::A, 2);
  auto w = enumerate_weyl(a2);
  CHECK(descent_set(a2, w[0]).empty());
  CHECK(descent_set(a2, longest_element(w)) == std::set<int>{0, 1});
  for (const auto& x : w)
    if (x.length == 1 && x.word == std::vector<int>{0})
      CHECK(descent_set(a2, x) == std::set<int>{0});
}

TEST_CASE("length and descent identities against the longest element") {
  for (auto [t, l] : std::vector<std::pair<CartanType, int>>{
           {CartanType::A, 3}, {CartanType::B, 2}, {CartanType::C, 3}}) {
    RootSystem rs = build_root_system(t, l);
    auto w = enumerate_weyl(rs);
    const WeylElement& w0 = longest_element(w);
    long phi = (long)rs.positive_roots.size();
    std::set<int> full;
    for (int i = 0; i < rs.rank; ++i) full.insert(i);
    for (const auto& x : w) {
      WeylElement xw0;
      xw0.matrix.assign(rs.ambient, IVec(rs.ambient, 0));
      for (int i = 0; i < rs.ambient; ++i)
        for (int j = 0; j < rs.ambient; ++j)
          for (int k = 0; k < rs.ambient; ++k)
            xw0.matrix[i][j] += x.matrix[i][k] * w0.matrix[k][j];
      // lambda(w) from the root-inversion count equals the BFS depth.
      long inv = 0;
      for (const auto& a : rs.positive_roots) {
        IVec im = act(x.matrix, a);
        bool positive = false;
        for (const auto& b : rs.positive_roots)
          if (im == b) positive = true;
        if (!positive) ++inv;
      }
      CHECK(inv == x.length);
      // lambda(w) + lambda(w w0) = |Phi+|.
      long inv2 = 0;
      for (const auto& a : rs.positive_roots) {
        IVec im = act(xw0.matrix, a);
        bool positive = false;
        for (const auto& b : rs.positive_roots)
          if (im == b) positive = true;
        if (!positive) ++inv2;
      }
      CHECK(inv + inv2 == phi);
      // I_{w w0} = [l] \ I_w.
      std::set<int> iw = descent_set(rs, x), iww0 = descent_set(rs, xw0), comp;
      for (int i : full)
        if (!iw.count(i)) comp.insert(i);
      CHECK(iww0 == comp);
    }
  }
}

TEST_CASE("Poincare polynomials") {
  for (auto [t, l] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 1},
                                                             {CartanType::A, 2},
                                                             {CartanType::A, 3},
                                                             {CartanType::B, 2},
                                                             {CartanType::B, 3},
                                                             {CartanType::C, 3},
                                                             {CartanType::D, 4}}) {
    auto w = enumerate_weyl(build_root_system(t, l));
    CHECK(length_distribution(w) == poincare(classical_degrees(t, l)));
  }
}

TEST_CASE("explicit simple roots reproduce the standard construction") {
  RootSystem builtin = build_root_system(CartanType::B, 2);
  RootSystem custom = RootSystem::from_simple_roots(builtin.simple_roots);
  std::vector<IVec> a = builtin.positive_roots, b = custom.positive_roots;
  std::sort(a.begin(), a.end());
  CHECK(a == b);
  CHECK(enumerate_weyl(custom).size() == 8);
}
