#include "latzeta/weyl.hpp"

#include <algorithm>
#include <map>

namespace latzeta {

CartanType parse_cartan_type(const std::string& s) {
  if (s == "A") return CartanType::A;
  if (s == "B") return CartanType::B;
  if (s == "C") return CartanType::C;
  if (s == "D") return CartanType::D;
  throw schema_error("root system: unsupported type " + s);
}

namespace {

IVec unit(int n, int i) {
  IVec e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

RootSystem build_root_system(CartanType type, int l) {
  if (l < 1 || (type == CartanType::D && l < 2))
    throw schema_error("root system: rank out of range");
  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  rs.ambient = (type == CartanType::A) ? l + 1 : l;
  const int n = rs.ambient;
  auto e = [&](int i) { return unit(n, i); };
  switch (type) {
    case CartanType::A:
      for (int i = 0; i < l; ++i) rs.simple_roots.push_back(sub(e(i), e(i + 1)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rs.positive_roots.push_back(sub(e(i), e(j)));
      break;
    case CartanType::B:
      for (int i = 0; i + 1 < l; ++i) rs.simple_roots.push_back(sub(e(i), e(i + 1)));
      rs.simple_roots.push_back(e(l - 1));
      for (int i = 0; i < l; ++i) rs.positive_roots.push_back(e(i));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(sub(e(i), e(j)));
          rs.positive_roots.push_back(add(e(i), e(j)));
        }
      break;
    case CartanType::C:
      for (int i = 0; i + 1 < l; ++i) rs.simple_roots.push_back(sub(e(i), e(i + 1)));
      rs.simple_roots.push_back(add(e(l - 1), e(l - 1)));
      for (int i = 0; i < l; ++i) rs.positive_roots.push_back(add(e(i), e(i)));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(sub(e(i), e(j)));
          rs.positive_roots.push_back(add(e(i), e(j)));
        }
      break;
    case CartanType::D:
      for (int i = 0; i + 1 < l; ++i) rs.simple_roots.push_back(sub(e(i), e(i + 1)));
      rs.simple_roots.push_back(add(e(l - 2), e(l - 1)));
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(sub(e(i), e(j)));
          rs.positive_roots.push_back(add(e(i), e(j)));
        }
      break;
  }
  return rs;
}

std::vector<IVec> reflection_matrix(const IVec& root) {
  const int n = (int)root.size();
  long norm2 = dot(root, root);
  if (norm2 == 0) throw std::invalid_argument("reflection: zero root");
  std::vector<IVec> m(n, IVec(n, 0));
  for (int j = 0; j < n; ++j) {
    // Column j: e_j - (2 root_j / (root,root)) root, which must be integral.
    for (int i = 0; i < n; ++i) {
      long num = 2 * root[j] * root[i];
      if (num % norm2 != 0) throw std::invalid_argument("reflection: non-integral matrix");
      m[i][j] = (i == j ? 1 : 0) - num / norm2;
    }
  }
  return m;
}

IVec act(const std::vector<IVec>& matrix, const IVec& v) {
  IVec r(matrix.size(), 0);
  for (size_t i = 0; i < matrix.size(); ++i) r[i] = dot(matrix[i], v);
  return r;
}

namespace {

std::vector<IVec> mat_mul(const std::vector<IVec>& a, const std::vector<IVec>& b) {
  size_t n = a.size();
  std::vector<IVec> c(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

RootSystem RootSystem::from_simple_roots(std::vector<IVec> simple) {
  if (simple.empty()) throw schema_error("root system: no simple roots");
  const int n = (int)simple[0].size();
  for (const auto& a : simple)
    if ((int)a.size() != n || is_zero(a)) throw schema_error("root system: bad simple root");
  if (latzeta::rank(to_qmat(simple)) != (int)simple.size())
    throw schema_error("root system: dependent simple roots");

  std::vector<std::vector<IVec>> refl;
  for (const auto& a : simple) refl.push_back(reflection_matrix(a));

  std::set<IVec> roots(simple.begin(), simple.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> next;
    for (const auto& r : roots)
      for (const auto& s : refl) {
        IVec im = act(s, r);
        if (!roots.count(im)) next.push_back(im);
      }
    for (auto& r : next) grew |= roots.insert(std::move(r)).second;
    if (roots.size() > 10000) throw schema_error("root system: closure too large");
  }

  // Positive roots: nonnegative coordinates in the simple-root basis.
  QMat cols(n, QVec(simple.size()));
  for (size_t i = 0; i < simple.size(); ++i)
    for (int x = 0; x < n; ++x) cols[x][i] = BigRational(simple[i][x]);
  RootSystem rs;
  rs.type = CartanType::A;
  rs.rank = (int)simple.size();
  rs.ambient = n;
  rs.simple_roots = std::move(simple);
  for (const auto& r : roots) {
    auto coords = solve_full_col_rank(cols, to_qvec(r));
    if (!coords) throw schema_error("root system: root outside the simple span");
    bool pos = true;
    for (const auto& c : *coords)
      if (c < 0) { pos = false; break; }
    if (pos) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  return rs;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, size_t bound) {
  std::vector<std::vector<IVec>> gens;
  for (const auto& a : rs.simple_roots) gens.push_back(reflection_matrix(a));

  const int n = rs.ambient;
  WeylElement id;
  id.matrix.assign(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) id.matrix[i][i] = 1;

  std::vector<WeylElement> out{id};
  std::map<std::vector<IVec>, int> seen{{id.matrix, 0}};
  size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    size_t frontier_end = out.size();
    for (size_t idx = frontier_begin; idx < frontier_end; ++idx) {
      for (size_t g = 0; g < gens.size(); ++g) {
        WeylElement next;
        next.matrix = mat_mul(out[idx].matrix, gens[g]);
        if (seen.count(next.matrix)) continue;
        next.length = out[idx].length + 1;
        next.word = out[idx].word;
        next.word.push_back((int)g);
        if (out.size() >= bound) throw hypothesis_error("weyl: group exceeds the bound");
        seen.emplace(next.matrix, (int)out.size());
        out.push_back(std::move(next));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

const WeylElement& longest_element(const std::vector<WeylElement>& w) {
  if (w.empty()) throw std::invalid_argument("weyl: empty group");
  const WeylElement* best = &w[0];
  int count = 1;
  for (const auto& x : w) {
    if (x.length > best->length) {
      best = &x;
      count = 1;
    } else if (&x != best && x.length == best->length) {
      ++count;
    }
  }
  if (best->length > 0 && count != 1)
    throw std::logic_error("weyl: longest element not unique");
  return *best;
}

std::set<int> descent_set(const RootSystem& rs, const WeylElement& w) {
  std::set<IVec> image;
  for (const auto& a : rs.positive_roots) image.insert(act(w.matrix, negate(a)));
  std::set<int> out;
  for (size_t i = 0; i < rs.simple_roots.size(); ++i)
    if (image.count(rs.simple_roots[i])) out.insert((int)i);
  return out;
}

}  // namespace latzeta
