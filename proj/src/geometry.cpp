#include "latzeta/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace latzeta {

Hyperplane::Hyperplane(IVec n) {
  if (is_zero(n)) throw schema_error("hyperplane: zero normal");
  normal = primitive(n);
}

CellComplex::CellComplex(int dim, const std::vector<IVec>& bounding,
                         const std::vector<IVec>& internal)
    : dim_(dim) {
  if (dim < 1) throw schema_error("complex: dimension must be positive");
  auto build = [&](const std::vector<IVec>& in, const char* what) {
    std::vector<Hyperplane> out;
    for (const auto& n : in) {
      if ((int)n.size() != dim) throw schema_error(std::string(what) + ": normal length mismatch");
      Hyperplane h(n);
      for (const auto& prev : out)
        if (prev.normal == h.normal)
          throw schema_error(std::string(what) + ": duplicate normal");
      out.push_back(std::move(h));
    }
    return out;
  };
  bounding_ = build(bounding, "bounding");
  internal_ = build(internal, "internal");
}

std::string SignVector::to_string() const {
  auto ch = [](Sign s) { return s == Sign::Zero ? '0' : (s == Sign::Plus ? '+' : '-'); };
  std::string r;
  for (Sign s : bounding) r += ch(s);
  r += '|';
  for (Sign s : internal) r += ch(s);
  return r;
}

SignVector SignVector::parse(const std::string& s, const CellComplex& cx) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw schema_error("sign vector: missing '|'");
  std::string b = s.substr(0, bar), k = s.substr(bar + 1);
  if (b.size() != cx.bounding().size() || k.size() != cx.internal().size())
    throw schema_error("sign vector: length mismatch");
  SignVector sv;
  for (char c : b) {
    if (c == '0') sv.bounding.push_back(Sign::Zero);
    else if (c == '+') sv.bounding.push_back(Sign::Plus);
    else throw schema_error("sign vector: bounding signs must be 0 or +");
  }
  for (char c : k) {
    if (c == '0') sv.internal.push_back(Sign::Zero);
    else if (c == '+') sv.internal.push_back(Sign::Plus);
    else if (c == '-') sv.internal.push_back(Sign::Minus);
    else throw schema_error("sign vector: bad internal sign");
  }
  return sv;
}

ConeConstraints cone_constraints(const CellComplex& cx) {
  ConeConstraints c;
  for (const auto& h : cx.bounding()) c.ineqs.push_back(h.normal);
  return c;
}

ConeConstraints cell_constraints(const CellComplex& cx, const SignVector& s) {
  ConeConstraints c;
  for (size_t i = 0; i < cx.bounding().size(); ++i) {
    const IVec& n = cx.bounding()[i].normal;
    if (s.bounding[i] == Sign::Zero) c.eqs.push_back(n);
    else c.stricts.push_back(n);
  }
  for (size_t j = 0; j < cx.internal().size(); ++j) {
    const IVec& n = cx.internal()[j].normal;
    if (s.internal[j] == Sign::Zero) c.eqs.push_back(n);
    else if (s.internal[j] == Sign::Plus) c.stricts.push_back(n);
    else c.stricts.push_back(negate(n));
  }
  return c;
}

ConeConstraints closure_constraints(const CellComplex& cx, const SignVector& s) {
  ConeConstraints c = cell_constraints(cx, s);
  c.ineqs.insert(c.ineqs.end(), c.stricts.begin(), c.stricts.end());
  c.stricts.clear();
  return c;
}

namespace {

struct FmConstraint {
  std::vector<BigInt> coeff;
  bool strict = false;
};

void fm_normalize(FmConstraint& c) {
  BigInt g = 0;
  for (const auto& x : c.coeff) g = gcd(g, x);
  if (g > 1)
    for (auto& x : c.coeff) x /= g;
}

}  // namespace

bool feasible(const ConeConstraints& cc, int dim) {
  std::vector<FmConstraint> cons;
  auto push = [&](const IVec& v, bool strict, bool negated) {
    FmConstraint c;
    c.coeff.reserve(dim);
    for (long x : v) c.coeff.emplace_back(negated ? -x : x);
    c.strict = strict;
    cons.push_back(std::move(c));
  };
  for (const auto& v : cc.eqs) {
    push(v, false, false);
    push(v, false, true);
  }
  for (const auto& v : cc.ineqs) push(v, false, false);
  for (const auto& v : cc.stricts) push(v, true, false);

  for (int var = 0; var < dim; ++var) {
    // Homogeneous system: a zero-coefficient strict constraint reads 0 > 0.
    std::vector<FmConstraint> pos, neg, rest;
    for (auto& c : cons) {
      if (c.coeff[var] > 0) pos.push_back(std::move(c));
      else if (c.coeff[var] < 0) neg.push_back(std::move(c));
      else rest.push_back(std::move(c));
    }
    std::map<std::vector<BigInt>, bool> seen;
    for (const auto& p : pos)
      for (const auto& n : neg) {
        FmConstraint c;
        c.coeff.resize(dim);
        for (int j = 0; j < dim; ++j) c.coeff[j] = -n.coeff[var] * p.coeff[j] + p.coeff[var] * n.coeff[j];
        c.strict = p.strict || n.strict;
        fm_normalize(c);
        auto [it, fresh] = seen.emplace(c.coeff, c.strict);
        if (!fresh) it->second = it->second || c.strict;
      }
    cons = std::move(rest);
    for (auto& [v, strict] : seen) cons.push_back({v, strict});
    for (const auto& c : cons) {
      bool zero = true;
      for (const auto& x : c.coeff)
        if (x != 0) { zero = false; break; }
      if (zero && c.strict) return false;
    }
  }
  for (const auto& c : cons)
    if (c.strict) return false;  // all coefficients are zero by now
  return true;
}

bool cell_feasible(const CellComplex& cx, const SignVector& s) {
  return feasible(cell_constraints(cx, s), cx.dim());
}

std::vector<IVec> extreme_rays(const ConeConstraints& c, int dim) {
  if (!c.stricts.empty()) throw std::invalid_argument("extreme_rays: strict constraints");
  std::vector<IVec> all = c.eqs;
  all.insert(all.end(), c.ineqs.begin(), c.ineqs.end());
  if (rank(to_qmat(all)) < dim) throw hypothesis_error("extreme_rays: cone contains a line");
  int eq_rank = rank(to_qmat(c.eqs));
  if (eq_rank == dim) return {};

  auto satisfies = [&](const IVec& v) {
    for (const auto& n : c.ineqs)
      if (dot(n, v) < 0) return false;
    return true;
  };

  std::set<IVec> rays;
  int need = dim - 1 - eq_rank;  // inequality rows needed for an active set of rank dim-1
  int nin = (int)c.ineqs.size();
  std::vector<int> idx(need);
  // Iterate all subsets of c.ineqs of size `need`.
  auto consider = [&](const std::vector<int>& subset) {
    std::vector<IVec> active = c.eqs;
    for (int i : subset) active.push_back(c.ineqs[i]);
    auto ker = kernel(to_qmat(active), dim);
    if (ker.size() != 1) return;
    IVec v = primitive_direction(ker[0]);
    if (satisfies(v)) rays.insert(v);
    else {
      IVec w = negate(v);
      if (satisfies(w)) rays.insert(w);
    }
  };
  if (need == 0) {
    consider({});
  } else if (need <= nin) {
    std::vector<int> sel(need);
    // combinations
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == need) {
        consider(sel);
        return;
      }
      for (int i = start; i <= nin - (need - depth); ++i) {
        sel[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return std::vector<IVec>(rays.begin(), rays.end());
}

bool is_simplicial(const std::vector<IVec>& rays, int dim) {
  return (int)rays.size() == dim;
}

bool is_simple(const std::vector<IVec>& rays, int dim) {
  if (!is_simplicial(rays, dim)) return false;
  // Unimodular on its span iff the fundamental parallelepiped holds a single
  // lattice point (the origin).
  return parallelepiped_points(rays, {}).size() == 1;
}

Sign eval_sign(const IVec& normal, const IVec& point) {
  long d = dot(normal, point);
  return d == 0 ? Sign::Zero : (d > 0 ? Sign::Plus : Sign::Minus);
}

bool point_in_cell(const CellComplex& cx, const SignVector& s, const IVec& point) {
  for (size_t i = 0; i < cx.bounding().size(); ++i)
    if (eval_sign(cx.bounding()[i].normal, point) != s.bounding[i]) return false;
  for (size_t j = 0; j < cx.internal().size(); ++j)
    if (eval_sign(cx.internal()[j].normal, point) != s.internal[j]) return false;
  return true;
}

bool point_in_closure(const CellComplex& cx, const SignVector& s, const IVec& point) {
  for (size_t i = 0; i < cx.bounding().size(); ++i) {
    Sign g = eval_sign(cx.bounding()[i].normal, point);
    if (s.bounding[i] == Sign::Zero ? g != Sign::Zero : g == Sign::Minus) return false;
  }
  for (size_t j = 0; j < cx.internal().size(); ++j) {
    Sign g = eval_sign(cx.internal()[j].normal, point);
    Sign want = s.internal[j];
    if (want == Sign::Zero) {
      if (g != Sign::Zero) return false;
    } else if (g != Sign::Zero && g != want) {
      return false;
    }
  }
  return true;
}

bool point_in_cone(const CellComplex& cx, const IVec& point) {
  for (const auto& h : cx.bounding())
    if (dot(h.normal, point) < 0) return false;
  return true;
}

int classify_point(const CellComplex& cx, const std::vector<Cell>& cells, const IVec& point) {
  if (!point_in_cone(cx, point)) return -1;
  for (size_t i = 0; i < cells.size(); ++i)
    if (point_in_cell(cx, cells[i].signs, point)) return (int)i;
  return -1;
}

std::vector<Cell> enumerate_cells(const CellComplex& cx) {
  const int m = cx.dim();
  {
    ConeConstraints cc = cone_constraints(cx);
    std::vector<IVec> all = cc.ineqs;
    if (rank(to_qmat(all)) < m) throw hypothesis_error("enumerate_cells: cone is not pointed");
  }
  const size_t nb = cx.bounding().size(), nk = cx.internal().size();
  std::vector<Cell> cells;
  SignVector s;
  s.bounding.assign(nb, Sign::Zero);
  s.internal.assign(nk, Sign::Zero);

  std::function<void(size_t)> rec_internal = [&](size_t j) {
    if (j == nk) {
      if (!cell_feasible(cx, s)) return;
      Cell cell;
      cell.signs = s;
      ConeConstraints cc = cell_constraints(cx, s);
      cell.dim = m - rank(to_qmat(cc.eqs));
      cell.rays = extreme_rays(closure_constraints(cx, s), m);
      cells.push_back(std::move(cell));
      return;
    }
    for (Sign v : {Sign::Zero, Sign::Minus, Sign::Plus}) {
      s.internal[j] = v;
      rec_internal(j + 1);
    }
    s.internal[j] = Sign::Zero;
  };
  std::function<void(size_t)> rec_bounding = [&](size_t i) {
    if (i == nb) {
      rec_internal(0);
      return;
    }
    for (Sign v : {Sign::Zero, Sign::Plus}) {
      s.bounding[i] = v;
      rec_bounding(i + 1);
    }
    s.bounding[i] = Sign::Zero;
  };
  rec_bounding(0);
  return cells;
}

bool face_leq(const Cell& f1, const Cell& f2) {
  for (size_t i = 0; i < f1.signs.bounding.size(); ++i) {
    Sign a = f1.signs.bounding[i], b = f2.signs.bounding[i];
    if (a != Sign::Zero && a != b) return false;
  }
  for (size_t j = 0; j < f1.signs.internal.size(); ++j) {
    Sign a = f1.signs.internal[j], b = f2.signs.internal[j];
    if (a != Sign::Zero && a != b) return false;
  }
  return true;
}

std::vector<int> region_cells(const std::vector<Cell>& cells, const std::set<int>& I) {
  std::vector<int> out;
  for (size_t c = 0; c < cells.size(); ++c) {
    bool in = true;
    for (int i : I)
      if (cells[c].signs.bounding[i] != Sign::Plus) { in = false; break; }
    if (in) out.push_back((int)c);
  }
  return out;
}

std::vector<std::vector<IVec>> triangulate(const std::vector<IVec>& rays) {
  if (rays.empty()) return {};
  const int m = (int)rays[0].size();
  const int k = rank(to_qmat(rays));
  if (k == 0) return {};

  // Initial simplex: first maximal independent prefix subset.
  std::vector<int> init;
  std::vector<bool> in_init(rays.size(), false);
  {
    std::vector<IVec> acc;
    for (size_t i = 0; i < rays.size() && (int)init.size() < k; ++i) {
      acc.push_back(rays[i]);
      if (rank(to_qmat(acc)) == (int)acc.size()) {
        init.push_back((int)i);
        in_init[i] = true;
      } else {
        acc.pop_back();
      }
    }
  }
  std::vector<std::vector<int>> simplices{init};
  // Basis of the configuration span, used to express facet normals.
  std::vector<IVec> span_basis;
  for (int i : init) span_basis.push_back(rays[i]);

  auto facet_normal = [&](const std::vector<int>& facet, int apex) -> QVec {
    // n = sum c_j span_basis[j] with n . r = 0 for r in the facet.
    QMat sys;  // (k-1) x k
    for (int fi : facet) {
      QVec row(k);
      for (int j = 0; j < k; ++j) row[j] = BigRational(dot(span_basis[j], rays[fi]));
      sys.push_back(std::move(row));
    }
    auto ker = kernel(sys, k);
    if (ker.size() != 1) throw std::logic_error("triangulate: degenerate facet");
    QVec n(m, BigRational(0));
    for (int j = 0; j < k; ++j)
      for (int x = 0; x < m; ++x) n[x] += ker[0][j] * BigRational(span_basis[j][x]);
    BigRational at_apex = 0;
    for (int x = 0; x < m; ++x) at_apex += n[x] * BigRational(rays[apex][x]);
    if (at_apex == 0) throw std::logic_error("triangulate: apex on facet hyperplane");
    if (at_apex < 0)
      for (auto& v : n) v = -v;
    return n;
  };

  for (size_t p = 0; p < rays.size(); ++p) {
    if (in_init[p]) continue;
    if (k == 1) continue;  // all rays parallel in a pointed 1-dim cone
    // Boundary facets of the current triangulation.
    std::map<std::vector<int>, std::pair<int, int>> count;  // facet -> (count, apex)
    for (const auto& simp : simplices) {
      for (size_t drop = 0; drop < simp.size(); ++drop) {
        std::vector<int> facet;
        for (size_t j = 0; j < simp.size(); ++j)
          if (j != drop) facet.push_back(simp[j]);
        std::sort(facet.begin(), facet.end());
        auto [it, fresh] = count.emplace(facet, std::make_pair(1, simp[drop]));
        if (!fresh) it->second.first++;
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [facet, info] : count) {
      if (info.first != 1) continue;
      QVec n = facet_normal(facet, info.second);
      BigRational at_p = 0;
      for (int x = 0; x < m; ++x) at_p += n[x] * BigRational(rays[p][x]);
      if (at_p < 0) {
        std::vector<int> simp = facet;
        simp.push_back((int)p);
        std::sort(simp.begin(), simp.end());
        added.push_back(std::move(simp));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }

  std::vector<std::vector<IVec>> out;
  for (const auto& simp : simplices) {
    std::vector<IVec> piece;
    for (int i : simp) piece.push_back(rays[i]);
    out.push_back(std::move(piece));
  }
  return out;
}

ComplexReport validate_complex(const CellComplex& cx) {
  ComplexReport rep;
  const int m = cx.dim();
  rep.n_bounding = (int)cx.bounding().size();
  rep.bounding_matches_dim = (rep.n_bounding == m);
  ConeConstraints cc = cone_constraints(cx);
  rep.pointed = rank(to_qmat(cc.ineqs)) == m;

  // dim C = m - rank of the implicit equalities among the bounding normals.
  std::vector<IVec> implicit;
  for (size_t i = 0; i < cc.ineqs.size(); ++i) {
    ConeConstraints probe;
    probe.ineqs = cc.ineqs;
    probe.stricts.push_back(cc.ineqs[i]);
    if (!feasible(probe, m)) implicit.push_back(cc.ineqs[i]);
  }
  rep.cone_dim = m - (implicit.empty() ? 0 : rank(to_qmat(implicit)));
  rep.full_dim = (rep.cone_dim == m);

  if (rep.pointed) {
    rep.rays = extreme_rays(cc, m);
    rep.simplicial = is_simplicial(rep.rays, rep.cone_dim);
    rep.simple = is_simple(rep.rays, rep.cone_dim);
  }
  return rep;
}

std::vector<IVec> parallelepiped_points(const std::vector<IVec>& gens,
                                        const std::set<int>& open_flags) {
  const int k = (int)gens.size();
  if (k == 0) {
    if (!open_flags.empty()) throw std::invalid_argument("parallelepiped_points: bad flags");
    return {IVec{}};
  }
  const int m = (int)gens[0].size();
  if (rank(to_qmat(gens)) != k)
    throw std::invalid_argument("parallelepiped_points: dependent generators");
  for (int i : open_flags)
    if (i < 0 || i >= k) throw std::invalid_argument("parallelepiped_points: bad flag index");

  // Column matrix of the generators, for solving U*lambda = e.
  QMat cols(m, QVec(k));
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < m; ++x) cols[x][i] = BigRational(gens[i][x]);

  IVec lo(m, 0), hi(m, 0);
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < k; ++i) {
      lo[x] += std::min(0L, gens[i][x]);
      hi[x] += std::max(0L, gens[i][x]);
    }

  std::vector<IVec> points;
  IVec e = lo;
  while (true) {
    auto lambda = solve_full_col_rank(cols, to_qvec(e));
    if (lambda) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const BigRational& l = (*lambda)[i];
        if (open_flags.count(i)) ok = (l > 0 && l <= 1);
        else ok = (l >= 0 && l < 1);
      }
      if (ok) points.push_back(e);
    }
    int x = 0;
    while (x < m && e[x] == hi[x]) {
      e[x] = lo[x];
      ++x;
    }
    if (x == m) break;
    ++e[x];
  }
  return points;
}

}  // namespace latzeta
