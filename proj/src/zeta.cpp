#include "latzeta/zeta.hpp"

#include <algorithm>
#include <functional>

namespace latzeta {

namespace {

IVec mat_vec_integral(const QMat& m, const IVec& v) {
  IVec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    BigRational s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += m[i][j] * BigRational(v[j]);
    r[i] = to_ll(s);
  }
  return r;
}

// gcd of all maximal minors of the n x m weight matrix (rows = weights).
BigInt maximal_minor_gcd(const std::vector<IVec>& rows, int m) {
  const int n = (int)rows.size();
  BigInt g = 0;
  std::vector<int> sel(m);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (g == 1) return;
    if (depth == m) {
      QMat sq;
      for (int i : sel) sq.push_back(to_qvec(rows[i]));
      BigRational d = det(sq);
      g = gcd(g, BigInt(d.get_num()));
      return;
    }
    for (int i = start; i <= n - (m - depth); ++i) {
      sel[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return g;
}

}  // namespace

void validate_weight_datum(const WeightDatum& wd) {
  const int m = wd.m();
  if (wd.l < 0 || wd.d < 0 || m < 1) throw schema_error("weights: bad ranks");
  if (wd.weights.empty()) throw schema_error("weights: no weights");
  if ((int)wd.components.size() != wd.r) throw schema_error("weights: component count != r");
  if ((int)wd.contragredient_dominant.size() != wd.r)
    throw schema_error("weights: contragredient count != r");
  if ((int)wd.fundamental_roots.size() != wd.l)
    throw schema_error("weights: fundamental root count != l");
  auto check_len = [&](const std::vector<IVec>& vs, const char* what) {
    for (const auto& v : vs)
      if ((int)v.size() != m) throw schema_error(std::string("weights: ") + what + " length");
  };
  check_len(wd.weights, "weight");
  check_len(wd.contragredient_dominant, "contragredient");
  check_len(wd.fundamental_roots, "root");
  if ((int)wd.det_rho.size() != m || (int)wd.alpha0.size() != m)
    throw schema_error("weights: det_rho/alpha0 length");

  std::vector<int> owner(wd.n(), -1);
  for (int b = 0; b < wd.r; ++b) {
    if (wd.components[b].empty()) throw schema_error("weights: empty component");
    for (int j : wd.components[b]) {
      if (j < 0 || j >= wd.n() || owner[j] != -1)
        throw schema_error("weights: components do not partition the weights");
      owner[j] = b;
    }
  }
  for (int o : owner)
    if (o == -1) throw schema_error("weights: components do not partition the weights");

  if (wd.l > 0 && rank(to_qmat(wd.fundamental_roots)) != wd.l)
    throw schema_error("weights: dependent fundamental roots");

  // Each weight is -omega_i + a nonnegative integer combination of roots.
  QMat root_cols(m, QVec(wd.l));
  for (int k = 0; k < wd.l; ++k)
    for (int x = 0; x < m; ++x) root_cols[x][k] = BigRational(wd.fundamental_roots[k][x]);
  for (int j = 0; j < wd.n(); ++j) {
    IVec rhs = add(wd.weights[j], wd.contragredient_dominant[owner[j]]);
    if (wd.l == 0) {
      if (!is_zero(rhs)) throw schema_error("weights: weight != -omega with no roots");
      continue;
    }
    auto c = solve_full_col_rank(root_cols, to_qvec(rhs));
    if (!c) throw schema_error("weights: weight outside -omega + root lattice span");
    for (const auto& ck : *c) {
      if (ck.get_den() != 1 || ck < 0)
        throw schema_error("weights: root coefficients not in N_0");
    }
  }

  IVec s(m, 0);
  for (const auto& w : wd.weights) s = add(s, w);
  if (s != wd.det_rho) throw schema_error("weights: det_rho != sum of weights");

  if (wd.n() < m || maximal_minor_gcd(wd.weights, m) != 1)
    throw schema_error("weights: weights do not span the character lattice");
}

ZetaProblem build_complex_from_weights(const WeightDatum& wd,
                                       std::optional<RootSystem> ambient_roots,
                                       PiecewiseWeight gamma) {
  validate_weight_datum(wd);
  const int m = wd.m();

  if (wd.l > 0) {
    if (!ambient_roots) throw schema_error("weights: root system required when l > 0");
    if (ambient_roots->rank != wd.l) throw schema_error("weights: root system rank != l");
    // alpha0 must be the image of the positive-root sum under the coordinate
    // map determined by the fundamental roots.
    QMat simple_cols(ambient_roots->ambient, QVec(wd.l));
    for (int k = 0; k < wd.l; ++k)
      for (int x = 0; x < ambient_roots->ambient; ++x)
        simple_cols[x][k] = BigRational(ambient_roots->simple_roots[k][x]);
    IVec a0_coords(m, 0);
    for (const auto& beta : ambient_roots->positive_roots) {
      auto c = solve_full_col_rank(simple_cols, to_qvec(beta));
      if (!c) throw schema_error("weights: positive root outside the simple span");
      for (int k = 0; k < wd.l; ++k) {
        long ck = to_ll((*c)[k]);
        for (int x = 0; x < m; ++x) a0_coords[x] += ck * wd.fundamental_roots[k][x];
      }
    }
    if (a0_coords != wd.alpha0)
      throw schema_error("weights: alpha0 != sum of positive roots in lattice coordinates");
  } else {
    if (!is_zero(wd.alpha0)) throw schema_error("weights: alpha0 must vanish when l = 0");
    ambient_roots.reset();
  }

  std::vector<IVec> bounding;
  std::vector<IVec> dropped;
  auto push_bounding = [&](const IVec& raw) {
    IVec n = primitive(raw);
    for (const auto& prev : bounding)
      if (prev == n) {
        dropped.push_back(n);
        return;
      }
    bounding.push_back(n);
  };
  for (const auto& a : wd.fundamental_roots) push_bounding(a);
  for (const auto& w : wd.contragredient_dominant) push_bounding(negate(w));

  std::vector<IVec> internal;
  for (int i = 0; i < wd.n(); ++i)
    for (int j = i + 1; j < wd.n(); ++j) {
      IVec diff = sub(wd.weights[i], wd.weights[j]);
      if (is_zero(diff)) continue;
      IVec n = primitive(diff);
      bool have = false;
      for (const auto& prev : internal)
        if (prev == n || prev == negate(n)) { have = true; break; }
      if (!have) internal.push_back(n);
    }

  return ZetaProblem{CellComplex(m, bounding, internal),
                     GenFunSpec{wd.alpha0, wd.det_rho, std::move(gamma)},
                     std::move(ambient_roots),
                     wd.l,
                     wd.d,
                     std::move(dropped)};
}

DualBasisReport choose_dual_basis(const WeightDatum& wd) {
  validate_weight_datum(wd);
  if (wd.r != wd.d) throw hypothesis_error("dual basis: requires r = d");
  const int m = wd.m();

  QMat p(m, QVec(m));
  for (int k = 0; k < wd.l; ++k)
    for (int x = 0; x < m; ++x) p[x][k] = BigRational(wd.fundamental_roots[k][x]);
  for (int j = 0; j < wd.d; ++j)
    for (int x = 0; x < m; ++x) p[x][wd.l + j] = BigRational(-wd.contragredient_dominant[j][x]);

  DualBasisReport rep;
  rep.transformed = wd;
  rep.a0.assign(m, 0);
  for (int j = 0; j < wd.d; ++j) rep.a0[wd.l + j] = 1;

  BigRational dv = det(p);
  if (dv != 1 && dv != -1) return rep;  // not a lattice basis
  rep.unimodular = true;

  QMat pinv = inverse(p);
  auto tr = [&](IVec& v) { v = mat_vec_integral(pinv, v); };
  for (auto& w : rep.transformed.weights) tr(w);
  for (auto& w : rep.transformed.contragredient_dominant) tr(w);
  for (auto& w : rep.transformed.fundamental_roots) tr(w);
  tr(rep.transformed.det_rho);
  tr(rep.transformed.alpha0);

  for (int k = 0; k < wd.l; ++k)
    for (int x = 0; x < m; ++x)
      if (rep.transformed.fundamental_roots[k][x] != (x == k ? 1 : 0))
        throw std::logic_error("dual basis: transform failed");
  for (int j = 0; j < wd.d; ++j)
    for (int x = 0; x < m; ++x)
      if (rep.transformed.contragredient_dominant[j][x] != (x == wd.l + j ? -1 : 0))
        throw std::logic_error("dual basis: transform failed");
  return rep;
}

FactoredRational weighted_zeta(const ZetaProblem& zp) {
  GenFunEngine engine(zp.complex, zp.spec);
  if (!zp.roots) return normalize(engine.region_genfun({}));
  FactoredRational z;
  for (const auto& w : enumerate_weyl(*zp.roots)) {
    std::set<int> iw = descent_set(*zp.roots, w);
    z = add(z, mul(FactoredRational::q_power(-w.length), engine.region_genfun(iw)));
  }
  return normalize(z);
}

std::optional<FneqCertificate> fneq_detect(const FactoredRational& z) {
  if (z.is_zero()) throw std::invalid_argument("fneq: zero function");
  auto mr = monomial_ratio_test(invert_variables(z), z);
  if (!mr) return std::nullopt;
  return FneqCertificate{mr->sign, mr->a, -mr->b};
}

namespace {

bool in_region(const CellComplex& cx, const std::set<int>& J, const IVec& e) {
  if (!point_in_cone(cx, e)) return false;
  for (int j : J)
    if (dot(cx.bounding()[j].normal, e) <= 0) return false;
  return true;
}

}  // namespace

MainTheoremReport verify_main_theorem(const WeightDatum& wd,
                                      std::optional<RootSystem> ambient_roots,
                                      PiecewiseWeight gamma, long box) {
  MainTheoremReport rep;
  rep.dual = choose_dual_basis(wd);
  if (!rep.dual.unimodular) return rep;

  ZetaProblem zp = build_complex_from_weights(rep.dual.transformed, std::move(ambient_roots),
                                              std::move(gamma));
  const int m = zp.complex.dim();
  const int l = zp.l;
  const IVec& a0 = rep.dual.a0;
  if (!zp.dropped_bounding.empty() || (int)zp.complex.bounding().size() != m)
    throw std::logic_error("verify: dual-basis complex is not the orthant");

  // Translation: C_{[m] \ I} = a0 + C_{[l] \ I} for every I in [l], tested
  // pointwise on [0, box]^m.
  rep.translation = true;
  for (int mask = 0; mask < (1 << l) && rep.translation; ++mask) {
    std::set<int> full, part;
    for (int i = 0; i < l; ++i)
      if (!(mask & (1 << i))) { full.insert(i); part.insert(i); }
    for (int j = l; j < m; ++j) full.insert(j);
    IVec e(m, 0);
    std::function<bool(int)> rec = [&](int x) -> bool {
      if (x == m) return in_region(zp.complex, full, e) == in_region(zp.complex, part, sub(e, a0));
      for (long v = 0; v <= box; ++v) {
        e[x] = v;
        if (!rec(x + 1)) return false;
      }
      return true;
    };
    rep.translation = rec(0);
  }

  rep.alpha0_pairing = dot(zp.spec.A, a0) == 0;
  rep.det_rho_pairing = dot(zp.spec.B, a0) == wd.n();

  FactoredRational z = weighted_zeta(zp);
  rep.certificate = fneq_detect(z);

  long phi_plus = zp.roots ? (long)zp.roots->positive_roots.size() : 0;
  std::vector<Cell> cells = enumerate_cells(zp.complex);
  int a0_cell = classify_point(zp.complex, cells, a0);
  if (a0_cell < 0) throw std::logic_error("verify: a0 outside the cone");
  long c = dot(zp.spec.gamma.value(cells[a0_cell].signs, m), a0);
  rep.expected = FneqCertificate{(zp.l + zp.d) % 2 ? -1 : 1, phi_plus + c, -(long)wd.n()};
  rep.certificate_matches = rep.certificate && rep.certificate->sign == rep.expected.sign &&
                            rep.certificate->a == rep.expected.a &&
                            rep.certificate->b == rep.expected.b;
  return rep;
}

ZetaProblem torus_example(int d, int k) {
  if (d < 2 || k < 3) throw schema_error("torus example: requires d >= 2, k >= 3");
  std::vector<IVec> bounding;
  for (int i = 0; i < d; ++i) {
    IVec e(d, 0);
    e[i] = 1;
    bounding.push_back(e);
  }
  for (int i = 0; i + 1 < d; ++i) {
    IVec n(d, 0);
    n[i] = k;
    n[d - 1] = -1;
    bounding.push_back(n);
  }
  IVec b(d, k + 1);
  b[d - 1] = -(d - 2);
  return ZetaProblem{CellComplex(d, bounding, {}),
                     GenFunSpec{IVec(d, 0), b, PiecewiseWeight::zero_weight()},
                     std::nullopt,
                     0,
                     d,
                     {}};
}

TorusClosedForm torus_closed_form(int d, int k) {
  if (d < 2 || k < 3) throw schema_error("torus closed form: requires d >= 2, k >= 3");
  TorusClosedForm cf;
  cf.formal.nvars = d;
  cf.formal.num[std::vector<long>(d, 0)] = 1;
  for (int j = 0; j <= k - 2; ++j) {
    std::vector<long> e(d, 1);
    e[d - 1] = 1 + j;
    cf.formal.num[e] = 1;
  }
  for (int i = 0; i + 1 < d; ++i) {
    std::vector<long> u(d, 0);
    u[i] = 1;
    cf.formal.den.push_back(u);
  }
  std::vector<long> u(d, 1);
  u[d - 1] = k;
  cf.formal.den.push_back(u);

  IVec b(d, k + 1);
  b[d - 1] = -(d - 2);
  cf.specialized = specialize_monomials(cf.formal, IVec(d, 0), b);
  return cf;
}

}  // namespace latzeta
