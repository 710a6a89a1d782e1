#include "latzeta/genfun.hpp"

#include <algorithm>

namespace latzeta {

IVec PiecewiseWeight::value(const SignVector& s, int m) const {
  if (zero) return IVec(m, 0);
  auto it = assignment.find(s);
  if (it == assignment.end())
    throw hypothesis_error("weight: no value for cell " + s.to_string());
  if ((int)it->second.size() != m) throw schema_error("weight: vector length mismatch");
  return it->second;
}

WeightReport validate_weight(const CellComplex& cx, const std::vector<Cell>& cells,
                             const PiecewiseWeight& gamma) {
  WeightReport rep;
  if (gamma.zero) return rep;
  const int m = cx.dim();
  for (const auto& cell : cells) {
    if (!gamma.assignment.count(cell.signs)) {
      rep.defined_everywhere = false;
      rep.missing.push_back(cell.signs);
    }
  }
  if (!rep.defined_everywhere) return rep;
  for (size_t f = 0; f < cells.size(); ++f) {
    for (size_t g = 0; g < cells.size(); ++g) {
      if (f == g || !face_leq(cells[f], cells[g])) continue;
      IVec diff = sub(gamma.value(cells[g].signs, m), gamma.value(cells[f].signs, m));
      for (const auto& r : cells[f].rays) {
        if (dot(diff, r) != 0) {
          rep.compatible = false;
          rep.violations.emplace_back((int)f, (int)g);
          break;
        }
      }
    }
  }
  return rep;
}

void validate_spec(const CellComplex& cx, const std::vector<Cell>& cells,
                   const GenFunSpec& spec) {
  const int m = cx.dim();
  if ((int)spec.A.size() != m || (int)spec.B.size() != m)
    throw schema_error("spec: A and B must have the ambient dimension");
  for (const auto& cell : cells)
    for (const auto& u : cell.rays)
      if (dot(spec.B, u) <= 0)
        throw hypothesis_error("spec: B.u <= 0 on an extreme ray of the cone");
  WeightReport w = validate_weight(cx, cells, spec.gamma);
  if (!w.defined_everywhere) throw hypothesis_error("spec: weight undefined on some cell");
  if (!w.compatible) throw hypothesis_error("spec: weight fails span compatibility");
}

FactoredRational genfun_halfopen_simplicial(const std::vector<IVec>& gens,
                                            const std::set<int>& open_flags, const IVec& C,
                                            const IVec& B) {
  std::vector<std::pair<long, long>> raw;
  for (const auto& u : gens) {
    long bu = dot(B, u);
    if (bu <= 0) throw std::domain_error("genfun: B.u <= 0 on a generator");
    raw.emplace_back(dot(C, u), bu);
  }
  LaurentPoly num;
  for (const auto& e : parallelepiped_points(gens, open_flags))
    num.add_term({dot(C, e), dot(B, e)}, 1);
  return FactoredRational::make(std::move(num), raw);
}

FactoredRational genfun_closed_cone(const std::vector<IVec>& rays, const IVec& C,
                                    const IVec& B) {
  if (rays.empty()) return FactoredRational::one();
  auto pieces = triangulate(rays);
  FactoredRational total;
  for (const auto& gens : pieces) {
    const int k = (int)gens.size();
    // Barycentric coordinates of every input ray in this piece; the generic
    // interior direction is sum_j eps^j rays[j], so the sign of coordinate i
    // is the first nonzero sign along j.
    QMat cols(gens[0].size(), QVec(k));
    for (int i = 0; i < k; ++i)
      for (size_t x = 0; x < gens[0].size(); ++x) cols[x][i] = BigRational(gens[i][x]);
    std::set<int> open_flags;
    for (int i = 0; i < k; ++i) {
      int sign = 0;
      for (const auto& r : rays) {
        auto lambda = solve_full_col_rank(cols, to_qvec(r));
        if (!lambda) throw std::logic_error("genfun: ray outside the configuration span");
        if ((*lambda)[i] != 0) {
          sign = (*lambda)[i] > 0 ? 1 : -1;
          break;
        }
      }
      if (sign == 0) throw std::logic_error("genfun: degenerate shift direction");
      if (sign < 0) open_flags.insert(i);
    }
    total = add(total, genfun_halfopen_simplicial(gens, open_flags, C, B));
  }
  return total;
}

GenFunEngine::GenFunEngine(const CellComplex& cx, GenFunSpec spec)
    : cx_(cx), spec_(std::move(spec)), cells_(enumerate_cells(cx)) {
  validate_spec(cx_, cells_, spec_);
}

const FactoredRational& GenFunEngine::cell_genfun(int cell_index) {
  auto it = memo_.find(cell_index);
  if (it != memo_.end()) return it->second;
  const Cell& cell = cells_[cell_index];
  IVec C = add(spec_.A, spec_.gamma.value(cell.signs, cx_.dim()));
  FactoredRational e = genfun_closed_cone(cell.rays, C, spec_.B);
  for (size_t f = 0; f < cells_.size(); ++f) {
    if ((int)f == cell_index || !face_leq(cells_[f], cell)) continue;
    FactoredRational face = cell_genfun((int)f);
    e = add(e, mul(FactoredRational::from_poly(-LaurentPoly::one()), face));
  }
  return memo_.emplace(cell_index, normalize(e)).first->second;
}

FactoredRational GenFunEngine::region_genfun(const std::set<int>& I) {
  for (int i : I)
    if (i < 0 || i >= (int)cx_.bounding().size())
      throw schema_error("region: bounding index out of range");
  FactoredRational total;
  for (int c : region_cells(cells_, I)) total = add(total, cell_genfun(c));
  return normalize(total);
}

ReciprocityVerdict check_reciprocity(const CellComplex& cx, const std::set<int>& I,
                                     const GenFunSpec& spec) {
  ComplexReport rep = validate_complex(cx);
  if (!rep.pointed) throw hypothesis_error("reciprocity: cone is not pointed");
  if (!rep.full_dim) throw hypothesis_error("reciprocity: cone is not full dimensional");
  if (!rep.bounding_matches_dim)
    throw hypothesis_error("reciprocity: #bounding hyperplanes != ambient dimension");
  if (!rep.simplicial) throw hypothesis_error("reciprocity: cone is not simplicial");

  GenFunEngine engine(cx, spec);
  const int m = cx.dim();
  std::set<int> comp;
  for (int i = 0; i < m; ++i)
    if (!I.count(i)) comp.insert(i);

  ReciprocityVerdict v;
  v.lhs = invert_variables(engine.region_genfun(I));
  v.rhs = engine.region_genfun(comp);
  if (m % 2)
    v.rhs = mul(FactoredRational::from_poly(-LaurentPoly::one()), v.rhs);
  v.holds = eq_rational(v.lhs, v.rhs);
  return v;
}

long euler_sum(const std::vector<Cell>& cells, int f0_index, const std::set<int>& I) {
  long s = 0;
  for (int c : region_cells(cells, I)) {
    if (!face_leq(cells[f0_index], cells[c])) continue;
    s += (cells[c].dim % 2) ? -1 : 1;
  }
  return s;
}

}  // namespace latzeta
