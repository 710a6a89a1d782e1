#pragma once

#include <map>

#include "latzeta/factored.hpp"
#include "latzeta/geometry.hpp"

namespace latzeta {

/// Weight that is constant on each cell: either the distinguished zero weight
/// or one integer vector C_F per sign vector.
struct PiecewiseWeight {
  bool zero = true;
  std::map<SignVector, IVec> assignment;

  static PiecewiseWeight zero_weight() { return {}; }

  /// The vector C_F for a cell; the zero weight yields the zero vector.
  IVec value(const SignVector& s, int m) const;
};

struct WeightReport {
  bool defined_everywhere = true;
  bool compatible = true;
  std::vector<SignVector> missing;                 // cells with no assignment
  std::vector<std::pair<int, int>> violations;     // (face index, cell index)

  bool valid() const { return defined_everywhere && compatible; }
};

/// Checks that gamma is defined on every cell and that for every face pair
/// F' <= F the difference C_F - C_{F'} is orthogonal to the span of F'
/// (tested on the extreme rays of closure(F')).
WeightReport validate_weight(const CellComplex& cx, const std::vector<Cell>& cells,
                             const PiecewiseWeight& gamma);

struct GenFunSpec {
  IVec A;
  IVec B;
  PiecewiseWeight gamma;
};

/// Throws hypothesis_error unless B.u > 0 on every extreme ray of C and the
/// weight validates.
void validate_spec(const CellComplex& cx, const std::vector<Cell>& cells,
                   const GenFunSpec& spec);

/// Generating function of the half-open simplicial cone spanned by
/// independent generators, with facet i removed for i in open_flags:
/// (sum over the half-open parallelepiped of q^{C.e} t^{B.e}) /
/// prod_i (1 - q^{C.u_i} t^{B.u_i}).
FactoredRational genfun_halfopen_simplicial(const std::vector<IVec>& gens,
                                            const std::set<int>& open_flags, const IVec& C,
                                            const IVec& B);

/// Generating function of the closed pointed cone spanned by the given rays,
/// computed from a placing triangulation made half-open along a generic
/// interior direction so the pieces tile without overlap.
FactoredRational genfun_closed_cone(const std::vector<IVec>& rays, const IVec& C, const IVec& B);

/// Memoizing engine for cell and region generating functions over a fixed
/// complex and spec.
class GenFunEngine {
 public:
  GenFunEngine(const CellComplex& cx, GenFunSpec spec);

  const CellComplex& complex() const { return cx_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const GenFunSpec& spec() const { return spec_; }

  /// E_F over the relatively open cell: E_{closure(F)} minus the proper faces.
  const FactoredRational& cell_genfun(int cell_index);

  /// E_{C_I} = sum of cell_genfun over the cells of the region, for I a set
  /// of 0-based bounding indices.
  FactoredRational region_genfun(const std::set<int>& I);

 private:
  CellComplex cx_;
  GenFunSpec spec_;
  std::vector<Cell> cells_;
  std::map<int, FactoredRational> memo_;
};

struct ReciprocityVerdict {
  bool holds = false;
  FactoredRational lhs;  // invert_variables(E_{C_I})
  FactoredRational rhs;  // (-1)^m E_{C_{[m] \ I}}
};

/// The reciprocity theorem on one region. Throws hypothesis_error unless
/// #bounding = m, dim C = m, C simplicial, and the spec validates.
ReciprocityVerdict check_reciprocity(const CellComplex& cx, const std::set<int>& I,
                                     const GenFunSpec& spec);

/// sum of (-1)^{dim F} over the cells F of the region C_I with F >= F0.
long euler_sum(const std::vector<Cell>& cells, int f0_index, const std::set<int>& I);

}  // namespace latzeta
