#pragma once

#include <set>
#include <string>

#include "latzeta/linalg.hpp"

namespace latzeta {

/// A rational linear hyperplane through the origin, stored by its primitive
/// integer normal. The sign convention is fixed by the input orientation.
struct Hyperplane {
  IVec normal;

  explicit Hyperplane(IVec n);
};

/// A cone with bounding hyperplanes (index set M) and internal hyperplanes
/// (index set K). The cells of the complex are the nonempty sign regions.
class CellComplex {
 public:
  CellComplex(int dim, const std::vector<IVec>& bounding, const std::vector<IVec>& internal);

  int dim() const { return dim_; }
  const std::vector<Hyperplane>& bounding() const { return bounding_; }
  const std::vector<Hyperplane>& internal() const { return internal_; }

 private:
  int dim_;
  std::vector<Hyperplane> bounding_;
  std::vector<Hyperplane> internal_;
};

enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

struct SignVector {
  std::vector<Sign> bounding;  // entries in {Zero, Plus}
  std::vector<Sign> internal;  // entries in {Zero, Minus, Plus}

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.bounding == b.bounding && a.internal == b.internal;
  }
  friend bool operator<(const SignVector& a, const SignVector& b) {
    if (a.bounding != b.bounding) return a.bounding < b.bounding;
    return a.internal < b.internal;
  }

  std::string to_string() const;  // e.g. "++0|+-"
  static SignVector parse(const std::string& s, const CellComplex& cx);
};

/// A nonempty relatively open sign region with its dimension and the extreme
/// rays of its closure.
struct Cell {
  SignVector signs;
  int dim = 0;
  std::vector<IVec> rays;  // primitive, pairwise non-parallel, sorted
};

/// Homogeneous constraint system: eqs are n.x = 0, ineqs are n.x >= 0,
/// stricts are n.x > 0.
struct ConeConstraints {
  std::vector<IVec> eqs;
  std::vector<IVec> ineqs;
  std::vector<IVec> stricts;
};

ConeConstraints cone_constraints(const CellComplex& cx);                  // the cone C
ConeConstraints cell_constraints(const CellComplex& cx, const SignVector& s);
ConeConstraints closure_constraints(const CellComplex& cx, const SignVector& s);

/// Exact feasibility of a homogeneous system via Fourier-Motzkin
/// elimination with strictness tracking.
bool feasible(const ConeConstraints& c, int dim);

bool cell_feasible(const CellComplex& cx, const SignVector& s);

/// All nonempty sign regions, each with dimension and extreme rays.
std::vector<Cell> enumerate_cells(const CellComplex& cx);

/// Face relation: closure(f1) is contained in closure(f2), decided by the
/// sign-vector rule.
bool face_leq(const Cell& f1, const Cell& f2);

/// Indices of the cells contained in the region C_I, for I a set of 0-based
/// bounding-hyperplane indices.
std::vector<int> region_cells(const std::vector<Cell>& cells, const std::set<int>& I);

/// Minimal generators of a pointed closed cone, primitive and sorted.
/// Throws hypothesis_error when the cone contains a line.
std::vector<IVec> extreme_rays(const ConeConstraints& c, int dim);

bool is_simplicial(const std::vector<IVec>& rays, int dim);
bool is_simple(const std::vector<IVec>& rays, int dim);

/// Sign of a lattice point against a sign region, or classification helpers.
Sign eval_sign(const IVec& normal, const IVec& point);
bool point_in_cell(const CellComplex& cx, const SignVector& s, const IVec& point);
bool point_in_closure(const CellComplex& cx, const SignVector& s, const IVec& point);
bool point_in_cone(const CellComplex& cx, const IVec& point);
/// Index of the unique cell containing the point, or -1 if outside C.
int classify_point(const CellComplex& cx, const std::vector<Cell>& cells, const IVec& point);

/// Placing triangulation of a pointed cone given by generators, in input
/// order. Each simplicial piece is a subset of the input rays.
std::vector<std::vector<IVec>> triangulate(const std::vector<IVec>& rays);

struct ComplexReport {
  bool pointed = false;
  int cone_dim = 0;
  bool full_dim = false;          // dim C == ambient dim
  int n_bounding = 0;
  bool bounding_matches_dim = false;  // #bounding == m
  bool simplicial = false;
  bool simple = false;
  std::vector<IVec> rays;

  bool reciprocity_hypotheses() const {
    return pointed && full_dim && bounding_matches_dim && simplicial;
  }
};

ComplexReport validate_complex(const CellComplex& cx);

/// Lattice points of the half-open parallelepiped spanned by independent
/// generators: { sum l_i u_i : l_i in (0,1] if i in open_flags, [0,1)
/// otherwise }. Enumerated by an exact box scan.
std::vector<IVec> parallelepiped_points(const std::vector<IVec>& gens,
                                        const std::set<int>& open_flags);

}  // namespace latzeta
