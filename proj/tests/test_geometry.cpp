#include <doctest.h>

#include <algorithm>

#include "latzeta/geometry.hpp"

using namespace latzeta;

namespace {

CellComplex half_line() { return CellComplex(1, {{1}}, {}); }

CellComplex diagonal() { return CellComplex(2, {{1, 0}, {0, 1}}, {{1, -1}}); }

CellComplex sector23() { return CellComplex(3 - 1, {{1, 0}, {0, 1}, {3, -1}}, {}); }

const Cell* find_cell(const std::vector<Cell>& cells, const std::string& signs,
                      const CellComplex& cx) {
  SignVector want = SignVector::parse(signs, cx);
  for (const auto& c : cells)
    if (c.signs == want) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("hyperplane and complex constructors") {
  CHECK(Hyperplane({2, 4}).normal == IVec{1, 2});
  CHECK_THROWS_AS(Hyperplane({0, 0}), schema_error);
  CHECK_THROWS_AS(CellComplex(2, {{1, 0}, {2, 0}}, {}), schema_error);
  CHECK_THROWS_AS(CellComplex(2, {{1, 0}}, {{1}}), schema_error);
  // The same normal may appear in both lists.
  CHECK_NOTHROW(CellComplex(2, {{1, 0}, {0, 1}}, {{1, 0}}));
}

TEST_CASE("sign vectors round-trip") {
  CellComplex cx = diagonal();
  SignVector s = SignVector::parse("+0|-", cx);
  CHECK(s.to_string() == "+0|-");
  CHECK_THROWS_AS(SignVector::parse("+-|0", cx), schema_error);
  CHECK_THROWS_AS(SignVector::parse("++", cx), schema_error);
}

TEST_CASE("cell feasibility") {
  CellComplex cx = diagonal();
  CHECK(cell_feasible(half_line(), SignVector::parse("0|", half_line())));
  CHECK(!cell_feasible(cx, SignVector::parse("00|+", cx)));
  CHECK(cell_feasible(cx, SignVector::parse("++|0", cx)));
}

TEST_CASE("enumerate_cells on the half line") {
  CellComplex cx = half_line();
  auto cells = enumerate_cells(cx);
  REQUIRE(cells.size() == 2);
  const Cell* origin = find_cell(cells, "0|", cx);
  const Cell* open = find_cell(cells, "+|", cx);
  REQUIRE(origin);
  REQUIRE(open);
  CHECK(origin->dim == 0);
  CHECK(origin->rays.empty());
  CHECK(open->dim == 1);
  CHECK(open->rays == std::vector<IVec>{{1}});
}

TEST_CASE("enumerate_cells on the diagonal complex") {
  CellComplex cx = diagonal();
  auto cells = enumerate_cells(cx);
  CHECK(cells.size() == 6);
  const Cell* diag = find_cell(cells, "++|0", cx);
  REQUIRE(diag);
  CHECK(diag->dim == 1);
  CHECK(diag->rays == std::vector<IVec>{{1, 1}});
  const Cell* upper = find_cell(cells, "++|-", cx);
  REQUIRE(upper);
  CHECK(upper->dim == 2);
  CHECK(find_cell(cells, "00|0", cx));
  CHECK(find_cell(cells, "0+|-", cx));
  CHECK(find_cell(cells, "+0|+", cx));
  CHECK(find_cell(cells, "++|+", cx));
}

TEST_CASE("enumerate_cells on the sector cone with a redundant bounding hyperplane") {
  CellComplex cx = sector23();
  auto cells = enumerate_cells(cx);
  // Origin, two open extreme edges, one open sector: e2 >= 0 is implied
  // strictly inside, so only 4 regions are nonempty.
  CHECK(cells.size() == 4);
  int full = 0;
  for (const auto& c : cells)
    if (c.dim == 2) {
      ++full;
      CHECK(c.rays == std::vector<IVec>{{1, 0}, {1, 3}});
    }
  CHECK(full == 1);
}

TEST_CASE("face relation") {
  CellComplex cx = diagonal();
  auto cells = enumerate_cells(cx);
  const Cell* origin = find_cell(cells, "00|0", cx);
  const Cell* diag = find_cell(cells, "++|0", cx);
  const Cell* up = find_cell(cells, "++|-", cx);
  const Cell* down = find_cell(cells, "++|+", cx);
  REQUIRE((origin && diag && up && down));
  CHECK(face_leq(*origin, *diag));
  CHECK(face_leq(*diag, *up));
  CHECK(face_leq(*diag, *diag));
  CHECK(!face_leq(*up, *down));
  CHECK(!face_leq(*down, *up));
}

TEST_CASE("region_cells") {
  CellComplex cx = half_line();
  auto cells = enumerate_cells(cx);
  CHECK(region_cells(cells, {}).size() == 2);
  auto interior = region_cells(cells, {0});
  REQUIRE(interior.size() == 1);
  CHECK(cells[interior[0]].signs.to_string() == "+|");
}

TEST_CASE("extreme rays") {
  CHECK(extreme_rays(cone_constraints(sector23()), 2) ==
        std::vector<IVec>{{1, 0}, {1, 3}});
  CHECK(extreme_rays(cone_constraints(half_line()), 1) == std::vector<IVec>{{1}});
  ConeConstraints origin_only;
  origin_only.ineqs = {{1}, {-1}};
  CHECK(extreme_rays(origin_only, 1).empty());
  ConeConstraints line;
  line.ineqs = {{1, 0}};
  CHECK_THROWS_AS(extreme_rays(line, 2), hypothesis_error);
}

TEST_CASE("simplicial and simple predicates") {
  std::vector<IVec> sector = {{1, 0}, {1, 3}};
  CHECK(is_simplicial(sector, 2));
  CHECK(!is_simple(sector, 2));
  std::vector<IVec> orthant = {{1, 0}, {0, 1}};
  CHECK(is_simple(orthant, 2));
  std::vector<IVec> three = {{1, 0}, {0, 1}, {1, 1}};
  CHECK(!is_simplicial(three, 2));
}

TEST_CASE("parallelepiped points") {
  auto pts = parallelepiped_points({{1, 0}, {1, 3}}, {});
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<IVec>{{0, 0}, {1, 1}, {1, 2}});
  auto open_pts = parallelepiped_points({{1, 0}, {1, 3}}, {0, 1});
  std::sort(open_pts.begin(), open_pts.end());
  CHECK(open_pts == std::vector<IVec>{{1, 1}, {1, 2}, {2, 3}});
  CHECK(parallelepiped_points({{1}}, {}) == std::vector<IVec>{{0}});
  CHECK(parallelepiped_points({{1}}, {0}) == std::vector<IVec>{{1}});
}

TEST_CASE("triangulate") {
  std::vector<IVec> simplicial = {{1, 0}, {1, 3}};
  auto t1 = triangulate(simplicial);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == simplicial);

  auto t2 = triangulate({{1, 0}, {1, 1}, {0, 1}});
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == std::vector<IVec>{{1, 0}, {1, 1}});
  CHECK(t2[1] == std::vector<IVec>{{1, 1}, {0, 1}});

  CHECK(triangulate({}).empty());

  // A 3-dim cone over a square splits into two tetrahedral pieces.
  auto t3 = triangulate({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  CHECK(t3.size() == 2);
}

TEST_CASE("validate_complex") {
  ComplexReport r1 = validate_complex(sector23());
  CHECK(r1.pointed);
  CHECK(r1.cone_dim == 2);
  CHECK(r1.full_dim);
  CHECK(r1.n_bounding == 3);
  CHECK(!r1.bounding_matches_dim);
  CHECK(r1.simplicial);
  CHECK(!r1.simple);

  ComplexReport r2 = validate_complex(CellComplex(2, {{1, 0}, {0, 1}}, {}));
  CHECK(r2.pointed);
  CHECK(r2.simple);
  CHECK(r2.reciprocity_hypotheses());

  ComplexReport r3 = validate_complex(CellComplex(2, {{1, 0}}, {}));
  CHECK(!r3.pointed);

  // x >= 0 and -x >= 0 in the plane: the cone is the y axis; not pointed,
  // not full dimensional.
  ComplexReport r4 = validate_complex(CellComplex(2, {{1, 0}, {-1, 0}}, {}));
  CHECK(!r4.pointed);
  CHECK(r4.cone_dim == 1);
}

TEST_CASE("partition of lattice boxes into cells") {
  for (const CellComplex& cx : {diagonal(), sector23()}) {
    auto cells = enumerate_cells(cx);
    const long N = 5;
    IVec e(2);
    for (e[0] = -N; e[0] <= N; ++e[0])
      for (e[1] = -N; e[1] <= N; ++e[1]) {
        int hits = 0;
        for (const auto& c : cells)
          if (point_in_cell(cx, c.signs, e)) ++hits;
        CHECK(hits == (point_in_cone(cx, e) ? 1 : 0));
      }
  }
}

TEST_CASE("face relation agrees with closure containment on boxes") {
  CellComplex cx = diagonal();
  auto cells = enumerate_cells(cx);
  const long N = 4;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j) {
      bool contained = true;
      IVec e(2);
      for (e[0] = -N; e[0] <= N && contained; ++e[0])
        for (e[1] = -N; e[1] <= N && contained; ++e[1])
          if (point_in_closure(cx, cells[i].signs, e) &&
              !point_in_closure(cx, cells[j].signs, e))
            contained = false;
      CHECK(face_leq(cells[i], cells[j]) == contained);
    }
}

TEST_CASE("cell dimension equals ray rank") {
  for (const CellComplex& cx : {diagonal(), sector23()}) {
    for (const auto& c : enumerate_cells(cx)) {
      CHECK(c.dim == (c.rays.empty() ? 0 : rank(to_qmat(c.rays))));
      for (const auto& r : c.rays) CHECK(r == primitive(r));
    }
  }
}

namespace {

// Coordinates of p in the simplicial cone, when p lies in it.
std::optional<QVec> cone_coords(const std::vector<IVec>& gens, const IVec& p) {
  QMat cols(p.size(), QVec(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t x = 0; x < p.size(); ++x) cols[x][i] = BigRational(gens[i][x]);
  auto lambda = solve_full_col_rank(cols, to_qvec(p));
  if (!lambda) return std::nullopt;
  for (const auto& l : *lambda)
    if (l < 0) return std::nullopt;
  return lambda;
}

}  // namespace

TEST_CASE("triangulations from different placing orders tile the same cone") {
  std::vector<IVec> rays = {{1, 0, 0}, {0, 1, 0}, {1, 1, 3}, {2, 1, 4}};
  std::vector<IVec> rays2 = {{2, 1, 4}, {1, 1, 3}, {0, 1, 0}, {1, 0, 0}};
  auto t1 = triangulate(rays);
  auto t2 = triangulate(rays2);
  const long N = 4;
  IVec p(3);
  for (p[0] = 0; p[0] <= N; ++p[0])
    for (p[1] = 0; p[1] <= N; ++p[1])
      for (p[2] = 0; p[2] <= N; ++p[2]) {
        int in1 = 0, interior1 = 0, in2 = 0;
        for (const auto& piece : t1) {
          auto c = cone_coords(piece, p);
          if (!c) continue;
          ++in1;
          bool strict = true;
          for (const auto& l : *c)
            if (l == 0) strict = false;
          if (strict) ++interior1;
        }
        for (const auto& piece : t2)
          if (cone_coords(piece, p)) ++in2;
        // Pieces overlap only along boundaries, and both orders cover the
        // same set of lattice points.
        CHECK(interior1 <= 1);
        CHECK((in1 > 0) == (in2 > 0));
      }
}
