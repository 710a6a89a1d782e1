#include <doctest.h>

#include "helpers.hpp"
#include "latzeta/oracle.hpp"
#include "latzeta/zeta.hpp"

using namespace latzeta;
using namespace latzeta::testing;

namespace {

// GL2 natural representation in the basis (alpha_1, omega_1^{-1}).
WeightDatum gl2() {
  WeightDatum wd;
  wd.l = 1;
  wd.d = 1;
  wd.r = 1;
  wd.weights = {{1, 1}, {0, 1}};
  wd.components = {{0, 1}};
  wd.contragredient_dominant = {{0, -1}};
  wd.fundamental_roots = {{1, 0}};
  wd.det_rho = {1, 2};
  wd.alpha0 = {1, 0};
  return wd;
}

// GL3 natural representation in the basis (alpha_1, alpha_2, omega_1^{-1}).
WeightDatum gl3() {
  WeightDatum wd;
  wd.l = 2;
  wd.d = 1;
  wd.r = 1;
  wd.weights = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  wd.components = {{0, 1, 2}};
  wd.contragredient_dominant = {{0, 0, -1}};
  wd.fundamental_roots = {{1, 0, 0}, {0, 1, 0}};
  wd.det_rho = {1, 2, 3};
  wd.alpha0 = {2, 2, 0};
  return wd;
}

// GL2 data pushed through the unimodular change of basis [[1,1],[0,1]].
WeightDatum gl2_skewed() {
  WeightDatum wd = gl2();
  auto push = [](IVec& v) { v = {v[0] + v[1], v[1]}; };
  for (auto& w : wd.weights) push(w);
  for (auto& w : wd.contragredient_dominant) push(w);
  for (auto& w : wd.fundamental_roots) push(w);
  push(wd.det_rho);
  push(wd.alpha0);
  return wd;
}

// Torus datum with r = 3 > d = 2, outside the main theorem's scope.
WeightDatum torus_datum() {
  WeightDatum wd;
  wd.l = 0;
  wd.d = 2;
  wd.r = 3;
  wd.weights = {{1, 0}, {0, 1}, {3, -1}};
  wd.components = {{0}, {1}, {2}};
  wd.contragredient_dominant = {{-1, 0}, {0, -1}, {-3, 1}};
  wd.det_rho = {4, 0};
  wd.alpha0 = {0, 0};
  return wd;
}

FactoredRational classical_gl(int n) {
  FactoredRational z = FactoredRational::one();
  for (long k = 0; k < n; ++k)
    z = mul(z, fr({{1, 0, 0}}, {{k, 1}}));
  return z;
}

}  // namespace

TEST_CASE("validate_weight_datum") {
  CHECK_NOTHROW(validate_weight_datum(gl2()));
  CHECK_NOTHROW(validate_weight_datum(gl3()));
  CHECK_NOTHROW(validate_weight_datum(gl2_skewed()));
  CHECK_NOTHROW(validate_weight_datum(torus_datum()));

  WeightDatum bad = gl2();
  bad.det_rho = {1, 1};
  CHECK_THROWS_AS(validate_weight_datum(bad), schema_error);

  // Negative root coefficient in a weight decomposition.
  bad = gl2();
  bad.weights[1] = {-1, 1};
  bad.det_rho = {0, 2};
  CHECK_THROWS_AS(validate_weight_datum(bad), schema_error);

  // Weights spanning only an index-2 sublattice.
  bad = gl2();
  bad.weights = {{2, 0}, {0, 2}};
  bad.contragredient_dominant = {{0, -2}};
  bad.det_rho = {2, 2};
  CHECK_THROWS_AS(validate_weight_datum(bad), schema_error);

  bad = gl2();
  bad.components = {{0}};
  CHECK_THROWS_AS(validate_weight_datum(bad), schema_error);
}

TEST_CASE("build_complex_from_weights on GL2") {
  ZetaProblem zp = build_complex_from_weights(gl2(), build_root_system(CartanType::A, 1));
  CHECK(zp.complex.dim() == 2);
  REQUIRE(zp.complex.bounding().size() == 2);
  CHECK(zp.complex.bounding()[0].normal == IVec{1, 0});
  CHECK(zp.complex.bounding()[1].normal == IVec{0, 1});
  REQUIRE(zp.complex.internal().size() == 1);
  CHECK(zp.complex.internal()[0].normal == IVec{1, 0});
  CHECK(zp.dropped_bounding.empty());
  CHECK(zp.spec.A == IVec{1, 0});
  CHECK(zp.spec.B == IVec{1, 2});

  CHECK_THROWS_AS((void)build_complex_from_weights(gl2(), std::nullopt), schema_error);
  WeightDatum bad = gl2();
  bad.alpha0 = {0, 1};
  CHECK_THROWS_AS(
      (void)build_complex_from_weights(bad, build_root_system(CartanType::A, 1)),
      schema_error);
}

TEST_CASE("build_complex_from_weights on a pure torus") {
  ZetaProblem zp = build_complex_from_weights(torus_datum(), std::nullopt);
  CHECK(zp.complex.bounding().size() == 3);
  CHECK(!zp.roots);
  CHECK(zp.spec.A == IVec{0, 0});
  CHECK(zp.spec.B == IVec{4, 0});
}

TEST_CASE("choose_dual_basis") {
  DualBasisReport r2 = choose_dual_basis(gl2());
  CHECK(r2.unimodular);
  CHECK(r2.a0 == IVec{0, 1});
  CHECK(r2.transformed.weights == gl2().weights);

  DualBasisReport r3 = choose_dual_basis(gl3());
  CHECK(r3.unimodular);
  CHECK(r3.a0 == IVec{0, 0, 1});

  // The skewed coordinates come back to the standard ones.
  DualBasisReport rs = choose_dual_basis(gl2_skewed());
  CHECK(rs.unimodular);
  CHECK(rs.transformed.weights == gl2().weights);
  CHECK(rs.transformed.det_rho == IVec{1, 2});

  CHECK_THROWS_AS((void)choose_dual_basis(torus_datum()), hypothesis_error);
}

TEST_CASE("weighted_zeta on GL2 and GL3 matches the classical local factors") {
  ZetaProblem z2 = build_complex_from_weights(gl2(), build_root_system(CartanType::A, 1));
  FactoredRational g2 = weighted_zeta(z2);
  CHECK(eq_rational(g2, classical_gl(2)));

  ZetaProblem z3 = build_complex_from_weights(gl3(), build_root_system(CartanType::A, 2));
  FactoredRational g3 = weighted_zeta(z3);
  CHECK(eq_rational(g3, classical_gl(3)));

  // Independent truncated expansion of the closed form.
  TruncatedSeries s = series_expand(g2, 12);
  TruncatedSeries want;
  want.order = 12;
  for (long e1 = 0; e1 <= 12; ++e1)
    for (long e2 = 0; e1 + e2 <= 12; ++e2) want.add(e1 + e2, e2, 1);
  CHECK(compare(s, want).equal);
}

TEST_CASE("weighted_zeta of the origin cone is 1") {
  ZetaProblem zp{CellComplex(1, {{1}, {-1}}, {}),
                 GenFunSpec{{0}, {1}, PiecewiseWeight::zero_weight()},
                 std::nullopt,
                 0,
                 1,
                 {}};
  CHECK(eq_rational(weighted_zeta(zp), FactoredRational::one()));
}

TEST_CASE("fneq_detect") {
  auto one = fneq_detect(FactoredRational::one());
  REQUIRE(one);
  CHECK(one->sign == 1);
  CHECK(one->a == 0);
  CHECK(one->b == 0);

  auto g2 = fneq_detect(classical_gl(2));
  REQUIRE(g2);
  CHECK(g2->sign == 1);
  CHECK(g2->a == 1);
  CHECK(g2->b == -2);

  auto g3 = fneq_detect(classical_gl(3));
  REQUIRE(g3);
  CHECK(g3->sign == -1);
  CHECK(g3->a == 3);
  CHECK(g3->b == -3);

  CHECK(!fneq_detect(fr({{1, 0, 0}, {1, 0, 1}, {1, 1, 2}}, {{0, 3}})));
  CHECK_THROWS_AS((void)fneq_detect(FactoredRational()), std::invalid_argument);
}

TEST_CASE("verify_main_theorem on GL2") {
  MainTheoremReport rep =
      verify_main_theorem(gl2(), build_root_system(CartanType::A, 1));
  CHECK(rep.pass());
  CHECK(rep.expected.sign == 1);
  CHECK(rep.expected.a == 1);
  CHECK(rep.expected.b == -2);
}

TEST_CASE("verify_main_theorem on GL3") {
  MainTheoremReport rep =
      verify_main_theorem(gl3(), build_root_system(CartanType::A, 2));
  CHECK(rep.pass());
  CHECK(rep.expected.sign == -1);
  CHECK(rep.expected.a == 3);
  CHECK(rep.expected.b == -3);
}

TEST_CASE("verify_main_theorem after a change of basis") {
  MainTheoremReport rep =
      verify_main_theorem(gl2_skewed(), build_root_system(CartanType::A, 1));
  CHECK(rep.pass());
}

TEST_CASE("torus_example geometry") {
  ZetaProblem zp = torus_example(2, 3);
  REQUIRE(zp.complex.bounding().size() == 3);
  CHECK(zp.complex.bounding()[0].normal == IVec{1, 0});
  CHECK(zp.complex.bounding()[1].normal == IVec{0, 1});
  CHECK(zp.complex.bounding()[2].normal == IVec{3, -1});
  CHECK(zp.spec.B == IVec{4, 0});
  CHECK(validate_complex(zp.complex).rays == std::vector<IVec>{{1, 0}, {1, 3}});

  ZetaProblem z3 = torus_example(3, 3);
  CHECK(validate_complex(z3.complex).rays ==
        std::vector<IVec>{{0, 1, 0}, {1, 0, 0}, {1, 1, 3}});

  CHECK_THROWS_AS((void)torus_example(1, 3), schema_error);
  CHECK_THROWS_AS((void)torus_example(2, 2), schema_error);
}

TEST_CASE("torus closed form structure") {
  TorusClosedForm cf = torus_closed_form(2, 3);
  CHECK(cf.formal.nvars == 2);
  CHECK(cf.formal.num.size() == 3);
  CHECK(cf.formal.num.count(std::vector<long>{0, 0}));
  CHECK(cf.formal.num.count(std::vector<long>{1, 1}));
  CHECK(cf.formal.num.count(std::vector<long>{1, 2}));
  REQUIRE(cf.formal.den.size() == 2);
  CHECK(cf.formal.den[0] == std::vector<long>{1, 0});
  CHECK(cf.formal.den[1] == std::vector<long>{1, 3});
  // Under X1 -> t^4, X2 -> 1 this is (1 + 2t^4)/(1 - t^4)^2.
  CHECK(eq_rational(cf.specialized, fr({{1, 0, 0}, {2, 0, 4}}, {{0, 4}, {0, 4}})));

  TorusClosedForm c24 = torus_closed_form(2, 4);
  CHECK(c24.formal.num.size() == 4);
  TorusClosedForm c33 = torus_closed_form(3, 3);
  CHECK(c33.formal.num.size() == 3);
  CHECK(c33.formal.den.size() == 3);
}

TEST_CASE("torus family: engine agrees with the closed form, no functional equation") {
  for (int d = 2; d <= 3; ++d)
    for (int k = 3; k <= 5; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      FactoredRational z = weighted_zeta(torus_example(d, k));
      CHECK(eq_rational(z, torus_closed_form(d, k).specialized));
      CHECK(!fneq_detect(z));
    }
}
