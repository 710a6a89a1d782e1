#pragma once

#include <optional>

#include "latzeta/genfun.hpp"
#include "latzeta/weyl.hpp"

namespace latzeta {

/// Weight data of a faithful rational representation, all vectors in a fixed
/// basis of the character lattice Z^{l+d}.
struct WeightDatum {
  int l = 0;  // semisimple rank
  int d = 0;  // rank of the maximal central torus
  int r = 0;  // number of irreducible components
  std::vector<IVec> weights;                  // coordinates of the n weights
  std::vector<std::vector<int>> components;   // partition of [n] into r blocks
  std::vector<IVec> contragredient_dominant;  // omega_1 .. omega_r
  std::vector<IVec> fundamental_roots;        // alpha_1 .. alpha_l
  IVec det_rho;                               // sum of the weights
  IVec alpha0;                                // sum of the positive roots

  int n() const { return (int)weights.size(); }
  int m() const { return l + d; }
};

/// Checks the decomposition of every weight as -omega_i + sum c_k alpha_k
/// with c_k nonnegative integers, the span condition, and the derived
/// vectors. Throws schema_error on failure.
void validate_weight_datum(const WeightDatum& wd);

struct ZetaProblem {
  CellComplex complex;
  GenFunSpec spec;
  std::optional<RootSystem> roots;  // ambient coordinates; absent when l = 0
  int l = 0;
  int d = 0;
  std::vector<IVec> dropped_bounding;  // duplicate bounding normals removed
};

/// Builds the cell complex of the region decomposition: bounding normals
/// f(alpha_i) then -omega_j (deduplicated), internal normals from pairwise
/// weight differences. A = f(alpha_0), B = f(det rho).
ZetaProblem build_complex_from_weights(const WeightDatum& wd,
                                       std::optional<RootSystem> ambient_roots,
                                       PiecewiseWeight gamma = PiecewiseWeight::zero_weight());

struct DualBasisReport {
  bool unimodular = false;
  WeightDatum transformed;  // data rewritten in the (alpha, omega^{-1}) basis
  IVec a0;                  // (0,...,0,1,...,1) with l zeros and d ones
};

/// The r = d case: checks the (alpha_1..alpha_l, -omega_1..-omega_d) matrix
/// is a lattice basis and rewrites the datum in its coordinates, in which
/// C cap Z^m = N_0^m. Throws hypothesis_error when r != d.
DualBasisReport choose_dual_basis(const WeightDatum& wd);

/// Z(q, t) = sum over w in W of q^{-lambda(w)} E_{C_{I_w}}; one term E_{C_0}
/// when there is no Weyl part.
FactoredRational weighted_zeta(const ZetaProblem& zp);

struct FneqCertificate {
  int sign = 1;      // +1 or -1, the parity factor (-1)^m
  long a = 0;   // q-exponent
  long b = 0;   // s-coefficient: Z(q^{-1}, t^{-1}) = sign * q^{a+bs} Z
};

/// Detects Z(q^{-1}, t^{-1}) = sign * q^a t^{-b} Z as an exact identity.
std::optional<FneqCertificate> fneq_detect(const FactoredRational& z);

struct MainTheoremReport {
  DualBasisReport dual;
  bool translation = false;    // C_{[m]\I} = a0 + C_{[l]\I} on lattice boxes
  bool alpha0_pairing = false; // A . a0 = 0
  bool det_rho_pairing = false;// B . a0 = n
  bool certificate_matches = false;
  std::optional<FneqCertificate> certificate;
  FneqCertificate expected;    // ((-1)^{l+d}, |Phi+| + gamma(F_{a0}).a0, -n)

  bool pass() const {
    return dual.unimodular && translation && alpha0_pairing && det_rho_pairing &&
           certificate_matches;
  }
};

/// Verifies the predicted functional equation on an r = d instance: the
/// translation property on boxes [0,N]^m, the two pairings with a0, and the
/// exact certificate against the predicted exponents.
MainTheoremReport verify_main_theorem(const WeightDatum& wd,
                                      std::optional<RootSystem> ambient_roots,
                                      PiecewiseWeight gamma = PiecewiseWeight::zero_weight(),
                                      long box = 6);

/// The torus family: cone e_i >= 0, k e_i - e_d >= 0 (i < d) in R^d with
/// A = 0 and B = (k+1, ..., k+1, -(d-2)).
ZetaProblem torus_example(int d, int k);

struct TorusClosedForm {
  MultiGenFun formal;          // in X_1 .. X_d
  FactoredRational specialized;
};

/// (1 + X_1..X_d (1 + X_d + ... + X_d^{k-2})) /
/// ((1-X_1)...(1-X_{d-1})(1 - X_1..X_{d-1} X_d^k)), with its (q,t)
/// specialization under the torus exponent map.
TorusClosedForm torus_closed_form(int d, int k);

}  // namespace latzeta
