#pragma once

#include <json.hpp>

#include "latzeta/oracle.hpp"
#include "latzeta/zeta.hpp"

namespace latzeta {

using nlohmann::json;

/// One problem per document: exactly one of a raw complex, weight data, or a
/// torus-family instance, plus the optional spec and options.
struct ProblemDocument {
  std::optional<CellComplex> complex;
  std::optional<WeightDatum> weights;
  std::optional<std::pair<int, int>> torus;  // (d, k)

  std::optional<IVec> A;
  std::optional<IVec> B;
  /// Raw gamma section: sign-vector string -> C_F. Keys are resolved against
  /// the built complex; absent means the zero weight.
  std::optional<std::map<std::string, IVec>> gamma_raw;
  std::optional<RootSystem> root_system;

  std::optional<long> series_order;
  std::optional<std::set<int>> region;  // 0-based internally, 1-based in JSON
};

ProblemDocument parse_document(const json& j);
json serialize_document(const ProblemDocument& doc);

/// The computation target a document resolves to.
struct ResolvedProblem {
  ZetaProblem zp;
};

/// Builds the cell complex and spec behind the document: weight data and
/// torus instances go through the zeta constructions, raw complexes require
/// A and B in the spec section.
ResolvedProblem resolve(const ProblemDocument& doc);

/// Canonical serialization: numerator as [num, den, e_q, e_t] rows sorted by
/// (e_t, e_q); denominator as sorted [a, b] pairs.
json to_json(const FactoredRational& x);
json to_json(const TruncatedSeries& s);
json to_json(const std::optional<FneqCertificate>& c);

IVec parse_ivec(const json& j, const char* what);
json ivec_json(const IVec& v);

}  // namespace latzeta
