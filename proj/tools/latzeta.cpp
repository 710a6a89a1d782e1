#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "latzeta/document.hpp"

using namespace latzeta;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitVerification = 4;

ProblemDocument load_document(const std::string& path, const std::vector<int>& region_flag,
                              long order_flag, const std::string& gamma_flag) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw schema_error(std::string("invalid JSON: ") + e.what());
  }
  ProblemDocument doc = parse_document(j);
  if (!region_flag.empty()) {
    std::set<int> region;
    for (int i : region_flag) {
      if (i < 1) throw schema_error("--region: indices are 1-based");
      region.insert(i - 1);
    }
    doc.region = std::move(region);
  }
  if (order_flag >= 0) doc.series_order = order_flag;
  if (!gamma_flag.empty()) {
    if (gamma_flag == "zero") {
      doc.gamma_raw.reset();
    } else {
      std::ifstream gin(gamma_flag);
      if (!gin) throw schema_error("cannot open gamma file " + gamma_flag);
      json g;
      try {
        g = json::parse(gin);
      } catch (const json::exception& e) {
        throw schema_error(std::string("invalid gamma JSON: ") + e.what());
      }
      if (!g.is_object()) throw schema_error("gamma file: expected an object");
      std::map<std::string, IVec> raw;
      for (const auto& [key, val] : g.items()) raw[key] = parse_ivec(val, "gamma");
      doc.gamma_raw = std::move(raw);
    }
  }
  return doc;
}

std::set<int> region_of(const ProblemDocument& doc, const ZetaProblem& zp) {
  std::set<int> I = doc.region.value_or(std::set<int>{});
  for (int i : I)
    if (i >= (int)zp.complex.bounding().size())
      throw schema_error("region index exceeds the bounding hyperplanes");
  return I;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int cmd_genfun(const ProblemDocument& doc) {
  ResolvedProblem rp = resolve(doc);
  GenFunEngine engine(rp.zp.complex, rp.zp.spec);
  FactoredRational e = engine.region_genfun(region_of(doc, rp.zp));
  emit(json{{"genfun", to_json(e)}, {"rendering", e.to_string_qs()}});
  return 0;
}

int cmd_reciprocity(const ProblemDocument& doc) {
  ResolvedProblem rp = resolve(doc);
  ReciprocityVerdict v =
      check_reciprocity(rp.zp.complex, region_of(doc, rp.zp), rp.zp.spec);
  emit(json{{"holds", v.holds}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
  return v.holds ? 0 : kExitVerification;
}

int cmd_zeta(const ProblemDocument& doc) {
  ResolvedProblem rp = resolve(doc);
  FactoredRational z = weighted_zeta(rp.zp);
  emit(json{{"zeta", to_json(z)}, {"rendering", z.to_string_qs()}});
  return 0;
}

int cmd_fneq(const ProblemDocument& doc) {
  ResolvedProblem rp = resolve(doc);
  auto cert = fneq_detect(weighted_zeta(rp.zp));
  emit(json{{"functional_equation", to_json(cert)}});
  return 0;
}

int cmd_verify(const ProblemDocument& doc) {
  if (!doc.weights) throw schema_error("verify: requires a weights document");
  MainTheoremReport rep = verify_main_theorem(*doc.weights, doc.root_system,
                                              PiecewiseWeight::zero_weight());
  emit(json{{"unimodular", rep.dual.unimodular},
            {"a0", ivec_json(rep.dual.a0)},
            {"translation", rep.translation},
            {"alpha0_pairing", rep.alpha0_pairing},
            {"det_rho_pairing", rep.det_rho_pairing},
            {"certificate", to_json(rep.certificate)},
            {"expected", to_json(std::optional<FneqCertificate>(rep.expected))},
            {"certificate_matches", rep.certificate_matches},
            {"pass", rep.pass()}});
  return rep.pass() ? 0 : kExitVerification;
}

int cmd_expand(const ProblemDocument& doc) {
  ResolvedProblem rp = resolve(doc);
  long n = doc.series_order.value_or(12);
  std::set<int> I = region_of(doc, rp.zp);
  GenFunEngine engine(rp.zp.complex, rp.zp.spec);
  TruncatedSeries expanded = series_expand(engine.region_genfun(I), n);
  TruncatedSeries summed = lattice_sum_truncated(rp.zp.complex, I, rp.zp.spec, n);
  SeriesMismatch cmp = compare(summed, expanded);
  json out{{"series", to_json(summed)}, {"equal", cmp.equal}};
  if (!cmp.equal) out["first_mismatch_degree"] = cmp.degree;
  emit(out);
  return cmp.equal ? 0 : kExitVerification;
}

int cmd_torus(int d, int k) {
  ProblemDocument doc;
  doc.torus = {d, k};
  if (d < 2 || k < 3) throw schema_error("torus: requires d >= 2, k >= 3");
  emit(serialize_document(doc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-point generating functions and weighted local zeta functions"};
  app.require_subcommand(1);

  std::string doc_path;
  std::vector<int> region_flag;
  long order_flag = -1;
  std::string gamma_flag;
  int torus_d = 2, torus_k = 3;

  auto add_doc = [&](CLI::App* cmd, bool with_region, bool with_order) {
    cmd->add_option("document", doc_path, "problem document (JSON)")->required();
    if (with_region)
      cmd->add_option("--region", region_flag, "region I as 1-based bounding indices");
    if (with_order) cmd->add_option("--order", order_flag, "series truncation order");
    cmd->add_option("--gamma", gamma_flag, "weight: zero or a JSON file");
    return cmd;
  };

  auto* c_genfun = add_doc(app.add_subcommand("genfun", "generating function of a region"),
                           true, false);
  auto* c_recip =
      add_doc(app.add_subcommand("reciprocity", "check the reciprocity identity"), true, false);
  auto* c_zeta = add_doc(app.add_subcommand("zeta", "weighted zeta function"), false, false);
  auto* c_fneq =
      add_doc(app.add_subcommand("fneq", "detect a functional equation"), false, false);
  auto* c_verify =
      add_doc(app.add_subcommand("verify", "verify the predicted functional equation"), false,
              false);
  auto* c_expand = add_doc(
      app.add_subcommand("expand", "truncated series, cross-checked against the lattice sum"),
      true, true);
  auto* c_torus = app.add_subcommand("torus", "emit a torus-family document");
  c_torus->add_option("-d", torus_d, "torus rank")->required();
  c_torus->add_option("-k", torus_k, "family parameter")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_torus->parsed()) return cmd_torus(torus_d, torus_k);
    ProblemDocument doc = load_document(doc_path, region_flag, order_flag, gamma_flag);
    if (c_genfun->parsed()) return cmd_genfun(doc);
    if (c_recip->parsed()) return cmd_reciprocity(doc);
    if (c_zeta->parsed()) return cmd_zeta(doc);
    if (c_fneq->parsed()) return cmd_fneq(doc);
    if (c_verify->parsed()) return cmd_verify(doc);
    if (c_expand->parsed()) return cmd_expand(doc);
  } catch (const schema_error& e) {
    std::cerr << "schema error: " << e.what() << std::endl;
    return kExitSchema;
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << std::endl;
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
