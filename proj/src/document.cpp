#include "latzeta/document.hpp"

#include <algorithm>

namespace latzeta {

namespace {

long parse_int(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    // Arbitrary precision transmitted as a string; must fit long here.
    try {
      size_t pos = 0;
      long v = std::stoll(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw schema_error(std::string(what) + ": expected an integer");
}

std::vector<IVec> parse_ivecs(const json& j, const char* what) {
  if (!j.is_array()) throw schema_error(std::string(what) + ": expected an array");
  std::vector<IVec> out;
  for (const auto& e : j) out.push_back(parse_ivec(e, what));
  return out;
}

}  // namespace

IVec parse_ivec(const json& j, const char* what) {
  if (!j.is_array()) throw schema_error(std::string(what) + ": expected an integer array");
  IVec v;
  for (const auto& e : j) v.push_back(parse_int(e, what));
  return v;
}

json ivec_json(const IVec& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

ProblemDocument parse_document(const json& j) {
  if (!j.is_object()) throw schema_error("document: expected an object");
  ProblemDocument doc;

  int sources = 0;
  if (j.contains("complex")) {
    ++sources;
    const json& c = j.at("complex");
    if (!c.is_object() || !c.contains("dim") || !c.contains("bounding"))
      throw schema_error("complex: requires dim and bounding");
    int dim = (int)parse_int(c.at("dim"), "complex.dim");
    std::vector<IVec> bounding = parse_ivecs(c.at("bounding"), "complex.bounding");
    std::vector<IVec> internal =
        c.contains("internal") ? parse_ivecs(c.at("internal"), "complex.internal")
                               : std::vector<IVec>{};
    try {
      doc.complex.emplace(dim, bounding, internal);
    } catch (const schema_error&) {
      throw;
    }
  }
  if (j.contains("weights")) {
    ++sources;
    const json& w = j.at("weights");
    if (!w.is_object()) throw schema_error("weights: expected an object");
    WeightDatum wd;
    wd.l = (int)parse_int(w.at("l"), "weights.l");
    wd.d = (int)parse_int(w.at("d"), "weights.d");
    wd.r = (int)parse_int(w.at("r"), "weights.r");
    wd.weights = parse_ivecs(w.at("weights"), "weights.weights");
    for (const auto& block : w.at("components")) {
      std::vector<int> b;
      for (const auto& e : block) b.push_back((int)parse_int(e, "weights.components"));
      wd.components.push_back(std::move(b));
    }
    wd.contragredient_dominant =
        parse_ivecs(w.at("contragredient_dominant"), "weights.contragredient_dominant");
    wd.fundamental_roots = parse_ivecs(w.at("fundamental_roots"), "weights.fundamental_roots");
    wd.det_rho = parse_ivec(w.at("det_rho"), "weights.det_rho");
    wd.alpha0 = parse_ivec(w.at("alpha0"), "weights.alpha0");
    doc.weights = std::move(wd);
  }
  if (j.contains("torus_example")) {
    ++sources;
    const json& t = j.at("torus_example");
    doc.torus = {(int)parse_int(t.at("d"), "torus_example.d"),
                 (int)parse_int(t.at("k"), "torus_example.k")};
  }
  if (sources != 1)
    throw schema_error("document: exactly one of complex, weights, torus_example required");

  if (j.contains("spec")) {
    const json& s = j.at("spec");
    if (!s.is_object()) throw schema_error("spec: expected an object");
    if (s.contains("A")) doc.A = parse_ivec(s.at("A"), "spec.A");
    if (s.contains("B")) doc.B = parse_ivec(s.at("B"), "spec.B");
    if (s.contains("gamma") && !(s.at("gamma").is_string() && s.at("gamma") == "zero")) {
      const json& g = s.at("gamma");
      if (!g.is_object()) throw schema_error("spec.gamma: expected \"zero\" or an object");
      std::map<std::string, IVec> raw;
      for (const auto& [key, val] : g.items()) raw[key] = parse_ivec(val, "spec.gamma");
      doc.gamma_raw = std::move(raw);
    }
  }

  if (j.contains("root_system")) {
    const json& r = j.at("root_system");
    if (r.contains("simple_roots")) {
      doc.root_system =
          RootSystem::from_simple_roots(parse_ivecs(r.at("simple_roots"), "root_system"));
    } else if (r.contains("type") && r.contains("rank")) {
      doc.root_system = build_root_system(parse_cartan_type(r.at("type").get<std::string>()),
                                          (int)parse_int(r.at("rank"), "root_system.rank"));
    } else {
      throw schema_error("root_system: requires type+rank or simple_roots");
    }
  }

  if (j.contains("options")) {
    const json& o = j.at("options");
    if (o.contains("series_order"))
      doc.series_order = parse_int(o.at("series_order"), "options.series_order");
    if (o.contains("region_I")) {
      std::set<int> region;
      for (const auto& e : o.at("region_I")) {
        long i = parse_int(e, "options.region_I");
        if (i < 1) throw schema_error("options.region_I: indices are 1-based");
        region.insert((int)(i - 1));
      }
      doc.region = std::move(region);
    }
  }
  return doc;
}

json serialize_document(const ProblemDocument& doc) {
  json j = json::object();
  if (doc.complex) {
    json c;
    c["dim"] = doc.complex->dim();
    json b = json::array(), k = json::array();
    for (const auto& h : doc.complex->bounding()) b.push_back(ivec_json(h.normal));
    for (const auto& h : doc.complex->internal()) k.push_back(ivec_json(h.normal));
    c["bounding"] = std::move(b);
    if (!k.empty()) c["internal"] = std::move(k);
    j["complex"] = std::move(c);
  }
  if (doc.weights) {
    const WeightDatum& wd = *doc.weights;
    json w;
    w["l"] = wd.l;
    w["d"] = wd.d;
    w["r"] = wd.r;
    json ws = json::array();
    for (const auto& v : wd.weights) ws.push_back(ivec_json(v));
    w["weights"] = std::move(ws);
    json comps = json::array();
    for (const auto& b : wd.components) {
      json bj = json::array();
      for (int i : b) bj.push_back(i);
      comps.push_back(std::move(bj));
    }
    w["components"] = std::move(comps);
    json cd = json::array(), fr = json::array();
    for (const auto& v : wd.contragredient_dominant) cd.push_back(ivec_json(v));
    for (const auto& v : wd.fundamental_roots) fr.push_back(ivec_json(v));
    w["contragredient_dominant"] = std::move(cd);
    w["fundamental_roots"] = std::move(fr);
    w["det_rho"] = ivec_json(wd.det_rho);
    w["alpha0"] = ivec_json(wd.alpha0);
    j["weights"] = std::move(w);
  }
  if (doc.torus) j["torus_example"] = {{"d", doc.torus->first}, {"k", doc.torus->second}};

  if (doc.A || doc.B || doc.gamma_raw) {
    json s = json::object();
    if (doc.A) s["A"] = ivec_json(*doc.A);
    if (doc.B) s["B"] = ivec_json(*doc.B);
    if (doc.gamma_raw) {
      json g = json::object();
      for (const auto& [key, val] : *doc.gamma_raw) g[key] = ivec_json(val);
      s["gamma"] = std::move(g);
    } else {
      s["gamma"] = "zero";
    }
    j["spec"] = std::move(s);
  }
  if (doc.root_system) {
    json r;
    json sr = json::array();
    for (const auto& v : doc.root_system->simple_roots) sr.push_back(ivec_json(v));
    r["simple_roots"] = std::move(sr);
    j["root_system"] = std::move(r);
  }
  if (doc.series_order || doc.region) {
    json o = json::object();
    if (doc.series_order) o["series_order"] = *doc.series_order;
    if (doc.region) {
      json ri = json::array();
      for (int i : *doc.region) ri.push_back(i + 1);
      o["region_I"] = std::move(ri);
    }
    j["options"] = std::move(o);
  }
  return j;
}

namespace {

PiecewiseWeight resolve_gamma(const std::optional<std::map<std::string, IVec>>& raw,
                              const CellComplex& cx) {
  PiecewiseWeight g;
  if (!raw) return g;
  g.zero = false;
  for (const auto& [key, val] : *raw) g.assignment.emplace(SignVector::parse(key, cx), val);
  return g;
}

}  // namespace

ResolvedProblem resolve(const ProblemDocument& doc) {
  if (doc.complex) {
    if (!doc.B) throw schema_error("spec.B: required for a raw complex");
    const CellComplex& cx = *doc.complex;
    IVec a = doc.A ? *doc.A : IVec(cx.dim(), 0);
    GenFunSpec spec{a, *doc.B, resolve_gamma(doc.gamma_raw, cx)};
    int l = doc.root_system ? doc.root_system->rank : 0;
    if (l > cx.dim() || (doc.root_system && l > (int)cx.bounding().size()))
      throw schema_error("root_system: rank exceeds the bounding hyperplanes");
    return {ZetaProblem{cx, std::move(spec), doc.root_system, l, cx.dim() - l, {}}};
  }
  if (doc.weights) {
    if (doc.A || doc.B)
      throw schema_error("spec.A/spec.B: derived from weight data, must be absent");
    ZetaProblem zp = build_complex_from_weights(*doc.weights, doc.root_system);
    zp.spec.gamma = resolve_gamma(doc.gamma_raw, zp.complex);
    return {std::move(zp)};
  }
  if (doc.A || doc.B || doc.gamma_raw || doc.root_system)
    throw schema_error("torus_example: spec and root_system must be absent");
  return {torus_example(doc.torus->first, doc.torus->second)};
}

namespace {

// Plain numbers up to the 53-bit safe range, strings beyond it.
json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) {
    long x = v.get_si();
    if (x > -(1LL << 53) && x < (1LL << 53)) return x;
  }
  return v.get_str();
}

}  // namespace

json to_json(const FactoredRational& x) {
  json num = json::array();
  for (const auto& [e, c] : x.numerator().terms()) {
    json row = json::array();
    row.push_back(bigint_json(BigInt(c.get_num())));
    row.push_back(bigint_json(BigInt(c.get_den())));
    row.push_back(e.q);
    row.push_back(e.t);
    num.push_back(std::move(row));
  }
  // Terms iterate in (t, q) order already; keep the serialization explicit.
  json den = json::array();
  for (const auto& f : x.denominator()) den.push_back(json::array({f.a, f.b}));
  return json{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

json to_json(const TruncatedSeries& s) {
  json a = json::array();
  for (const auto& [t, row] : s.coeff) {
    json coeff = json::array();
    for (const auto& [q, c] : row)
      coeff.push_back(
          json::array({bigint_json(BigInt(c.get_num())), bigint_json(BigInt(c.get_den())), q}));
    a.push_back(json{{"t", t}, {"coeff", std::move(coeff)}});
  }
  return a;
}

json to_json(const std::optional<FneqCertificate>& c) {
  if (!c) return nullptr;
  return json{{"sign", c->sign}, {"a", c->a}, {"b", c->b}};
}

}  // namespace latzeta
