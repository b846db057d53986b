#include "apedwards/json_io.hpp"

namespace apedwards {

namespace {

Json ints(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json rats(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json stats_json(const SearchStats& s) {
  return Json{{"pairs", s.pairs},
              {"sieve_rejected", s.sieve_rejected},
              {"square_tests", s.square_tests},
              {"seconds", s.seconds},
              {"sieve_primes", s.sieve_primes_used}};
}

}  // namespace

Json to_json(const WPoint& p) {
  if (p.infinity) return "O";
  return Json::array({p.x.str(), p.y.str()});
}

Json to_json(const WeierstrassCurve& c) {
  Json j{{"equation", c.str()}, {"c2", c.c2().str()}, {"c4", c.c4().str()}, {"c6", c.c6().str()}};
  if (c.is_short()) {
    j["A"] = c.c4().str();
    j["B"] = c.c6().str();
  }
  return j;
}

Json to_json(const APSpec& spec) {
  Json terms = Json::array();
  for (long k = 0; k < spec.m && k < 16; ++k) terms.push_back((spec.a + Rat(k) * spec.q).str());
  return Json{{"kind", kind_name(spec.kind)},
              {"a", spec.a.str()},
              {"q", spec.q.str()},
              {"m", spec.m},
              {"model_a", spec.model_a().str()},
              {"terms", terms},
              {"terms_truncated", spec.m > 16}};
}

Json to_json(const IndexSets& sets) {
  Json removed = Json::array();
  for (const auto& r : sets.removed) removed.push_back({{"k", r.k}, {"value", r.sign}});
  return Json{{"S", sets.S}, {"S_star", sets.S_star}, {"removed", removed}, {"effective", sets.effective}};
}

Json to_json(const ModuliObject& obj) {
  Json j{{"type", moduli_type_name(obj.type)},
         {"label", obj.label},
         {"indices", obj.indices},
         {"a", obj.a.str()},
         {"q", obj.q.str()}};
  j["genus"] = obj.genus ? Json(*obj.genus) : Json(nullptr);
  return j;
}

Json to_json(const QuadricModel& model) {
  Json rows = Json::array();
  for (const auto& r : model.quadrics) rows.push_back(ints(r));
  Json j{{"variables", model.variables}, {"quadrics", rows}};
  if (!model.indices.empty()) {
    j["indices"] = model.indices;
    j["a"] = model.a.str();
    j["q"] = model.q.str();
  }
  return j;
}

Json to_json(const RankCertificate& cert) {
  Json chain = Json::array();
  chain.push_back({{"step", "input"}, {"curve", to_json(cert.curve)}, {"point", to_json(cert.point)}});
  chain.push_back({{"step", "integral"},
                   {"shift", cert.integral.map.shift.str()},
                   {"u", cert.integral.map.u.str()},
                   {"map", "(x, y) -> (u^2 (x + shift), u^3 y)"},
                   {"curve", to_json(cert.integral.curve)},
                   {"point", to_json(cert.integral.map.apply(cert.point))}});
  if (cert.reference_model) {
    chain.push_back({{"step", "reference"},
                     {"u", cert.reference_u->str()},
                     {"map", "(x, y) -> (u^2 x, u^3 y) from the integral model"},
                     {"curve", to_json(*cert.reference_model)},
                     {"point", to_json(cert.model_point)}});
  }
  Json nl{{"decided", cert.nagell_lutz.decided}, {"infinite_order", cert.nagell_lutz.infinite_order}};
  if (cert.nagell_lutz.decided) {
    nl["n"] = cert.nagell_lutz.n;
    nl["multiple"] = to_json(cert.nagell_lutz.multiple);
  }
  Json mz{{"applicable", cert.mazur.applicable}, {"infinite_order", cert.mazur.infinite_order}};
  Json ys = Json::array();
  for (const auto& p : cert.mazur.multiples) ys.push_back(p.infinity ? Json("O") : Json(p.y.str()));
  mz["y_of_nQ"] = ys;
  return Json{{"method", cert_method_name(cert.method)},
              {"infinite_order", cert.infinite_order},
              {"verdicts_agree", cert.verdicts_agree},
              {"chain", chain},
              {"nagell_lutz", nl},
              {"mazur", mz}};
}

Json to_json(const SearchResult& res) {
  Json pts = Json::array();
  for (const auto& p : res.points) pts.push_back(ints(p));
  Json nt = Json::array();
  for (const auto& p : res.nontrivial()) nt.push_back(ints(p));
  return Json{{"points", res.points.size()},
              {"trivial", res.trivial_count},
              {"nontrivial", nt},
              {"all_points", pts},
              {"exhaustive", res.exhaustive},
              {"shards_total", res.shards_total},
              {"shards_done", res.shards_done},
              {"shards_resumed", res.shards_resumed},
              {"stats", stats_json(res.stats)}};
}

Json to_json(const ScanReport& rep) {
  Json hits = Json::array();
  for (const auto& h : rep.hits) {
    Json pts = Json::array();
    for (const auto& p : h.points) pts.push_back(ints(p));
    hits.push_back({{"q", h.q.str()}, {"points", pts}});
  }
  return Json{{"kind", kind_name(rep.kind)},
              {"q_height", rep.q_height},
              {"point_bound", rep.point_bound},
              {"q_total", rep.q_total},
              {"q_admissible", rep.q_admissible},
              {"q_scanned", rep.q_scanned},
              {"hits", hits},
              {"stats", stats_json(rep.stats)}};
}

Json to_json(const FindDResult& res) {
  Json vals = Json::array();
  for (const auto& f : res.values) {
    Json w = Json::array();
    for (const auto& y : f.check.witnesses) w.push_back(y ? Json(y->str()) : Json(nullptr));
    Json v{{"d", f.d.str()}, {"verified", f.check.ok}, {"y", w}};
    if (f.t) v["t"] = f.t->str();
    if (f.multiple) v["multiple"] = f.multiple;
    if (!f.point.empty()) v["point"] = rats(f.point);
    vals.push_back(v);
  }
  return Json{{"object", to_json(res.object)},
              {"a", res.a.str()},
              {"q", res.q.str()},
              {"m", res.m},
              {"indices", res.indices},
              {"explicit_indices", res.explicit_indices},
              {"all_verified", res.all_verified},
              {"values", vals}};
}

Json classification_json(const APSpec& spec) {
  return Json{{"progression", to_json(spec)}, {"index_sets", to_json(index_sets(spec))}, {"moduli", to_json(describe(spec))}};
}

}  // namespace apedwards
