#include "rainbow/report.hpp"

namespace rainbow {

Json params_json(const TheoremParams& params) {
  Json j = Json::object();
  if (params.k) j["k"] = *params.k;
  if (params.t) j["t"] = *params.t;
  if (params.d) j["d"] = *params.d;
  return j;
}

Json generator_json(const GenSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  switch (spec.family) {
    case Family::CompleteRandom:
      j["n"] = spec.n;
      j["palette"] = spec.palette;
      break;
    case Family::GnpRandom:
      j["n"] = spec.n;
      j["p"] = spec.p;
      j["palette"] = spec.palette;
      break;
    case Family::ProperBipartite: j["m"] = spec.n; break;
    case Family::MatchingK4: break;
    case Family::TargetedDelta:
      j["n"] = spec.n;
      j["target_delta"] = spec.target_delta;
      break;
    case Family::Lexical:
      j["n"] = spec.n;
      j["recolor"] = spec.recolor;
      break;
  }
  return j;
}

Json witness_json(const RainbowWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["vertices"] = w.vertices;
  j["colors"] = w.colors;
  return j;
}

namespace {

Json violations_json(const std::vector<Violation>& violations) {
  Json list = Json::array();
  for (const Violation& v : violations) {
    Json item;
    item["seed"] = v.seed;
    item["ecg"] = v.ecg;
    item["note"] = v.note;
    list.push_back(std::move(item));
  }
  return list;
}

Json counts_json(std::size_t met, std::size_t verified, std::size_t indeterminate,
                 std::size_t violations) {
  Json j;
  j["hypothesis_met"] = met;
  j["verified"] = verified;
  j["indeterminate"] = indeterminate;
  j["violations"] = violations;
  return j;
}

Json checks_json(const std::vector<AuditCheck>& checks) {
  Json list = Json::array();
  for (const AuditCheck& c : checks) {
    Json item;
    item["name"] = c.name;
    item["applicable"] = c.applicable;
    item["passed"] = c.passed;
    item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  return list;
}

}  // namespace

Json report_json(const TheoremReport& r, bool with_timing) {
  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = to_string(r.theorem);
  j["params"] = params_json(r.params);
  j["generator"] = generator_json(r.generator);
  j["trials"] = r.trials;
  j["counts"] = counts_json(r.hypothesis_met, r.verified, r.indeterminate, r.violations.size());
  j["violations"] = violations_json(r.violations);
  j["budget"] = r.budget;
  j["seeds"] = Json{{"base", r.base_seed}};
  j["timing_ms"] = with_timing ? r.timing_ms : 0;
  return j;
}

Json report_json(const MiningReport& r, bool with_timing) {
  const MiningConfig& c = r.config;
  Json gen;
  gen["family"] = c.mode == MiningMode::Exhaustive ? "exhaustive" : "random";
  gen["n_min"] = c.n_min;
  gen["n_max"] = c.n_max;
  gen["palette_max"] = c.palette_max;
  if (c.mode == MiningMode::Random) gen["p"] = c.edge_probability;
  Json probe;
  probe["found"] = r.tightness.found;
  if (r.tightness.found) {
    probe["max_color_degree"] = r.tightness.max_color_degree;
    probe["n"] = r.tightness.n;
    probe["ecg"] = r.tightness.ecg;
  }
  gen["tightness"] = std::move(probe);

  Json j;
  j["schema"] = kReportSchema;
  j["theorem"] = to_string(c.theorem);
  j["params"] = params_json(c.params);
  j["generator"] = std::move(gen);
  j["trials"] = r.instances;
  j["counts"] = counts_json(r.hypothesis_met, r.verified, r.indeterminate, r.violations.size());
  j["violations"] = violations_json(r.violations);
  j["budget"] = c.budget.node_limit;
  j["seeds"] = Json{{"base", c.seed}};
  j["timing_ms"] = with_timing ? r.timing_ms : 0;
  return j;
}

Json audit_json(const PathAuditReport& r) {
  auto colors = [](const ColorSet& s) { return Json(s.items()); };
  Json j;
  j["schema"] = kAuditSchema;
  j["k"] = r.k;
  j["path"] = witness_json(r.path);
  j["reversed"] = r.reversed;
  j["applicable"] = r.applicable;
  j["long_cycle"] = to_string(r.long_cycle);
  j["path_is_longest"] = r.path_is_longest ? Json(*r.path_is_longest) : Json(nullptr);
  j["longest_length"] = r.longest_length;

  Json sets;
  sets["A1"] = colors(r.a1);
  sets["A2"] = colors(r.a2);
  sets["B1"] = colors(r.b1);
  sets["B2"] = colors(r.b2);
  sets["B3"] = colors(r.b3);
  sets["C0"] = colors(r.c0);
  sets["C1"] = colors(r.c1);
  sets["C2"] = colors(r.c2);
  j["sets"] = std::move(sets);
  j["D"] = r.d.items();
  j["eps"] = Json{{"eps1", r.eps1}, {"eps2", r.eps2}, {"eps3", r.eps3}};
  j["lemma_checks"] = checks_json(r.lemma_checks);
  j["claim_checks"] = checks_json(r.claim_checks);

  Json ineq = Json::array();
  for (const InequalityCheck& q : r.inequalities) {
    Json item;
    item["name"] = q.name;
    item["lhs"] = q.lhs;
    if (q.middle) item["middle"] = *q.middle;
    item["rhs"] = q.rhs;
    item["holds"] = q.holds;
    ineq.push_back(std::move(item));
  }
  j["inequalities"] = std::move(ineq);
  j["notes"] = r.notes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rainbow
