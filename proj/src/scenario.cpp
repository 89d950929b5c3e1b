#include "gpl/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace gpl {

namespace {

// Built-in scenario configs.  Convention note: the library acts with column
// vectors on (a:b), affine chart t = a/b.  Klein-family data (scenarios 2 and
// 3) is recorded in this chart after transporting the classical statement of
// the matrices through the coordinate swap t -> 1/t; the swap leaves the
// criterion invariant and makes the constructed parametrization match the
// classical quintic formulas verbatim.  The other scenarios are literal.

const char* kScenarioZ4Z4 = R"JSON({
  "name": "rational-z4z4",
  "comment": "two cyclic groups of order 4 on the projective line; quintic image",
  "field": {"kind": "rationals"},
  "curve": "rational",
  "mode": "inner",
  "char_not": [2, 3],
  "g1": [["1", "-1", "1", "1"]],
  "g2": [["0", "1", "-1/2", "1"]],
  "p1": ["2", "1"],
  "p2": ["-1", "1"],
  "expect": {"degree": 5, "group1": "Z/4", "group2": "Z/4"}
})JSON";

const char* kScenarioKlein = R"JSON({
  "name": "rational-klein",
  "comment": "two Klein four-groups (parameters 2 and 3), recorded in the t = a/b chart via the swap t -> 1/t; quintic image",
  "field": {"kind": "rationals"},
  "curve": "rational",
  "mode": "inner",
  "char_not": [2, 3],
  "g1": [["0", "2", "1", "0"], ["-1", "1", "-1/2", "1"]],
  "g2": [["0", "3", "1", "0"], ["-1", "1", "-1/3", "1"]],
  "p1": ["3", "1"],
  "p2": ["2", "1"],
  "expect": {"degree": 5, "group1": "(Z/2)^2", "group2": "(Z/2)^2"}
})JSON";

const char* kScenarioMixed = R"JSON({
  "name": "rational-mixed",
  "comment": "cyclic order 4 against a Klein four-group (parameter 2, swapped chart as in rational-klein); quintic image",
  "field": {"kind": "rationals"},
  "curve": "rational",
  "mode": "inner",
  "char_not": [2, 3],
  "g1": [["1", "-1", "1", "1"]],
  "g2": [["0", "2", "1", "0"], ["-1", "1", "-1/2", "1"]],
  "p1": ["2", "1"],
  "p2": ["-1", "1"],
  "expect": {"degree": 5, "group1": "Z/4", "group2": "(Z/2)^2"}
})JSON";

const char* kScenarioZ5Z5 = R"JSON({
  "name": "rational-z5z5",
  "comment": "two cyclic groups of order 5 over Q(a) with a^2 + a - 1 = 0; sextic image",
  "field": {"kind": "extension", "minpoly": [-1, 1, 1]},
  "curve": "rational",
  "mode": "inner",
  "char_not": [2],
  "g1": [["1", "-1", "1", ["0", "-1"]]],
  "g2": [["0", "1", ["-1", "1"], "1"]],
  "p1": [["0", "1"], ["-1", "2"]],
  "p2": ["1", ["1", "1"]],
  "expect": {"degree": 6, "group1": "Z/5", "group2": "Z/5"}
})JSON";

const char* kScenarioElliptic = R"JSON({
  "name": "elliptic-fermat",
  "comment": "Fermat cubic over F_19, order-3 scaling and its conjugate involution twist; quartic image fitted through the finite-field graph",
  "field": {"kind": "prime", "p": 19},
  "curve": "fermat-cubic",
  "mode": "inner",
  "expect": {"degree": 4, "group1": "Z/3", "group2": "Z/3"}
})JSON";

const std::map<std::string, const char*>& builtin_map() {
  static const std::map<std::string, const char*> m = {
      {"rational-z4z4", kScenarioZ4Z4},   {"rational-klein", kScenarioKlein},
      {"rational-mixed", kScenarioMixed}, {"rational-z5z5", kScenarioZ5Z5},
      {"elliptic-fermat", kScenarioElliptic},
  };
  return m;
}

} // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {
      "rational-z4z4", "rational-klein", "rational-mixed", "rational-z5z5", "elliptic-fermat"};
  return names;
}

std::string builtin_scenario_text(const std::string& name) {
  auto it = builtin_map().find(name);
  if (it == builtin_map().end())
    raise(Errc::ConfigError, "unknown scenario '" + name + "' (see `gpl list`)");
  return it->second;
}

ScenarioConfig builtin_scenario(const std::string& name) {
  return config_from_json(json::parse(builtin_scenario_text(name)));
}

ScenarioConfig config_from_json(const json& j) {
  if (!j.is_object()) raise(Errc::ConfigError, "config must be a JSON object");
  ScenarioConfig cfg;
  cfg.name = j.value("name", std::string("unnamed"));
  cfg.comment = j.value("comment", std::string());
  if (!j.contains("field")) raise(Errc::ConfigError, "config needs a 'field'");
  cfg.field = field_from_json(j.at("field"));

  std::string curve = j.value("curve", std::string("rational"));
  if (curve == "rational")
    cfg.curve = CurveKind::Rational;
  else if (curve == "fermat-cubic")
    cfg.curve = CurveKind::FermatCubic;
  else
    raise(Errc::ConfigError, "unknown curve kind '" + curve + "'");

  std::string mode = j.value("mode", std::string("inner"));
  if (mode == "inner")
    cfg.mode = RunMode::Inner;
  else if (mode == "outer")
    cfg.mode = RunMode::Outer;
  else
    raise(Errc::ConfigError, "unknown mode '" + mode + "'");

  if (j.contains("cap")) cfg.cap = j.at("cap").get<std::size_t>();
  if (j.contains("char_not"))
    for (const auto& c : j.at("char_not")) cfg.char_not.push_back(c.get<std::int64_t>());

  if (std::find(cfg.char_not.begin(), cfg.char_not.end(), cfg.field->characteristic()) !=
      cfg.char_not.end())
    raise(Errc::ConfigError, "characteristic " + std::to_string(cfg.field->characteristic()) +
                                 " is excluded for this scenario");

  auto read_gens = [&](const char* key) {
    std::vector<Moebius> gens;
    if (j.contains(key))
      for (const auto& m : j.at(key)) gens.push_back(moebius_from_json(cfg.field, m));
    return gens;
  };
  cfg.g1_gens = read_gens("g1");
  cfg.g2_gens = read_gens("g2");

  if (j.contains("p1")) cfg.p1 = point_from_json(cfg.field, j.at("p1"));
  if (j.contains("p2")) cfg.p2 = point_from_json(cfg.field, j.at("p2"));
  if (j.contains("q")) cfg.q = point_from_json(cfg.field, j.at("q"));
  if (j.contains("candidates"))
    for (const auto& c : j.at("candidates"))
      cfg.candidates.push_back(point_from_json(cfg.field, c));

  if (j.contains("expect")) {
    const json& e = j.at("expect");
    if (e.contains("degree")) cfg.expect.degree = e.at("degree").get<std::int64_t>();
    if (e.contains("group1")) cfg.expect.group1 = e.at("group1").get<std::string>();
    if (e.contains("group2")) cfg.expect.group2 = e.at("group2").get<std::string>();
  }

  if (j.contains("q_cubic")) cfg.cubic_q = cubic_point_from_json(j.at("q_cubic"));

  if (cfg.curve == CurveKind::Rational) {
    if (cfg.g1_gens.empty() || cfg.g2_gens.empty())
      raise(Errc::ConfigError, "rational scenarios need generator lists 'g1' and 'g2'");
  } else {
    if (cfg.field->kind() != FieldKind::Prime)
      raise(Errc::ConfigError, "the fermat-cubic scenario needs a prime field");
  }
  return cfg;
}

// --- reporting helpers ---

namespace {

std::string divisor_text(const Divisor& d) {
  std::string s;
  for (const auto& [p, m] : d.terms()) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += p.str();
  }
  return s.empty() ? "0" : s;
}

void render_criterion_text(std::ostringstream& os, const CriterionReport& rep) {
  os << "condition (a): " << (rep.cond_a.holds ? "holds" : "fails") << " - "
     << rep.cond_a.justification << "\n";
  os << "condition (b): " << (rep.cond_b.holds ? "holds" : "fails") << " (intersection size "
     << rep.cond_b.intersection_size << ")";
  if (!rep.cond_b.shared_element.empty()) os << " shared element " << rep.cond_b.shared_element;
  os << "\n";
  os << "condition (c): " << (rep.cond_c.holds ? "holds" : "fails");
  if (!rep.cond_c.note.empty()) os << " - " << rep.cond_c.note;
  os << "\n";
  if (rep.cond_c.holds) {
    os << "deg D = " << rep.degree_d << "\n";
    os << "D = " << divisor_text(rep.cond_c.witness) << "\n";
  } else {
    os << "lhs = " << divisor_text(rep.cond_c.lhs) << "\n";
    os << "rhs = " << divisor_text(rep.cond_c.rhs) << "\n";
  }
}

struct ExpectationCheck {
  bool checked = false;
  bool ok = true;
  json diffs = json::array();

  void compare(const std::string& what, const std::string& got,
               const std::optional<std::string>& want) {
    if (!want) return;
    checked = true;
    if (got != *want) {
      ok = false;
      diffs.push_back(json{{"what", what}, {"expected", *want}, {"got", got}});
    }
  }
  void compare_int(const std::string& what, std::int64_t got,
                   const std::optional<std::int64_t>& want) {
    if (!want) return;
    checked = true;
    if (got != *want) {
      ok = false;
      diffs.push_back(json{{"what", what}, {"expected", *want}, {"got", got}});
    }
  }
};

RunReport run_rational_scenario(const ScenarioConfig& cfg) {
  RunReport rep;
  FiniteMoebiusGroup g1 = FiniteMoebiusGroup::generate(cfg.g1_gens, cfg.cap);
  FiniteMoebiusGroup g2 = FiniteMoebiusGroup::generate(cfg.g2_gens, cfg.cap);

  std::ostringstream os;
  os << "scenario: " << cfg.name << "\n";
  os << "field: " << cfg.field->describe() << "\n";
  os << "curve: rational (genus 0)\n";
  os << "|G1| = " << g1.size() << ", |G2| = " << g2.size() << "\n";

  json payload;
  payload["name"] = cfg.name;
  payload["field"] = field_to_json(cfg.field);
  payload["curve"] = "rational";

  if (cfg.mode == RunMode::Outer) {
    if (!cfg.q) raise(Errc::ConfigError, "outer mode needs a point 'q'");
    CriterionReport crep;
    crep.cond_a = check_a(0, g1);
    crep.cond_b = check_b(g1, g2);
    crep.cond_c = check_c_outer(g1, g2, *cfg.q);
    if (crep.cond_c.holds) crep.degree_d = crep.cond_c.witness.degree();
    payload["criterion"] = criterion_report_to_json(crep);
    render_criterion_text(os, crep);
    if (!crep.all_hold()) {
      rep.exit_code = kExitCriterion;
      rep.status = "criterion-failed";
    } else {
      rep.status = "ok";
    }
    payload["status"] = rep.status;
    rep.payload = payload;
    os << "status: " << rep.status << "\n";
    rep.text = os.str();
    return rep;
  }

  if (!cfg.p1 || !cfg.p2) raise(Errc::ConfigError, "inner mode needs points 'p1' and 'p2'");
  ConstructionResult result = run_construction(g1, g2, *cfg.p1, *cfg.p2);
  payload["criterion"] = criterion_report_to_json(result.report);
  render_criterion_text(os, result.report);

  if (!result.report.all_hold()) {
    rep.exit_code = kExitCriterion;
    rep.status = "criterion-failed";
    payload["status"] = rep.status;
    rep.payload = payload;
    os << "status: " << rep.status << "\n";
    rep.text = os.str();
    return rep;
  }

  const PlaneModel& model = *result.model;
  payload["model"] = plane_model_to_json(model);

  os << "f = " << model.f.str() << "\n";
  os << "g = " << model.g.str() << "\n";
  os << "phi = (F0 : F1 : F2) with\n";
  os << "  F0 = " << model.parametrization[0].str() << "\n";
  os << "  F1 = " << model.parametrization[1].str() << "\n";
  os << "  F2 = " << model.parametrization[2].str() << "\n";
  os << "implicit curve (degree " << model.implicit.total_degree()
     << "): " << model.implicit.str() << "\n";
  os << "galois certificate at P1 (group " << model.group1.label
     << "): " << (model.cert_f.holds ? "holds" : "fails") << "\n";
  os << "galois certificate at P2 (group " << model.group2.label
     << "): " << (model.cert_g.holds ? "holds" : "fails") << "\n";

  if (!model.cert_f.holds || !model.cert_g.holds) {
    rep.exit_code = kExitConstruction;
    rep.status = "construction-failed";
    payload["status"] = rep.status;
    rep.payload = payload;
    os << "status: " << rep.status << "\n";
    rep.text = os.str();
    return rep;
  }

  ExpectationCheck exp;
  exp.compare_int("degree", result.report.degree_d, cfg.expect.degree);
  exp.compare("group1", model.group1.label, cfg.expect.group1);
  exp.compare("group2", model.group2.label, cfg.expect.group2);
  payload["expectations"] = json{{"checked", exp.checked}, {"ok", exp.ok}, {"diffs", exp.diffs}};
  if (exp.checked) os << "expectations: " << (exp.ok ? "met" : "NOT met") << "\n";

  if (!exp.ok) {
    rep.exit_code = kExitExpectation;
    rep.status = "expectation-mismatch";
  } else {
    rep.status = "ok";
  }
  payload["status"] = rep.status;
  rep.payload = payload;
  os << "status: " << rep.status << "\n";
  rep.text = os.str();
  return rep;
}

RunReport run_elliptic_scenario(const ScenarioConfig& cfg) {
  RunReport rep;
  FermatCurve curve = FermatCurve::create(cfg.field->prime_modulus());

  std::ostringstream os;
  os << "scenario: " << cfg.name << "\n";
  os << "field: " << cfg.field->describe() << "\n";
  os << "curve: fermat cubic X^3 + Y^3 + Z^3 = 0 (genus 1), " << curve.points().size()
     << " points, omega = " << curve.omega() << "\n";

  json payload;
  payload["name"] = cfg.name;
  payload["field"] = field_to_json(cfg.field);
  payload["curve"] = "fermat-cubic";
  payload["point_count"] = curve.points().size();

  EllipticCertificate cert;
  if (cfg.cubic_q) {
    CubicPoint q = curve.canonical(cfg.cubic_q->x, cfg.cubic_q->y, cfg.cubic_q->z);
    if (!curve.on_curve(q)) raise(Errc::ConfigError, "q_cubic is not on the curve");
    cert = verify_elliptic_criterion(curve, q);
  } else {
    cert = scan_elliptic_criterion(curve).cert;
  }
  payload["certificate"] = elliptic_certificate_to_json(cert);

  os << "base point Q = " << cert.q.str() << "\n";
  os << "condition (a): " << ((cert.cond_a_sigma && cert.cond_a_tau) ? "holds" : "fails")
     << " - both quotient genera 0 (fixed points " << cert.sigma_fixed << "/" << cert.tau_fixed
     << ")\n";
  os << "condition (b): " << (cert.groups_intersect_trivially ? "holds" : "fails") << "\n";
  os << "condition (c): " << (cert.divisor_identity ? "holds" : "fails") << "\n";
  os << "deg D = " << cert.degree_d << "\n";

  if (!cert.all_hold()) {
    rep.exit_code = kExitCriterion;
    rep.status = "criterion-failed";
    payload["status"] = rep.status;
    rep.payload = payload;
    os << "status: " << rep.status << "\n";
    rep.text = os.str();
    return rep;
  }

  QuarticModel model = build_quartic_model(curve, cert);
  payload["model"] = quartic_model_to_json(model);
  OuterDeltaReport outer = outer_delta_check(curve);
  payload["outer_delta"] = outer_delta_to_json(outer);

  os << "quartic (through " << model.image.size()
     << " image points): " << model.quartic.str() << "\n";
  os << "outer vertex witnesses: " << (outer.all_hold() ? "hold" : "fail") << "\n";

  ExpectationCheck exp;
  exp.compare_int("degree", cert.degree_d, cfg.expect.degree);
  exp.compare("group1", "Z/3", cfg.expect.group1);
  exp.compare("group2", "Z/3", cfg.expect.group2);
  exp.compare_int("quartic_degree", model.quartic.total_degree(), cfg.expect.degree);
  payload["expectations"] = json{{"checked", exp.checked}, {"ok", exp.ok}, {"diffs", exp.diffs}};
  if (exp.checked) os << "expectations: " << (exp.ok ? "met" : "NOT met") << "\n";

  if (!exp.ok) {
    rep.exit_code = kExitExpectation;
    rep.status = "expectation-mismatch";
  } else {
    rep.status = "ok";
  }
  payload["status"] = rep.status;
  rep.payload = payload;
  os << "status: " << rep.status << "\n";
  rep.text = os.str();
  return rep;
}

} // namespace

RunReport run_scenario(const ScenarioConfig& cfg) {
  if (cfg.curve == CurveKind::FermatCubic) return run_elliptic_scenario(cfg);
  return run_rational_scenario(cfg);
}

RunReport run_search(const ScenarioConfig& cfg) {
  if (cfg.curve != CurveKind::Rational)
    raise(Errc::ConfigError, "search is supported on the rational curve only");
  if (cfg.g1_gens.empty() || cfg.g2_gens.empty())
    raise(Errc::ConfigError, "search needs generator lists 'g1' and 'g2'");

  std::vector<ProjPoint> candidates = cfg.candidates;
  if (candidates.empty()) {
    if (!cfg.field->is_finite())
      raise(Errc::InfiniteField, "search over an infinite field needs a candidate list");
    candidates = projective_line(cfg.field);
  }

  FiniteMoebiusGroup g1 = FiniteMoebiusGroup::generate(cfg.g1_gens, cfg.cap);
  FiniteMoebiusGroup g2 = FiniteMoebiusGroup::generate(cfg.g2_gens, cfg.cap);

  RunReport rep;
  std::ostringstream os;
  os << "search: " << cfg.name << "\n";
  os << "field: " << cfg.field->describe() << "\n";
  os << "candidates: " << candidates.size() << "\n";

  json payload;
  payload["name"] = cfg.name;
  payload["field"] = field_to_json(cfg.field);
  payload["mode"] = cfg.mode == RunMode::Inner ? "inner" : "outer";
  payload["candidate_count"] = candidates.size();

  CondResultB b = check_b(g1, g2);
  payload["condition_b"] = json{{"holds", b.holds}, {"intersection_size", b.intersection_size}};
  json hits = json::array();

  if (cfg.mode == RunMode::Inner) {
    if (b.holds) {
      for (const auto& w : search_inner(g1, g2, candidates)) {
        hits.push_back(json{{"p1", point_to_json(w.p1)},
                            {"p2", point_to_json(w.p2)},
                            {"D", divisor_to_json(w.d)},
                            {"deg_D", w.d.degree()}});
        os << "witness: P1 = " << w.p1.str() << ", P2 = " << w.p2.str() << ", deg D = "
           << w.d.degree() << "\n";
      }
    } else {
      os << "condition (b) fails; no inner search performed\n";
    }
  } else {
    for (const auto& w : search_outer(g1, g2, candidates)) {
      hits.push_back(json{{"q", point_to_json(w.q)},
                          {"D", divisor_to_json(w.d)},
                          {"deg_D", w.d.degree()}});
      os << "witness: Q = " << w.q.str() << ", deg D = " << w.d.degree() << "\n";
    }
  }
  payload["witnesses"] = hits;
  os << "total witnesses: " << hits.size() << "\n";

  rep.status = "ok";
  payload["status"] = rep.status;
  rep.payload = payload;
  rep.text = os.str();
  return rep;
}

void emit(const RunReport& report, const std::string& format, const std::string& out_path) {
  std::string body;
  if (format == "json")
    body = report.payload.dump(2) + "\n";
  else if (format == "text" || format.empty())
    body = report.text;
  else
    raise(Errc::ConfigError, "unknown format '" + format + "' (use text or json)");

  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot open '" + out_path + "' for writing");
  out << body;
  out.flush();
  if (!out.good()) raise(Errc::IoError, "failed writing to '" + out_path + "'");
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ConfigError:
    case Errc::CapExceeded:
    case Errc::BadCharacteristic:
    case Errc::DescriptorMismatch:
    case Errc::InfiniteField:
    case Errc::UnsupportedGenus:
      return kExitConfig;
    case Errc::IoError:
      return kExitIo;
    default:
      return kExitConstruction;
  }
}

} // namespace gpl
