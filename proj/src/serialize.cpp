#include "gpl/serialize.hpp"

namespace gpl {

namespace {

// Minimal-polynomial coefficients are small integers in practice; serialize
// them as JSON numbers when they are, falling back to element encoding.
json descriptor_coeff(const FieldElem& e) {
  if (e.field()->kind() == FieldKind::Prime) return e.residue();
  if (e.field()->kind() == FieldKind::Rationals) {
    const mpq_class& q = e.rational_value();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  }
  return elem_to_json(e);
}

} // namespace

json field_to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      return json{{"kind", "rationals"}};
    case FieldKind::Prime:
      return json{{"kind", "prime"}, {"p", f->prime_modulus()}};
    case FieldKind::Extension: {
      json mp = json::array();
      for (const auto& c : f->minpoly()) mp.push_back(descriptor_coeff(c));
      json j{{"kind", "extension"}, {"minpoly", mp}};
      if (f->base()->kind() != FieldKind::Rationals) j["base"] = field_to_json(f->base());
      return j;
    }
  }
  raise(Errc::Internal, "unreachable");
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    raise(Errc::ConfigError, "field descriptor must be an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) raise(Errc::ConfigError, "prime field needs 'p'");
    return Field::prime(j.at("p").get<std::int64_t>());
  }
  if (kind == "extension") {
    FieldPtr base = j.contains("base") ? field_from_json(j.at("base")) : Field::rationals();
    if (!j.contains("minpoly") || !j.at("minpoly").is_array())
      raise(Errc::ConfigError, "extension field needs a 'minpoly' array");
    std::vector<FieldElem> mp;
    for (const auto& c : j.at("minpoly")) mp.push_back(elem_from_json(base, c));
    return Field::extension(base, std::move(mp));
  }
  raise(Errc::ConfigError, "unknown field kind '" + kind + "'");
}

json elem_to_json(const FieldElem& e) {
  switch (e.field()->kind()) {
    case FieldKind::Rationals:
    case FieldKind::Prime:
      return e.str();
    case FieldKind::Extension: {
      json arr = json::array();
      for (const auto& c : e.ext_coeffs()) arr.push_back(elem_to_json(c));
      return arr;
    }
  }
  raise(Errc::Internal, "unreachable");
}

FieldElem elem_from_json(const FieldPtr& f, const json& j) {
  if (j.is_number_integer()) return f->from_int(j.get<std::int64_t>());
  if (j.is_string()) return f->parse(j.get<std::string>());
  if (j.is_array()) {
    if (f->kind() != FieldKind::Extension)
      raise(Errc::ConfigError, "array element literal over a non-extension field");
    std::vector<FieldElem> coords;
    for (const auto& c : j) coords.push_back(elem_from_json(f->base(), c));
    return f->make_extension_elem(std::move(coords));
  }
  raise(Errc::ConfigError, "bad field element literal: " + j.dump());
}

json point_to_json(const ProjPoint& p) {
  return json::array({elem_to_json(p.a()), elem_to_json(p.b())});
}

ProjPoint point_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array() || j.size() != 2)
    raise(Errc::ConfigError, "point must be a 2-element array, got " + j.dump());
  return ProjPoint(elem_from_json(f, j[0]), elem_from_json(f, j[1]));
}

json moebius_to_json(const Moebius& m) {
  return json::array(
      {elem_to_json(m.a()), elem_to_json(m.b()), elem_to_json(m.c()), elem_to_json(m.d())});
}

Moebius moebius_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array() || j.size() != 4)
    raise(Errc::ConfigError, "matrix must be a 4-element row-major array, got " + j.dump());
  return Moebius(elem_from_json(f, j[0]), elem_from_json(f, j[1]), elem_from_json(f, j[2]),
                 elem_from_json(f, j[3]));
}

json divisor_to_json(const Divisor& d) {
  json arr = json::array();
  for (const auto& [p, m] : d.terms())
    arr.push_back(json{{"point", point_to_json(p)}, {"multiplicity", m}});
  return arr;
}

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(elem_to_json(c));
  return arr;
}

json ratfunc_to_json(const RatFunc& f) {
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

json bipoly_to_json(const BiPoly& b) {
  json arr = json::array();
  for (const auto& [mono, c] : b.sorted_terms())
    arr.push_back(json::array({mono.first, mono.second, elem_to_json(c)}));
  return arr;
}

json group_structure_to_json(const GroupStructure& s) {
  return json{{"order", s.order},
              {"abelian", s.abelian},
              {"cyclic", s.cyclic},
              {"element_orders", s.element_orders},
              {"label", s.label}};
}

json criterion_report_to_json(const CriterionReport& r) {
  json c{{"holds", r.cond_c.holds},
         {"lhs", divisor_to_json(r.cond_c.lhs)},
         {"rhs", divisor_to_json(r.cond_c.rhs)}};
  if (r.cond_c.holds) c["witness_D"] = divisor_to_json(r.cond_c.witness);
  if (!r.cond_c.note.empty()) c["note"] = r.cond_c.note;
  json b{{"holds", r.cond_b.holds}, {"intersection_size", r.cond_b.intersection_size}};
  if (!r.cond_b.shared_element.empty()) b["shared_element"] = r.cond_b.shared_element;
  return json{{"a", json{{"holds", r.cond_a.holds}, {"justification", r.cond_a.justification}}},
              {"b", b},
              {"c", c},
              {"deg_D", r.degree_d}};
}

json galois_certificate_to_json(const GaloisCertificate& c) {
  json j{{"holds", c.holds},
         {"invariant", c.invariant},
         {"degree_matches", c.degree_matches},
         {"fibers_match", c.fibers_match},
         {"map_degree", c.map_deg},
         {"group_order", c.group_order}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json plane_model_to_json(const PlaneModel& m) {
  return json{{"f", ratfunc_to_json(m.f)},
              {"g", ratfunc_to_json(m.g)},
              {"D", divisor_to_json(m.d)},
              {"parametrization",
               json::array({poly_to_json(m.parametrization[0]), poly_to_json(m.parametrization[1]),
                            poly_to_json(m.parametrization[2])})},
              {"implicit", bipoly_to_json(m.implicit)},
              {"implicit_degree", m.implicit.total_degree()},
              {"certificates", json{{"f", galois_certificate_to_json(m.cert_f)},
                                    {"g", galois_certificate_to_json(m.cert_g)}}},
              {"groups", json{{"G1", group_structure_to_json(m.group1)},
                              {"G2", group_structure_to_json(m.group2)}}}};
}

json cubic_point_to_json(const CubicPoint& p) {
  return json::array({std::to_string(p.x), std::to_string(p.y), std::to_string(p.z)});
}

CubicPoint cubic_point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    raise(Errc::ConfigError, "cubic point must be a 3-element array");
  auto get = [&](const json& v) -> std::int64_t {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) return std::stoll(v.get<std::string>());
    raise(Errc::ConfigError, "bad cubic point coordinate");
  };
  return CubicPoint{get(j[0]), get(j[1]), get(j[2])};
}

json ell_divisor_to_json(const EllDivisor& d) {
  json arr = json::array();
  for (const auto& [p, m] : d.terms())
    arr.push_back(json{{"point", cubic_point_to_json(p)}, {"multiplicity", m}});
  return arr;
}

namespace {

json perm_to_json(const FermatCurve::Perm& f) {
  json arr = json::array();
  for (auto i : f) arr.push_back(i);
  return arr;
}

} // namespace

json elliptic_certificate_to_json(const EllipticCertificate& c) {
  return json{{"p", c.p},
              {"omega", c.omega},
              {"Q", cubic_point_to_json(c.q)},
              {"sigma_Q", cubic_point_to_json(c.sigma_q)},
              {"P1", cubic_point_to_json(c.tau2_q)},
              {"P2", cubic_point_to_json(c.sigma2_q)},
              {"sigma", perm_to_json(c.sigma)},
              {"tau", perm_to_json(c.tau)},
              {"eta", perm_to_json(c.eta)},
              {"tau_order_three", c.tau_order_three},
              {"tau_maps_Q_to_sigma_Q", c.tau_maps_q_to_sigma_q},
              {"sigma_fixed_points", c.sigma_fixed},
              {"tau_fixed_points", c.tau_fixed},
              {"cond_a_sigma", c.cond_a_sigma},
              {"cond_a_tau", c.cond_a_tau},
              {"groups_intersect_trivially", c.groups_intersect_trivially},
              {"divisor_D", ell_divisor_to_json(c.divisor_d)},
              {"divisor_identity", c.divisor_identity},
              {"deg_D", c.degree_d}};
}

json quartic_model_to_json(const QuarticModel& m) {
  json image = json::array();
  for (const auto& pt : m.image)
    image.push_back(json::array({std::to_string(pt[0]), std::to_string(pt[1])}));
  return json{{"P1", cubic_point_to_json(m.p1)},
              {"P2", cubic_point_to_json(m.p2)},
              {"f_poles", m.f_poles},
              {"g_poles", m.g_poles},
              {"image_points", image},
              {"quartic", bipoly_to_json(m.quartic)},
              {"quartic_degree", m.quartic.total_degree()}};
}

json outer_delta_to_json(const OuterDeltaReport& r) {
  json arr = json::array();
  const char* names[3] = {"(1:0:0)", "(0:1:0)", "(0:0:1)"};
  for (int i = 0; i < 3; ++i)
    arr.push_back(json{{"center", names[i]},
                       {"projection_invariant", r.at_vertex[std::size_t(i)].commutes},
                       {"fibers_are_orbits", r.at_vertex[std::size_t(i)].fibers_are_orbits},
                       {"fiber_count", r.at_vertex[std::size_t(i)].fiber_count}});
  return arr;
}

} // namespace gpl
