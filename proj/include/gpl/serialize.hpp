#pragma once

// JSON encodings of the domain types.  Field elements serialize as canonical
// strings (extension elements as arrays of base strings), so output is
// byte-stable and configs never rely on floating point.

#include <json.hpp>

#include "gpl/bipoly.hpp"
#include "gpl/criterion.hpp"
#include "gpl/elliptic.hpp"
#include "gpl/embedding.hpp"
#include "gpl/projective.hpp"

namespace gpl {

using json = nlohmann::json;

json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

json elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const FieldPtr& f, const json& j);

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const FieldPtr& f, const json& j);

json moebius_to_json(const Moebius& m);
Moebius moebius_from_json(const FieldPtr& f, const json& j);

json divisor_to_json(const Divisor& d);
json poly_to_json(const Poly& p);
json ratfunc_to_json(const RatFunc& f);
json bipoly_to_json(const BiPoly& b);

json group_structure_to_json(const GroupStructure& s);
json criterion_report_to_json(const CriterionReport& r);
json galois_certificate_to_json(const GaloisCertificate& c);
json plane_model_to_json(const PlaneModel& m);

json cubic_point_to_json(const CubicPoint& p);
CubicPoint cubic_point_from_json(const json& j);
json ell_divisor_to_json(const EllDivisor& d);
json elliptic_certificate_to_json(const EllipticCertificate& c);
json quartic_model_to_json(const QuarticModel& m);
json outer_delta_to_json(const OuterDeltaReport& r);

} // namespace gpl
