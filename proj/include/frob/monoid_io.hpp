#pragma once

#include <string>

#include <json.hpp>

#include "frob/composition.hpp"
#include "frob/frobenius.hpp"
#include "frob/gluing.hpp"
#include "frob/monoid.hpp"

namespace frob {

/// Reads a monoid descriptor:
///   {"type":"free","rank":d}
///   {"type":"submonoid","ambient_rank":d,"generators":[[..],..]}
///   {"type":"glued","left":...,"right":...,"rho1":ELEM,"rho2":ELEM}
///   {"type":"adjoin_root","base":...,"rho":ELEM,"r":k}
/// Throws parse_error with the JSON path of the offending value.
Monoid parse_monoid(const nlohmann::json& j, const std::string& path = "$");

/// Element literal: an exponent/ambient vector array, a canonical triple
/// {"n":k,"hat1":ELEM,"hat2":ELEM}, or a raw pair {"x1":ELEM,"x2":ELEM}
/// which is normalized.  Validates membership and canonicality.
Element parse_element(const Monoid& m, const nlohmann::json& j, const std::string& path = "$");

nlohmann::json monoid_to_json(const Monoid& m);
nlohmann::json element_to_json(const Element& e);

nlohmann::json betti_to_json(const BettiVector& b);

nlohmann::json interval_to_json(const OpenInterval& interval);

nlohmann::json frobenius_complex_to_json(const FrobeniusComplex& f);
/// Reads {"vertices":[...], "facets":[[...],...]}; labels are opaque.
SimplicialComplex complex_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json table_to_json(const PoincareTable& t);
/// CSV rows "degree,element,i,beta", nonzero entries only; the element field
/// is quoted.
std::string table_to_csv(const PoincareTable& t);

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

nlohmann::json composition_report_to_json(const CompositionCheckReport& r);
std::string composition_report_to_text(const CompositionCheckReport& r);

std::string csv_quote(const std::string& field);

}  // namespace frob
