#ifndef SLNK2_IO_HPP
#define SLNK2_IO_HPP

#include <string>

#include <json.hpp>

#include "slnk2/fixed_points.hpp"
#include "slnk2/oracle.hpp"
#include "slnk2/sym_variety.hpp"

namespace slnk2 {

using json = nlohmann::ordered_json;

/// descriptor grammar: "gf2" | "gf2e:r=<r>[:mod=<hex bitmask>]" | "ratfunc:q=<2^r>"
FieldSpecPtr parse_field(const std::string& descriptor);

/// finite elements: hex bitmask ("0x3" = t+1); ratfunc: "num/den" with
/// sparse polynomial text ("x^3+x+1"), "/den" omitted when den = 1
std::string element_to_text(const FieldElement& e);
FieldElement element_from_text(const FieldSpecPtr& spec, const std::string& text);

std::string poly_to_text(const Polynomial& p);
Polynomial poly_from_text(const FieldSpecPtr& coeff_spec, const std::string& text);

/// {"field": <descriptor>, "n": <int>, "rows": [[elem, ...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"parity": "inner"|"outer", "A": <matrix>}
json automorphism_to_json(const Automorphism& phi);
Automorphism automorphism_from_json(const json& j);

/// {"type":"L","m":m} | {"type":"P","p":elem} |
/// {"type":"outer-diag","classes":[...]} | {"type":"outer-alt"}
json label_to_json(const ClassLabel& label);
ClassLabel label_from_json(const json& j, const FieldSpecPtr& spec);

json classification_to_json(const InnerClassification& c);
json iso_result_to_json(const IsoResult& r, const FieldSpecPtr& spec);
json fixed_group_report_to_json(const FixedGroupReport& rep, bool include_elements = true);
json variety_report_to_json(const VarietyReport& rep, bool include_elements = false);
json census_report_to_json(const CensusReport& rep);
json theorem_report_to_json(const TheoremReport& rep);

std::string matrix_to_text(const Matrix& m);  // aligned, human-readable

}  // namespace slnk2

#endif
