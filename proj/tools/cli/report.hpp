#ifndef ORECURV_CLI_REPORT_HPP
#define ORECURV_CLI_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "orecurv/center.hpp"
#include "orecurv/pcurv.hpp"

namespace orecurv::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "ore-curvature/1";

// Lowest-degree-first coefficient lists: integers over F_p, decimal strings ("3/4") over Q.
json poly_to_json(const PolyP& f);
json poly_to_json(const PolyQ& f);
PolyP poly_from_json(const PrimeField& field, const json& j);
PolyQ poly_from_json(const RationalField& field, const json& j);

// Polynomial central element: list of Z-polynomials indexed by the power of T.
json center_to_json(const CenterPoly& c);
CenterPoly center_from_json(const PrimeField& field, const json& j);

json classes_to_json(const std::vector<SingularityClass>& classes);

std::string input_digest(const std::string& text);

json field_to_json(const FieldSpec& spec);

// Structural validation of a report; on failure returns false and fills why.
bool validate_report(const json& report, std::string* why = nullptr);

}  // namespace orecurv::cli

#endif
