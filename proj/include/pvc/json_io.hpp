#ifndef PVC_JSON_IO_HPP
#define PVC_JSON_IO_HPP

#include "pvc/cohomology.hpp"
#include "pvc/transfer.hpp"

#include <json.hpp>

namespace pvc {

// Structured output schema (stable interface, see docs/json_schema.md):
// polynomials are arrays of {"num","den","exp":[i,j,k]} with exact decimal
// strings, cochains map blade names to such arrays.

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json pv_to_json(const PolyVector& u);
nlohmann::json class_to_json(const CohClass& c);
nlohmann::json normal_form_to_json(const NormalFormResult& nf);
nlohmann::json report_to_json(const ResidualReport& r);

Poly poly_from_json(const nlohmann::json& j);
PolyVector pv_from_json(const nlohmann::json& j);

} // namespace pvc

#endif
