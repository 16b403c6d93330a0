#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sliceforge/operators.hpp"
#include "sliceforge/superosc.hpp"

// JSON round-trips for the library types plus the report and table formats
// the command-line tool emits. Serialization is deterministic: object keys
// come out sorted (nlohmann's default map), doubles use the shortest
// round-trip form, and nothing derives from clocks or addresses. Non-finite
// doubles become the strings "inf" / "-inf" / "nan" (nlohmann would emit
// null, losing the sign and the distinction).
namespace sliceforge::io {

using nlohmann::json;

json number_to_json(double x);
double number_from_json(const json& j);

// {"n": 2, "coeffs": {"0": 1.5, "3": -2.0}}; keys are basis bitmasks in
// decimal, zero components omitted
json to_json(const CliffordNumber& a);
CliffordNumber clifford_from_json(const json& j);

// {"n": 1, "N": 2, "coeffs": [<component map>, ...]} with N+1 entries
json to_json(const SliceSeries& f);
SliceSeries series_from_json(const json& j);

// {"family": "constant"|"log-shift"|"table", ...family params...,
//  "glue_radius": r when normalized by gluing}
json to_json(const ProximateOrder& po);
ProximateOrder order_from_json(const json& j);

// {"n", "L", "rho1", "rho2", "coeffs": [<series>, ...]}
json to_json(const InfOrderOperator& P);
InfOrderOperator operator_from_json(const json& j);

json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const json& j);

json to_json(const CheckResult& check);
json to_json(const SuiteReport& report);

// header n,t,B,d_n and one row per table entry
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

// {"x": [...], "re_psi": [...], "im_psi": [...], "re_limit": [...],
//  "im_limit": [...]}
json to_json(const PlotData& plot);

// canonical text form: two-space indent, trailing newline
std::string dump(const json& j);

// parse failures and filesystem errors throw std::runtime_error naming the
// path
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sliceforge::io
