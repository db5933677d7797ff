#pragma once

// JSON forms of paths and reports.
//
// Path:   {"side": "above"|"below",
//          "segments": [{"type":"line","from":[re,im],"to":[re,im]} |
//                       {"type":"arc","center":[re,im],"radius":r,
//                        "theta_start":t0,"theta_end":t1}]}
// Report: {"value": r, "imag_residual": r, "int_plus": [re,im]|null,
//          "int_minus": [re,im]|null, "residue_term": [re,im], "route": s,
//          "err_estimate": r, "evals": k}

#include <nlohmann/json.hpp>

#include "apv/contour.hpp"
#include "apv/principal_value.hpp"
#include "apv/spf.hpp"

namespace apv {

using json = nlohmann::json;

json complex_to_json(complex z);
/// Accepts [re, im] or a bare number; DomainError otherwise.
complex complex_from_json(const json& j);

json path_to_json(const ComplexPath& path);
/// DomainError on schema violations (missing keys, unknown segment type,
/// discontinuous segments).
ComplexPath path_from_json(const json& j);

json report_to_json(const ApvReport& report);
/// Reads back the fields of report_to_json; diagnostics are not serialized.
ApvReport report_from_json(const json& j);

json boundary_to_json(const BoundaryReport& report);
BoundaryReport boundary_from_json(const json& j);

}  // namespace apv
