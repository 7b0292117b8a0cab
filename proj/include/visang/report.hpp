#pragma once

#include "visang/identities.hpp"

#include <string>
#include <vector>

namespace visang {

/// Formats a double with 17 significant digits (round-trip exact); both
/// report encodings use it so CSV and JSON carry the same numbers.
std::string fmt17(double v);

/// JSON report document (schema "visang-report-v1"). include_timing = false
/// zeroes the wall_time fields, which makes reruns byte-identical.
std::string reports_to_json(const std::vector<IdentityReport>& reports, bool include_timing);

/// CSV with the frozen header
/// identity,route,body,k,m,lhs,rhs,abs_err,rel_err,wall_time_s
std::string reports_to_csv(const std::vector<IdentityReport>& reports, bool include_timing);

} // namespace visang
