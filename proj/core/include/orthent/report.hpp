#pragma once

#include <string>
#include <vector>

#include "orthent/critical.hpp"
#include "orthent/entropy.hpp"
#include "orthent/search.hpp"

namespace orthent {

/// Render a double the way every report does: shortest-round-trip-safe
/// %.17g, so identical values serialize to identical bytes.
std::string format_double(double v);

/// JSON documents for each report type. Key order, number formatting, and
/// whitespace are fixed, and the inputs carry no timestamps, so equal
/// inputs serialize byte-for-byte equal. Each document ends with a newline.
std::string entropy_report_json(const EntropyReport& report, double defect);
std::string critical_point_json(const CriticalPointRecord& record);
std::string catalog_json(const Catalog& catalog);
std::string residual_report_json(int n, double defect,
                                 const std::vector<StationarityResidual>& residuals);

}  // namespace orthent
