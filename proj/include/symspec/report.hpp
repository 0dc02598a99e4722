#ifndef SYMSPEC_REPORT_HPP
#define SYMSPEC_REPORT_HPP

#include "symspec/domain.hpp"
#include "symspec/integrate.hpp"
#include "symspec/series.hpp"
#include "symspec/spectral.hpp"

#include <json.hpp>

#include <string>

namespace symspec {

using Json = nlohmann::ordered_json;

/// Integer fields plus rho as "p/q".
Json to_json(const DomainParams& domain);
Json to_json(const OperatorSpec& op);
/// value, blocks_used, tail_bound (null when unavailable), verdict, then extras.
Json to_json(const SeriesEstimate& est);
Json to_json(const MCEstimate& est);
Json to_json(const PolarResult& res);
/// Rank as a decimal string, threshold as "p/q" or null for +infinity.
Json to_json(const ClassificationReport& report);
Json to_json(const BerezinReport& report);
Json to_json(const TableRow& row);

/// {"reason": ..., "message": ...}
Json error_json(const std::string& reason, const std::string& message);

/// Finite doubles as numbers, others as the strings "inf", "-inf", "nan".
Json number_json(double x);

}  // namespace symspec

#endif
