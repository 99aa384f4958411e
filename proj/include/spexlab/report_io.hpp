#pragma once

#include <string>

#include <json.hpp>

#include "spexlab/partition.hpp"
#include "spexlab/predicate.hpp"
#include "spexlab/properties.hpp"
#include "spexlab/quotient.hpp"
#include "spexlab/scans.hpp"
#include "spexlab/search.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const PredicateSpec& p);
void to_json(Json& j, const SpectralResult& r);
void to_json(Json& j, const SearchReport& r);
void to_json(Json& j, const Lemma27Report& r);
void to_json(Json& j, const Lemma32Report& r);
void to_json(Json& j, const YQuotientReport& r);
void to_json(Json& j, const ClimbResult& r);
void to_json(Json& j, const ConjectureReport& r);
void to_json(Json& j, const SweepReport& r);
void to_json(Json& j, const Partition& p);
void to_json(Json& j, const DegreeClasses& d);

/// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

/// Header plus one row per champion.
std::string search_report_csv(const SearchReport& r);
/// Header plus one row per violation and per equality witness.
std::string conjecture_report_csv(const ConjectureReport& r);

} // namespace spexlab
