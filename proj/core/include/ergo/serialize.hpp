#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "ergo/approximating.hpp"
#include "ergo/exhaustion.hpp"
#include "ergo/expansion.hpp"
#include "ergo/scenario.hpp"
#include "ergo/spectral.hpp"

namespace ergo {

using Json = nlohmann::json;

/// CSV schema: alpha,k,c_star,witness_cells (witness as ';'-joined indices).
std::string profile_to_csv(const ExpansionProfile& profile);

/// Versioned JSON report ("schema": "v1") with provenance fields.
Json profile_to_json(const ExpansionProfile& profile);

Json cheeger_to_json(const CheegerResult& result);
Json spectral_to_json(const SpectralReport& report);
Json folner_to_json(const Space& space, const FolnerCertificate& cert);
Json complement_to_json(const ComplementReport& report);
Json exhaustion_to_json(const Space& space, const ExhaustionReport& report);
Json admissibility_to_json(const AdmissibilityReport& report);

std::string exhaustion_to_table(const Space& space, const ExhaustionReport& report);

Json set_to_json(const Set& s);
Set set_from_json(const Json& j, const Space& space);

/// Canonical, deterministic model serialization (scenario reproducibility).
Json action_to_json(const ActionModel& action);

/// DOT export: nodes carry weight attributes, edges are the unit-distance
/// pairs labeled with the hop length. Cross-component pairs are omitted.
std::string space_to_dot(const MeasuredMetricSpace& space);

/// Full distance matrix with "inf" entries, loadable by space_from_csv.
std::string space_to_csv(const MeasuredMetricSpace& space);
MeasuredMetricSpace space_from_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace ergo
