#pragma once

#include <json.hpp>

#include "schurcalc/balmer.hpp"
#include "schurcalc/characters.hpp"
#include "schurcalc/graded.hpp"
#include "schurcalc/lr.hpp"
#include "schurcalc/report.hpp"

namespace schurcalc {

// Counts are emitted as JSON numbers whenever they fit in 64 bits and as
// decimal strings beyond that (unreachable through the bounded CLI surface).
nlohmann::json count_json(Count value);

nlohmann::json to_json(const Partition& lambda);        // [5,2,2,1]; [] for empty
nlohmann::json to_json(const GradedObject& x);          // {"0":1,"1":2}; {} for zero
nlohmann::json to_json(const SchurExpansion& expansion);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const CharacterTable& table);
nlohmann::json to_json(const IdealTruncation& s);
nlohmann::json to_json(const Classification& c);

Partition partition_from_json(const nlohmann::json& j);

}  // namespace schurcalc
