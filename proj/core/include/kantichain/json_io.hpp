#pragma once

// JSON forms of the library's values. Parsers throw InputError on malformed
// documents.

#include <nlohmann/json.hpp>

#include "kantichain/builder.hpp"
#include "kantichain/lemma.hpp"
#include "kantichain/monotone.hpp"
#include "kantichain/poset.hpp"

namespace kantichain {

nlohmann::json to_json(const RealPoint& p);
/// {"n": <int>, "points": [[c1, ..., cn], ...]}
nlohmann::json to_json(const PointSet& s);
PointSet point_set_from_json(const nlohmann::json& j);
/// {"layers": [[point, ...], ...]}
nlohmann::json to_json(const PeelingResult& r);
nlohmann::json to_json(const ChainResult& r);

/// {"lower": r, "upper": r, "method": s, "depth": m}
nlohmann::json to_json(const LengthBracket& b);
LengthBracket length_bracket_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SequencePair& s);

nlohmann::json to_json(const Rectangle& r);
nlohmann::json to_json(const GluedCurve& c);
GluedCurve glued_curve_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KAntichainModel& m);
KAntichainModel model_from_json(const nlohmann::json& j);

}  // namespace kantichain
