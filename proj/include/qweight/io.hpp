#pragma once

#include <json.hpp>

#include <string>

#include "qweight/ame.hpp"
#include "qweight/bounds.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/lp.hpp"

namespace qweight {

using Json = nlohmann::ordered_json;

/// {"2":1,"3":3}
Json multiset_to_json(const DimensionMultiset& v);
DimensionMultiset multiset_from_json(const Json& j);

/// [2,3,3,3]
Json spec_to_json(const DimensionSpec& spec);
DimensionSpec spec_from_json(const Json& j);

/// {"dims":[...],"terms":[{"ket":"020","amp_re":..,"amp_im":..}]}. Kets are
/// digit strings when every dimension is at most 10, comma-separated digit
/// lists otherwise. An optional "normalize": true rescales the amplitudes.
Json state_to_json(const MixedState& state);
MixedState state_from_json(const Json& j);

/// {"family":"A","dims":[...],"values":[{"multiset":{..},"value":"p/q"}]}
Json profile_to_json(const EnumeratorProfile& profile);
EnumeratorProfile profile_from_json(const Json& j);

/// {"family":"calligraphic","dims":[...],"values":[{"subset":[1,2],"A'":..,"B'":..}]}
Json calligraphic_to_json(const CalligraphicTable& table);

/// {"d":[d1,d2,d3],"weights":[["p/q",..],..],"labels":[[0,-1,..],..]}
Json grid_to_json(const GridSolution& grid);
GridSolution grid_from_json(const Json& j);

Json verdict_to_json(const BoundVerdict& verdict);
Json lp_verdict_to_json(const CodeLp& lp, const LpVerdict& verdict);
Json ame_report_to_json(const AmeReport& report);
Json code_report_to_json(const CodeReport& report);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qweight
