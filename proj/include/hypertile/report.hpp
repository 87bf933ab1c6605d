#pragma once

#include <json.hpp>

#include "hypertile/absorption.hpp"
#include "hypertile/closeness.hpp"
#include "hypertile/factor_solver.hpp"
#include "hypertile/tiling_search.hpp"

namespace hypertile {

// JSON views of the module results. Shapes are fixed by the files in schemas/.

nlohmann::json to_json(const VertexSet &s);
nlohmann::json to_json(const FactorResult &r);
nlohmann::json to_json(const Tiling &t);
nlohmann::json to_json(const MoveRecord &m);
/// Includes the move trace only when `with_trace` is set.
nlohmann::json to_json(const GreedyResult &r, bool with_trace);
nlohmann::json to_json(const ClosenessReport &r);
nlohmann::json to_json(const AbsorberFamily &f);
/// Stage timings are omitted unless `with_timings`, so reports from equal
/// seeds compare byte-for-byte.
nlohmann::json to_json(const PipelineReport &r, bool with_timings);

nlohmann::json stats_json(const Hypergraph3 &h);

} // namespace hypertile
