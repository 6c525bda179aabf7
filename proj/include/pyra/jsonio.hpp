#pragma once

#include <json.hpp>

#include "pyra/admissible.hpp"
#include "pyra/heap.hpp"
#include "pyra/mc.hpp"
#include "pyra/paths.hpp"
#include "pyra/strings.hpp"
#include "pyra/transfer.hpp"

namespace pyra {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Object forms. Pyramids/heaps: {schema_version, type, a, pieces: [[offset,
// level], ...]} with pieces sorted by (level, offset). Big integers are
// emitted as decimal strings.

json heap_to_json(const Heap& h);
Heap heap_from_json(const json& j);
json pyramid_to_json(const Pyramid& p);
Pyramid pyramid_from_json(const json& j);

json string_to_json(const BitString& s);
BitString string_from_json(const json& j);

json walk_to_json(const Walk& w);
Walk walk_from_json(const json& j);

json path_to_json(const LatticePath& p);
LatticePath path_from_json(const json& j);

json tree_to_json(const AryTree& t);
AryTree tree_from_json(const json& j);

json composition_to_json(int a, const AdmissibleComposition& c);

json matrices_to_json(const TransferMatrices& t);
json witness_to_json(int a);

json estimate_to_json(const GrowthEstimate& e);
json section5_to_json(const std::vector<Section5Row>& rows);

}  // namespace pyra
