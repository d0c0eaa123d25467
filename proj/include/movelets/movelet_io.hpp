#pragma once

#include <string>
#include <vector>

#include "movelets/discovery.hpp"

namespace movelets {

// Movelet document: a JSON array of
//   {tid, start, end, dims: [names], splits: {name: value|null}, score,
//    elements: [[values...] per position]}
// start/end are 1-based inclusive positions; a null split stands for +inf
// (only degenerate score-0 movelets carry one).
void save_movelets_json(const std::vector<Movelet>& movelets, const Schema& schema,
                        const std::string& path);

// Dimension names are resolved against the given schema; unknown names or
// value kinds that do not match the schema are errors.
std::vector<Movelet> load_movelets_json(const std::string& path, const Schema& schema);

}  // namespace movelets
