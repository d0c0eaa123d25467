#pragma once

#include "movelets/discovery.hpp"

namespace movelets {

// Serial reference discovery. Every distance row is recomputed directly from
// the trajectory elements instead of the incremental tensor recurrence, and
// the trajectory loop runs single-threaded. Kept for testing and for the
// benchmark target; must produce results identical to discover().
DiscoveryResult discover_reference(const Dataset& ds, const DiscoveryOptions& options = {});

}  // namespace movelets
