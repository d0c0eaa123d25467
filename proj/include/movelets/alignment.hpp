#pragma once

#include <span>
#include <vector>

#include "movelets/distance.hpp"

namespace movelets {

// Ascending fractional ranks: ranks are 1..n with ties receiving the
// arithmetic mean of the positions they span.
using RankRow = std::vector<double>;

RankRow rank_row(std::span<const double> values);

struct Alignment {
    // Best start position (0-based), or -1 when the trajectory is shorter
    // than the probe and no position exists.
    int position = -1;
    // Distances at the chosen position, one per dimension of the probed set;
    // all +inf for the sentinel case.
    DistanceVector distances;
    double average_rank = kInf;
};

// Picks the start position with the lowest mean rank across the given
// dimensions; ties go to the smallest position. rank_rows and dist_rows hold
// one row per dimension of the probed set, each over the same start
// positions.
Alignment master_alignment(std::span<const std::span<const double>> rank_rows,
                           std::span<const std::span<const double>> dist_rows);

}  // namespace movelets
