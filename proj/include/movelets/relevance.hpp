#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "movelets/distance.hpp"

namespace movelets {

// One best-alignment distance vector on the multidimensional orderline.
struct OrderPoint {
    DistanceVector distances;
    int class_id = -1;
    int traj_index = -1;
};

struct Relevance {
    DistanceVector split_points;
    double score = 0.0;
    std::size_t covered_target = 0;
    std::size_t covered_total = 0;
    // Set when no finite opposite-class point existed to act as a split
    // candidate; split_points are all +inf and the score is 0.
    bool degenerate = false;
};

// Keeps the points that no other point strictly undercuts in every
// dimension; exact duplicates collapse to their first representative.
std::vector<OrderPoint> prune_dominated(std::span<const OrderPoint> points);

// A point is covered when it is strictly below the split points in every
// dimension.
bool covers(const DistanceVector& split_points, const DistanceVector& point);
std::vector<std::size_t> coverage(const DistanceVector& split_points,
                                  std::span<const OrderPoint> points);

// Harmonic mean of precision (covered_target / covered_total) and recall
// (covered_target / target_total); 0 when nothing is covered.
double fscore(std::size_t covered_target, std::size_t covered_total, std::size_t target_total);

// Evaluates every finite opposite-class point of W as a split-point
// candidate and returns the best-scoring one. Ties break toward more covered
// target points, then the lexicographically smaller split vector.
Relevance master_relevance(std::span<const OrderPoint> points, int target_class);

}  // namespace movelets
