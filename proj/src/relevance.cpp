#include "movelets/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace movelets {

namespace {

bool strictly_dominates(const DistanceVector& q, const DistanceVector& p) {
    for (size_t d = 0; d < q.size(); ++d) {
        if (!(q[d] < p[d])) return false;
    }
    return true;
}

bool all_finite(const DistanceVector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::vector<OrderPoint> prune_dominated(std::span<const OrderPoint> points) {
    std::vector<OrderPoint> kept;
    for (size_t i = 0; i < points.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < points.size() && !drop; ++j) {
            if (j == i) continue;
            if (strictly_dominates(points[j].distances, points[i].distances)) drop = true;
            // duplicate collapse: only the first occurrence survives
            if (j < i && points[j].distances == points[i].distances) drop = true;
        }
        if (!drop) kept.push_back(points[i]);
    }
    return kept;
}

bool covers(const DistanceVector& split_points, const DistanceVector& point) {
    if (split_points.size() != point.size()) {
        throw std::invalid_argument("split points and point must share dimensions");
    }
    for (size_t d = 0; d < point.size(); ++d) {
        if (!(point[d] < split_points[d])) return false;
    }
    return true;
}

std::vector<std::size_t> coverage(const DistanceVector& split_points,
                                  std::span<const OrderPoint> points) {
    std::vector<std::size_t> covered;
    for (size_t i = 0; i < points.size(); ++i) {
        if (covers(split_points, points[i].distances)) covered.push_back(i);
    }
    return covered;
}

double fscore(std::size_t covered_target, std::size_t covered_total, std::size_t target_total) {
    if (target_total == 0) throw std::invalid_argument("fscore needs target_total >= 1");
    double precision = covered_total == 0
                           ? 0.0
                           : static_cast<double>(covered_target) / static_cast<double>(covered_total);
    double recall = static_cast<double>(covered_target) / static_cast<double>(target_total);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

Relevance master_relevance(std::span<const OrderPoint> points, int target_class) {
    if (points.empty()) throw std::invalid_argument("master_relevance needs a non-empty point set");
    const size_t dims = points[0].distances.size();

    std::size_t target_total = 0;
    for (const auto& p : points) {
        if (p.distances.size() != dims) {
            throw std::invalid_argument("order points must share dimensions");
        }
        if (p.class_id == target_class) ++target_total;
    }
    if (target_total == 0) throw std::invalid_argument("master_relevance needs a target point");

    Relevance best;
    best.split_points.assign(dims, kInf);
    best.degenerate = true;

    bool have_candidate = false;
    for (const auto& cand : points) {
        if (cand.class_id == target_class) continue;
        if (!all_finite(cand.distances)) continue;  // sentinel points are never candidates

        std::size_t covered_target = 0, covered_total = 0;
        for (const auto& p : points) {
            if (covers(cand.distances, p.distances)) {
                ++covered_total;
                if (p.class_id == target_class) ++covered_target;
            }
        }
        double score = fscore(covered_target, covered_total, target_total);

        bool better;
        if (!have_candidate) {
            better = true;
        } else if (score != best.score) {
            better = score > best.score;
        } else if (covered_target != best.covered_target) {
            better = covered_target > best.covered_target;
        } else {
            better = std::lexicographical_compare(cand.distances.begin(), cand.distances.end(),
                                                  best.split_points.begin(),
                                                  best.split_points.end());
        }
        if (better) {
            best.split_points = cand.distances;
            best.score = score;
            best.covered_target = covered_target;
            best.covered_total = covered_total;
            best.degenerate = false;
            have_candidate = true;
        }
    }
    return best;
}

}  // namespace movelets
