#include "movelets/reference.hpp"

#include <algorithm>
#include <span>

namespace movelets {

namespace {

Candidate reference_candidate_at(const Dataset& ds, int traj_index, int w, int j,
                                 const std::vector<std::vector<int>>& combinations,
                                 const std::vector<int>& class_ids) {
    const int n = ds.size();
    const int dim_count = ds.schema.size();
    const Trajectory& target = ds.trajectories[traj_index];
    std::span<const Element> probe(&target.elements[j], static_cast<std::size_t>(w));

    // distance rows for this window, straight from the elements
    std::vector<std::vector<std::vector<double>>> rows(n);
    std::vector<std::vector<RankRow>> ranks(n);
    for (int i = 0; i < n; ++i) {
        const Trajectory& other = ds.trajectories[i];
        const int extent = std::max(0, other.length() - w + 1);
        rows[i].assign(dim_count, std::vector<double>(extent));
        for (int k = 0; k < extent; ++k) {
            std::span<const Element> slice(&other.elements[k], static_cast<std::size_t>(w));
            DistanceVector v = subseq_distance(probe, slice, ds.schema);
            for (int d = 0; d < dim_count; ++d) rows[i][d][k] = v[d];
        }
        ranks[i].resize(dim_count);
        for (int d = 0; d < dim_count; ++d) {
            if (extent > 0) ranks[i][d] = rank_row(rows[i][d]);
        }
    }

    Candidate best;
    best.traj_index = traj_index;
    best.start = j;
    best.end = j + w - 1;

    const int target_class = class_ids[traj_index];
    bool first = true;
    std::vector<std::span<const double>> rank_spans, dist_spans;
    for (const auto& combo : combinations) {
        std::vector<OrderPoint> points(n);
        for (int i = 0; i < n; ++i) {
            rank_spans.clear();
            dist_spans.clear();
            for (int d : combo) {
                rank_spans.push_back(ranks[i][d]);
                dist_spans.push_back(rows[i][d]);
            }
            Alignment a = master_alignment(rank_spans, dist_spans);
            points[i].distances = std::move(a.distances);
            points[i].class_id = class_ids[i];
            points[i].traj_index = i;
        }
        Relevance rel = master_relevance(points, target_class);
        if (first || rel.score > best.relevance.score) {
            best.dims = combo;
            best.alignments = std::move(points);
            best.relevance = std::move(rel);
            first = false;
        }
    }
    return best;
}

}  // namespace

DiscoveryResult discover_reference(const Dataset& ds, const DiscoveryOptions& options) {
    ValidationReport report = validate_dataset(ds);
    if (!report.ok()) {
        throw DataError("dataset is not discovery-ready: " + report.violations.front());
    }

    const auto combinations = enumerate_combinations(ds.schema.size());
    const auto class_ids = ds.class_ids();

    DiscoveryResult result;
    result.stats.resize(ds.size());
    for (int t = 0; t < ds.size(); ++t) {
        const Trajectory& target = ds.trajectories[t];
        const int m = target.length();
        const int w_max = options.max_length > 0 ? std::min(m, options.max_length) : m;

        std::vector<Candidate> candidates;
        for (int w = 1; w <= w_max; ++w) {
            for (int j = 0; j + w <= m; ++j) {
                candidates.push_back(
                    reference_candidate_at(ds, t, w, j, combinations, class_ids));
            }
        }

        TrajectoryStats& stats = result.stats[t];
        stats.tid = target.tid;
        stats.length = static_cast<std::size_t>(m);
        stats.candidates_evaluated = candidates.size();

        sort_candidates(candidates);
        std::vector<Candidate> kept = remove_self_similar(std::move(candidates));
        stats.movelets_kept = kept.size();
        for (const auto& c : kept) result.movelets.push_back(candidate_to_movelet(c, ds));
    }

    std::sort(result.movelets.begin(), result.movelets.end(),
              [](const Movelet& a, const Movelet& b) {
                  if (a.tid != b.tid) return a.tid < b.tid;
                  if (a.relevance.score != b.relevance.score) {
                      return a.relevance.score > b.relevance.score;
                  }
                  return a.start < b.start;
              });
    return result;
}

}  // namespace movelets
