#include "movelets/discovery.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace movelets {

std::vector<std::vector<int>> enumerate_combinations(int dim_count) {
    if (dim_count < 1) throw std::invalid_argument("need at least one dimension");
    std::vector<std::vector<int>> combos;
    std::vector<int> current;

    // combinations of a fixed size in lexicographic order
    auto emit_size = [&](int size) {
        current.assign(size, 0);
        for (int i = 0; i < size; ++i) current[i] = i;
        while (true) {
            combos.push_back(current);
            int pos = size - 1;
            while (pos >= 0 && current[pos] == dim_count - size + pos) --pos;
            if (pos < 0) break;
            ++current[pos];
            for (int i = pos + 1; i < size; ++i) current[i] = current[i - 1] + 1;
        }
    };
    for (int size = 1; size <= dim_count; ++size) emit_size(size);
    return combos;
}

std::vector<std::vector<RankRow>> rank_rows_at(const DistanceTensor& aw, int j) {
    std::vector<std::vector<RankRow>> ranks(aw.traj_count(),
                                            std::vector<RankRow>(aw.dim_count()));
    for (int i = 0; i < aw.traj_count(); ++i) {
        for (int d = 0; d < aw.dim_count(); ++d) {
            auto row = aw.row(i, j, d);
            if (!row.empty()) ranks[i][d] = rank_row(row);
        }
    }
    return ranks;
}

Candidate best_candidate_at(const Dataset& ds, int traj_index, int w, int j,
                            const DistanceTensor& aw,
                            const std::vector<std::vector<RankRow>>& ranks,
                            const std::vector<std::vector<int>>& combinations,
                            const std::vector<int>& class_ids) {
    const int n = ds.size();
    const int target_class = class_ids[traj_index];

    Candidate best;
    best.traj_index = traj_index;
    best.start = j;
    best.end = j + w - 1;

    std::vector<std::span<const double>> rank_spans, dist_spans;
    bool first = true;
    for (const auto& combo : combinations) {
        std::vector<OrderPoint> points(n);
        for (int i = 0; i < n; ++i) {
            rank_spans.clear();
            dist_spans.clear();
            for (int d : combo) {
                rank_spans.push_back(ranks[i][d]);
                dist_spans.push_back(aw.row(i, j, d));
            }
            Alignment a = master_alignment(rank_spans, dist_spans);
            points[i].distances = std::move(a.distances);
            points[i].class_id = class_ids[i];
            points[i].traj_index = i;
        }
        Relevance rel = master_relevance(points, target_class);
        // strict > : the first combination of a given score wins
        if (first || rel.score > best.relevance.score) {
            best.dims = combo;
            best.alignments = std::move(points);
            best.relevance = std::move(rel);
            first = false;
        }
    }
    return best;
}

void sort_candidates(std::vector<Candidate>& candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.relevance.score != b.relevance.score) return a.relevance.score > b.relevance.score;
        if (a.length() != b.length()) return a.length() < b.length();
        return a.start < b.start;
    });
}

std::vector<Candidate> remove_self_similar(std::vector<Candidate> sorted_candidates) {
    std::vector<Candidate> kept;
    for (auto& c : sorted_candidates) {
        bool overlaps = false;
        for (const auto& k : kept) {
            if (c.start <= k.end && k.start <= c.end) {
                overlaps = true;
                break;
            }
        }
        if (!overlaps) kept.push_back(std::move(c));
    }
    return kept;
}

Movelet candidate_to_movelet(const Candidate& c, const Dataset& ds) {
    const Trajectory& t = ds.trajectories[c.traj_index];
    Movelet m;
    m.tid = t.tid;
    m.traj_index = c.traj_index;
    m.start = c.start;
    m.end = c.end;
    m.dims = c.dims;
    m.relevance = c.relevance;
    m.elements.reserve(c.length());
    for (int pos = c.start; pos <= c.end; ++pos) {
        std::vector<Value> row;
        row.reserve(c.dims.size());
        for (int d : c.dims) row.push_back(t.elements[pos][d]);
        m.elements.push_back(std::move(row));
    }
    return m;
}

namespace {

std::vector<Movelet> mine_trajectory(const Dataset& ds, int traj_index,
                                     const std::vector<std::vector<int>>& combinations,
                                     const std::vector<int>& class_ids,
                                     const DiscoveryOptions& options, TrajectoryStats& stats) {
    const Trajectory& target = ds.trajectories[traj_index];
    const int m = target.length();
    const int w_max = options.max_length > 0 ? std::min(m, options.max_length) : m;

    DistanceTensor a0 = compute_element_distances(target, ds);
    DistanceTensor rolling;  // A_w for the current w >= 2

    std::vector<Candidate> candidates;
    for (int w = 1; w <= w_max; ++w) {
        if (w >= 2) rolling = csd(w == 2 ? a0 : rolling, a0, w);
        const DistanceTensor& aw = (w == 1) ? a0 : rolling;
        for (int j = 0; j < aw.pos_count(); ++j) {
            auto ranks = rank_rows_at(aw, j);
            candidates.push_back(
                best_candidate_at(ds, traj_index, w, j, aw, ranks, combinations, class_ids));
        }
    }

    stats.tid = target.tid;
    stats.length = static_cast<std::size_t>(m);
    stats.candidates_evaluated = candidates.size();

    sort_candidates(candidates);
    std::vector<Candidate> kept = remove_self_similar(std::move(candidates));
    stats.movelets_kept = kept.size();

    std::vector<Movelet> movelets;
    movelets.reserve(kept.size());
    for (const auto& c : kept) movelets.push_back(candidate_to_movelet(c, ds));
    return movelets;
}

}  // namespace

DiscoveryResult discover(const Dataset& ds, const DiscoveryOptions& options) {
    ValidationReport report = validate_dataset(ds);
    if (!report.ok()) {
        throw DataError("dataset is not discovery-ready: " + report.violations.front());
    }

    const int n = ds.size();
    const auto combinations = enumerate_combinations(ds.schema.size());
    const auto class_ids = ds.class_ids();
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

    std::vector<std::vector<Movelet>> per_trajectory(n);
    DiscoveryResult result;
    result.stats.resize(n);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int t = 0; t < n; ++t) {
        per_trajectory[t] =
            mine_trajectory(ds, t, combinations, class_ids, options, result.stats[t]);
    }

    for (auto& group : per_trajectory) {
        for (auto& m : group) result.movelets.push_back(std::move(m));
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
