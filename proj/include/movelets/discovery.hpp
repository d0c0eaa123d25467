#pragma once

#include <string>
#include <vector>

#include "movelets/alignment.hpp"
#include "movelets/relevance.hpp"
#include "movelets/tensor.hpp"

namespace movelets {

struct Candidate {
    int traj_index = -1;
    int start = 0;  // 0-based, inclusive
    int end = 0;    // 0-based, inclusive
    std::vector<int> dims;               // schema dimension indices, ascending
    std::vector<OrderPoint> alignments;  // one per dataset trajectory
    Relevance relevance;

    int length() const { return end - start + 1; }
};

// A candidate that survived the self-similarity sweep, carrying the literal
// element values of its window restricted to its dimension set.
struct Movelet {
    std::string tid;
    int traj_index = -1;
    int start = 0;
    int end = 0;
    std::vector<int> dims;
    Relevance relevance;
    std::vector<std::vector<Value>> elements;  // [position][dim of dims]

    int length() const { return end - start + 1; }
};

struct DiscoveryOptions {
    // Cap on the subtrajectory length; 0 explores every length up to the
    // trajectory length.
    int max_length = 0;
    // Worker count for the trajectory loop; 0 uses the available parallelism.
    // Results are identical for any value.
    int threads = 0;
};

struct TrajectoryStats {
    std::string tid;
    std::size_t length = 0;
    std::size_t candidates_evaluated = 0;
    std::size_t movelets_kept = 0;
};

struct DiscoveryResult {
    std::vector<Movelet> movelets;
    std::vector<TrajectoryStats> stats;
};

// All non-empty dimension subsets of 0..dim_count-1, ordered by size
// ascending, then lexicographically by member indices.
std::vector<std::vector<int>> enumerate_combinations(int dim_count);

// Fractional rank rows for one (w, j): ranks[i][d] over the valid start
// positions of trajectory i (empty when the trajectory is shorter than w).
std::vector<std::vector<RankRow>> rank_rows_at(const DistanceTensor& aw, int j);

// Evaluates every dimension combination for the window [j, j+w-1] and keeps
// the strictly best-scoring one; earlier combinations win ties.
Candidate best_candidate_at(const Dataset& ds, int traj_index, int w, int j,
                            const DistanceTensor& aw,
                            const std::vector<std::vector<RankRow>>& ranks,
                            const std::vector<std::vector<int>>& combinations,
                            const std::vector<int>& class_ids);

// score desc, then length asc, then start asc.
void sort_candidates(std::vector<Candidate>& candidates);

// Greedy sweep in sorted order; keeps a candidate iff its element interval
// intersects no kept candidate's interval.
std::vector<Candidate> remove_self_similar(std::vector<Candidate> sorted_candidates);

Movelet candidate_to_movelet(const Candidate& c, const Dataset& ds);

// OpenMP-parallel movelet discovery over the whole dataset. Output order is
// (tid asc, score desc, start asc) and is byte-identical for any thread
// count.
DiscoveryResult discover(const Dataset& ds, const DiscoveryOptions& options = {});

}  // namespace movelets
