#include "movelets/alignment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace movelets {

RankRow rank_row(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("rank_row needs a non-empty input");

    const size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return values[a] < values[b]; });

    RankRow ranks(n);
    size_t pos = 0;
    while (pos < n) {
        size_t end = pos + 1;
        while (end < n && values[order[end]] == values[order[pos]]) ++end;
        // positions pos..end-1 (1-based pos+1..end) share the mean rank
        double mean = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
        for (size_t t = pos; t < end; ++t) ranks[order[t]] = mean;
        pos = end;
    }
    return ranks;
}

Alignment master_alignment(std::span<const std::span<const double>> rank_rows,
                           std::span<const std::span<const double>> dist_rows) {
    if (rank_rows.empty() || rank_rows.size() != dist_rows.size()) {
        throw std::invalid_argument("master_alignment needs matching non-empty row sets");
    }
    const size_t dims = rank_rows.size();
    const size_t n = rank_rows[0].size();
    for (size_t c = 0; c < dims; ++c) {
        if (rank_rows[c].size() != n || dist_rows[c].size() != n) {
            throw std::invalid_argument("master_alignment rows must share one length");
        }
    }

    Alignment result;
    if (n == 0) {
        // trajectory shorter than the probe: sentinel alignment
        result.distances.assign(dims, kInf);
        return result;
    }

    int best = 0;
    double best_mean = kInf;
    for (size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (size_t c = 0; c < dims; ++c) sum += rank_rows[c][k];
        double mean = sum / static_cast<double>(dims);
        if (mean < best_mean) {
            best_mean = mean;
            best = static_cast<int>(k);
        }
    }

    result.position = best;
    result.average_rank = best_mean;
    result.distances.resize(dims);
    for (size_t c = 0; c < dims; ++c) result.distances[c] = dist_rows[c][best];
    return result;
}

}  // namespace movelets
