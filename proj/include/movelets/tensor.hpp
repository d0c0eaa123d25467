#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "movelets/model.hpp"

namespace movelets {

// Dense 4-index distance store for one target trajectory T against every
// trajectory of the dataset: at(i, j, d, k) is the distance at dimension d
// between the length-w slice of T starting at j and the length-w slice of
// trajectory i starting at k. k is the fastest-varying index because the
// alignment step scans all k for a fixed (i, j, d).
class DistanceTensor {
public:
    DistanceTensor() = default;
    DistanceTensor(int length, int traj_count, int pos_count, int dim_count,
                   std::vector<int> k_extents);

    int length() const { return w_; }
    int traj_count() const { return n_; }
    int pos_count() const { return m_; }
    int dim_count() const { return d_; }
    // Valid k range for trajectory i: len(T_i) - w + 1, possibly 0.
    int k_extent(int i) const { return k_extents_[i]; }

    double at(int i, int j, int d, int k) const { return data_[index(i, j, d, k)]; }
    double& at(int i, int j, int d, int k) { return data_[index(i, j, d, k)]; }
    std::span<const double> row(int i, int j, int d) const;

    void dump_csv(std::ostream& out) const;

private:
    std::size_t index(int i, int j, int d, int k) const {
        return offsets_[i] + (static_cast<std::size_t>(j) * d_ + d) * k_extents_[i] + k;
    }

    int w_ = 1;
    int n_ = 0;
    int m_ = 0;
    int d_ = 0;
    std::vector<int> k_extents_;
    std::vector<std::size_t> offsets_;
    std::vector<double> data_;
};

// w=1 tensor: raw element distances between T and every trajectory in ds.
DistanceTensor compute_element_distances(const Trajectory& target, const Dataset& ds);

// Length-w tensor from the length-(w-1) tensor and the element distances:
// each cell extends the previous sum by the one new element pair.
DistanceTensor csd(const DistanceTensor& prev, const DistanceTensor& a0, int w);

}  // namespace movelets
