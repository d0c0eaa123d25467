#include "movelets/tensor.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "movelets/distance.hpp"

namespace movelets {

DistanceTensor::DistanceTensor(int length, int traj_count, int pos_count, int dim_count,
                               std::vector<int> k_extents)
    : w_(length), n_(traj_count), m_(pos_count), d_(dim_count), k_extents_(std::move(k_extents)) {
    if (w_ < 1 || n_ < 0 || m_ < 0 || d_ < 1 || static_cast<int>(k_extents_.size()) != n_) {
        throw std::invalid_argument("bad tensor shape");
    }
    offsets_.resize(n_);
    std::size_t total = 0;
    for (int i = 0; i < n_; ++i) {
        if (k_extents_[i] < 0) k_extents_[i] = 0;
        offsets_[i] = total;
        total += static_cast<std::size_t>(m_) * d_ * k_extents_[i];
    }
    data_.assign(total, 0.0);
}

std::span<const double> DistanceTensor::row(int i, int j, int d) const {
    if (k_extents_[i] == 0) return {};
    return {&data_[index(i, j, d, 0)], static_cast<std::size_t>(k_extents_[i])};
}

void DistanceTensor::dump_csv(std::ostream& out) const {
    out << "i,j,d,k,value\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < m_; ++j) {
            for (int d = 0; d < d_; ++d) {
                for (int k = 0; k < k_extents_[i]; ++k) {
                    out << i << ',' << j << ',' << d << ',' << k << ',' << at(i, j, d, k) << '\n';
                }
            }
        }
    }
}

DistanceTensor compute_element_distances(const Trajectory& target, const Dataset& ds) {
    const int n = ds.size();
    const int m = target.length();
    const int dim_count = ds.schema.size();

    std::vector<int> k_extents(n);
    for (int i = 0; i < n; ++i) k_extents[i] = ds.trajectories[i].length();

    DistanceTensor a0(1, n, m, dim_count, std::move(k_extents));
    for (int i = 0; i < n; ++i) {
        const Trajectory& other = ds.trajectories[i];
        for (int j = 0; j < m; ++j) {
            const Element& ej = target.elements[j];
            for (int d = 0; d < dim_count; ++d) {
                const DimensionDescriptor& dim = ds.schema.dims[d];
                for (int k = 0; k < other.length(); ++k) {
                    a0.at(i, j, d, k) = value_distance(dim, ej[d], other.elements[k][d]);
                }
            }
        }
    }
    return a0;
}

DistanceTensor csd(const DistanceTensor& prev, const DistanceTensor& a0, int w) {
    if (w < 2) throw std::invalid_argument("csd needs w >= 2; use the element tensor for w = 1");
    if (prev.length() != w - 1 || a0.length() != 1) {
        throw std::invalid_argument("csd tensor lengths do not match w");
    }

    const int n = a0.traj_count();
    const int dim_count = a0.dim_count();
    const int pos_count = std::max(0, a0.pos_count() - w + 1);

    std::vector<int> k_extents(n);
    for (int i = 0; i < n; ++i) k_extents[i] = std::max(0, a0.k_extent(i) - w + 1);

    DistanceTensor aw(w, n, pos_count, dim_count, std::move(k_extents));
    for (int i = 0; i < n; ++i) {
        const int kk = aw.k_extent(i);
        for (int j = 0; j < pos_count; ++j) {
            for (int d = 0; d < dim_count; ++d) {
                for (int k = 0; k < kk; ++k) {
                    aw.at(i, j, d, k) = prev.at(i, j, d, k) + a0.at(i, j + w - 1, d, k + w - 1);
                }
            }
        }
    }
    return aw;
}

}  // namespace movelets
