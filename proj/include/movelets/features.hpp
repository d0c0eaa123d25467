#pragma once

#include <map>
#include <string>
#include <vector>

#include "movelets/discovery.hpp"

namespace movelets {

enum class FeatureMode { Binary, Raw };

// Raw-mode +inf entries saturate to this constant inside classifier metrics.
inline constexpr double kRawInfSaturation = 1e12;

struct FeatureMatrix {
    FeatureMode mode = FeatureMode::Binary;
    std::vector<std::string> tids;
    std::vector<std::string> labels;
    // One column per movelet ("m<i>"), or per movelet and dimension
    // ("m<i>:<dim>") in raw mode; i is the movelet's position in its file.
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;  // rows x columns
};

// Best alignment of a movelet's elements into one trajectory over the
// movelet's dimension set. Sentinel (+inf) when the trajectory is shorter
// than the movelet.
OrderPoint align_movelet(const Movelet& m, const Trajectory& t, const Schema& schema);

// Binary mode: 1 iff the alignment vector is covered by the movelet's split
// points. Raw mode: the alignment distances themselves.
FeatureMatrix transform(const Dataset& ds, const std::vector<Movelet>& movelets,
                        FeatureMode mode);

void save_features_csv(const FeatureMatrix& fm, const std::string& path);
FeatureMatrix load_features_csv(const std::string& path);

struct KnnResult {
    std::vector<std::string> predicted;  // one label per test row
    double accuracy = 0.0;
    std::map<std::string, double> per_class_accuracy;
};

// Majority vote of the k nearest training rows under Hamming distance
// (binary mode) or Euclidean distance with +inf saturated (raw mode). Vote
// ties go to the lexicographically smallest label.
KnnResult knn_classify(const FeatureMatrix& train, const FeatureMatrix& test, int k);

}  // namespace movelets
