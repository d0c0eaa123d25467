#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "movelets/model.hpp"

namespace movelets {

struct SynthConfig {
    int classes = 2;
    int per_class = 20;
    int length = 20;
    int dims = 4;
    int pattern_length = 3;
    int pattern_dims = 2;
    // One vocabulary size per dimension; a single entry broadcasts to all.
    std::vector<int> vocab_sizes = {5};
    std::uint64_t seed = 42;
};

struct PlantedPattern {
    std::vector<int> dims;                          // schema dimension indices
    std::vector<std::vector<std::string>> tokens;   // [position][dim of dims]
    std::map<std::string, int> placements;          // tid -> 0-based start
};

struct SynthResult {
    Dataset dataset;
    std::map<std::string, PlantedPattern> truth;  // class label -> pattern
};

// Nominal-dimension dataset with one distinct contiguous pattern per class
// planted on a shared dimension subset at a seeded random position in every
// trajectory of that class; every other cell is a uniform random token. The
// seed fully determines the output (mt19937 with modulo reduction, so files
// are reproducible across platforms).
SynthResult synth_dataset(const SynthConfig& config);

void save_truth_json(const SynthResult& result, const Schema& schema, const std::string& path);

}  // namespace movelets
