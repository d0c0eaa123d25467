#include "movelets/synth.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <json.hpp>

namespace movelets {

namespace {

// modulo reduction keeps token draws identical across standard libraries
std::uint32_t draw(std::mt19937& rng, std::uint32_t n) {
    return rng() % n;
}

std::string token(int index) {
    return "v" + std::to_string(index);
}

void validate(const SynthConfig& c) {
    if (c.classes < 1) throw DataError("synth: classes must be >= 1");
    if (c.per_class < 1) throw DataError("synth: per-class count must be >= 1");
    if (c.length < 1) throw DataError("synth: trajectory length must be >= 1");
    if (c.dims < 1) throw DataError("synth: dimension count must be >= 1");
    if (c.pattern_length < 1 || c.pattern_length > c.length) {
        throw DataError("synth: pattern length must be in [1, trajectory length]");
    }
    if (c.pattern_dims < 1 || c.pattern_dims > c.dims) {
        throw DataError("synth: planted subset size must be in [1, dims]");
    }
    if (c.vocab_sizes.empty()) throw DataError("synth: need at least one vocabulary size");
    if (c.vocab_sizes.size() != 1 && static_cast<int>(c.vocab_sizes.size()) != c.dims) {
        throw DataError("synth: vocabulary sizes must be one value or one per dimension");
    }
    for (int v : c.vocab_sizes) {
        if (v < 2) throw DataError("synth: vocabulary sizes must be >= 2");
    }
}

}  // namespace

SynthResult synth_dataset(const SynthConfig& config) {
    validate(config);

    std::vector<int> vocab(config.dims);
    for (int d = 0; d < config.dims; ++d) {
        vocab[d] = config.vocab_sizes.size() == 1 ? config.vocab_sizes[0]
                                                  : config.vocab_sizes[d];
    }

    std::mt19937 rng(static_cast<std::uint32_t>(config.seed));

    // planted dimension subset, shared by all classes
    std::vector<int> all_dims(config.dims);
    for (int d = 0; d < config.dims; ++d) all_dims[d] = d;
    for (int i = 0; i < config.pattern_dims; ++i) {
        int j = i + static_cast<int>(draw(rng, static_cast<std::uint32_t>(config.dims - i)));
        std::swap(all_dims[i], all_dims[j]);
    }
    std::vector<int> planted(all_dims.begin(), all_dims.begin() + config.pattern_dims);
    std::sort(planted.begin(), planted.end());

    // one distinct joint pattern per class
    std::vector<std::vector<std::vector<std::string>>> patterns(config.classes);
    for (int c = 0; c < config.classes; ++c) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000) {
                throw DataError("synth: cannot draw distinct class patterns; enlarge vocabulary");
            }
            std::vector<std::vector<std::string>> p(config.pattern_length);
            for (int pos = 0; pos < config.pattern_length; ++pos) {
                for (int d : planted) {
                    p[pos].push_back(token(static_cast<int>(draw(rng, vocab[d]))));
                }
            }
            bool clash = false;
            for (int prev = 0; prev < c && !clash; ++prev) clash = patterns[prev] == p;
            if (!clash) {
                patterns[c] = std::move(p);
                break;
            }
        }
    }

    SynthResult result;
    for (int d = 0; d < config.dims; ++d) {
        DimensionDescriptor desc;
        desc.name = "d" + std::to_string(d);
        desc.kind = ValueKind::Nominal;
        desc.distance_id = "binary";
        desc.columns = {desc.name};
        result.dataset.schema.dims.push_back(std::move(desc));
    }

    int tid_width = std::to_string(config.per_class - 1).size();
    for (int c = 0; c < config.classes; ++c) {
        std::string label = "c" + std::to_string(c);
        PlantedPattern truth;
        truth.dims = planted;
        truth.tokens = patterns[c];

        for (int idx = 0; idx < config.per_class; ++idx) {
            std::string num = std::to_string(idx);
            num.insert(0, tid_width - num.size(), '0');
            Trajectory t;
            t.tid = label + "_t" + num;
            t.label = label;

            for (int pos = 0; pos < config.length; ++pos) {
                Element e;
                for (int d = 0; d < config.dims; ++d) {
                    e.push_back(parse_value(ValueKind::Nominal,
                                            token(static_cast<int>(draw(rng, vocab[d])))));
                }
                t.elements.push_back(std::move(e));
            }

            int start = static_cast<int>(
                draw(rng, static_cast<std::uint32_t>(config.length - config.pattern_length + 1)));
            for (int pos = 0; pos < config.pattern_length; ++pos) {
                for (size_t ci = 0; ci < planted.size(); ++ci) {
                    t.elements[start + pos][planted[ci]] =
                        parse_value(ValueKind::Nominal, patterns[c][pos][ci]);
                }
            }
            truth.placements[t.tid] = start;
            result.dataset.trajectories.push_back(std::move(t));
        }
        result.truth[label] = std::move(truth);
    }
    return result;
}

void save_truth_json(const SynthResult& result, const Schema& schema, const std::string& path) {
    nlohmann::json doc;
    doc["classes"] = nlohmann::json::object();
    for (const auto& [label, truth] : result.truth) {
        nlohmann::json entry;
        entry["dims"] = nlohmann::json::array();
        for (int d : truth.dims) entry["dims"].push_back(schema.dims[d].name);
        entry["pattern"] = truth.tokens;
        entry["placements"] = truth.placements;
        doc["classes"][label] = std::move(entry);
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write ground-truth file: " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace movelets
