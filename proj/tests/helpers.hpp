#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "movelets/discovery.hpp"
#include "movelets/model.hpp"

namespace test_helpers {

// Scratch directory removed at scope exit.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            path_ = base / ("movelets_test_" + std::to_string(::getpid()) + "_" +
                            std::to_string(counter_++) + "_" + std::to_string(i));
            if (std::filesystem::create_directory(path_)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline movelets::Value nominal(const std::string& token) {
    return movelets::parse_value(movelets::ValueKind::Nominal, token);
}
inline movelets::Value time_hhmm(const std::string& token) {
    return movelets::parse_value(movelets::ValueKind::TimeHHMM, token);
}
inline movelets::Value weekday(const std::string& token) {
    return movelets::parse_value(movelets::ValueKind::Weekday, token);
}
inline movelets::Value numeric(double x) {
    movelets::Value v;
    v.kind = movelets::ValueKind::Numeric;
    v.num = x;
    return v;
}

inline movelets::DimensionDescriptor dim_of(const std::string& name, movelets::ValueKind kind,
                                            const std::string& distance) {
    movelets::DimensionDescriptor d;
    d.name = name;
    d.kind = kind;
    d.distance_id = distance;
    if (kind == movelets::ValueKind::LatLon) {
        d.columns = {name + "_lat", name + "_lon"};
    } else {
        d.columns = {name};
    }
    return d;
}

// Random dataset over mixed dimension kinds. Numeric and temporal values are
// integers so that summed distances stay exact; latlon is real-valued.
inline movelets::Dataset random_dataset(std::mt19937& rng, int max_n, int max_m, int max_d,
                                        int classes = 2) {
    using namespace movelets;
    auto draw = [&](int n) { return static_cast<int>(rng() % n); };

    Dataset ds;
    int d = 1 + draw(max_d);
    const ValueKind kinds[] = {ValueKind::Nominal, ValueKind::Numeric, ValueKind::TimeHHMM,
                               ValueKind::Weekday, ValueKind::LatLon};
    const char* dists[] = {"binary", "abs", "minutes", "weekday", "euclidean"};
    for (int i = 0; i < d; ++i) {
        int pick = draw(5);
        ds.schema.dims.push_back(dim_of("dim" + std::to_string(i), kinds[pick], dists[pick]));
    }

    static const char* kWeekdays[] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
    int n = std::max(classes, 2 + draw(std::max(1, max_n - 1)));
    for (int t = 0; t < n; ++t) {
        Trajectory traj;
        traj.tid = "t" + std::to_string(t);
        traj.label = "L" + std::to_string(t % classes);  // every class inhabited
        int m = 1 + draw(max_m);
        for (int e = 0; e < m; ++e) {
            Element el;
            for (const auto& dim : ds.schema.dims) {
                switch (dim.kind) {
                    case ValueKind::Nominal:
                        el.push_back(nominal("v" + std::to_string(draw(4))));
                        break;
                    case ValueKind::Numeric:
                        el.push_back(numeric(draw(10)));
                        break;
                    case ValueKind::TimeHHMM: {
                        int minutes = draw(24 * 60);
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "%02d:%02d", minutes / 60, minutes % 60);
                        el.push_back(time_hhmm(buf));
                        break;
                    }
                    case ValueKind::Weekday:
                        el.push_back(weekday(kWeekdays[draw(7)]));
                        break;
                    case ValueKind::LatLon: {
                        double lat = (draw(20000) - 10000) / 1000.0;
                        double lon = (draw(20000) - 10000) / 1000.0;
                        el.push_back(make_latlon(lat, lon));
                        break;
                    }
                }
            }
            traj.elements.push_back(std::move(el));
        }
        ds.trajectories.push_back(std::move(traj));
    }
    return ds;
}

inline bool same_movelet(const movelets::Movelet& a, const movelets::Movelet& b) {
    return a.tid == b.tid && a.start == b.start && a.end == b.end && a.dims == b.dims &&
           a.relevance.score == b.relevance.score &&
           a.relevance.split_points == b.relevance.split_points &&
           a.relevance.covered_target == b.relevance.covered_target &&
           a.relevance.covered_total == b.relevance.covered_total && a.elements == b.elements;
}

inline bool same_result(const movelets::DiscoveryResult& a, const movelets::DiscoveryResult& b) {
    if (a.movelets.size() != b.movelets.size()) return false;
    for (size_t i = 0; i < a.movelets.size(); ++i) {
        if (!same_movelet(a.movelets[i], b.movelets[i])) return false;
    }
    if (a.stats.size() != b.stats.size()) return false;
    for (size_t i = 0; i < a.stats.size(); ++i) {
        if (a.stats[i].tid != b.stats[i].tid ||
            a.stats[i].candidates_evaluated != b.stats[i].candidates_evaluated ||
            a.stats[i].movelets_kept != b.stats[i].movelets_kept) {
            return false;
        }
    }
    return true;
}

}  // namespace test_helpers
