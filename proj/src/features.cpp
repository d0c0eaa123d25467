#include "movelets/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace movelets {

OrderPoint align_movelet(const Movelet& m, const Trajectory& t, const Schema& schema) {
    const int w = static_cast<int>(m.elements.size());
    const int dims = static_cast<int>(m.dims.size());
    const int extent = t.length() - w + 1;

    OrderPoint point;
    point.traj_index = -1;
    if (extent <= 0) {
        point.distances.assign(dims, kInf);
        return point;
    }

    std::vector<std::vector<double>> rows(dims, std::vector<double>(extent, 0.0));
    for (int k = 0; k < extent; ++k) {
        for (int pos = 0; pos < w; ++pos) {
            for (int c = 0; c < dims; ++c) {
                const DimensionDescriptor& dim = schema.dims[m.dims[c]];
                rows[c][k] += value_distance(dim, m.elements[pos][c],
                                             t.elements[k + pos][m.dims[c]]);
            }
        }
    }

    std::vector<RankRow> ranks(dims);
    std::vector<std::span<const double>> rank_spans(dims), dist_spans(dims);
    for (int c = 0; c < dims; ++c) {
        ranks[c] = rank_row(rows[c]);
        rank_spans[c] = ranks[c];
        dist_spans[c] = rows[c];
    }
    Alignment a = master_alignment(rank_spans, dist_spans);
    point.distances = std::move(a.distances);
    return point;
}

FeatureMatrix transform(const Dataset& ds, const std::vector<Movelet>& movelets,
                        FeatureMode mode) {
    for (const auto& m : movelets) {
        for (int d : m.dims) {
            if (d < 0 || d >= ds.schema.size()) {
                throw DataError("movelet references a dimension outside the schema");
            }
        }
    }

    FeatureMatrix fm;
    fm.mode = mode;
    for (size_t mi = 0; mi < movelets.size(); ++mi) {
        if (mode == FeatureMode::Binary) {
            fm.columns.push_back("m" + std::to_string(mi));
        } else {
            for (int d : movelets[mi].dims) {
                fm.columns.push_back("m" + std::to_string(mi) + ":" + ds.schema.dims[d].name);
            }
        }
    }

    const int n = ds.size();
    fm.tids.resize(n);
    fm.labels.resize(n);
    fm.values.assign(n, std::vector<double>(fm.columns.size(), 0.0));

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < n; ++r) {
        const Trajectory& t = ds.trajectories[r];
        fm.tids[r] = t.tid;
        fm.labels[r] = t.label;
        size_t col = 0;
        for (const auto& m : movelets) {
            OrderPoint point = align_movelet(m, t, ds.schema);
            if (mode == FeatureMode::Binary) {
                fm.values[r][col++] =
                    covers(m.relevance.split_points, point.distances) ? 1.0 : 0.0;
            } else {
                for (double v : point.distances) fm.values[r][col++] = v;
            }
        }
    }
    return fm;
}

void save_features_csv(const FeatureMatrix& fm, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write feature file: " + path);

    if (fm.mode == FeatureMode::Binary) {
        out << "# movelet feature matrix; mode=binary\n";
    } else {
        out << "# movelet feature matrix; mode=raw; +inf saturates to "
            << format_double(kRawInfSaturation) << " in classifier metrics\n";
    }
    out << "tid,label";
    for (const auto& c : fm.columns) out << ',' << c;
    out << '\n';
    for (size_t r = 0; r < fm.values.size(); ++r) {
        out << fm.tids[r] << ',' << fm.labels[r];
        for (double v : fm.values[r]) out << ',' << format_double(v);
        out << '\n';
    }
}

FeatureMatrix load_features_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open feature file: " + path);

    FeatureMatrix fm;
    std::string line;
    bool saw_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("mode=raw") != std::string::npos) fm.mode = FeatureMode::Raw;
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!saw_header) {
            if (fields.size() < 2 || fields[0] != "tid" || fields[1] != "label") {
                throw DataError("feature file must start with a tid,label,... header");
            }
            fm.columns.assign(fields.begin() + 2, fields.end());
            saw_header = true;
            continue;
        }
        if (fields.size() != fm.columns.size() + 2) {
            throw DataError("feature file line " + std::to_string(line_no) +
                            ": wrong field count");
        }
        fm.tids.push_back(fields[0]);
        fm.labels.push_back(fields[1]);
        std::vector<double> row(fm.columns.size());
        for (size_t c = 0; c < fm.columns.size(); ++c) {
            try {
                row[c] = std::stod(fields[c + 2]);
            } catch (const std::exception&) {
                throw DataError("feature file line " + std::to_string(line_no) +
                                ": bad value '" + fields[c + 2] + "'");
            }
        }
        fm.values.push_back(std::move(row));
    }
    if (!saw_header) throw DataError("feature file has no header: " + path);
    return fm;
}

namespace {

double row_distance(const FeatureMatrix& a, size_t ra, const FeatureMatrix& b, size_t rb) {
    double acc = 0.0;
    if (a.mode == FeatureMode::Binary) {
        for (size_t c = 0; c < a.columns.size(); ++c) {
            if (a.values[ra][c] != b.values[rb][c]) acc += 1.0;
        }
        return acc;
    }
    for (size_t c = 0; c < a.columns.size(); ++c) {
        double x = std::min(a.values[ra][c], kRawInfSaturation);
        double y = std::min(b.values[rb][c], kRawInfSaturation);
        acc += (x - y) * (x - y);
    }
    return std::sqrt(acc);
}

}  // namespace

KnnResult knn_classify(const FeatureMatrix& train, const FeatureMatrix& test, int k) {
    if (train.columns != test.columns || train.mode != test.mode) {
        throw DataError("train and test feature matrices must share columns and mode");
    }
    if (k < 1 || static_cast<size_t>(k) > train.values.size()) {
        throw DataError("k must be between 1 and the number of training rows");
    }

    KnnResult result;
    result.predicted.resize(test.values.size());

    std::map<std::string, size_t> class_total, class_correct;
    size_t correct = 0;

    for (size_t r = 0; r < test.values.size(); ++r) {
        std::vector<size_t> order(train.values.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> dist(train.values.size());
        for (size_t i = 0; i < train.values.size(); ++i) dist[i] = row_distance(train, i, test, r);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (dist[a] != dist[b]) return dist[a] < dist[b];
            return a < b;
        });

        std::map<std::string, int> votes;
        for (int i = 0; i < k; ++i) ++votes[train.labels[order[i]]];
        // std::map iterates labels in ascending order, so the first maximal
        // count is the lexicographically smallest winner
        std::string winner;
        int best_count = 0;
        for (const auto& [label, count] : votes) {
            if (count > best_count) {
                winner = label;
                best_count = count;
            }
        }
        result.predicted[r] = winner;

        ++class_total[test.labels[r]];
        if (winner == test.labels[r]) {
            ++correct;
            ++class_correct[test.labels[r]];
        }
    }

    result.accuracy = test.values.empty()
                          ? 0.0
                          : static_cast<double>(correct) / static_cast<double>(test.values.size());
    for (const auto& [label, total] : class_total) {
        result.per_class_accuracy[label] =
            static_cast<double>(class_correct[label]) / static_cast<double>(total);
    }
    return result;
}

}  // namespace movelets
