#include "movelets/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace movelets {

namespace {

const char* kWeekdayTokens[7] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};

const std::map<std::string, ValueKind>& kind_names() {
    static const std::map<std::string, ValueKind> names = {
        {"nominal", ValueKind::Nominal},
        {"numeric", ValueKind::Numeric},
        {"temporal-hhmm", ValueKind::TimeHHMM},
        {"weekday", ValueKind::Weekday},
        {"latlon-composite", ValueKind::LatLon},
    };
    return names;
}

double parse_minutes(const std::string& token) {
    int h = 0, m = 0;
    char extra = 0;
    int fields = std::sscanf(token.c_str(), "%d:%d%c", &h, &m, &extra);
    size_t colon = token.find(':');
    bool shape_ok = colon != std::string::npos && colon >= 1 && colon <= 2 &&
                    token.size() - colon == 3 &&
                    std::all_of(token.begin(), token.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ':'; });
    if (fields != 2 || !shape_ok || h < 0 || h > 23 || m < 0 || m > 59) {
        throw DataError("malformed HH:MM time value: '" + token + "'");
    }
    return static_cast<double>(h * 60 + m);
}

int parse_weekday(const std::string& token) {
    for (int i = 0; i < 7; ++i) {
        if (token == kWeekdayTokens[i]) return i;
    }
    throw DataError("unknown weekday token: '" + token + "' (expected Mon..Sun)");
}

double parse_double(const std::string& token) {
    try {
        size_t consumed = 0;
        double v = std::stod(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw DataError("malformed numeric value: '" + token + "'");
    }
}

std::string format_minutes(double minutes) {
    int total = static_cast<int>(minutes);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", total / 60, total % 60);
    return buf;
}

// Minimal CSV: comma separated, double quotes around fields containing
// comma/quote, "" escapes a quote. No embedded newlines.
std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted) throw DataError("unterminated quote at line " + std::to_string(line_no));
    out.push_back(field);
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

const char* to_string(ValueKind kind) {
    switch (kind) {
        case ValueKind::Nominal: return "nominal";
        case ValueKind::Numeric: return "numeric";
        case ValueKind::TimeHHMM: return "temporal-hhmm";
        case ValueKind::Weekday: return "weekday";
        case ValueKind::LatLon: return "latlon-composite";
    }
    return "?";
}

ValueKind value_kind_from_string(const std::string& s) {
    auto it = kind_names().find(s);
    if (it == kind_names().end()) {
        throw SchemaError("unknown dimension kind: '" + s + "'");
    }
    return it->second;
}

bool Value::operator==(const Value& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case ValueKind::Nominal: return text == other.text;
        case ValueKind::Numeric: return num == other.num;
        case ValueKind::TimeHHMM:
        case ValueKind::Weekday: return num == other.num;
        case ValueKind::LatLon: return lat == other.lat && lon == other.lon;
    }
    return false;
}

bool DimensionDescriptor::flag(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return false;
    return it->second == "true" || it->second == "1" || it->second == "yes";
}

int Schema::index_of(const std::string& name) const {
    for (size_t i = 0; i < dims.size(); ++i) {
        if (dims[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

std::vector<std::string> Dataset::class_labels() const {
    std::set<std::string> labels;
    for (const auto& t : trajectories) labels.insert(t.label);
    return {labels.begin(), labels.end()};
}

std::map<std::string, std::size_t> Dataset::class_histogram() const {
    std::map<std::string, std::size_t> hist;
    for (const auto& t : trajectories) ++hist[t.label];
    return hist;
}

std::vector<int> Dataset::class_ids() const {
    auto labels = class_labels();
    std::vector<int> ids;
    ids.reserve(trajectories.size());
    for (const auto& t : trajectories) {
        auto it = std::lower_bound(labels.begin(), labels.end(), t.label);
        ids.push_back(static_cast<int>(it - labels.begin()));
    }
    return ids;
}

Schema parse_schema_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("schema is not valid JSON: ") + e.what());
    }
    if (!doc.contains("dimensions") || !doc["dimensions"].is_array() || doc["dimensions"].empty()) {
        throw SchemaError("schema must declare a non-empty 'dimensions' array");
    }
    Schema schema;
    for (const auto& d : doc["dimensions"]) {
        DimensionDescriptor desc;
        if (!d.contains("name") || !d.contains("kind") || !d.contains("distance")) {
            throw SchemaError("each dimension needs 'name', 'kind' and 'distance'");
        }
        desc.name = d["name"].get<std::string>();
        desc.kind = value_kind_from_string(d["kind"].get<std::string>());
        desc.distance_id = d["distance"].get<std::string>();
        if (d.contains("params")) {
            for (auto it = d["params"].begin(); it != d["params"].end(); ++it) {
                const auto& v = it.value();
                desc.params[it.key()] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
        if (d.contains("columns")) {
            desc.columns = d["columns"].get<std::vector<std::string>>();
        } else if (desc.kind == ValueKind::LatLon) {
            desc.columns = {desc.name + "_lat", desc.name + "_lon"};
        } else {
            desc.columns = {desc.name};
        }
        size_t want = desc.kind == ValueKind::LatLon ? 2 : 1;
        if (desc.columns.size() != want) {
            throw SchemaError("dimension '" + desc.name + "' must map to " +
                              std::to_string(want) + " column(s)");
        }
        if (schema.index_of(desc.name) >= 0) {
            throw SchemaError("duplicate dimension name '" + desc.name + "'");
        }
        schema.dims.push_back(std::move(desc));
    }
    return schema;
}

Schema load_schema(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open schema file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_schema_json(buf.str());
}

std::string schema_to_json(const Schema& schema) {
    nlohmann::json doc;
    doc["dimensions"] = nlohmann::json::array();
    for (const auto& dim : schema.dims) {
        nlohmann::json d;
        d["name"] = dim.name;
        d["kind"] = to_string(dim.kind);
        d["distance"] = dim.distance_id;
        if (!dim.params.empty()) d["params"] = dim.params;
        bool default_columns = (dim.kind == ValueKind::LatLon)
                                   ? dim.columns == std::vector<std::string>{dim.name + "_lat",
                                                                             dim.name + "_lon"}
                                   : dim.columns == std::vector<std::string>{dim.name};
        if (!default_columns) d["columns"] = dim.columns;
        doc["dimensions"].push_back(std::move(d));
    }
    return doc.dump(2) + "\n";
}

void save_schema(const Schema& schema, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write schema file: " + path);
    out << schema_to_json(schema);
}

Value parse_value(ValueKind kind, const std::string& token) {
    Value v;
    v.kind = kind;
    switch (kind) {
        case ValueKind::Nominal:
            if (token.empty()) throw DataError("empty nominal value");
            v.text = token;
            break;
        case ValueKind::Numeric:
            v.num = parse_double(token);
            if (!std::isfinite(v.num)) throw DataError("non-finite numeric value: '" + token + "'");
            break;
        case ValueKind::TimeHHMM:
            v.num = parse_minutes(token);
            v.text = format_minutes(v.num);
            break;
        case ValueKind::Weekday:
            v.num = parse_weekday(token);
            v.text = kWeekdayTokens[static_cast<int>(v.num)];
            break;
        case ValueKind::LatLon:
            throw DataError("latlon values are built from two columns, not one token");
    }
    return v;
}

Value make_latlon(double lat, double lon) {
    if (!std::isfinite(lat) || !std::isfinite(lon)) throw DataError("non-finite coordinate");
    Value v;
    v.kind = ValueKind::LatLon;
    v.lat = lat;
    v.lon = lon;
    return v;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // trim to the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char probe[32];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
        if (std::stod(probe) == v) return probe;
    }
    return buf;
}

std::string format_value(const Value& v) {
    switch (v.kind) {
        case ValueKind::Nominal:
        case ValueKind::TimeHHMM:
        case ValueKind::Weekday: return v.text;
        case ValueKind::Numeric: return format_double(v.num);
        case ValueKind::LatLon: return format_double(v.lat) + " " + format_double(v.lon);
    }
    return "";
}

namespace {
Dataset load_dataset_rows(const std::string& csv_path, const Schema& schema);
}

Dataset load_dataset(const std::string& csv_path, const Schema& schema) {
    // row-level diagnostics carry "file: line N: ..." for the CLI contract
    try {
        return load_dataset_rows(csv_path, schema);
    } catch (const DataError& e) {
        if (std::string(e.what()).find(csv_path) != std::string::npos) throw;
        throw DataError(csv_path + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(csv_path + ": " + e.what());
    }
}

namespace {

Dataset load_dataset_rows(const std::string& csv_path, const Schema& schema) {
    std::ifstream in(csv_path);
    if (!in) throw DataError("cannot open dataset file: " + csv_path);

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty dataset file: " + csv_path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_line(line, 1);

    auto column_index = [&](const std::string& name) {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return static_cast<int>(i);
        }
        return -1;
    };

    int tid_col = column_index("tid");
    int label_col = column_index("label");
    int order_col = column_index("order");
    if (tid_col < 0) throw SchemaError("missing required column 'tid'");
    if (label_col < 0) throw SchemaError("missing required column 'label'");
    if (order_col < 0) throw SchemaError("missing required column 'order'");

    // Per dimension, the source column indices.
    std::vector<std::vector<int>> dim_cols;
    for (const auto& dim : schema.dims) {
        std::vector<int> cols;
        for (const auto& col : dim.columns) {
            int idx = column_index(col);
            if (idx < 0) {
                throw SchemaError("missing column '" + col + "' required by dimension '" +
                                  dim.name + "'");
            }
            cols.push_back(idx);
        }
        dim_cols.push_back(std::move(cols));
    }

    struct Row {
        long long order;
        Element element;
    };
    std::vector<std::string> tid_order;  // first-appearance order
    std::map<std::string, std::string> tid_label;
    std::map<std::string, std::map<long long, Element>> rows;  // tid -> order -> element

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line, line_no);
        if (fields.size() != header.size()) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        }
        const std::string& tid = fields[tid_col];
        const std::string& label = fields[label_col];
        if (tid.empty()) throw DataError("line " + std::to_string(line_no) + ": empty tid");
        long long order = 0;
        try {
            size_t consumed = 0;
            order = std::stoll(fields[order_col], &consumed);
            if (consumed != fields[order_col].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw DataError("line " + std::to_string(line_no) + ": malformed order value '" +
                            fields[order_col] + "'");
        }

        Element element;
        element.reserve(schema.dims.size());
        for (size_t d = 0; d < schema.dims.size(); ++d) {
            const auto& dim = schema.dims[d];
            try {
                if (dim.kind == ValueKind::LatLon) {
                    double lat = parse_double(fields[dim_cols[d][0]]);
                    double lon = parse_double(fields[dim_cols[d][1]]);
                    element.push_back(make_latlon(lat, lon));
                } else {
                    const std::string& token = fields[dim_cols[d][0]];
                    if (token.empty()) {
                        throw DataError("missing value for dimension '" + dim.name + "'");
                    }
                    element.push_back(parse_value(dim.kind, token));
                }
            } catch (const DataError& e) {
                throw DataError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }

        auto label_it = tid_label.find(tid);
        if (label_it == tid_label.end()) {
            tid_label[tid] = label;
            tid_order.push_back(tid);
        } else if (label_it->second != label) {
            throw DataError("line " + std::to_string(line_no) + ": trajectory '" + tid +
                            "' has conflicting labels '" + label_it->second + "' and '" + label +
                            "'");
        }
        auto [it, inserted] = rows[tid].emplace(order, std::move(element));
        (void)it;
        if (!inserted) {
            throw DataError("line " + std::to_string(line_no) + ": duplicate (tid, order) pair (" +
                            tid + ", " + std::to_string(order) + ")");
        }
    }

    Dataset ds;
    ds.schema = schema;
    for (const auto& tid : tid_order) {
        Trajectory t;
        t.tid = tid;
        t.label = tid_label[tid];
        for (auto& [order, element] : rows[tid]) {
            (void)order;
            t.elements.push_back(std::move(element));
        }
        if (t.elements.empty()) throw DataError("trajectory '" + tid + "' has no elements");
        ds.trajectories.push_back(std::move(t));
    }
    if (ds.trajectories.empty()) throw DataError("dataset has no trajectories: " + csv_path);
    return ds;
}

}  // namespace

void save_dataset(const Dataset& ds, const std::string& csv_path) {
    std::ofstream out(csv_path);
    if (!out) throw DataError("cannot write dataset file: " + csv_path);

    out << "tid,label,order";
    for (const auto& dim : ds.schema.dims) {
        for (const auto& col : dim.columns) out << ',' << csv_escape(col);
    }
    out << '\n';

    for (const auto& t : ds.trajectories) {
        for (size_t i = 0; i < t.elements.size(); ++i) {
            out << csv_escape(t.tid) << ',' << csv_escape(t.label) << ',' << i;
            for (const auto& v : t.elements[i]) {
                if (v.kind == ValueKind::LatLon) {
                    out << ',' << format_double(v.lat) << ',' << format_double(v.lon);
                } else {
                    out << ',' << csv_escape(format_value(v));
                }
            }
            out << '\n';
        }
    }
}

ValidationReport validate_dataset(const Dataset& ds) {
    ValidationReport report;
    report.class_histogram = ds.class_histogram();

    if (ds.trajectories.empty()) {
        report.violations.push_back("dataset has no trajectories");
        return report;
    }

    size_t min_len = SIZE_MAX, max_len = 0;
    for (const auto& t : ds.trajectories) {
        min_len = std::min(min_len, t.elements.size());
        max_len = std::max(max_len, t.elements.size());
        if (t.elements.empty()) {
            report.violations.push_back("trajectory '" + t.tid + "' has no elements");
            continue;
        }
        for (const auto& e : t.elements) {
            if (static_cast<int>(e.size()) != ds.schema.size()) {
                report.violations.push_back("trajectory '" + t.tid +
                                            "' has an element that does not match the schema width");
                break;
            }
        }
    }
    report.min_length = min_len == SIZE_MAX ? 0 : min_len;
    report.max_length = max_len;

    if (report.class_histogram.size() < 2) {
        report.violations.push_back("need >= 2 classes for discovery, got " +
                                    std::to_string(report.class_histogram.size()));
    }
    return report;
}

}  // namespace movelets
