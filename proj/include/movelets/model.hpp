#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace movelets {

// User/data problems (bad schema, malformed rows). The CLI maps these to exit 2.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ValueKind { Nominal, Numeric, TimeHHMM, Weekday, LatLon };

const char* to_string(ValueKind kind);
ValueKind value_kind_from_string(const std::string& s);

// One cell of one dimension. The active payload depends on kind:
//   Nominal  -> text
//   Numeric  -> num
//   TimeHHMM -> num (minutes since midnight) + canonical text "HH:MM"
//   Weekday  -> num (0=Mon .. 6=Sun) + canonical token
//   LatLon   -> lat, lon
struct Value {
    ValueKind kind = ValueKind::Nominal;
    double num = 0.0;
    double lat = 0.0;
    double lon = 0.0;
    std::string text;

    bool operator==(const Value& other) const;
};

using Element = std::vector<Value>;

struct Trajectory {
    std::string tid;
    std::string label;
    std::vector<Element> elements;

    int length() const { return static_cast<int>(elements.size()); }
};

struct DimensionDescriptor {
    std::string name;
    ValueKind kind = ValueKind::Nominal;
    std::string distance_id;
    std::map<std::string, std::string> params;
    // Source CSV columns; one entry, or two (lat, lon) for LatLon.
    std::vector<std::string> columns;

    bool flag(const std::string& key) const;
};

struct Schema {
    std::vector<DimensionDescriptor> dims;

    int size() const { return static_cast<int>(dims.size()); }
    int index_of(const std::string& name) const;  // -1 when absent
};

struct Dataset {
    Schema schema;
    std::vector<Trajectory> trajectories;

    int size() const { return static_cast<int>(trajectories.size()); }
    std::vector<std::string> class_labels() const;          // sorted, unique
    std::map<std::string, std::size_t> class_histogram() const;
    // Class id per trajectory, matching the order of class_labels().
    std::vector<int> class_ids() const;
};

struct ValidationReport {
    std::map<std::string, std::size_t> class_histogram;
    std::size_t min_length = 0;
    std::size_t max_length = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Schema document: {"dimensions":[{"name":...,"kind":...,"distance":...,
// "params":{...},"columns":[...]}, ...]}
Schema parse_schema_json(const std::string& json_text);
Schema load_schema(const std::string& path);
std::string schema_to_json(const Schema& schema);
void save_schema(const Schema& schema, const std::string& path);

Value parse_value(ValueKind kind, const std::string& token);
Value make_latlon(double lat, double lon);
// Canonical token for scalar kinds; LatLon is rendered per column.
std::string format_value(const Value& v);
// Shortest decimal form that parses back to exactly v.
std::string format_double(double v);

// CSV with a header row; required columns tid, label, order plus the schema's
// dimension columns. Rows are grouped by tid and ordered by the order column.
Dataset load_dataset(const std::string& csv_path, const Schema& schema);
void save_dataset(const Dataset& ds, const std::string& csv_path);

ValidationReport validate_dataset(const Dataset& ds);

}  // namespace movelets
