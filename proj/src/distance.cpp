#include "movelets/distance.hpp"

#include <algorithm>
#include <cmath>

namespace movelets {

double dist_nominal(const std::string& a, const std::string& b) {
    return a == b ? 0.0 : 1.0;
}

double dist_time_minutes(double a_minutes, double b_minutes, bool circular) {
    double delta = std::fabs(a_minutes - b_minutes);
    if (circular) delta = std::min(delta, 1440.0 - delta);
    return delta;
}

double dist_weekday(int a, int b) {
    bool a_weekend = a >= 5;  // Sat=5, Sun=6
    bool b_weekend = b >= 5;
    return a_weekend == b_weekend ? 0.0 : 1.0;
}

double dist_numeric_abs(double a, double b) {
    return std::fabs(a - b);
}

double dist_latlon(double lat1, double lon1, double lat2, double lon2, bool haversine) {
    if (!haversine) {
        return std::hypot(lat1 - lat2, lon1 - lon2);
    }
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
    double phi1 = lat1 * kDegToRad, phi2 = lat2 * kDegToRad;
    double dphi = (lat2 - lat1) * kDegToRad;
    double dlambda = (lon2 - lon1) * kDegToRad;
    double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
               std::cos(phi1) * std::cos(phi2) * std::sin(dlambda / 2) * std::sin(dlambda / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

const std::vector<DistanceSpec>& distance_registry() {
    static const std::vector<DistanceSpec> registry = {
        {"binary", {ValueKind::Nominal, ValueKind::Weekday}},
        {"minutes", {ValueKind::TimeHHMM}},
        {"weekday", {ValueKind::Weekday}},
        {"abs", {ValueKind::Numeric}},
        {"euclidean", {ValueKind::LatLon}},
    };
    return registry;
}

bool distance_known(const std::string& id) {
    for (const auto& spec : distance_registry()) {
        if (spec.id == id) return true;
    }
    return false;
}

bool distance_compatible(const std::string& id, ValueKind kind) {
    for (const auto& spec : distance_registry()) {
        if (spec.id != id) continue;
        return std::find(spec.kinds.begin(), spec.kinds.end(), kind) != spec.kinds.end();
    }
    return false;
}

void check_schema_distances(const Schema& schema) {
    for (const auto& dim : schema.dims) {
        if (!distance_known(dim.distance_id)) {
            throw SchemaError("dimension '" + dim.name + "' names unknown distance '" +
                              dim.distance_id + "'");
        }
        if (!distance_compatible(dim.distance_id, dim.kind)) {
            throw SchemaError("distance '" + dim.distance_id + "' is not defined for " +
                              std::string(to_string(dim.kind)) + " dimension '" + dim.name + "'");
        }
    }
}

double value_distance(const DimensionDescriptor& dim, const Value& a, const Value& b) {
    if (a.kind != dim.kind || b.kind != dim.kind) {
        throw DataError("value kind does not match dimension '" + dim.name + "'");
    }
    if (dim.distance_id == "binary") {
        return dist_nominal(a.text, b.text);
    }
    if (dim.distance_id == "minutes") {
        return dist_time_minutes(a.num, b.num, dim.flag("circular"));
    }
    if (dim.distance_id == "weekday") {
        return dist_weekday(static_cast<int>(a.num), static_cast<int>(b.num));
    }
    if (dim.distance_id == "abs") {
        return dist_numeric_abs(a.num, b.num);
    }
    if (dim.distance_id == "euclidean") {
        return dist_latlon(a.lat, a.lon, b.lat, b.lon, dim.flag("haversine"));
    }
    throw SchemaError("unknown distance function '" + dim.distance_id + "' on dimension '" +
                      dim.name + "'");
}

DistanceVector elem_distance(const Element& a, const Element& b, const Schema& schema) {
    if (static_cast<int>(a.size()) != schema.size() || static_cast<int>(b.size()) != schema.size()) {
        throw DataError("element width does not match schema");
    }
    DistanceVector v(schema.dims.size());
    for (size_t d = 0; d < schema.dims.size(); ++d) {
        v[d] = value_distance(schema.dims[d], a[d], b[d]);
    }
    return v;
}

DistanceVector subseq_distance(std::span<const Element> s, std::span<const Element> r,
                               const Schema& schema) {
    if (s.size() != r.size() || s.empty()) {
        throw DataError("subsequence distance needs two non-empty slices of equal length");
    }
    DistanceVector total(schema.dims.size(), 0.0);
    for (size_t i = 0; i < s.size(); ++i) {
        DistanceVector v = elem_distance(s[i], r[i], schema);
        for (size_t d = 0; d < total.size(); ++d) total[d] += v[d];
    }
    return total;
}

}  // namespace movelets
