#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "movelets/model.hpp"

namespace movelets {

// One magnitude per dimension of a stated dimension set. Units are whatever
// the dimension's distance function produces (minutes, mismatch count, ...).
using DistanceVector = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

double dist_nominal(const std::string& a, const std::string& b);
// Linear |delta| in minutes; circular=true wraps around midnight.
double dist_time_minutes(double a_minutes, double b_minutes, bool circular = false);
// 0 when both fall on weekdays or both on the weekend, 1 otherwise.
double dist_weekday(int a, int b);
double dist_numeric_abs(double a, double b);
// Planar Euclidean on raw degree values; haversine=true switches to
// great-circle distance in kilometers.
double dist_latlon(double lat1, double lon1, double lat2, double lon2, bool haversine = false);

struct DistanceSpec {
    std::string id;
    std::vector<ValueKind> kinds;  // value kinds this function accepts
};

// Registry keyed by distance_id: binary, minutes, weekday, abs, euclidean.
const std::vector<DistanceSpec>& distance_registry();
bool distance_known(const std::string& id);
bool distance_compatible(const std::string& id, ValueKind kind);
// Throws SchemaError when a dimension names an unknown or kind-incompatible
// distance function.
void check_schema_distances(const Schema& schema);

double value_distance(const DimensionDescriptor& dim, const Value& a, const Value& b);

DistanceVector elem_distance(const Element& a, const Element& b, const Schema& schema);

// Per-dimension sum of element distances over two equal-length slices.
DistanceVector subseq_distance(std::span<const Element> s, std::span<const Element> r,
                               const Schema& schema);

}  // namespace movelets
