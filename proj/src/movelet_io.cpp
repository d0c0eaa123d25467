#include "movelets/movelet_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace movelets {

namespace {

nlohmann::json value_to_json(const Value& v) {
    switch (v.kind) {
        case ValueKind::Nominal:
        case ValueKind::TimeHHMM:
        case ValueKind::Weekday: return v.text;
        case ValueKind::Numeric: return v.num;
        case ValueKind::LatLon: return nlohmann::json::array({v.lat, v.lon});
    }
    return nullptr;
}

Value value_from_json(const nlohmann::json& j, const DimensionDescriptor& dim) {
    switch (dim.kind) {
        case ValueKind::Nominal:
        case ValueKind::TimeHHMM:
        case ValueKind::Weekday:
            if (!j.is_string()) {
                throw DataError("movelet value for dimension '" + dim.name +
                                "' must be a string");
            }
            return parse_value(dim.kind, j.get<std::string>());
        case ValueKind::Numeric: {
            if (!j.is_number()) {
                throw DataError("movelet value for dimension '" + dim.name +
                                "' must be a number");
            }
            Value v;
            v.kind = ValueKind::Numeric;
            v.num = j.get<double>();
            return v;
        }
        case ValueKind::LatLon:
            if (!j.is_array() || j.size() != 2) {
                throw DataError("movelet value for dimension '" + dim.name +
                                "' must be a [lat, lon] pair");
            }
            return make_latlon(j[0].get<double>(), j[1].get<double>());
    }
    throw DataError("unhandled value kind");
}

}  // namespace

void save_movelets_json(const std::vector<Movelet>& movelets, const Schema& schema,
                        const std::string& path) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& m : movelets) {
        nlohmann::json entry;
        entry["tid"] = m.tid;
        entry["start"] = m.start + 1;
        entry["end"] = m.end + 1;
        entry["dims"] = nlohmann::json::array();
        for (int d : m.dims) entry["dims"].push_back(schema.dims[d].name);
        entry["splits"] = nlohmann::json::object();
        for (size_t c = 0; c < m.dims.size(); ++c) {
            double sp = m.relevance.split_points[c];
            entry["splits"][schema.dims[m.dims[c]].name] =
                std::isinf(sp) ? nlohmann::json(nullptr) : nlohmann::json(sp);
        }
        entry["score"] = m.relevance.score;
        entry["elements"] = nlohmann::json::array();
        for (const auto& row : m.elements) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const auto& v : row) jrow.push_back(value_to_json(v));
            entry["elements"].push_back(std::move(jrow));
        }
        doc.push_back(std::move(entry));
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write movelet file: " + path);
    out << doc.dump(2) << '\n';
}

std::vector<Movelet> load_movelets_json(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open movelet file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("movelet file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_array()) throw DataError("movelet file must hold a JSON array");

    std::vector<Movelet> movelets;
    for (const auto& entry : doc) {
        Movelet m;
        m.tid = entry.at("tid").get<std::string>();
        m.start = entry.at("start").get<int>() - 1;
        m.end = entry.at("end").get<int>() - 1;
        if (m.start < 0 || m.end < m.start) throw DataError("movelet has a bad position range");

        for (const auto& name : entry.at("dims")) {
            int idx = schema.index_of(name.get<std::string>());
            if (idx < 0) {
                throw DataError("movelet dimension '" + name.get<std::string>() +
                                "' is absent from the schema");
            }
            m.dims.push_back(idx);
        }
        if (m.dims.empty()) throw DataError("movelet has an empty dimension set");

        const auto& splits = entry.at("splits");
        for (int d : m.dims) {
            const auto& sp = splits.at(schema.dims[d].name);
            m.relevance.split_points.push_back(sp.is_null() ? kInf : sp.get<double>());
        }
        m.relevance.score = entry.at("score").get<double>();
        m.relevance.degenerate =
            std::any_of(m.relevance.split_points.begin(), m.relevance.split_points.end(),
                        [](double v) { return std::isinf(v); });

        for (const auto& jrow : entry.at("elements")) {
            if (jrow.size() != m.dims.size()) {
                throw DataError("movelet element width does not match its dimension set");
            }
            std::vector<Value> row;
            for (size_t c = 0; c < m.dims.size(); ++c) {
                row.push_back(value_from_json(jrow[c], schema.dims[m.dims[c]]));
            }
            m.elements.push_back(std::move(row));
        }
        if (m.elements.empty()) throw DataError("movelet has no elements");
        if (static_cast<int>(m.elements.size()) != m.length()) {
            throw DataError("movelet element count does not match its position range");
        }
        movelets.push_back(std::move(m));
    }
    return movelets;
}

}  // namespace movelets
