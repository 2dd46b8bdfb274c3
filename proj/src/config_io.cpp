#include "vkcgs/config_io.hpp"

#include <fstream>
#include <stdexcept>

namespace vkcgs {

namespace {

Json ratToJson(const Rational& r) { return formatRational(r); }

Rational ratFromJson(const Json& j) {
    if (j.is_string()) {
        return parseRational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(BigInt(j.get<std::int64_t>()));
    }
    if (j.is_number_unsigned()) {
        return Rational(BigInt(j.get<std::uint64_t>()));
    }
    throw std::invalid_argument(
        "coordinates must be exact: \"p/q\" strings or integers, got " + j.dump());
}

std::vector<Point> pointsFromJson(const Json& rows, int dim, const char* key) {
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument(std::string("'") + key + "' must be a nonempty array");
    }
    std::vector<Point> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            throw std::invalid_argument(std::string("each entry of '") + key +
                                        "' must list exactly 'dim' coordinates");
        }
        Point p;
        p.reserve(row.size());
        for (const auto& coord : row) {
            p.push_back(ratFromJson(coord));
        }
        out.push_back(std::move(p));
    }
    return out;
}

int dimFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
        throw std::invalid_argument("configuration needs an integer 'dim'");
    }
    const int dim = j["dim"].get<int>();
    if (dim < 1) {
        throw std::invalid_argument("'dim' must be at least 1");
    }
    return dim;
}

Json parseFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace

Json configurationToJson(const VertexConfiguration& cfg) {
    Json j;
    j["dim"] = cfg.d;
    Json rows = Json::array();
    for (const auto& p : cfg.points) {
        Json row = Json::array();
        for (const auto& c : p) {
            row.push_back(ratToJson(c));
        }
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    return j;
}

Json sphericalToJson(const SphericalConfiguration& s) {
    Json j;
    j["dim"] = s.d;
    Json rows = Json::array();
    for (const auto& v : s.vectors) {
        Json row = Json::array();
        for (const auto& c : v) {
            row.push_back(ratToJson(c));
        }
        rows.push_back(std::move(row));
    }
    j["vectors"] = std::move(rows);
    return j;
}

VertexConfiguration configurationFromJson(const Json& j) {
    VertexConfiguration cfg;
    cfg.d = dimFromJson(j);
    if (!j.contains("points")) {
        throw std::invalid_argument("configuration needs a 'points' array");
    }
    cfg.points = pointsFromJson(j["points"], cfg.d, "points");
    return cfg;
}

SphericalConfiguration sphericalFromJson(const Json& j) {
    SphericalConfiguration s;
    s.d = dimFromJson(j);
    if (!j.contains("vectors")) {
        throw std::invalid_argument("spherical configuration needs a 'vectors' array");
    }
    s.vectors = pointsFromJson(j["vectors"], s.d, "vectors");
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        bool zero = true;
        for (const auto& c : s.vectors[i]) {
            zero = zero && c == 0;
        }
        if (zero) {
            throw std::invalid_argument("vector " + std::to_string(i) + " is zero");
        }
    }
    return s;
}

VertexConfiguration loadConfiguration(const std::string& path) {
    return configurationFromJson(parseFile(path));
}

SphericalConfiguration loadSpherical(const std::string& path) {
    return sphericalFromJson(parseFile(path));
}

Json faceToJson(const Face& f) {
    Json arr = Json::array();
    for (int v : f.vertices()) {
        arr.push_back(v);
    }
    return arr;
}

Json facePairsToJson(const std::vector<FacePair>& pairs) {
    Json arr = Json::array();
    for (const auto& [a, b] : pairs) {
        arr.push_back(Json::array({faceToJson(a), faceToJson(b)}));
    }
    return arr;
}

}  // namespace vkcgs
