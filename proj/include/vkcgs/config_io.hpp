#pragma once

#include <string>

#include "json.hpp"
#include "vkcgs/invariants.hpp"

namespace vkcgs {

using Json = nlohmann::ordered_json;

// Configuration files are JSON documents
//   {"dim": d, "points": [["p/q", ...], ...]}
// with rationals as exact "p/q" strings; the integer shorthand "p" and bare
// JSON integers are accepted on input. Spherical files carry "vectors"
// instead of "points".

Json configurationToJson(const VertexConfiguration& cfg);
Json sphericalToJson(const SphericalConfiguration& s);

/// Throws std::invalid_argument on schema violations (missing keys,
/// ragged rows, floats, zero denominators).
VertexConfiguration configurationFromJson(const Json& j);
SphericalConfiguration sphericalFromJson(const Json& j);

VertexConfiguration loadConfiguration(const std::string& path);
SphericalConfiguration loadSpherical(const std::string& path);

Json faceToJson(const Face& f);
Json facePairsToJson(const std::vector<FacePair>& pairs);

}  // namespace vkcgs
