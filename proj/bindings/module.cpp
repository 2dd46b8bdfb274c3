// Python bindings for the invariant core and the verification harness.
// Configurations cross the boundary as plain dicts matching the JSON file
// schema: {"dim": d, "points": [["p/q", ...], ...]} (or "vectors").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "vkcgs/harness.hpp"

namespace py = pybind11;
using vkcgs::Json;

namespace {

Json pyToJson(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        Json j = Json::object();
        for (auto item : obj.cast<py::dict>()) {
            j[item.first.cast<std::string>()] = pyToJson(item.second);
        }
        return j;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json j = Json::array();
        for (auto item : obj.cast<py::sequence>()) {
            j.push_back(pyToJson(item));
        }
        return j;
    }
    throw py::type_error("unsupported value in configuration");
}

py::object jsonToPy(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) {
                out.append(jsonToPy(item));
            }
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = jsonToPy(value);
            }
            return out;
        }
        default:
            throw py::value_error("unsupported JSON value");
    }
}

vkcgs::VertexConfiguration cfgFromPy(const py::dict& d) {
    return vkcgs::configurationFromJson(pyToJson(d));
}

vkcgs::SphericalConfiguration sphFromPy(const py::dict& d) {
    return vkcgs::sphericalFromJson(pyToJson(d));
}

vkcgs::Face faceFromPy(const std::vector<int>& verts) { return vkcgs::Face(verts); }

py::object pairsToPy(const std::vector<vkcgs::FacePair>& pairs) {
    return jsonToPy(vkcgs::facePairsToJson(pairs));
}

}  // namespace

PYBIND11_MODULE(_vkcgs, m) {
    m.doc() = "Exact mod-2 van Kampen / Conway-Gordon-Sachs invariants of "
              "simplexwise-linear maps, with a seeded verification harness";

    m.def("moment_curve_configuration",
          [](int dim, int points) {
              return jsonToPy(vkcgs::configurationToJson(
                  vkcgs::momentCurveConfiguration(dim, points)));
          },
          py::arg("dim"), py::arg("points"));

    m.def("sample_configuration",
          [](int dim, int points, std::uint64_t seed, long bound) {
              return jsonToPy(vkcgs::configurationToJson(
                  vkcgs::sampleConfiguration(dim, points, bound, seed)));
          },
          py::arg("dim"), py::arg("points"), py::arg("seed"), py::arg("bound") = 1000L);

    m.def("is_general_position",
          [](const py::dict& cfg) { return vkcgs::isGeneralPosition(cfgFromPy(cfg)); },
          py::arg("configuration"));

    m.def("is_generic_spherical",
          [](const py::dict& s) { return vkcgs::isGenericSpherical(sphFromPy(s)); },
          py::arg("spherical"));

    m.def("faces_intersect",
          [](const py::dict& cfg, const std::vector<int>& sigma,
             const std::vector<int>& tau) {
              return vkcgs::facesIntersect(cfgFromPy(cfg), faceFromPy(sigma),
                                           faceFromPy(tau));
          },
          py::arg("configuration"), py::arg("sigma"), py::arg("tau"));

    m.def("van_kampen_number",
          [](const py::dict& cfg, std::optional<int> skeletonDim) {
              const auto c = cfgFromPy(cfg);
              const int N = c.vertexCount() - 1;
              const vkcgs::Complex K = skeletonDim ? vkcgs::skeleton(N, *skeletonDim)
                                                   : vkcgs::fullSimplex(N);
              return vkcgs::vanKampenNumber(c, K).value();
          },
          py::arg("configuration"), py::arg("skeleton_dim") = py::none());

    m.def("van_kampen_witnesses",
          [](const py::dict& cfg, std::optional<int> skeletonDim) {
              const auto c = cfgFromPy(cfg);
              const int N = c.vertexCount() - 1;
              const vkcgs::Complex K = skeletonDim ? vkcgs::skeleton(N, *skeletonDim)
                                                   : vkcgs::fullSimplex(N);
              return pairsToPy(vkcgs::vanKampenDetailed(c, K).positives);
          },
          py::arg("configuration"), py::arg("skeleton_dim") = py::none());

    m.def("linking_number_mod2",
          [](const py::dict& cfg, const std::vector<int>& sigma,
             const std::vector<int>& tau) {
              return vkcgs::linkingNumberMod2(cfgFromPy(cfg), faceFromPy(sigma),
                                              faceFromPy(tau))
                  .value();
          },
          py::arg("configuration"), py::arg("sigma"), py::arg("tau"));

    m.def("cgs_number",
          [](const py::dict& cfg) { return vkcgs::cgsNumber(cfgFromPy(cfg)).value(); },
          py::arg("configuration"));

    m.def("cgs_linked_pairs",
          [](const py::dict& cfg) {
              return pairsToPy(vkcgs::cgsDetailed(cfgFromPy(cfg)).positives);
          },
          py::arg("configuration"));

    m.def("mixed_pair_parity",
          [](const py::dict& cfg) {
              const auto mixed = vkcgs::mixedPairParity(cfgFromPy(cfg));
              return py::make_tuple(mixed.parity.value(), mixed.count);
          },
          py::arg("configuration"));

    m.def("spherical_van_kampen",
          [](const py::dict& s, std::optional<int> skeletonDim) {
              const auto sph = sphFromPy(s);
              const int N = sph.vertexCount() - 1;
              const vkcgs::Complex K = skeletonDim ? vkcgs::skeleton(N, *skeletonDim)
                                                   : vkcgs::fullSimplex(N);
              return vkcgs::sphericalVanKampen(sph, K).value();
          },
          py::arg("spherical"), py::arg("skeleton_dim") = py::none());

    m.def("spherical_cgs",
          [](const py::dict& s) { return vkcgs::sphericalCgs(sphFromPy(s)).value(); },
          py::arg("spherical"));

    m.def("cone_configuration",
          [](const py::dict& cfg, std::uint64_t seed, int epsilonExponent) {
              const auto cone =
                  vkcgs::coneConfiguration(cfgFromPy(cfg), seed, epsilonExponent);
              py::dict out;
              out["result"] = jsonToPy(vkcgs::configurationToJson(cone.result));
              out["apex_index"] = cone.apexIndex;
              out["epsilon"] = vkcgs::formatRational(cone.epsilon);
              out["perturbation_seed"] = cone.perturbationSeed;
              return out;
          },
          py::arg("configuration"), py::arg("seed"), py::arg("epsilon_exponent") = 20);

    m.def("link_configuration",
          [](const py::dict& cfg, int center) {
              const auto link = vkcgs::linkConfiguration(cfgFromPy(cfg), center);
              return jsonToPy(vkcgs::sphericalToJson(link.result));
          },
          py::arg("configuration"), py::arg("center"));

    m.def("run_verification",
          [](const std::string& statement, int dim, int trials, std::uint64_t seed,
             long bound, int epsilonExponent, int workers, bool verbose) {
              vkcgs::RunConfig rc;
              rc.statement = vkcgs::parseStatement(statement);
              rc.d = dim;
              rc.trials = trials;
              rc.seed = seed;
              rc.bound = bound;
              rc.epsilonExponent = epsilonExponent;
              rc.workers = workers;
              rc.verbose = verbose;
              return jsonToPy(vkcgs::reportToJson(vkcgs::runVerification(rc)));
          },
          py::arg("statement"), py::arg("dim"), py::arg("trials"), py::arg("seed"),
          py::arg("bound") = 1000L, py::arg("epsilon_exponent") = 20,
          py::arg("workers") = 0, py::arg("verbose") = false);
}
