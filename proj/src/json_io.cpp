#include "flexrig/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace flexrig {

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const auto& [u, v] : edges) arr.push_back(Json::array({u, v}));
    return arr;
}

// Big coefficients that do not fit a 64-bit integer fall back to strings.
Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(Json::array({integer_to_json(c.num()), integer_to_json(c.den())}));
    return arr;
}

} // namespace

Json graph_to_json(const FlexGraph& g) {
    return Json{{"vertices", g.vertices()}, {"edges", edges_to_json(g.edges())}};
}

FlexGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph JSON needs an \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("each edge must be a pair of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::optional<std::vector<int>> vertices;
    if (j.contains("vertices")) {
        vertices = std::vector<int>{};
        for (const auto& v : j["vertices"]) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertex labels are integers");
            vertices->push_back(v.get<int>());
        }
    }
    return FlexGraph(edges, vertices);
}

Json coloring_to_json(const NacColoring& c) {
    Json j{{"red", edges_to_json(c.red())}, {"blue", edges_to_json(c.blue())}};
    if (!c.name().empty()) j["name"] = c.name();
    return j;
}

Json motion_to_json(const ParametricMotion& m) {
    Json vertices = Json::object();
    for (const auto& [v, p] : m.points()) {
        vertices[std::to_string(v)] = Json{
            {"x", Json{{"num", poly_to_json(p.x.num())}, {"den", poly_to_json(p.x.den())}}},
            {"y", Json{{"num", poly_to_json(p.y.num())}, {"den", poly_to_json(p.y.den())}}}};
    }
    return Json{{"parameter", "t"},
                {"display", m.display() == MotionDisplay::Trig ? "trig" : "rational"},
                {"vertices", vertices}};
}

Json cdc_to_json(const CdcTrace& trace) {
    Json stages = Json::array();
    for (const auto& stage : trace.stages) {
        Json added = Json::array();
        for (const auto& [u, v] : stage.upairs) added.push_back(Json::array({u, v}));
        stages.push_back(Json{{"added", added}});
    }
    return Json{{"stages", stages}, {"complete", trace.complete()}};
}

Json verdict_to_json(const MovabilityVerdict& v) {
    Json j;
    switch (v.status) {
        case MovabilityVerdict::Status::Movable: j["status"] = "Movable"; break;
        case MovabilityVerdict::Status::NotMovable: j["status"] = "NotMovable"; break;
        case MovabilityVerdict::Status::Unknown: j["status"] = "Unknown"; break;
    }
    j["detail"] = v.detail;
    if (v.grid_witness)
        j["witness"] = Json{{"type", "injective_grid"}, {"coloring", coloring_to_json(*v.grid_witness)}};
    if (v.spatial_witness)
        j["witness"] = Json{{"type", "spatial_embedding"},
                            {"pair", Json::array({coloring_to_json(v.spatial_witness->first),
                                                  coloring_to_json(v.spatial_witness->second)})}};
    if (v.cdc) j["cdc"] = cdc_to_json(*v.cdc);
    return j;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move " + tmp + " into place");
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace flexrig
