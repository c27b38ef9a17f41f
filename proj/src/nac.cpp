#include "flexrig/nac.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace flexrig {

namespace {

// Vertex components of an edge subset, as root labels per vertex.
std::map<int, int> subgraph_components(const FlexGraph& g, const std::vector<Edge>& edges) {
    std::map<int, int> parent;
    for (int v : g.vertices()) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);
    std::map<int, int> root;
    for (int v : g.vertices()) root[v] = find(v);
    return root;
}

std::string edge_list_text(const std::vector<Edge>& edges) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ", ";
        os << "[" << edges[i].first << ", " << edges[i].second << "]";
    }
    os << "]";
    return os.str();
}

} // namespace

NacColoring::NacColoring(const FlexGraph& g, std::set<Edge> red, bool trusted) {
    if (!trusted && !is_nac_coloring(g, red))
        throw InvalidColoring("edge set violates the NAC-coloring conditions");
    if (g.edge_count() > 0) {
        const Edge& smallest = g.edges().front();
        if (!red.count(smallest)) {
            std::set<Edge> swapped;
            for (const Edge& e : g.edges())
                if (!red.count(e)) swapped.insert(e);
            red = std::move(swapped);
        }
    }
    for (const Edge& e : g.edges()) {
        if (red.count(e))
            red_.push_back(e);
        else
            blue_.push_back(e);
    }
}

bool NacColoring::is_red(const Edge& e) const {
    return std::binary_search(red_.begin(), red_.end(), e);
}

std::string NacColoring::to_text() const {
    std::string text = "NAC-coloring with red edges " + edge_list_text(red_) +
                       " and blue edges " + edge_list_text(blue_);
    if (!name_.empty()) text = name_ + ": " + text;
    return text;
}

bool is_nac_coloring(const FlexGraph& g, const std::set<Edge>& red) {
    std::vector<Edge> red_edges, blue_edges;
    for (const Edge& e : red)
        if (!g.has_edge(e))
            throw UnknownEdge("(" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                              ") is not an edge of the graph");
    for (const Edge& e : g.edges()) {
        if (red.count(e))
            red_edges.push_back(e);
        else
            blue_edges.push_back(e);
    }
    if (red_edges.empty() || blue_edges.empty()) return false;

    // A cycle with exactly one red edge is a red edge closed by a blue path,
    // i.e. a red edge with both ends in one blue component; symmetrically for
    // blue.
    auto blue_root = subgraph_components(g, blue_edges);
    for (const auto& [u, v] : red_edges)
        if (blue_root[u] == blue_root[v]) return false;
    auto red_root = subgraph_components(g, red_edges);
    for (const auto& [u, v] : blue_edges)
        if (red_root[u] == red_root[v]) return false;
    return true;
}

std::vector<NacColoring> nac_colorings(const FlexGraph& g, bool first_only) {
    std::vector<NacColoring> out;
    if (g.edge_count() < 2) return out;

    TrianglePartition part = triangle_components(g);
    size_t m = part.components.size();
    if (m < 2) return out; // a single monochromatic class cannot be surjective
    if (m > 26)
        throw TooLarge("too many triangle components for exhaustive enumeration: " +
                       std::to_string(m));

    // The component holding the smallest edge is pinned red; the remaining
    // m-1 components range over all color vectors except all-red.
    const size_t free_count = m - 1;
    const size_t limit = size_t{1} << free_count;
    for (size_t mask = 0; mask + 1 < limit; ++mask) {
        std::set<Edge> red(part.components[0].begin(), part.components[0].end());
        for (size_t k = 0; k < free_count; ++k) {
            if (mask & (size_t{1} << k))
                red.insert(part.components[k + 1].begin(), part.components[k + 1].end());
        }
        if (!is_nac_coloring(g, red)) continue;
        out.emplace_back(g, std::move(red), /*trusted=*/true);
        if (first_only) return out;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_nac_coloring(const FlexGraph& g) {
    return !nac_colorings(g, /*first_only=*/true).empty();
}

namespace {

std::vector<std::vector<int>> grouped_components(const FlexGraph& g,
                                                 const std::vector<Edge>& edges) {
    auto root = subgraph_components(g, edges);
    std::map<int, std::vector<int>> groups;
    for (int v : g.vertices()) groups[root[v]].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& [r, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        comps.push_back(std::move(vs));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

} // namespace

ColorComponents color_components(const FlexGraph& g, const NacColoring& c) {
    ColorComponents cc;
    cc.red_components = grouped_components(g, c.red());
    cc.blue_components = grouped_components(g, c.blue());
    std::map<int, int> red_index, blue_index;
    for (size_t i = 0; i < cc.red_components.size(); ++i)
        for (int v : cc.red_components[i]) red_index[v] = static_cast<int>(i);
    for (size_t j = 0; j < cc.blue_components.size(); ++j)
        for (int v : cc.blue_components[j]) blue_index[v] = static_cast<int>(j);
    for (int v : g.vertices()) cc.indices[v] = {red_index[v], blue_index[v]};
    return cc;
}

namespace {

const char* kGreek[] = {"alpha", "beta",    "gamma", "delta", "epsilon", "zeta",
                        "eta",   "theta",   "iota",  "kappa", "lambda",  "mu",
                        "nu",    "xi",      "omicron", "pi",  "rho",     "sigma",
                        "tau",   "upsilon", "phi",   "chi",   "psi",     "omega"};

std::string class_letter(size_t index) {
    constexpr size_t n = sizeof(kGreek) / sizeof(kGreek[0]);
    if (index < n) return kGreek[index];
    // Letter pool exhausted: recycle letters with the 1-based class number.
    return std::string(kGreek[index % n]) + std::to_string(index + 1);
}

} // namespace

std::vector<NacClass> isomorphism_classes(const FlexGraph& g,
                                          std::vector<NacColoring>& colorings) {
    std::sort(colorings.begin(), colorings.end());
    auto autos = automorphisms(g);

    std::vector<int> parent(colorings.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (size_t i = 0; i < colorings.size(); ++i) {
        for (const Automorphism& sigma : autos) {
            if (sigma.is_identity()) continue;
            std::set<Edge> image;
            for (const Edge& e : colorings[i].red()) image.insert(sigma.apply_edge(e));
            NacColoring mapped(g, std::move(image), /*trusted=*/true);
            auto it = std::lower_bound(colorings.begin(), colorings.end(), mapped);
            if (it != colorings.end() && *it == mapped) {
                int j = static_cast<int>(it - colorings.begin());
                parent[find(static_cast<int>(i))] = find(j);
            }
        }
    }

    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < colorings.size(); ++i) groups[find(static_cast<int>(i))].push_back(i);

    std::vector<std::vector<size_t>> ordered;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        ordered.push_back(std::move(members));
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<NacClass> classes;
    for (size_t ci = 0; ci < ordered.size(); ++ci) {
        NacClass cls;
        cls.letter = class_letter(ci);
        for (size_t k = 0; k < ordered[ci].size(); ++k) {
            NacColoring& member = colorings[ordered[ci][k]];
            std::string nm = cls.letter;
            if (ordered[ci].size() > 1) nm += std::to_string(k + 1);
            member.set_name(nm);
            cls.members.push_back(member);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

NacColoring conjugate(const FlexGraph& g, const NacColoring& c) {
    std::set<Edge> swapped(c.blue().begin(), c.blue().end());
    return NacColoring(g, std::move(swapped), /*trusted=*/true);
}

} // namespace flexrig
