#pragma once

#include <set>
#include <string>
#include <vector>

#include "flexrig/graph.hpp"

namespace flexrig {

/// Surjective red/blue edge coloring with no almost cycle, stored canonically:
/// the lexicographically smallest edge of the graph is red, which quotients
/// out the color swap.
class NacColoring {
public:
    NacColoring() = default;

    /// Canonicalizes the red set against g's edges; validates the
    /// no-almost-cycle condition unless `trusted`.
    NacColoring(const FlexGraph& g, std::set<Edge> red, bool trusted = false);

    const std::vector<Edge>& red() const { return red_; }
    const std::vector<Edge>& blue() const { return blue_; }
    bool is_red(const Edge& e) const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// "NAC-coloring with red edges [[u, v], ...] and blue edges [[u, v], ...]"
    std::string to_text() const;

    friend bool operator==(const NacColoring& a, const NacColoring& b) {
        return a.red_ == b.red_ && a.blue_ == b.blue_;
    }
    friend bool operator<(const NacColoring& a, const NacColoring& b) { return a.red_ < b.red_; }

private:
    std::vector<Edge> red_, blue_;
    std::string name_;
};

/// Checks the NAC condition for a red/blue split given by its red part:
/// surjective, no red edge inside one blue component, no blue edge inside one
/// red component. Throws UnknownEdge when red is not a subset of the edges.
bool is_nac_coloring(const FlexGraph& g, const std::set<Edge>& red);

/// All NAC-colorings up to color swap, enumerated over triangle components
/// and returned sorted by red edge set. With first_only, stops at the first
/// valid coloring.
std::vector<NacColoring> nac_colorings(const FlexGraph& g, bool first_only = false);

bool has_nac_coloring(const FlexGraph& g);

/// Connected components of the one-color subgraphs, each over all vertices
/// (isolated vertices become singletons), ordered by smallest contained
/// vertex. indices(v) = (red component index, blue component index).
struct ColorComponents {
    std::vector<std::vector<int>> red_components;
    std::vector<std::vector<int>> blue_components;
    std::map<int, std::pair<int, int>> indices;
};

ColorComponents color_components(const FlexGraph& g, const NacColoring& c);

/// Orbit of colorings under Aut(G) composed with the canonical color swap.
struct NacClass {
    std::vector<NacColoring> members;
    std::string letter;
};

/// Partitions canonical colorings into isomorphism classes, assigns Greek
/// letters in class order and names members (letter alone for singleton
/// classes, letter+index otherwise). The input colorings receive the names
/// too.
std::vector<NacClass> isomorphism_classes(const FlexGraph& g, std::vector<NacColoring>& colorings);

/// Red/blue swap followed by re-canonicalization; on canonical colorings this
/// is the identity.
NacColoring conjugate(const FlexGraph& g, const NacColoring& c);

} // namespace flexrig
