#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexrig/errors.hpp"

namespace flexrig {

/// Unordered edge stored as (min, max).
using Edge = std::pair<int, int>;

/// Normalizes an endpoint pair; throws LoopEdge on equal endpoints.
Edge make_edge(int u, int v);

/// Simple undirected graph with stable integer vertex labels.
///
/// Vertices and edges are kept sorted, so iteration order is deterministic
/// everywhere and printed output is reproducible. Immutable after
/// construction.
class FlexGraph {
public:
    FlexGraph() = default;
    explicit FlexGraph(const std::vector<std::pair<int, int>>& edges,
                       std::optional<std::vector<int>> vertices = std::nullopt);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return adj_.count(v) > 0; }
    bool has_edge(int u, int v) const;
    bool has_edge(const Edge& e) const { return has_edge(e.first, e.second); }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const;

    bool is_connected() const;
    bool is_complete() const;

    /// Copy with extra edges inserted (duplicates rejected).
    FlexGraph with_added_edges(const std::vector<std::pair<int, int>>& extra) const;

    /// All unordered vertex pairs that are not edges.
    std::vector<Edge> non_edges() const;

    friend bool operator==(const FlexGraph& a, const FlexGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const FlexGraph& a, const FlexGraph& b) { return !(a == b); }

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::map<int, std::vector<int>> adj_;
};

/// Edges grouped into classes forced monochromatic by 3-cycles: the three
/// edges of every triangle share a class, closed transitively.
struct TrianglePartition {
    std::vector<std::vector<Edge>> components; // each sorted; ordered by smallest edge
    std::map<Edge, int> edge_to_component;
};

TrianglePartition triangle_components(const FlexGraph& g);

/// Vertex bijection preserving the edge set.
struct Automorphism {
    std::map<int, int> mapping;

    int apply(int v) const { return mapping.at(v); }
    Edge apply_edge(const Edge& e) const;
    bool is_identity() const;
};

/// Vertex count ceiling for automorphism search; FLEXRIG_MAX_VERTICES
/// overrides the default of 16.
int automorphism_vertex_bound();

/// Full automorphism group via degree-partition refinement plus backtracking,
/// in deterministic (lexicographic image) order. Throws TooLarge past the
/// vertex bound.
std::vector<Automorphism> automorphisms(const FlexGraph& g);

/// Named graphs: Cycle(n), Path(n), Complete(n), CompleteBipartite(m,n),
/// ThreePrism, Q1, Diamond.
FlexGraph catalog(const std::string& name, const std::vector<long>& params = {});

/// Parses "Name" or "Name(p1,p2)" catalog references.
FlexGraph catalog_parse(const std::string& text);

std::vector<std::string> catalog_names();

/// Adjacency bitmask over vertex pairs in column-wise upper-triangle order
/// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...; bit k = k-th pair, LSB first.
/// A local convention; round-trips with from_integer.
mpz_class integer_encoding(const FlexGraph& g);

/// Inverse of integer_encoding on vertex set {0,...,vertex_count-1}.
/// Throws OutOfRange unless 0 <= n < 2^C(vertex_count,2).
FlexGraph from_integer(const mpz_class& n, int vertex_count);

} // namespace flexrig
