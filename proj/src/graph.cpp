#include "flexrig/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace flexrig {

Edge make_edge(int u, int v) {
    if (u == v) throw LoopEdge("loop edge at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

FlexGraph::FlexGraph(const std::vector<std::pair<int, int>>& edges,
                     std::optional<std::vector<int>> vertices) {
    std::set<int> vset;
    if (vertices) {
        for (int v : *vertices) vset.insert(v);
    }
    std::set<Edge> eset;
    for (const auto& [u, v] : edges) {
        Edge e = make_edge(u, v);
        if (vertices) {
            if (!vset.count(e.first))
                throw UnknownVertex("edge endpoint " + std::to_string(e.first) +
                                    " not in the vertex list");
            if (!vset.count(e.second))
                throw UnknownVertex("edge endpoint " + std::to_string(e.second) +
                                    " not in the vertex list");
        } else {
            vset.insert(e.first);
            vset.insert(e.second);
        }
        if (!eset.insert(e).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(e.first) + ", " +
                                std::to_string(e.second) + ")");
    }
    vertices_.assign(vset.begin(), vset.end());
    edges_.assign(eset.begin(), eset.end());
    for (int v : vertices_) adj_[v] = {};
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool FlexGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& FlexGraph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw UnknownVertex("no vertex " + std::to_string(v));
    return it->second;
}

bool FlexGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::set<int> seen{vertices_[0]};
    std::vector<int> stack{vertices_[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices_.size();
}

bool FlexGraph::is_complete() const {
    size_t n = vertices_.size();
    return edges_.size() == n * (n - 1) / 2;
}

FlexGraph FlexGraph::with_added_edges(const std::vector<std::pair<int, int>>& extra) const {
    std::vector<std::pair<int, int>> all(edges_.begin(), edges_.end());
    all.insert(all.end(), extra.begin(), extra.end());
    return FlexGraph(all, vertices_);
}

std::vector<Edge> FlexGraph::non_edges() const {
    std::vector<Edge> out;
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            if (!has_edge(vertices_[i], vertices_[j]))
                out.push_back({vertices_[i], vertices_[j]});
    return out;
}

// ---------------------------------------------------------------------------
// Triangle components

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

TrianglePartition triangle_components(const FlexGraph& g) {
    const auto& edges = g.edges();
    std::map<Edge, int> index;
    for (size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);

    UnionFind uf(edges.size());
    for (const auto& [u, v] : edges) {
        // Common neighbors close a triangle; glue its three edges together.
        for (int w : g.neighbors(u)) {
            if (w == v || !g.has_edge(v, w)) continue;
            int e_uv = index[{u, v}];
            int e_uw = index[make_edge(u, w)];
            int e_vw = index[make_edge(v, w)];
            uf.unite(e_uv, e_uw);
            uf.unite(e_uv, e_vw);
        }
    }

    std::map<int, std::vector<Edge>> groups;
    for (size_t i = 0; i < edges.size(); ++i) groups[uf.find(static_cast<int>(i))].push_back(edges[i]);

    TrianglePartition part;
    std::vector<std::vector<Edge>> comps;
    for (auto& [root, es] : groups) comps.push_back(std::move(es));
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (const Edge& e : comps[ci]) part.edge_to_component[e] = static_cast<int>(ci);
    part.components = std::move(comps);
    return part;
}

// ---------------------------------------------------------------------------
// Automorphisms

Edge Automorphism::apply_edge(const Edge& e) const {
    return make_edge(apply(e.first), apply(e.second));
}

bool Automorphism::is_identity() const {
    for (const auto& [v, w] : mapping)
        if (v != w) return false;
    return true;
}

int automorphism_vertex_bound() {
    if (const char* env = std::getenv("FLEXRIG_MAX_VERTICES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

namespace {

// Stable vertex invariant: (degree, sorted neighbor degrees). Backtracking
// only maps vertices with equal invariants onto each other.
std::map<int, std::vector<int>> vertex_invariants(const FlexGraph& g) {
    std::map<int, std::vector<int>> inv;
    for (int v : g.vertices()) {
        std::vector<int> key;
        key.push_back(static_cast<int>(g.neighbors(v).size()));
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(static_cast<int>(g.neighbors(w).size()));
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        inv[v] = std::move(key);
    }
    return inv;
}

void search_automorphisms(const FlexGraph& g, const std::vector<int>& order, size_t pos,
                          std::map<int, int>& partial, std::vector<bool>& used_index,
                          const std::map<int, size_t>& vertex_index,
                          const std::map<int, std::vector<int>>& inv,
                          std::vector<Automorphism>& out) {
    if (pos == order.size()) {
        out.push_back(Automorphism{partial});
        return;
    }
    int v = order[pos];
    for (int w : g.vertices()) {
        if (used_index[vertex_index.at(w)]) continue;
        if (inv.at(v) != inv.at(w)) continue;
        bool ok = true;
        for (size_t k = 0; k < pos && ok; ++k) {
            int u = order[k];
            if (g.has_edge(u, v) != g.has_edge(partial[u], w)) ok = false;
        }
        if (!ok) continue;
        partial[v] = w;
        used_index[vertex_index.at(w)] = true;
        search_automorphisms(g, order, pos + 1, partial, used_index, vertex_index, inv, out);
        used_index[vertex_index.at(w)] = false;
        partial.erase(v);
    }
}

} // namespace

std::vector<Automorphism> automorphisms(const FlexGraph& g) {
    int bound = automorphism_vertex_bound();
    if (g.vertex_count() > bound)
        throw TooLarge("automorphism search limited to " + std::to_string(bound) +
                       " vertices (FLEXRIG_MAX_VERTICES overrides)");
    auto inv = vertex_invariants(g);

    // Most-constrained-first: rare invariants early shrink the search tree.
    std::map<std::vector<int>, int> inv_count;
    for (const auto& [v, key] : inv) inv_count[key]++;
    std::vector<int> order = g.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inv_count[inv[a]] < inv_count[inv[b]]; });

    std::map<int, size_t> vertex_index;
    for (size_t i = 0; i < g.vertices().size(); ++i) vertex_index[g.vertices()[i]] = i;

    std::map<int, int> partial;
    std::vector<bool> used(g.vertices().size(), false);
    std::vector<Automorphism> out;
    search_automorphisms(g, order, 0, partial, used, vertex_index, inv, out);
    std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
        return a.mapping < b.mapping;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

FlexGraph build_cycle(long n) {
    if (n < 3) throw UnknownName("Cycle(n) needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (long i = 0; i < n; ++i) es.push_back({static_cast<int>(i), static_cast<int>((i + 1) % n)});
    return FlexGraph(es);
}

FlexGraph build_path(long n) {
    if (n < 2) throw UnknownName("Path(n) needs n >= 2");
    std::vector<std::pair<int, int>> es;
    for (long i = 0; i + 1 < n; ++i) es.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return FlexGraph(es);
}

FlexGraph build_complete(long n) {
    if (n < 2) throw UnknownName("Complete(n) needs n >= 2");
    std::vector<std::pair<int, int>> es;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) es.push_back({static_cast<int>(i), static_cast<int>(j)});
    return FlexGraph(es);
}

FlexGraph build_complete_bipartite(long m, long n) {
    if (m < 1 || n < 1) throw UnknownName("CompleteBipartite(m,n) needs m,n >= 1");
    std::vector<std::pair<int, int>> es;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j) es.push_back({static_cast<int>(i), static_cast<int>(m + j)});
    return FlexGraph(es);
}

} // namespace

FlexGraph catalog(const std::string& name, const std::vector<long>& params) {
    auto want = [&](size_t n) {
        if (params.size() != n)
            throw UnknownName("catalog graph " + name + " takes " + std::to_string(n) +
                              " parameter(s)");
    };
    if (name == "Cycle") {
        want(1);
        return build_cycle(params[0]);
    }
    if (name == "Path") {
        want(1);
        return build_path(params[0]);
    }
    if (name == "Complete") {
        want(1);
        return build_complete(params[0]);
    }
    if (name == "CompleteBipartite") {
        want(2);
        return build_complete_bipartite(params[0], params[1]);
    }
    if (name == "ThreePrism") {
        want(0);
        return FlexGraph({{0, 3}, {0, 4}, {3, 4}, {1, 2}, {1, 5}, {2, 5}, {0, 5}, {1, 4}, {2, 3}});
    }
    if (name == "Q1") {
        want(0);
        return FlexGraph({{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 7}, {4, 7},
                          {5, 6}, {5, 7}, {6, 7}});
    }
    if (name == "Diamond") {
        want(0);
        return FlexGraph({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    throw UnknownName("unknown catalog graph: " + name);
}

FlexGraph catalog_parse(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos) return catalog(text);
    if (text.back() != ')') throw UnknownName("malformed catalog reference: " + text);
    std::string name = text.substr(0, open);
    std::string args = text.substr(open + 1, text.size() - open - 2);
    std::vector<long> params;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw UnknownName("bad catalog parameter: " + tok);
        params.push_back(v);
    }
    return catalog(name, params);
}

std::vector<std::string> catalog_names() {
    return {"Cycle(n)",  "Path(n)", "Complete(n)", "CompleteBipartite(m,n)",
            "ThreePrism", "Q1",     "Diamond"};
}

// ---------------------------------------------------------------------------
// Integer encoding

namespace {

// k-th pair in column-wise upper-triangle order: (0,1),(0,2),(1,2),(0,3),...
size_t pair_bit(int i, int j) {
    // i < j
    return static_cast<size_t>(j) * (static_cast<size_t>(j) - 1) / 2 + static_cast<size_t>(i);
}

} // namespace

mpz_class integer_encoding(const FlexGraph& g) {
    const auto& vs = g.vertices();
    std::map<int, int> pos;
    for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    mpz_class n(0);
    for (const auto& [u, v] : g.edges()) {
        int i = pos[u], j = pos[v];
        if (i > j) std::swap(i, j);
        mpz_setbit(n.get_mpz_t(), pair_bit(i, j));
    }
    return n;
}

FlexGraph from_integer(const mpz_class& n, int vertex_count) {
    if (vertex_count < 0) throw OutOfRange("negative vertex count");
    size_t bits = static_cast<size_t>(vertex_count) * (static_cast<size_t>(vertex_count) - 1) / 2;
    if (n < 0) throw OutOfRange("negative graph encoding");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > bits && n != 0)
        throw OutOfRange("encoding " + n.get_str() + " out of range for " +
                         std::to_string(vertex_count) + " vertices");
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < vertex_count; ++j)
        for (int i = 0; i < j; ++i)
            if (mpz_tstbit(n.get_mpz_t(), pair_bit(i, j))) es.push_back({i, j});
    std::vector<int> vs(static_cast<size_t>(vertex_count));
    std::iota(vs.begin(), vs.end(), 0);
    return FlexGraph(es, vs);
}

} // namespace flexrig
