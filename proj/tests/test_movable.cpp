#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "flexrig/motion.hpp"
#include "flexrig/movable.hpp"

using namespace flexrig;

namespace {

std::vector<Edge> edge_vec(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [u, v] : pairs) out.push_back(make_edge(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

// Exhaustive U(G) oracle: enumerate all simple paths between non-adjacent
// pairs and test monochromaticity against every brute-force coloring.
std::set<std::pair<int, int>> brute_unicolor_pairs(const FlexGraph& g) {
    REQUIRE(g.edge_count() <= 12);
    std::vector<NacColoring> colorings;
    const auto& edges = g.edges();
    for (size_t mask = 0; mask < (size_t{1} << edges.size()); ++mask) {
        std::set<Edge> red;
        for (size_t k = 0; k < edges.size(); ++k)
            if (mask & (size_t{1} << k)) red.insert(edges[k]);
        if (is_nac_coloring(g, red)) colorings.emplace_back(g, red, /*trusted=*/true);
    }

    auto path_monochromatic_everywhere = [&](const std::vector<Edge>& path) {
        for (const auto& c : colorings) {
            bool first = c.is_red(path.front());
            for (const Edge& e : path)
                if (c.is_red(e) != first) return false;
        }
        return true;
    };

    std::set<std::pair<int, int>> out;
    for (int u : g.vertices()) {
        for (int v : g.vertices()) {
            if (u >= v || g.has_edge(u, v)) continue;
            // DFS over simple paths from u to v.
            std::vector<Edge> path;
            std::set<int> visited{u};
            bool found = false;
            std::function<void(int)> dfs = [&](int x) {
                if (found) return;
                if (x == v) {
                    if (path_monochromatic_everywhere(path)) found = true;
                    return;
                }
                for (int y : g.neighbors(x)) {
                    if (visited.count(y)) continue;
                    visited.insert(y);
                    path.push_back(make_edge(x, y));
                    dfs(y);
                    path.pop_back();
                    visited.erase(y);
                }
            };
            dfs(u);
            if (found) out.insert({u, v});
        }
    }
    return out;
}

} // namespace

TEST_CASE("injective grid construction") {
    auto [prism_ok, prism_cert] = has_injective_grid_construction(catalog("ThreePrism"));
    CHECK(prism_ok);
    REQUIRE(prism_cert.has_value());
    CHECK(prism_cert->red() == edge_vec({{0, 3}, {0, 4}, {3, 4}, {1, 2}, {1, 5}, {2, 5}}));

    auto [q1_ok, q1_cert] = has_injective_grid_construction(catalog("Q1"));
    CHECK(!q1_ok);
    CHECK(!q1_cert.has_value());

    auto [diamond_ok, diamond_cert] = has_injective_grid_construction(catalog("Diamond"));
    CHECK(!diamond_ok);

    auto [c4_ok, c4_cert] = has_injective_grid_construction(catalog("Cycle", {4}));
    CHECK(c4_ok);
    REQUIRE(c4_cert.has_value());
    CHECK(c4_cert->red() == edge_vec({{0, 1}, {2, 3}}));

    FlexGraph split({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(has_injective_grid_construction(split), Disconnected);
}

TEST_CASE("the C4 pair realizes the hand-solved embedding") {
    FlexGraph c4 = catalog("Cycle", {4});
    auto cs = nac_colorings(c4);
    REQUIRE(cs.size() == 3);
    auto emb = spatial_embedding(c4, cs[0], cs[1]);
    REQUIRE(emb.has_value());
    validate_embedding(c4, *emb);

    CHECK(emb->class_of.at(make_edge(0, 1)) == ColorPair::RR);
    CHECK(emb->class_of.at(make_edge(0, 3)) == ColorPair::RB);
    CHECK(emb->class_of.at(make_edge(1, 2)) == ColorPair::BR);
    CHECK(emb->class_of.at(make_edge(2, 3)) == ColorPair::BB);

    // Solved by hand from the parallelism equations with the free scalar at 1.
    CHECK(emb->omega.at(0) == Vec3{Rational(0), Rational(0), Rational(0)});
    CHECK(emb->omega.at(1) == Vec3{Rational(-1), Rational(0), Rational(0)});
    CHECK(emb->omega.at(2) == Vec3{Rational(-1), Rational(-1), Rational(0)});
    CHECK(emb->omega.at(3) == Vec3{Rational(0), Rational(0), Rational(1)});
    CHECK(emb->edge_scalar.at(make_edge(0, 1)) == Rational(1));
    CHECK(emb->edge_scalar.at(make_edge(0, 3)) == Rational(-1));
    CHECK(emb->edge_scalar.at(make_edge(1, 2)) == Rational(1));
    CHECK(emb->edge_scalar.at(make_edge(2, 3)) == Rational(1));

    // An identical pair cannot produce four classes.
    CHECK(!spatial_embedding(c4, cs[0], cs[0]).has_value());
}

TEST_CASE("parallel edges share a class and vice versa") {
    for (const char* name : {"Cycle(4)", "Q1"}) {
        FlexGraph g = catalog_parse(name);
        auto cert = find_spatial_certificate(g);
        REQUIRE(cert.has_value());
        const SpatialEmbedding& emb = cert->embedding;
        validate_embedding(g, emb);
        auto parallel = [&](const Edge& a, const Edge& b) {
            Vec3 da = emb.omega.at(a.first) - emb.omega.at(a.second);
            Vec3 db = emb.omega.at(b.first) - emb.omega.at(b.second);
            // Cross product vanishes exactly when parallel.
            return (da.y * db.z - da.z * db.y).is_zero() &&
                   (da.z * db.x - da.x * db.z).is_zero() &&
                   (da.x * db.y - da.y * db.x).is_zero();
        };
        for (const Edge& a : g.edges())
            for (const Edge& b : g.edges())
                CHECK(parallel(a, b) == (emb.class_of.at(a) == emb.class_of.at(b)));
    }
}

TEST_CASE("the Q1 certificate pair and scalar magnitudes") {
    FlexGraph q1 = catalog("Q1");
    auto [ok, pair] = has_injective_spatial_embedding(q1);
    CHECK(ok);
    REQUIRE(pair.has_value());
    CHECK(pair->first.red() ==
          edge_vec({{1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 6}, {5, 7}, {6, 7}}));
    CHECK(pair->second.red() ==
          edge_vec({{1, 3}, {1, 5}, {2, 4}, {3, 7}, {5, 6}, {5, 7}, {6, 7}}));

    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    for (const Edge& e : q1.edges()) {
        Rational expect = (e == make_edge(5, 6)) ? Rational(2) : Rational(1);
        CHECK(cert->embedding.edge_scalar.at(e).abs() == expect);
    }
}

TEST_CASE("graphs without enough colorings have no spatial embedding") {
    auto [ok, pair] = has_injective_spatial_embedding(catalog("Diamond"));
    CHECK(!ok);
    CHECK(!pair.has_value());
    auto [prism_ok, prism_pair] = has_injective_spatial_embedding(catalog("ThreePrism"));
    CHECK(!prism_ok); // a single coloring admits no pair
}

TEST_CASE("unicolor pairs on the worked examples") {
    CHECK(unicolor_pairs(catalog("Cycle", {4})).empty());
    CHECK(unicolor_pairs(catalog("ThreePrism")).empty());
    CHECK(unicolor_pairs(catalog("Q1")).empty());
    std::set<std::pair<int, int>> want{{0, 1}};
    CHECK(unicolor_pairs(catalog("Diamond")) == want);
}

namespace {

// Two diamonds glued along their non-adjacent apex pair {0,1}: one on
// {0,1,2,3} with hinge (2,3) and one on {0,1,4,5} with hinge (4,5). The graph
// has exactly one coloring (one diamond per color) whose grid placement
// collides 0 with 1, and adding the unicolor pair {0,1} merges all triangle
// classes, so the closure cascades to K6.
FlexGraph glued_diamonds() {
    return FlexGraph({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                      {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

} // namespace

TEST_CASE("unicolor pairs match the exhaustive path oracle") {
    for (const char* name : {"Cycle(4)", "Cycle(5)", "Diamond", "Complete(4)", "ThreePrism",
                             "CompleteBipartite(2,3)", "Q1"}) {
        CAPTURE(name);
        FlexGraph g = catalog_parse(name);
        CHECK(unicolor_pairs(g) == brute_unicolor_pairs(g));
    }
    FlexGraph glued = glued_diamonds();
    CHECK(unicolor_pairs(glued) == brute_unicolor_pairs(glued));
}

TEST_CASE("a colorable graph can still close up to completeness") {
    FlexGraph g = glued_diamonds();
    auto cs = nac_colorings(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].red() == edge_vec({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));

    CHECK(unicolor_pairs(g) == std::set<std::pair<int, int>>{{0, 1}});
    CdcTrace trace = constant_distance_closure(g);
    REQUIRE(trace.stages.size() == 3);
    CHECK(trace.stages[0].upairs == std::set<std::pair<int, int>>{{0, 1}});
    CHECK(trace.stages[1].upairs.size() == 4); // the second stage has no coloring left
    CHECK(trace.complete());
    CHECK(trace.closure == catalog("Complete", {6}));

    MovabilityVerdict v = movability_status(g);
    CHECK(v.status == MovabilityVerdict::Status::NotMovable);
    CHECK(v.detail == "constant distance closure complete");
    CHECK(v.cdc.has_value());
}

TEST_CASE("constant distance closure traces") {
    CdcTrace c4 = constant_distance_closure(catalog("Cycle", {4}));
    CHECK(c4.stages.size() == 1);
    CHECK(c4.stages[0].upairs.empty());
    CHECK(c4.closure == catalog("Cycle", {4}));
    CHECK(!c4.complete());

    CdcTrace diamond = constant_distance_closure(catalog("Diamond"));
    REQUIRE(diamond.stages.size() == 2);
    CHECK(diamond.stages[0].upairs == std::set<std::pair<int, int>>{{0, 1}});
    CHECK(diamond.stages[1].upairs.empty());
    CHECK(diamond.closure == catalog("Complete", {4}));
    CHECK(diamond.complete());

    CdcTrace q1 = constant_distance_closure(catalog("Q1"));
    CHECK(!q1.complete());
    CHECK(q1.closure == catalog("Q1"));
}

TEST_CASE("closure is monotone and idempotent") {
    for (const char* name : {"Cycle(4)", "Diamond", "ThreePrism", "Q1",
                             "CompleteBipartite(2,3)"}) {
        FlexGraph g = catalog_parse(name);
        CdcTrace trace = constant_distance_closure(g);
        CHECK(trace.closure.vertices() == g.vertices());
        for (const Edge& e : g.edges()) CHECK(trace.closure.has_edge(e));
        CdcTrace again = constant_distance_closure(trace.closure);
        CHECK(again.closure == trace.closure);
        CHECK(again.stages.size() == 1);
    }
}

TEST_CASE("movability verdicts on the catalog") {
    MovabilityVerdict prism = movability_status(catalog("ThreePrism"));
    CHECK(prism.status == MovabilityVerdict::Status::Movable);
    CHECK(prism.detail == "injective grid");
    CHECK(prism.grid_witness.has_value());

    MovabilityVerdict diamond = movability_status(catalog("Diamond"));
    CHECK(diamond.status == MovabilityVerdict::Status::NotMovable);
    CHECK(diamond.detail == "no NAC-coloring");

    MovabilityVerdict q1 = movability_status(catalog("Q1"));
    CHECK(q1.status == MovabilityVerdict::Status::Movable);
    CHECK(q1.detail == "spatial embedding");
    CHECK(q1.spatial_witness.has_value());

    MovabilityVerdict c4 = movability_status(catalog("Cycle", {4}));
    CHECK(c4.status == MovabilityVerdict::Status::Movable);
    CHECK(c4.detail == "injective grid");

    MovabilityVerdict k4 = movability_status(catalog("Complete", {4}));
    CHECK(k4.status == MovabilityVerdict::Status::NotMovable);

    FlexGraph split({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(movability_status(split), Disconnected);
}

TEST_CASE("no graph earns both a movable witness and a complete closure") {
    for (const char* name : {"Cycle(4)", "Cycle(5)", "Diamond", "Complete(4)", "ThreePrism",
                             "Q1", "CompleteBipartite(2,3)", "Path(3)"}) {
        CAPTURE(name);
        FlexGraph g = catalog_parse(name);
        MovabilityVerdict v = movability_status(g);
        bool closure_complete = constant_distance_closure(g).complete();
        if (v.status == MovabilityVerdict::Status::Movable) CHECK(!closure_complete);
        if (closure_complete) CHECK(v.status == MovabilityVerdict::Status::NotMovable);
    }
}

TEST_CASE("a movable witness actually yields a proper nontrivial motion") {
    // The two sufficient conditions must be constructive end to end.
    FlexGraph prism = catalog("ThreePrism");
    MovabilityVerdict vp = movability_status(prism);
    REQUIRE(vp.grid_witness.has_value());
    MotionAnalysis ap = analyze_motion(grid_motion(prism, *vp.grid_witness));
    CHECK(ap.is_flex);
    CHECK(ap.nontrivial);
    CHECK(ap.proper);

    FlexGraph q1 = catalog("Q1");
    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    MotionAnalysis aq = analyze_motion(spatial_motion(q1, cert->embedding, Rational(3)));
    CHECK(aq.is_flex);
    CHECK(aq.nontrivial);
    CHECK(aq.proper);
}
