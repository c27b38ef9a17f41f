#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flexrig/motion.hpp"
#include "flexrig/movable.hpp"

using namespace flexrig;

namespace {

std::set<Edge> edge_set(std::initializer_list<std::pair<int, int>> pairs) {
    std::set<Edge> out;
    for (auto [u, v] : pairs) out.insert(make_edge(u, v));
    return out;
}

const char* kPrismTrig =
    "{0: (0, 0),\n"
    " 1: (sin(alpha) + 1, cos(alpha)),\n"
    " 2: (2*sin(alpha) + 1, 2*cos(alpha)),\n"
    " 3: (2*sin(alpha), 2*cos(alpha)),\n"
    " 4: (sin(alpha), cos(alpha)),\n"
    " 5: (1, 0)}";

ParametricMotion prism_motion() {
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    REQUIRE(cs.size() == 1);
    return grid_motion(prism, cs[0]);
}

ParametricMotion q1_fixed_motion() {
    FlexGraph q1 = catalog("Q1");
    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    ParametricMotion m = spatial_motion(q1, cert->embedding, Rational(3));
    return fix_edge(m, make_edge(5, 6));
}

// The reference placement map, entered coordinate by coordinate: vertex 1 is
// 3*z1, vertex 3 is 3*z1 + 1, vertex 4 is 3*z1 - 3*z2, vertex 2 is
// 3*z1 - 3*z2 + 1, and 5, 6, 7 sit at (0,0), (2,0), (1,0).
std::map<int, Point2> q1_reference_points() {
    UnitCurve z1 = halfangle_unit(Rational(1));
    UnitCurve z2 = halfangle_unit(Rational(2));
    Point2 p1 = Rational(3) * z1.point();
    Point2 one = Point2::constant(Rational(1), Rational(0));
    Point2 p4 = Rational(3) * z1.point() - Rational(3) * z2.point();
    return {{1, p1},
            {2, p4 + one},
            {3, p1 + one},
            {4, p4},
            {5, Point2::constant(Rational(0), Rational(0))},
            {6, Point2::constant(Rational(2), Rational(0))},
            {7, Point2::constant(Rational(1), Rational(0))}};
}

} // namespace

TEST_CASE("grid placement of the prism coloring") {
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    GridPlacement gp = grid_placement(prism, cs[0]);
    CHECK(gp.coords.at(0) == std::pair<int, int>{0, 0});
    CHECK(gp.coords.at(5) == std::pair<int, int>{1, 0});
    CHECK(gp.coords.at(4) == std::pair<int, int>{0, 1});
    CHECK(gp.coords.at(1) == std::pair<int, int>{1, 1});
    CHECK(gp.coords.at(3) == std::pair<int, int>{0, 2});
    CHECK(gp.coords.at(2) == std::pair<int, int>{1, 2});
    CHECK(gp.injective());
    CHECK(gp.red_base == std::vector<Vec2>{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
    CHECK(gp.blue_base.size() == 3);
}

TEST_CASE("grid placement can collide distinct vertices") {
    FlexGraph c4 = catalog("Cycle", {4});
    NacColoring c(c4, edge_set({{0, 1}, {0, 3}}));
    GridPlacement gp = grid_placement(c4, c);
    CHECK(gp.coords.at(1) == gp.coords.at(3));
    CHECK(!gp.injective());
}

TEST_CASE("grid coordinates respect the coloring") {
    for (const char* name : {"Cycle(4)", "Cycle(5)", "ThreePrism", "Q1"}) {
        FlexGraph g = catalog_parse(name);
        for (const auto& c : nac_colorings(g)) {
            GridPlacement gp = grid_placement(g, c);
            for (const Edge& e : c.red())
                CHECK(gp.coords.at(e.first).first == gp.coords.at(e.second).first);
            for (const Edge& e : c.blue())
                CHECK(gp.coords.at(e.first).second == gp.coords.at(e.second).second);
        }
    }
}

TEST_CASE("grid placement requires connectivity") {
    FlexGraph split({{0, 1}, {2, 3}});
    NacColoring c(split, edge_set({{0, 1}}), /*trusted=*/true);
    CHECK_THROWS_AS(grid_placement(split, c), Disconnected);
}

TEST_CASE("the prism grid motion prints the reference block") {
    ParametricMotion m = prism_motion();
    CHECK(m.parametrization_text() == kPrismTrig);
    CHECK(m.display() == MotionDisplay::Trig);
    CHECK(m.provenance() == MotionProvenance::Grid);
}

TEST_CASE("prism grid motion: lengths, flexibility, properness") {
    ParametricMotion m = prism_motion();
    MotionAnalysis a = analyze_motion(m);
    CHECK(a.is_flex);
    CHECK(a.nontrivial);
    CHECK(a.proper);
    // Red edges span rows, blue edges span columns.
    CHECK(a.labeling.at(make_edge(0, 3)) == Rational(4));
    CHECK(a.labeling.at(make_edge(0, 4)) == Rational(1));
    CHECK(a.labeling.at(make_edge(3, 4)) == Rational(1));
    CHECK(a.labeling.at(make_edge(1, 2)) == Rational(1));
    CHECK(a.labeling.at(make_edge(1, 5)) == Rational(1));
    CHECK(a.labeling.at(make_edge(2, 5)) == Rational(4));
    CHECK(a.labeling.at(make_edge(0, 5)) == Rational(1));
    CHECK(a.labeling.at(make_edge(1, 4)) == Rational(1));
    CHECK(a.labeling.at(make_edge(2, 3)) == Rational(1));
    // The non-adjacent pair {0,1} flexes: squared distance 2(t-1)^2/(t^2+1).
    RatFunc d01 = m.squared_distance(0, 1);
    CHECK(!d01.constant_value());
    CHECK(d01.eval(Rational(1)) == Rational(0));
}

TEST_CASE("grid correctness: default-base lengths come from index differences") {
    for (const char* name : {"Cycle(4)", "Cycle(6)", "ThreePrism"}) {
        FlexGraph g = catalog_parse(name);
        for (const auto& c : nac_colorings(g)) {
            GridPlacement gp = grid_placement(g, c);
            if (!gp.injective()) continue;
            ParametricMotion m = grid_motion(g, c);
            for (const Edge& e : c.red()) {
                long dj = gp.coords.at(e.first).second - gp.coords.at(e.second).second;
                CHECK(m.edge_length_squared(e) == Rational(dj * dj));
            }
            for (const Edge& e : c.blue()) {
                long di = gp.coords.at(e.first).first - gp.coords.at(e.second).first;
                CHECK(m.edge_length_squared(e) == Rational(di * di));
            }
        }
    }
}

TEST_CASE("zig-zag bases from the reference session") {
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    ZigzagBases bases{
        {{Rational(0), Rational(0)}, {Rational(3, 4), Rational(1, 2)}, {Rational(2), Rational(0)}},
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
    ParametricMotion m = grid_motion(prism, cs[0], bases);
    MotionAnalysis a = analyze_motion(m);
    CHECK(a.is_flex);
    CHECK(a.nontrivial);
    CHECK(a.proper);
    // Red edge (0,4) spans rotated bases 0 and 1; blue edge (0,5) spans
    // translated bases 0 and 1.
    CHECK(m.edge_length_squared(make_edge(0, 4)) == Rational(13, 16));
    CHECK(m.edge_length_squared(make_edge(0, 5)) == Rational(1));
    CHECK(m.provenance() == MotionProvenance::Zigzag);
}

TEST_CASE("zig-zag base lists must cover the components") {
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    ZigzagBases short_rotated{{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
                              {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
    CHECK_THROWS_AS(grid_motion(prism, cs[0], short_rotated), BaseListTooShort);
}

TEST_CASE("duplicate bases collapse an edge and are rejected") {
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    ZigzagBases degenerate{
        {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}, {Rational(2), Rational(0)}},
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
    CHECK_THROWS_AS(grid_motion(prism, cs[0], degenerate), DegenerateEdge);
}

TEST_CASE("the reference placement map flexes exactly the 11 edges") {
    // Oracle for the catalog's edge list: rational-distance computation over
    // all 21 vertex pairs of the reference placement map.
    auto pts = q1_reference_points();
    FlexGraph q1 = catalog("Q1");
    int constant_pairs = 0;
    for (int u = 1; u <= 7; ++u) {
        for (int v = u + 1; v <= 7; ++v) {
            bool constant = (pts.at(u) - pts.at(v)).norm2().constant_value().has_value();
            if (constant) ++constant_pairs;
            CHECK(constant == q1.has_edge(u, v));
        }
    }
    CHECK(constant_pairs == 11);
}

TEST_CASE("the spatial motion of Q1 reproduces the reference formulas") {
    ParametricMotion m = q1_fixed_motion();
    auto reference = q1_reference_points();
    for (int v = 1; v <= 7; ++v) CHECK(m.point(v) == reference.at(v));
    CHECK(m.parametrization_text() ==
          "{1: ((3*t^2 - 3)/(t^2 + 1), -6*t/(t^2 + 1)),\n"
          " 2: ((t^4 + 23*t^2 + 4)/(t^4 + 5*t^2 + 4), (6*t^3 - 12*t)/(t^4 + 5*t^2 + 4)),\n"
          " 3: ((4*t^2 - 2)/(t^2 + 1), -6*t/(t^2 + 1)),\n"
          " 4: (18*t^2/(t^4 + 5*t^2 + 4), (6*t^3 - 12*t)/(t^4 + 5*t^2 + 4)),\n"
          " 5: (0, 0),\n"
          " 6: (2, 0),\n"
          " 7: (1, 0)}");
}

TEST_CASE("Q1 spatial motion: lengths, properness, the flexing non-edge") {
    ParametricMotion m = q1_fixed_motion();
    MotionAnalysis a = analyze_motion(m);
    CHECK(a.is_flex);
    CHECK(a.nontrivial);
    CHECK(a.proper);
    std::map<Edge, long> want = {{{5, 6}, 4}, {{5, 7}, 1}, {{6, 7}, 1}, {{1, 3}, 1},
                                 {{2, 4}, 1}, {{2, 6}, 1}, {{4, 7}, 1}, {{1, 5}, 9},
                                 {{3, 7}, 9}, {{1, 4}, 9}, {{2, 3}, 9}};
    for (const auto& [e, l2] : want) CHECK(a.labeling.at(e) == Rational(l2));
    // The non-edge {1,2} has squared distance 4(t^2+16)/(t^2+4).
    RatFunc d12 = m.squared_distance(1, 2);
    RatFunc expect(Poly(std::vector<Rational>{Rational(64), Rational(0), Rational(4)}),
                   Poly(std::vector<Rational>{Rational(4), Rational(0), Rational(1)}));
    CHECK(d12 == expect);
}

TEST_CASE("cycle consistency: every edge vector matches its class image") {
    FlexGraph q1 = catalog("Q1");
    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    const SpatialEmbedding& emb = cert->embedding;
    Rational L(3);
    ParametricMotion m = spatial_motion(q1, emb, L);
    UnitCurve z = halfangle_unit(Rational(1));
    UnitCurve zp = coupled_unit(z, L);
    std::map<Direction, Point2> w;
    w[Direction::A] = Point2::constant(Rational(1), Rational(0));
    w[Direction::B] = -(L * z.point());
    w[Direction::C] = L * zp.point();
    w[Direction::Diag] = -cmul(z.point(), zp.point());
    // Equivalent to the vanishing of the signed sum around every fundamental
    // cycle: tree edges define the placement and each remaining edge closes.
    for (const Edge& e : q1.edges()) {
        Point2 expect = emb.edge_scalar.at(e) * w.at(emb.direction_of.at(emb.class_of.at(e)));
        CHECK(m.point(e.first) - m.point(e.second) == expect);
    }
}

TEST_CASE("spatial coupling constant restrictions") {
    FlexGraph q1 = catalog("Q1");
    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    CHECK_THROWS_AS(spatial_motion(q1, cert->embedding, Rational(1)), DegenerateCoupling);
    CHECK_THROWS_AS(spatial_motion(q1, cert->embedding, Rational(-1)), DegenerateCoupling);
    CHECK_THROWS_AS(spatial_motion(q1, cert->embedding, Rational(0)), DegenerateCoupling);
    // Any other rational works; lengths scale with |L| per class.
    ParametricMotion m5 = spatial_motion(q1, cert->embedding, Rational(5));
    CHECK(m5.edge_length_squared(make_edge(1, 5)) == Rational(25));
    CHECK(m5.edge_length_squared(make_edge(5, 7)) == Rational(1));
}

TEST_CASE("the C4 antiparallelogram lengths") {
    FlexGraph c4 = catalog("Cycle", {4});
    auto cs = nac_colorings(c4);
    auto emb = spatial_embedding(c4, cs[0], cs[1]);
    REQUIRE(emb.has_value());
    ParametricMotion m = spatial_motion(c4, *emb, Rational(3));
    CHECK(m.edge_length_squared(make_edge(0, 1)) == Rational(1));
    CHECK(m.edge_length_squared(make_edge(0, 3)) == Rational(9));
    CHECK(m.edge_length_squared(make_edge(1, 2)) == Rational(9));
    CHECK(m.edge_length_squared(make_edge(2, 3)) == Rational(1));
    MotionAnalysis a = analyze_motion(m);
    CHECK(a.is_flex);
    CHECK(a.nontrivial);
    CHECK(a.proper);
}

TEST_CASE("fix_edge pins the chosen edge and preserves all distances") {
    FlexGraph q1 = catalog("Q1");
    auto cert = find_spatial_certificate(q1);
    REQUIRE(cert.has_value());
    ParametricMotion m = spatial_motion(q1, cert->embedding, Rational(3));
    ParametricMotion fixed = fix_edge(m, make_edge(5, 6));
    CHECK(fixed.point(5) == Point2::constant(Rational(0), Rational(0)));
    CHECK(fixed.point(6) == Point2::constant(Rational(2), Rational(0)));
    for (int u = 1; u <= 7; ++u)
        for (int v = u + 1; v <= 7; ++v)
            CHECK(fixed.squared_distance(u, v) == m.squared_distance(u, v));
}

TEST_CASE("planar isometries have unit determinant and orthogonal rows") {
    UnitCurve z = halfangle_unit(Rational(1));
    PlanarIsometry iso{z.x, z.y, -z.y, z.x, Point2::constant(Rational(2), Rational(-1))};
    CHECK(iso.determinant() == RatFunc(Rational(1)));
    CHECK(iso.r00 * iso.r10 + iso.r01 * iso.r11 == RatFunc());
    Point2 a = Point2::constant(Rational(3), Rational(4));
    Point2 b = Point2::constant(Rational(-1), Rational(5, 2));
    CHECK((iso.apply(a) - iso.apply(b)).norm2() == (a - b).norm2());
}

TEST_CASE("fixing an already fixed edge is the identity") {
    ParametricMotion m = prism_motion();
    // 0 and 5 already sit at (0,0) and (1,0).
    ParametricMotion fixed = fix_edge(m, make_edge(0, 5));
    for (int v : m.graph().vertices()) CHECK(fixed.point(v) == m.point(v));
}

TEST_CASE("fix_edge errors") {
    ParametricMotion m = prism_motion();
    CHECK_THROWS_AS(fix_edge(m, make_edge(0, 1)), NotAnEdge);
    FlexGraph prism = catalog("ThreePrism");
    auto cs = nac_colorings(prism);
    ZigzagBases bases{
        {{Rational(0), Rational(0)}, {Rational(3, 4), Rational(1, 2)}, {Rational(2), Rational(0)}},
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}};
    ParametricMotion zigzag = grid_motion(prism, cs[0], bases);
    // (0,4) has squared length 13/16, whose root is irrational.
    CHECK_THROWS_AS(fix_edge(zigzag, make_edge(0, 4)), IrrationalLength);
}

TEST_CASE("constant placements are flexes but trivial ones") {
    FlexGraph triangle({{0, 1}, {1, 2}, {0, 2}});
    std::map<int, Point2> pts = {{0, Point2::constant(Rational(0), Rational(0))},
                                 {1, Point2::constant(Rational(1), Rational(0))},
                                 {2, Point2::constant(Rational(0), Rational(1))}};
    ParametricMotion m(triangle, pts, MotionDisplay::Rational, MotionProvenance::Spatial);
    MotionAnalysis a = analyze_motion(m);
    CHECK(a.is_flex);
    CHECK(!a.nontrivial);
    CHECK(a.proper);
}

TEST_CASE("numeric samples stay on the exact lengths") {
    ParametricMotion m = q1_fixed_motion();
    for (const Rational& t : {Rational(1, 7), Rational(3, 5), Rational(2)}) {
        auto pos = sample_motion(m, t);
        for (const Edge& e : m.graph().edges()) {
            double dx = pos.at(e.first).first - pos.at(e.second).first;
            double dy = pos.at(e.first).second - pos.at(e.second).second;
            double want = m.edge_length_squared(e).to_double();
            CHECK(std::abs(dx * dx + dy * dy - want) < 1e-12);
        }
    }
}

TEST_CASE("trig display is exclusive to grid motions") {
    ParametricMotion m = q1_fixed_motion();
    CHECK_THROWS_AS(m.parametrization_text(MotionDisplay::Trig), std::invalid_argument);
    // Rational display of a grid motion substitutes the half-angle curve.
    ParametricMotion prism = prism_motion();
    std::string rational_form = prism.parametrization_text(MotionDisplay::Rational);
    CHECK(rational_form.find("(t^2 - 1)/(t^2 + 1)") != std::string::npos);
}
