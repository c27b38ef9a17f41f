#include "flexrig/motion.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace flexrig {

bool GridPlacement::injective() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& [v, ij] : coords)
        if (!seen.insert(ij).second) return false;
    return true;
}

GridPlacement grid_placement(const FlexGraph& g, const NacColoring& c) {
    if (!g.is_connected()) throw Disconnected("grid placement needs a connected graph");
    ColorComponents cc = color_components(g, c);
    GridPlacement gp;
    gp.coords = cc.indices;
    for (size_t i = 0; i < cc.red_components.size(); ++i)
        gp.red_base.push_back({Rational(static_cast<long>(i)), Rational(0)});
    for (size_t j = 0; j < cc.blue_components.size(); ++j)
        gp.blue_base.push_back({Rational(0), Rational(static_cast<long>(j))});
    return gp;
}

// ---------------------------------------------------------------------------
// ParametricMotion

ParametricMotion::ParametricMotion(FlexGraph graph, std::map<int, Point2> points,
                                   MotionDisplay display, MotionProvenance provenance)
    : graph_(std::move(graph)), points_(std::move(points)), display_(display),
      provenance_(provenance) {
    for (int v : graph_.vertices())
        if (!points_.count(v))
            throw UnknownVertex("motion misses vertex " + std::to_string(v));
    for (const Edge& e : graph_.edges()) {
        RatFunc d2 = squared_distance(e.first, e.second);
        auto c = d2.constant_value();
        if (!c)
            throw std::logic_error("edge (" + std::to_string(e.first) + ", " +
                                   std::to_string(e.second) +
                                   ") has non-constant squared length");
        if (c->is_zero())
            throw DegenerateEdge("edge (" + std::to_string(e.first) + ", " +
                                 std::to_string(e.second) + ") collapses to a point");
    }
}

RatFunc ParametricMotion::squared_distance(int u, int v) const {
    return (points_.at(u) - points_.at(v)).norm2();
}

Rational ParametricMotion::edge_length_squared(const Edge& e) const {
    if (!graph_.has_edge(e))
        throw NotAnEdge("(" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                        ") is not an edge");
    return *squared_distance(e.first, e.second).constant_value();
}

namespace {

// Signed-term rendering shared by the trig display: terms are (coefficient,
// symbol) with an empty symbol for the constant part.
std::string signed_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, sym] : terms) {
        if (coeff.is_zero()) continue;
        Rational a = coeff.abs();
        if (first) {
            if (coeff.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (coeff.sgn() < 0 ? " - " : " + ");
        }
        if (sym.empty()) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << sym;
        }
    }
    return first ? "0" : os.str();
}

std::string trig_coord(const Rational& cos_coeff, const Rational& sin_coeff,
                       const Rational& constant) {
    return signed_terms({{cos_coeff, "cos(alpha)"}, {sin_coeff, "sin(alpha)"}, {constant, ""}});
}

} // namespace

std::string ParametricMotion::parametrization_text() const {
    return parametrization_text(display_);
}

std::string ParametricMotion::parametrization_text(MotionDisplay display) const {
    if (display == MotionDisplay::Trig && !trig_)
        throw std::invalid_argument("trig display is only available for grid motions");
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int v : graph_.vertices()) {
        if (!first) os << ",\n ";
        first = false;
        os << v << ": (";
        if (display == MotionDisplay::Trig) {
            const auto& [a, b] = trig_->parts.at(v);
            os << trig_coord(b.x, b.y, a.x) << ", " << trig_coord(b.y, -b.x, a.y);
        } else {
            const Point2& p = points_.at(v);
            os << p.x.to_string() << ", " << p.y.to_string();
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Grid construction

ParametricMotion grid_motion(const FlexGraph& g, const NacColoring& c,
                             const std::optional<ZigzagBases>& zigzag) {
    GridPlacement gp = grid_placement(g, c);
    MotionProvenance prov = MotionProvenance::Grid;
    if (zigzag) {
        if (zigzag->rotated.size() < gp.blue_base.size())
            throw BaseListTooShort("need at least " + std::to_string(gp.blue_base.size()) +
                                   " rotated base points (one per blue component)");
        if (zigzag->translated.size() < gp.red_base.size())
            throw BaseListTooShort("need at least " + std::to_string(gp.red_base.size()) +
                                   " translated base points (one per red component)");
        gp.blue_base = zigzag->rotated;
        gp.red_base = zigzag->translated;
        prov = MotionProvenance::Zigzag;
    }

    UnitCurve rot = halfangle_unit(Rational(1));
    const RatFunc& cos_a = rot.x;
    const RatFunc& sin_a = rot.y;

    std::map<int, Point2> points;
    ParametricMotion::TrigData trig;
    for (const auto& [v, ij] : gp.coords) {
        const Vec2& a = gp.red_base[static_cast<size_t>(ij.first)];
        const Vec2& b = gp.blue_base[static_cast<size_t>(ij.second)];
        RatFunc bx{b.x}, by{b.y};
        Point2 p{RatFunc(a.x) + bx * cos_a + by * sin_a,
                 RatFunc(a.y) - bx * sin_a + by * cos_a};
        points[v] = p;
        trig.parts[v] = {a, b};
    }

    ParametricMotion m(g, std::move(points), MotionDisplay::Trig, prov);
    m.set_coloring(c);
    m.set_trig_data(std::move(trig));
    return m;
}

// ---------------------------------------------------------------------------
// Spatial-embedding construction

ParametricMotion spatial_motion(const FlexGraph& g, const SpatialEmbedding& emb,
                                const Rational& L) {
    if (L.is_zero()) throw DegenerateCoupling("coupling constant must be nonzero");
    if (L.abs().is_one()) throw DegenerateCoupling("coupling constant with |L| = 1 is degenerate");
    validate_embedding(g, emb);
    if (!g.is_connected()) throw Disconnected("spatial motion needs a connected graph");

    UnitCurve z = halfangle_unit(Rational(1));
    UnitCurve zp = coupled_unit(z, L);
    std::map<Direction, Point2> w;
    w[Direction::A] = Point2::constant(Rational(1), Rational(0));
    w[Direction::B] = -(L * z.point());
    w[Direction::C] = L * zp.point();
    w[Direction::Diag] = -cmul(z.point(), zp.point());

    auto edge_image = [&](const Edge& e) {
        return emb.edge_scalar.at(e) * w.at(emb.direction_of.at(emb.class_of.at(e)));
    };

    // Accumulate p over a spanning tree from the smallest vertex; the
    // antiparallelogram identity makes every non-tree edge close exactly.
    std::map<int, Point2> points;
    int root = g.vertices().front();
    points[root] = Point2::constant(Rational(0), Rational(0));
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (points.count(y)) continue;
            Edge e = make_edge(x, y);
            Point2 img = edge_image(e);
            points[y] = (x == e.first) ? points[x] - img : points[x] + img;
            queue.push_back(y);
        }
    }
    for (const Edge& e : g.edges())
        if (points.at(e.first) - points.at(e.second) != edge_image(e))
            throw InvalidEmbedding("cycle through (" + std::to_string(e.first) + ", " +
                                   std::to_string(e.second) + ") does not close");

    return ParametricMotion(g, std::move(points), MotionDisplay::Rational,
                            MotionProvenance::Spatial);
}

// ---------------------------------------------------------------------------
// Fixing an edge

ParametricMotion fix_edge(const ParametricMotion& m, const Edge& e) {
    if (!m.graph().has_edge(e))
        throw NotAnEdge("(" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                        ") is not an edge");
    Rational len2 = m.edge_length_squared(e);
    auto len = len2.sqrt_if_square();
    if (!len)
        throw IrrationalLength("edge length sqrt(" + len2.to_string() +
                               ") is not rational; cannot normalize");

    const Point2& pu = m.point(e.first);
    Point2 d = m.point(e.second) - pu;
    RatFunc inv_len{Rational(1) / *len};
    PlanarIsometry iso{d.x * inv_len, d.y * inv_len, -(d.y * inv_len), d.x * inv_len, {}};
    iso.translation = -Point2{iso.r00 * pu.x + iso.r01 * pu.y, iso.r10 * pu.x + iso.r11 * pu.y};
    std::map<int, Point2> points;
    for (const auto& [v, p] : m.points()) points[v] = iso.apply(p);
    ParametricMotion out(m.graph(), std::move(points), MotionDisplay::Rational, m.provenance());
    if (m.coloring()) out.set_coloring(*m.coloring());
    return out;
}

// ---------------------------------------------------------------------------
// Analysis

MotionAnalysis analyze_motion(const ParametricMotion& m) {
    MotionAnalysis a;
    a.is_flex = true;
    for (const Edge& e : m.graph().edges()) {
        auto c = m.squared_distance(e.first, e.second).constant_value();
        if (!c) {
            a.is_flex = false;
            continue;
        }
        a.labeling[e] = *c;
    }
    a.nontrivial = false;
    a.proper = true;
    const auto& vs = m.graph().vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        for (size_t j = i + 1; j < vs.size(); ++j) {
            Point2 diff = m.point(vs[i]) - m.point(vs[j]);
            if (diff.is_zero()) a.proper = false;
            if (!diff.norm2().constant_value()) a.nontrivial = true;
        }
    }
    return a;
}

std::map<int, std::pair<double, double>> sample_motion(const ParametricMotion& m,
                                                       const Rational& t) {
    std::map<int, std::pair<double, double>> out;
    for (const auto& [v, p] : m.points())
        out[v] = {p.x.eval(t).to_double(), p.y.eval(t).to_double()};
    return out;
}

} // namespace flexrig
