#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexrig/embedding.hpp"
#include "flexrig/nac.hpp"
#include "flexrig/unit_curve.hpp"

namespace flexrig {

/// Grid coordinates of the vertices for one NAC-coloring, plus the base
/// points: vertices sharing a red component share the column index i, those
/// sharing a blue component the row index j. Defaults a_i = (i, 0) and
/// b_j = (0, j) give the rectangular grid.
struct GridPlacement {
    std::map<int, std::pair<int, int>> coords; // vertex -> (i, j)
    std::vector<Vec2> red_base;                // a_i, translated part
    std::vector<Vec2> blue_base;               // b_j, rotated part

    bool injective() const;
};

GridPlacement grid_placement(const FlexGraph& g, const NacColoring& c);

/// Zig-zag base points as passed on the API surface: first the rotated
/// bases (indexed by blue component), then the translated bases (indexed by
/// red component). Lists may be longer than needed.
struct ZigzagBases {
    std::vector<Vec2> rotated;    // per blue component
    std::vector<Vec2> translated; // per red component
};

enum class MotionDisplay { Trig, Rational };
enum class MotionProvenance { Grid, Zigzag, Spatial };

/// Direct planar isometry applied pointwise per parameter value: rotation
/// rows are orthogonal with determinant 1, so every pairwise squared distance
/// is preserved identically.
struct PlanarIsometry {
    RatFunc r00, r01, r10, r11;
    Point2 translation;

    Point2 apply(const Point2& p) const {
        return {r00 * p.x + r01 * p.y + translation.x,
                r10 * p.x + r11 * p.y + translation.y};
    }
    RatFunc determinant() const { return r00 * r11 - r01 * r10; }
};

/// Exact parametric motion: each vertex is a planar point with rational
/// function coordinates in one parameter t, and every edge has a constant
/// nonzero squared length. Immutable.
class ParametricMotion {
public:
    ParametricMotion(FlexGraph graph, std::map<int, Point2> points, MotionDisplay display,
                     MotionProvenance provenance);

    const FlexGraph& graph() const { return graph_; }
    const Point2& point(int v) const { return points_.at(v); }
    const std::map<int, Point2>& points() const { return points_; }
    MotionDisplay display() const { return display_; }
    MotionProvenance provenance() const { return provenance_; }

    RatFunc edge_vector_x(const Edge& e) const;
    RatFunc squared_distance(int u, int v) const;
    Rational edge_length_squared(const Edge& e) const;

    /// Coloring used to build a grid motion, when applicable (drives SVG
    /// edge colors).
    const std::optional<NacColoring>& coloring() const { return coloring_; }
    void set_coloring(NacColoring c) { coloring_ = std::move(c); }

    /// Per-vertex (translated, rotated) base pair behind a grid motion;
    /// drives the trigonometric display and grid animation sampling.
    struct TrigData {
        std::map<int, std::pair<Vec2, Vec2>> parts; // vertex -> (a_i, b_j)
    };
    const std::optional<TrigData>& trig_data() const { return trig_; }
    void set_trig_data(TrigData d) { trig_ = std::move(d); }

    /// "{v: (x, y), ...}" in vertex order; trig display renders grid motions
    /// with sin(alpha)/cos(alpha), rational display prints the exact t-form.
    std::string parametrization_text() const;
    std::string parametrization_text(MotionDisplay display) const;

private:
    FlexGraph graph_;
    std::map<int, Point2> points_;
    MotionDisplay display_;
    MotionProvenance provenance_;
    std::optional<NacColoring> coloring_;
    std::optional<TrigData> trig_;
};

/// Grid construction: p(v) = a_i + Rot(alpha) * b_j with the rotation taking
/// (x, y) to (x cos + y sin, -x sin + y cos), realized exactly through the
/// half-angle curve of scale 1. With default bases this is
/// p(v) = (i + j sin(alpha), j cos(alpha)).
ParametricMotion grid_motion(const FlexGraph& g, const NacColoring& c,
                             const std::optional<ZigzagBases>& zigzag = std::nullopt);

/// Motion of the graph synthesized from a spatial embedding: the three axis
/// classes map to the planar vectors (1,0), -L*z, L*z' and the diagonal class
/// to -z*z', whose identity sum keeps every cycle closed for all t.
ParametricMotion spatial_motion(const FlexGraph& g, const SpatialEmbedding& emb,
                                const Rational& L = Rational(3));

/// Composes every frame with the direct isometry taking p(u) to the origin
/// and p(v) onto the positive x-axis. Requires the edge length to be
/// rational (throws IrrationalLength otherwise).
ParametricMotion fix_edge(const ParametricMotion& m, const Edge& e);

/// Computed properties of a motion per the framework definitions.
struct MotionAnalysis {
    std::map<Edge, Rational> labeling; // constant squared edge lengths
    bool is_flex = false;              // all edge distances constant
    bool nontrivial = false;           // some vertex pair distance non-constant
    bool proper = false;               // no two vertex paths identically equal
};

MotionAnalysis analyze_motion(const ParametricMotion& m);

/// Numeric placement at parameter value t (exact evaluation, then double).
std::map<int, std::pair<double, double>> sample_motion(const ParametricMotion& m,
                                                       const Rational& t);

} // namespace flexrig
