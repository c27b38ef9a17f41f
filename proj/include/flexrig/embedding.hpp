#pragma once

#include <map>

#include "flexrig/graph.hpp"
#include "flexrig/point.hpp"

namespace flexrig {

/// Direction class of an edge in a spatial embedding: the color pair
/// (first coloring, second coloring) of the generating pair of NAC-colorings.
/// Listed in the canonical class order used throughout (RR, BR, RB, BB).
enum class ColorPair { RR = 0, BR = 1, RB = 2, BB = 3 };

std::string color_pair_name(ColorPair p);

/// Spatial direction role: three coordinate axes plus the diagonal.
enum class Direction { A, B, C, Diag };

/// The fixed direction vectors (1,0,0), (0,1,0), (0,0,1), (-1,-1,-1).
Vec3 direction_vector(Direction d);

/// Injective map V -> Q^3 with every edge parallel to one of four fixed
/// directions, all four present. For the canonical edge (u, v) with u < v:
/// omega(u) - omega(v) = t_e * direction(class(e)).
struct SpatialEmbedding {
    std::map<int, Vec3> omega;
    std::map<Edge, Rational> edge_scalar;
    std::map<Edge, ColorPair> class_of;
    std::map<ColorPair, Direction> direction_of;

    Vec3 direction_of_edge(const Edge& e) const {
        return direction_vector(direction_of.at(class_of.at(e)));
    }
};

/// Checks every invariant of the type: parallelism equations, nonzero
/// scalars, injectivity, all four classes present. Throws InvalidEmbedding
/// with the first violated condition.
void validate_embedding(const FlexGraph& g, const SpatialEmbedding& emb);

} // namespace flexrig
