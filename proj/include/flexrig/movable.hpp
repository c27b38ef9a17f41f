#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "flexrig/embedding.hpp"
#include "flexrig/nac.hpp"

namespace flexrig {

/// Sufficient condition via the grid: some NAC-coloring places distinct
/// vertices at distinct grid coordinates. Returns the first such coloring in
/// enumeration order.
std::pair<bool, std::optional<NacColoring>> has_injective_grid_construction(const FlexGraph& g);

/// Tries to realize the pair (c1, c2) as a spatial embedding: edges get the
/// four color-pair classes, one class receives the diagonal direction and the
/// rest the axes, and the parallelism equations are solved exactly. Absence
/// of a solution (or a degenerate class split) yields an empty result.
std::optional<SpatialEmbedding> spatial_embedding(const FlexGraph& g, const NacColoring& c1,
                                                  const NacColoring& c2);

/// First pair of distinct NAC-colorings (lexicographic index order) admitting
/// a spatial embedding, together with the embedding.
struct SpatialCertificate {
    NacColoring first, second;
    SpatialEmbedding embedding;
};

std::optional<SpatialCertificate> find_spatial_certificate(const FlexGraph& g);

std::pair<bool, std::optional<std::pair<NacColoring, NacColoring>>>
has_injective_spatial_embedding(const FlexGraph& g);

/// U(G): non-adjacent vertex pairs joined by a path that is monochromatic
/// under every NAC-coloring. Edges are grouped by their color signature
/// across all colorings; a qualifying path lives inside one signature class.
/// Without any NAC-coloring every edge shares the empty signature, so all
/// non-adjacent pairs inside connected components qualify.
std::set<std::pair<int, int>> unicolor_pairs(const FlexGraph& g);

/// Iteration record of the constant distance closure.
struct CdcStage {
    FlexGraph graph;
    std::set<std::pair<int, int>> upairs;
};

struct CdcTrace {
    std::vector<CdcStage> stages; // stages[0].graph is the input; final upairs empty
    FlexGraph closure;

    bool complete() const { return closure.is_complete(); }
};

CdcTrace constant_distance_closure(const FlexGraph& g);

/// Tri-state movability verdict with witness. The two sufficient conditions
/// and the closure-based necessary condition do not form a dichotomy, so
/// Unknown is a valid outcome; the closure trace is attached for inspection.
struct MovabilityVerdict {
    enum class Status { Movable, NotMovable, Unknown };

    Status status = Status::Unknown;
    std::string detail; // "injective grid", "spatial embedding",
                        // "no NAC-coloring", "constant distance closure complete"
    std::optional<NacColoring> grid_witness;
    std::optional<std::pair<NacColoring, NacColoring>> spatial_witness;
    std::optional<CdcTrace> cdc;
};

MovabilityVerdict movability_status(const FlexGraph& g);

} // namespace flexrig
