#include "flexrig/embedding.hpp"

#include <set>

namespace flexrig {

std::string color_pair_name(ColorPair p) {
    switch (p) {
        case ColorPair::RR: return "RR";
        case ColorPair::BR: return "BR";
        case ColorPair::RB: return "RB";
        case ColorPair::BB: return "BB";
    }
    return "?";
}

Vec3 direction_vector(Direction d) {
    switch (d) {
        case Direction::A: return {Rational(1), Rational(0), Rational(0)};
        case Direction::B: return {Rational(0), Rational(1), Rational(0)};
        case Direction::C: return {Rational(0), Rational(0), Rational(1)};
        case Direction::Diag: return {Rational(-1), Rational(-1), Rational(-1)};
    }
    return {};
}

void validate_embedding(const FlexGraph& g, const SpatialEmbedding& emb) {
    for (int v : g.vertices())
        if (!emb.omega.count(v))
            throw InvalidEmbedding("vertex " + std::to_string(v) + " has no spatial point");
    std::set<ColorPair> present;
    for (const Edge& e : g.edges()) {
        auto se = emb.edge_scalar.find(e);
        auto ce = emb.class_of.find(e);
        if (se == emb.edge_scalar.end() || ce == emb.class_of.end())
            throw InvalidEmbedding("edge without scalar or class");
        if (se->second.is_zero()) throw InvalidEmbedding("zero edge scalar");
        present.insert(ce->second);
        Vec3 expect = se->second * emb.direction_of_edge(e);
        Vec3 diff = emb.omega.at(e.first) - emb.omega.at(e.second);
        if (!(diff == expect))
            throw InvalidEmbedding("edge (" + std::to_string(e.first) + ", " +
                                   std::to_string(e.second) + ") is not parallel to its direction");
    }
    // Distinct classes must land on distinct directions.
    std::set<int> used_dirs;
    for (ColorPair p : present)
        if (!used_dirs.insert(static_cast<int>(emb.direction_of.at(p))).second)
            throw InvalidEmbedding("two classes share a direction");
    if (present.size() != 4)
        throw InvalidEmbedding("all four direction classes must be present");
    for (auto it = emb.omega.begin(); it != emb.omega.end(); ++it) {
        auto jt = it;
        for (++jt; jt != emb.omega.end(); ++jt)
            if (it->second == jt->second)
                throw InvalidEmbedding("spatial points of " + std::to_string(it->first) + " and " +
                                       std::to_string(jt->first) + " coincide");
    }
}

} // namespace flexrig
