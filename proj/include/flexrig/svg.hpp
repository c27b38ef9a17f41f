#pragma once

#include <optional>
#include <string>

#include "flexrig/motion.hpp"

namespace flexrig {

struct SvgOptions {
    std::optional<NacColoring> nac;  // edge colors per coloring when set
    int frames = 100;
    Rational duration_s = Rational(10);
    // Parameter interval for rational-display motions; grid motions always
    // sample a full turn of alpha, which avoids the half-angle pole.
    std::optional<std::pair<Rational, Rational>> param_range;
};

/// Animated SVG document: one animated line per edge, light-filled labelled
/// vertex circles, keyframe value lists with indefinite repeat.
std::string animation_svg(const ParametricMotion& m, const SvgOptions& options = {});

/// Minimal XML well-formedness scan: tag balance, quoting, a single root.
bool xml_well_formed(const std::string& text);

} // namespace flexrig
