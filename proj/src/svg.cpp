#include "flexrig/svg.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace flexrig {

namespace {

constexpr const char* kRed = "#d62728";
constexpr const char* kBlue = "#1f77b4";
constexpr const char* kNeutral = "#555555";
constexpr const char* kVertexFill = "#ffffff";
constexpr const char* kVertexStroke = "#333333";

struct Frames {
    // positions[f][v] = (x, y) in world coordinates
    std::vector<std::map<int, std::pair<double, double>>> positions;
};

Frames sample_frames(const ParametricMotion& m, const SvgOptions& opt) {
    Frames fr;
    int n = std::max(opt.frames, 2);
    if (m.trig_data()) {
        // Sample the angle directly over a full closed turn.
        for (int f = 0; f < n; ++f) {
            double alpha = 2.0 * M_PI * f / (n - 1);
            double c = std::cos(alpha), s = std::sin(alpha);
            std::map<int, std::pair<double, double>> pos;
            for (const auto& [v, ab] : m.trig_data()->parts) {
                const auto& [a, b] = ab;
                double bx = b.x.to_double(), by = b.y.to_double();
                pos[v] = {a.x.to_double() + bx * c + by * s,
                          a.y.to_double() - bx * s + by * c};
            }
            fr.positions.push_back(std::move(pos));
        }
        return fr;
    }
    Rational lo(-5), hi(5);
    if (opt.param_range) {
        lo = opt.param_range->first;
        hi = opt.param_range->second;
    }
    for (int f = 0; f < n; ++f) {
        Rational t = lo + (hi - lo) * Rational(f, n - 1);
        std::map<int, std::pair<double, double>> pos;
        try {
            pos = sample_motion(m, t);
        } catch (const EvaluationPole&) {
            // Nudge off the pole; poles are isolated.
            pos = sample_motion(m, t + (hi - lo) * Rational(1, 9973L * n));
        }
        fr.positions.push_back(std::move(pos));
    }
    return fr;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    std::string s = os.str();
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string duration_text(const Rational& d) {
    double v = d.to_double();
    std::ostringstream os;
    os << v;
    return os.str() + "s";
}

struct Screen {
    double scale, ox, oy, height;
    std::pair<double, double> map(const std::pair<double, double>& p) const {
        return {(p.first - ox) * scale + 20.0, height - 20.0 - (p.second - oy) * scale};
    }
};

std::string animate(const std::string& attr, const std::vector<double>& values,
                    const std::string& dur) {
    std::ostringstream os;
    os << "    <animate attributeName=\"" << attr << "\" values=\"";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ";";
        os << fmt(values[i]);
    }
    os << "\" dur=\"" << dur << "\" repeatCount=\"indefinite\"/>\n";
    return os.str();
}

} // namespace

std::string animation_svg(const ParametricMotion& m, const SvgOptions& options) {
    if (options.frames < 2) throw std::invalid_argument("an animation needs at least 2 frames");
    Frames fr = sample_frames(m, options);

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& frame : fr.positions) {
        for (const auto& [v, p] : frame) {
            xmin = std::min(xmin, p.first);
            xmax = std::max(xmax, p.first);
            ymin = std::min(ymin, p.second);
            ymax = std::max(ymax, p.second);
        }
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double inner = 560.0;
    Screen screen{inner / span, xmin, ymin, inner + 40.0};
    const double width = (xmax - xmin) * screen.scale + 40.0;

    std::string dur = duration_text(options.duration_s);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(screen.height) << "\">\n";

    auto vertex_track = [&](int v) {
        std::pair<std::vector<double>, std::vector<double>> track;
        for (const auto& frame : fr.positions) {
            auto p = screen.map(frame.at(v));
            track.first.push_back(p.first);
            track.second.push_back(p.second);
        }
        return track;
    };

    for (const Edge& e : m.graph().edges()) {
        const char* stroke = kNeutral;
        if (options.nac) stroke = options.nac->is_red(e) ? kRed : kBlue;
        auto [x1, y1] = vertex_track(e.first);
        auto [x2, y2] = vertex_track(e.second);
        os << "  <line x1=\"" << fmt(x1[0]) << "\" y1=\"" << fmt(y1[0]) << "\" x2=\""
           << fmt(x2[0]) << "\" y2=\"" << fmt(y2[0]) << "\" stroke=\"" << stroke
           << "\" stroke-width=\"2\">\n";
        os << animate("x1", x1, dur) << animate("y1", y1, dur) << animate("x2", x2, dur)
           << animate("y2", y2, dur);
        os << "  </line>\n";
    }
    for (int v : m.graph().vertices()) {
        auto [cx, cy] = vertex_track(v);
        os << "  <circle cx=\"" << fmt(cx[0]) << "\" cy=\"" << fmt(cy[0])
           << "\" r=\"7\" fill=\"" << kVertexFill << "\" stroke=\"" << kVertexStroke
           << "\" stroke-width=\"1.5\">\n";
        os << animate("cx", cx, dur) << animate("cy", cy, dur);
        os << "  </circle>\n";
        os << "  <text x=\"" << fmt(cx[0] + 9.0) << "\" y=\"" << fmt(cy[0] - 9.0)
           << "\" font-size=\"13\" font-family=\"sans-serif\" fill=\"" << kVertexStroke
           << "\">" << v << "\n";
        os << animate("x", [&] {
            std::vector<double> vs;
            for (double x : cx) vs.push_back(x + 9.0);
            return vs;
        }(), dur);
        os << animate("y", [&] {
            std::vector<double> vs;
            for (double y : cy) vs.push_back(y - 9.0);
            return vs;
        }(), dur);
        os << "  </text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// XML well-formedness

bool xml_well_formed(const std::string& text) {
    size_t i = 0;
    const size_t n = text.size();
    std::vector<std::string> stack;
    int roots = 0;
    auto skip_ws = [&](size_t& p) {
        while (p < n && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            size_t end = text.find("?>", i);
            if (end == std::string::npos) return false;
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            size_t end = text.find("-->", i);
            if (end == std::string::npos) return false;
            i = end + 3;
            continue;
        }
        bool closing = i + 1 < n && text[i + 1] == '/';
        size_t p = i + (closing ? 2 : 1);
        size_t name_start = p;
        while (p < n && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == ':' ||
                         text[p] == '-' || text[p] == '_'))
            ++p;
        if (p == name_start) return false;
        std::string name = text.substr(name_start, p - name_start);
        // Attributes: values must be quoted; no stray '<' or '>' inside.
        bool self_closing = false;
        while (p < n && text[p] != '>') {
            if (text[p] == '"') {
                size_t end = text.find('"', p + 1);
                if (end == std::string::npos) return false;
                p = end + 1;
                continue;
            }
            if (text[p] == '<') return false;
            if (text[p] == '/' && p + 1 < n && text[p + 1] == '>') {
                self_closing = true;
                ++p;
                break;
            }
            ++p;
        }
        if (p >= n) return false;
        skip_ws(p);
        if (text[p] != '>') return false;
        i = p + 1;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            if (stack.empty() && roots++ > 0) return false;
            stack.push_back(name);
        } else if (stack.empty() && roots++ > 0) {
            return false;
        }
    }
    return stack.empty() && roots == 1;
}

} // namespace flexrig
