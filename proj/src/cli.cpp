#include "flexrig/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "flexrig/json_io.hpp"
#include "flexrig/svg.hpp"

namespace flexrig::cli {

namespace {

// A well-formed request the data cannot satisfy (maps to exit code 3).
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Any failure while obtaining the input graph (maps to exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

template <class... Ts>
bool is_any(const std::exception& e) {
    return ((dynamic_cast<const Ts*>(&e) != nullptr) || ...);
}

int classify(const std::exception& e) {
    if (is_any<InputError, LoopEdge, DuplicateEdge, UnknownVertex, UnknownEdge, OutOfRange,
               UnknownName, IoError, Json::exception>(e))
        return 2;
    if (is_any<Infeasible, Disconnected, BaseListTooShort, NotAnEdge, IrrationalLength,
               DegenerateCoupling, DegenerateEdge, InvalidEmbedding, InvalidColoring, TooLarge>(e))
        return 3;
    return 1;
}

FlexGraph load_graph_impl(const std::string& source, std::istream* in) {
    if (source.rfind("catalog:", 0) == 0) return catalog_parse(source.substr(8));
    if (source.rfind("int:", 0) == 0) {
        std::string rest = source.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("integer input is int:<n>:<vertex_count>");
        mpz_class n;
        try {
            n = mpz_class(rest.substr(0, colon));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer encoding: " + rest.substr(0, colon));
        }
        int k = std::stoi(rest.substr(colon + 1));
        return from_integer(n, k);
    }
    std::string text;
    if (source == "-") {
        std::istream& is = in ? *in : std::cin;
        std::ostringstream ss;
        ss << is.rdbuf();
        text = ss.str();
    } else {
        text = read_text(source);
    }
    return graph_from_json(Json::parse(text));
}

FlexGraph load_graph(const std::string& source, std::istream* in) {
    try {
        return load_graph_impl(source, in);
    } catch (const std::exception& e) {
        throw InputError("invalid input graph: " + std::string(e.what()));
    }
}

std::string vertex_list_text(const FlexGraph& g) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < g.vertices().size(); ++i) {
        if (i) os << ", ";
        os << g.vertices()[i];
    }
    os << "]";
    return os.str();
}

std::string edge_tuple_text(const FlexGraph& g) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (i) os << ", ";
        os << "(" << g.edges()[i].first << ", " << g.edges()[i].second << ")";
    }
    os << "]";
    return os.str();
}

std::string graph_line(const FlexGraph& g) {
    return "Graph with vertices " + vertex_list_text(g) + " and edges " + edge_tuple_text(g);
}

std::string pair_set_text(const std::set<std::pair<int, int>>& pairs) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [u, v] : pairs) {
        if (!first) os << ", ";
        first = false;
        os << "[" << u << ", " << v << "]";
    }
    os << "]";
    return os.str();
}

Rational parse_rational_arg(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational like 3 or -2/5, got '" + s + "'");
    }
}

std::pair<int, int> parse_int_pair(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError(std::string(what) + " expects the form a,b");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + " expects two integers");
    }
}

Rational rational_from_json(const Json& v) {
    if (v.is_number_integer()) return Rational(mpz_class(v.get<long>()));
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_float()) {
        // Exact binary value of the double; fractions like 1/3 need strings.
        mpq_class q(v.get<double>());
        return Rational(q.get_num(), q.get_den());
    }
    throw std::invalid_argument("coordinates must be integers or \"p/q\" strings");
}

std::vector<Vec2> point_list_from_json(const Json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected a list of points");
    std::vector<Vec2> out;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("a point is a pair [x, y]");
        out.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return out;
}

ZigzagBases parse_zigzag(const std::string& text) {
    Json j = Json::parse(text);
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(
            "--zigzag expects [[rotated bases (per blue component)], [translated bases (per red "
            "component)]]");
    return ZigzagBases{point_list_from_json(j[0]), point_list_from_json(j[1])};
}

std::set<Edge> edge_set_from_json(const std::string& text) {
    Json j = Json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("expected a JSON list of edges");
    std::set<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("an edge is a pair [u, v]");
        out.insert(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return out;
}

void emit_svg(const ParametricMotion& m, const SvgOptions& opts, const std::string& path) {
    std::string doc = animation_svg(m, opts);
    if (!xml_well_formed(doc)) throw std::logic_error("generated SVG failed the XML check");
    write_text_atomic(path, doc);
}

std::string colorings_block(const std::vector<NacColoring>& cs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ",\n ";
        os << cs[i].to_text();
    }
    os << "]";
    return os.str();
}

void print_cdc_text(const CdcTrace& trace, std::ostream& out) {
    for (size_t i = 0; i < trace.stages.size(); ++i)
        out << "stage " << i << ": added " << pair_set_text(trace.stages[i].upairs) << "\n";
    out << "closure: " << (trace.complete() ? "complete" : "not complete") << " ("
        << trace.closure.vertex_count() << " vertices, " << trace.closure.edge_count()
        << " edges)\n";
}

struct MotionOutputOptions {
    bool json = false;
    std::string svg_path;
    int frames = 100;
    std::string duration = "10";
    std::string display;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream* in) {
    CLI::App app{
        "flexibility analysis of graphs through two-color edge colorings\n"
        "\n"
        "Graph sources accepted everywhere an <input> is expected:\n"
        "  catalog:<Name>      named graph, e.g. catalog:Cycle(4), catalog:ThreePrism\n"
        "  int:<n>:<k>         adjacency bitmask n on k vertices, pair order\n"
        "                      (0,1),(0,2),(1,2),(0,3),... with bit 0 = first pair\n"
        "  <file> or -         JSON {\"vertices\":[...],\"edges\":[[u,v],...]} from a\n"
        "                      file or stdin (vertices key optional)\n"
        "\n"
        "Rational numbers are written p/q (e.g. 3/4); zig-zag bases are JSON\n"
        "[[rotated points, one per blue component],[translated points, one per red\n"
        "component]] with integer or \"p/q\" coordinates. FLEXRIG_MAX_VERTICES\n"
        "overrides the automorphism search bound (default 16)."};
    app.require_subcommand(1);

    std::function<int()> action;

    // ---- graph info ----------------------------------------------------
    auto* graph_cmd = app.add_subcommand("graph", "graph inspection");
    graph_cmd->require_subcommand(1);
    auto* info_cmd = graph_cmd->add_subcommand("info", "summary of a graph");
    {
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        info_cmd->add_option("input", *input, "graph source")->required();
        info_cmd->add_flag("--json", *json, "machine-readable output");
        info_cmd->callback([&action, input, json, &out, in] {
            action = [input, json, &out, in] {
                FlexGraph g = load_graph(*input, in);
                if (*json) {
                    Json j = graph_to_json(g);
                    j["connected"] = g.is_connected();
                    j["triangle_components"] = triangle_components(g).components.size();
                    j["has_nac_coloring"] = has_nac_coloring(g);
                    j["encoding"] = integer_encoding(g).get_str();
                    out << j.dump(2) << "\n";
                    return 0;
                }
                out << graph_line(g) << "\n";
                out << "vertices: " << g.vertex_count() << "\n";
                out << "edges: " << g.edge_count() << "\n";
                out << "connected: " << (g.is_connected() ? "true" : "false") << "\n";
                out << "triangle components: " << triangle_components(g).components.size() << "\n";
                try {
                    out << "automorphisms: " << automorphisms(g).size() << "\n";
                } catch (const TooLarge&) {
                    out << "automorphisms: skipped (vertex bound exceeded)\n";
                }
                out << "has NAC-coloring: " << (has_nac_coloring(g) ? "true" : "false") << "\n";
                out << "integer encoding: int:" << integer_encoding(g).get_str() << ":"
                    << g.vertex_count() << "\n";
                return 0;
            };
        });
    }

    // ---- catalog --------------------------------------------------------
    auto* catalog_cmd = app.add_subcommand("catalog", "named graphs");
    {
        auto name = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        catalog_cmd->add_option("name", *name, "catalog entry, e.g. Cycle(4)");
        catalog_cmd->add_flag("--json", *json, "machine-readable output");
        catalog_cmd->callback([&action, name, json, &out] {
            action = [name, json, &out] {
                if (name->empty()) {
                    for (const auto& n : catalog_names()) out << n << "\n";
                    return 0;
                }
                FlexGraph g = catalog_parse(*name);
                if (*json)
                    out << graph_to_json(g).dump(2) << "\n";
                else
                    out << graph_line(g) << "\n";
                return 0;
            };
        });
    }

    // ---- nac list / check / classes -------------------------------------
    auto* nac_cmd = app.add_subcommand("nac", "NAC-colorings");
    nac_cmd->require_subcommand(1);
    {
        auto* list_cmd = nac_cmd->add_subcommand("list", "enumerate NAC-colorings");
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        auto names = std::make_shared<bool>(false);
        auto first = std::make_shared<bool>(false);
        list_cmd->add_option("input", *input, "graph source")->required();
        list_cmd->add_flag("--json", *json, "machine-readable output");
        list_cmd->add_flag("--names", *names, "label colorings by isomorphism class");
        list_cmd->add_flag("--first", *first, "stop after the first coloring");
        list_cmd->callback([&action, input, json, names, first, &out, in] {
            action = [input, json, names, first, &out, in] {
                FlexGraph g = load_graph(*input, in);
                auto cs = nac_colorings(g, *first);
                if (*names && !*first) isomorphism_classes(g, cs);
                if (*json) {
                    Json arr = Json::array();
                    for (const auto& c : cs) arr.push_back(coloring_to_json(c));
                    out << arr.dump(2) << "\n";
                } else {
                    out << colorings_block(cs) << "\n";
                }
                return 0;
            };
        });
    }
    {
        auto* check_cmd = nac_cmd->add_subcommand("check", "test one red edge set");
        auto input = std::make_shared<std::string>();
        auto red = std::make_shared<std::string>();
        check_cmd->add_option("input", *input, "graph source")->required();
        check_cmd->add_option("--red", *red, "red edges as JSON, e.g. [[0,1],[0,3]]")->required();
        check_cmd->callback([&action, input, red, &out, in] {
            action = [input, red, &out, in] {
                FlexGraph g = load_graph(*input, in);
                out << (is_nac_coloring(g, edge_set_from_json(*red)) ? "true" : "false") << "\n";
                return 0;
            };
        });
    }
    {
        auto* classes_cmd = nac_cmd->add_subcommand("classes", "isomorphism classes");
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        classes_cmd->add_option("input", *input, "graph source")->required();
        classes_cmd->add_flag("--json", *json, "machine-readable output");
        classes_cmd->callback([&action, input, json, &out, in] {
            action = [input, json, &out, in] {
                FlexGraph g = load_graph(*input, in);
                auto cs = nac_colorings(g);
                auto classes = isomorphism_classes(g, cs);
                if (*json) {
                    Json arr = Json::array();
                    for (const auto& cls : classes) {
                        Json members = Json::array();
                        for (const auto& m : cls.members) members.push_back(coloring_to_json(m));
                        arr.push_back(Json{{"letter", cls.letter}, {"members", members}});
                    }
                    out << arr.dump(2) << "\n";
                    return 0;
                }
                std::ostringstream os;
                os << "[";
                for (size_t ci = 0; ci < classes.size(); ++ci) {
                    if (ci) os << ",\n ";
                    os << "[";
                    for (size_t k = 0; k < classes[ci].members.size(); ++k) {
                        if (k) os << ",\n  ";
                        os << classes[ci].members[k].to_text();
                    }
                    os << "]";
                }
                os << "]";
                out << os.str() << "\n";
                return 0;
            };
        });
    }

    // ---- motion grid / spatial ------------------------------------------
    auto* motion_cmd = app.add_subcommand("motion", "parametric motions");
    motion_cmd->require_subcommand(1);
    {
        auto* grid_cmd = motion_cmd->add_subcommand("grid", "grid construction from a coloring");
        auto input = std::make_shared<std::string>();
        auto nac_index = std::make_shared<int>(0);
        auto zigzag = std::make_shared<std::string>();
        auto o = std::make_shared<MotionOutputOptions>();
        o->display = "trig";
        grid_cmd->add_option("input", *input, "graph source")->required();
        grid_cmd->add_option("--nac", *nac_index, "index into the coloring list (default 0)");
        grid_cmd->add_option("--zigzag", *zigzag,
                             "zig-zag bases: [[rotated, per blue component], [translated, per "
                             "red component]]");
        grid_cmd->add_option("--display", o->display, "trig or rational (default trig)")
            ->check(CLI::IsMember({"trig", "rational"}));
        grid_cmd->add_flag("--json", o->json, "machine-readable output");
        grid_cmd->add_option("--svg", o->svg_path, "write an animated SVG to this file");
        grid_cmd->add_option("--frames", o->frames, "animation keyframes (default 100)");
        grid_cmd->add_option("--duration", o->duration, "animation seconds (default 10)");
        grid_cmd->callback([&action, input, nac_index, zigzag, o, &out, in] {
            action = [input, nac_index, zigzag, o, &out, in] {
                FlexGraph g = load_graph(*input, in);
                auto cs = nac_colorings(g);
                if (cs.empty()) throw Infeasible("the graph has no NAC-coloring");
                if (*nac_index < 0 || *nac_index >= static_cast<int>(cs.size()))
                    throw Infeasible("coloring index " + std::to_string(*nac_index) +
                                     " out of range (have " + std::to_string(cs.size()) + ")");
                std::optional<ZigzagBases> bases;
                if (!zigzag->empty()) bases = parse_zigzag(*zigzag);
                ParametricMotion m = grid_motion(g, cs[static_cast<size_t>(*nac_index)], bases);
                if (!o->svg_path.empty()) {
                    SvgOptions so;
                    so.nac = m.coloring();
                    so.frames = o->frames;
                    so.duration_s = parse_rational_arg(o->duration);
                    emit_svg(m, so, o->svg_path);
                }
                if (o->json)
                    out << motion_to_json(m).dump(2) << "\n";
                else
                    out << m.parametrization_text(o->display == "trig" ? MotionDisplay::Trig
                                                                       : MotionDisplay::Rational)
                        << "\n";
                return 0;
            };
        });
    }
    {
        auto* spatial_cmd =
            motion_cmd->add_subcommand("spatial", "motion from a spatial embedding");
        auto input = std::make_shared<std::string>();
        auto pair_arg = std::make_shared<std::string>();
        auto coupling = std::make_shared<std::string>("3");
        auto fix_arg = std::make_shared<std::string>();
        auto o = std::make_shared<MotionOutputOptions>();
        spatial_cmd->add_option("input", *input, "graph source")->required();
        spatial_cmd->add_option("--pair", *pair_arg, "coloring indices i,j (default: first pair "
                                                     "admitting an embedding)");
        spatial_cmd->add_option("--coupling", *coupling, "coupling constant L (default 3)");
        spatial_cmd->add_option("--fix-edge", *fix_arg, "pin edge u,v to the x-axis");
        spatial_cmd->add_flag("--json", o->json, "machine-readable output");
        spatial_cmd->add_option("--svg", o->svg_path, "write an animated SVG to this file");
        spatial_cmd->add_option("--frames", o->frames, "animation keyframes (default 100)");
        spatial_cmd->add_option("--duration", o->duration, "animation seconds (default 10)");
        spatial_cmd->callback([&action, input, pair_arg, coupling, fix_arg, o, &out, &err, in] {
            action = [input, pair_arg, coupling, fix_arg, o, &out, &err, in] {
                FlexGraph g = load_graph(*input, in);
                std::optional<SpatialEmbedding> emb;
                if (!pair_arg->empty()) {
                    auto [i, j] = parse_int_pair(*pair_arg, "--pair");
                    auto cs = nac_colorings(g);
                    if (i < 0 || j < 0 || i >= static_cast<int>(cs.size()) ||
                        j >= static_cast<int>(cs.size()))
                        throw Infeasible("coloring index out of range (have " +
                                         std::to_string(cs.size()) + ")");
                    emb = spatial_embedding(g, cs[static_cast<size_t>(i)],
                                            cs[static_cast<size_t>(j)]);
                    if (!emb)
                        throw Infeasible("the pair (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ") admits no spatial embedding");
                } else {
                    auto cert = find_spatial_certificate(g);
                    if (!cert) throw Infeasible("no pair of NAC-colorings admits a spatial embedding");
                    err << "using NAC-coloring pair:\n  " << cert->first.to_text() << "\n  "
                        << cert->second.to_text() << "\n";
                    emb = std::move(cert->embedding);
                }
                ParametricMotion m = spatial_motion(g, *emb, parse_rational_arg(*coupling));
                if (!fix_arg->empty()) {
                    auto [u, v] = parse_int_pair(*fix_arg, "--fix-edge");
                    m = fix_edge(m, make_edge(u, v));
                }
                if (!o->svg_path.empty()) {
                    SvgOptions so;
                    so.frames = o->frames;
                    so.duration_s = parse_rational_arg(o->duration);
                    emit_svg(m, so, o->svg_path);
                }
                if (o->json)
                    out << motion_to_json(m).dump(2) << "\n";
                else
                    out << m.parametrization_text() << "\n";
                return 0;
            };
        });
    }

    // ---- movable ---------------------------------------------------------
    auto* movable_cmd = app.add_subcommand("movable", "tri-state movability verdict");
    {
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        movable_cmd->add_option("input", *input, "graph source")->required();
        movable_cmd->add_flag("--json", *json, "machine-readable output");
        movable_cmd->callback([&action, input, json, &out, in] {
            action = [input, json, &out, in] {
                FlexGraph g = load_graph(*input, in);
                MovabilityVerdict v = movability_status(g);
                if (*json) {
                    out << verdict_to_json(v).dump(2) << "\n";
                    return 0;
                }
                switch (v.status) {
                    case MovabilityVerdict::Status::Movable:
                        out << "Movable: " << v.detail << "\n";
                        if (v.grid_witness) out << v.grid_witness->to_text() << "\n";
                        if (v.spatial_witness) {
                            out << v.spatial_witness->first.to_text() << "\n";
                            out << v.spatial_witness->second.to_text() << "\n";
                        }
                        break;
                    case MovabilityVerdict::Status::NotMovable:
                        out << "NotMovable: " << v.detail << "\n";
                        break;
                    case MovabilityVerdict::Status::Unknown:
                        out << "Unknown: " << v.detail << "\n";
                        if (v.cdc) print_cdc_text(*v.cdc, out);
                        break;
                }
                return 0;
            };
        });
    }

    // ---- cdc ---------------------------------------------------------------
    auto* cdc_cmd = app.add_subcommand("cdc", "constant distance closure");
    {
        auto input = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        cdc_cmd->add_option("input", *input, "graph source")->required();
        cdc_cmd->add_flag("--json", *json, "machine-readable output");
        cdc_cmd->callback([&action, input, json, &out, in] {
            action = [input, json, &out, in] {
                FlexGraph g = load_graph(*input, in);
                CdcTrace trace = constant_distance_closure(g);
                if (*json)
                    out << cdc_to_json(trace).dump(2) << "\n";
                else
                    print_cdc_text(trace, out);
                return 0;
            };
        });
    }

    std::vector<const char*> argv;
    argv.push_back("flexrig");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (!action) {
        err << "usage error: no command\n";
        return 1;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return classify(e);
    }
}

} // namespace flexrig::cli
