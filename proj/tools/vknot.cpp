#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "vknot/cyclic_graph.hpp"
#include "vknot/diagram.hpp"
#include "vknot/formats.hpp"
#include "vknot/invariants.hpp"
#include "vknot/medial.hpp"
#include "vknot/polynomial.hpp"
#include "vknot/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitNotColorable = 4;

struct Options {
    std::string format = "text";
    int jobs = 1;
    int limit = 24;  // max crossings/edges for 2^n enumeration
};

bool json(const Options& o) { return o.format == "json"; }

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_enumeration_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--jobs", o.jobs, "Worker threads for state enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--limit", o.limit, "Largest crossing/edge count to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void check_limit(int count, int limit, const char* what) {
    if (count > limit) {
        throw std::invalid_argument(std::string("input has ") + std::to_string(count) + " " +
                                    what + ", above the enumeration limit " +
                                    std::to_string(limit) + " (raise with --limit)");
    }
}

const char* smoothing_name(vknot::Smoothing s) { return s == vknot::Smoothing::A ? "A" : "B"; }

int run_fpoly(const std::string& path, bool recursive, const Options& o) {
    vknot::SignedCyclicGraph g = vknot::parse_graph_file(path);
    check_limit(g.edge_count(), o.limit, "edges");
    vknot::BracketPoly f = vknot::f_expansion(g);
    if (recursive) {
        vknot::BracketPoly r = vknot::f_recursive(g);
        if (r != f) {
            std::cerr << "recursive cross-check FAILED\n  expansion: " << f.to_string()
                      << "\n  recursion: " << r.to_string() << "\n";
            return kExitVerifyFailed;
        }
        std::cerr << "recursive cross-check: ok\n";
    }
    std::cout << (json(o) ? f.to_json() : f.to_string()) << "\n";
    return kExitOk;
}

int run_medial(const std::string& path, const Options& o) {
    vknot::SignedCyclicGraph g = vknot::parse_graph_file(path);
    auto [diagram, map] = vknot::medial(g);
    if (json(o)) {
        std::cout << "{\"diagram\":" << vknot::diagram_to_json(diagram) << ",\"map\":[";
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e) std::cout << ',';
            std::cout << "{\"edge\":" << e << ",\"crossing\":" << e << ",\"vertex_parallel\":\""
                      << smoothing_name(map.vertex_parallel[e]) << "\"}";
        }
        std::cout << "]}\n";
    } else {
        std::cout << vknot::serialize_diagram(diagram);
        for (int e = 0; e < g.edge_count(); ++e) {
            std::cout << "# map: edge " << e << " -> crossing " << e << " (vertex-parallel "
                      << smoothing_name(map.vertex_parallel[e]) << ", edge-parallel "
                      << smoothing_name(map.edge_parallel(e)) << ")\n";
        }
    }
    return kExitOk;
}

int run_bracket(const std::string& path, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    check_limit(d.crossing_count(), o.limit, "crossings");
    vknot::BracketPoly b = vknot::bracket(d, o.jobs);
    std::cout << (json(o) ? b.to_json() : b.to_string()) << "\n";
    return kExitOk;
}

int run_jones(const std::string& path, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    check_limit(d.crossing_count(), o.limit, "crossings");
    vknot::QuarterLaurent v = vknot::jones(d, o.jobs);
    std::cout << (json(o) ? v.to_json_quarter() : v.to_string_quarter()) << "\n";
    return kExitOk;
}

int run_report(const std::string& path, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    check_limit(d.crossing_count(), o.limit, "crossings");
    std::cout << vknot::invariant_report(d, o.jobs).to_json() << "\n";
    return kExitOk;
}

int run_checkerboard(const std::string& path, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    auto coloring = vknot::checkerboard_colorable(d);
    if (json(o)) {
        if (!coloring) {
            std::cout << "{\"colorable\":false}\n";
            return kExitOk;
        }
        std::cout << "{\"colorable\":true,\"free_loops\":" << d.free_loops() << ",\"faces\":[";
        for (int f = 0; f < coloring->structure.face_count(); ++f) {
            if (f) std::cout << ',';
            std::cout << "{\"black\":" << (coloring->face_is_black(f) ? "true" : "false")
                      << ",\"ports\":[";
            const auto& walk = coloring->structure.faces[f];
            for (std::size_t i = 0; i < walk.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << walk[i];
            }
            std::cout << "]}";
        }
        std::cout << "]}\n";
        return kExitOk;
    }
    if (!coloring) {
        std::cout << "not colorable\n";
        return kExitOk;
    }
    std::cout << "colorable\n";
    for (int f = 0; f < coloring->structure.face_count(); ++f) {
        std::cout << "face " << f << (coloring->face_is_black(f) ? " black:" : " white:");
        for (int p : coloring->structure.faces[f]) std::cout << ' ' << p;
        std::cout << "\n";
    }
    if (d.free_loops() > 0) {
        std::cout << "# " << d.free_loops() << " free loop(s), each on its own sphere\n";
    }
    return kExitOk;
}

int run_tait(const std::string& path, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    auto g = vknot::graphical_certificate(d);
    if (!g) {
        std::cerr << "not checkerboard colorable: no Tait graph exists for this diagram\n";
        return kExitNotColorable;
    }
    std::cout << (json(o) ? vknot::graph_to_json(*g) + "\n" : vknot::serialize_graph(*g));
    return kExitOk;
}

int run_virtualize(const std::string& path, int crossing, bool switch_only, const Options& o) {
    vknot::VirtualDiagram d = vknot::parse_diagram_file(path);
    vknot::VirtualDiagram out = switch_only ? vknot::switch_crossing(d, crossing)
                                            : vknot::virtualize(d, crossing);
    std::cout << (json(o) ? vknot::diagram_to_json(out) + "\n" : vknot::serialize_diagram(out));
    return kExitOk;
}

int run_pdual(const std::string& path, int edge, const Options& o) {
    vknot::SignedCyclicGraph g = vknot::parse_graph_file(path);
    vknot::SignedCyclicGraph out = vknot::partial_dual_edge(g, edge);
    std::cout << (json(o) ? vknot::graph_to_json(out) + "\n" : vknot::serialize_graph(out));
    return kExitOk;
}

int run_gen(int vertices, int edges, double sign_bias, std::uint64_t seed) {
    std::cout << vknot::serialize_graph(
        vknot::random_cyclic_graph(vertices, edges, sign_bias, seed));
    return kExitOk;
}

int run_verify(const vknot::VerifyOptions& vo, bool timings) {
    auto results = vknot::run_verification(vo);
    for (const auto& r : results) {
        if (timings) {
            std::printf("%s %-16s %s (%llu cases, %.1f ms)\n", r.pass ? "PASS" : "FAIL",
                        r.id.c_str(), r.label.c_str(),
                        static_cast<unsigned long long>(r.cases), r.ms);
        } else {
            std::printf("%s %-16s %s (%llu cases)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                        r.label.c_str(), static_cast<unsigned long long>(r.cases));
        }
        if (!r.detail.empty()) std::printf("     %s\n", r.detail.c_str());
    }
    bool ok = vknot::all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed cyclic graph polynomials and virtual link invariants"};
    app.require_subcommand(1);
    Options o;

    std::string graph_path, diagram_path;
    bool recursive = false;
    int crossing = 0, edge = 0;

    auto* fpoly = app.add_subcommand("fpoly", "F polynomial of a signed cyclic graph");
    fpoly->add_option("graph", graph_path, "graph file")->required();
    fpoly->add_flag("--recursive", recursive, "cross-check with the deletion-marking recursion");
    add_common(fpoly, o);
    add_enumeration_flags(fpoly, o);

    auto* medial_cmd = app.add_subcommand("medial", "Medial diagram of a graph");
    medial_cmd->add_option("graph", graph_path, "graph file")->required();
    add_common(medial_cmd, o);

    auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
    bracket_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    add_common(bracket_cmd, o);
    add_enumeration_flags(bracket_cmd, o);

    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a diagram");
    jones_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    add_common(jones_cmd, o);
    add_enumeration_flags(jones_cmd, o);

    auto* report_cmd = app.add_subcommand("report", "Full invariant report as JSON");
    report_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    add_enumeration_flags(report_cmd, o);

    auto* checker_cmd = app.add_subcommand("checkerboard", "Checkerboard coloring of a diagram");
    checker_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    add_common(checker_cmd, o);

    auto* tait_cmd = app.add_subcommand("tait", "Tait graph of a checkerboard-colorable diagram");
    tait_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    add_common(tait_cmd, o);

    auto* virt_cmd = app.add_subcommand("virtualize", "Virtualize one crossing");
    virt_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    virt_cmd->add_option("crossing", crossing, "crossing id")->required();
    add_common(virt_cmd, o);

    auto* switch_cmd = app.add_subcommand("switch", "Switch over/under at one crossing");
    switch_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    switch_cmd->add_option("crossing", crossing, "crossing id")->required();
    add_common(switch_cmd, o);

    auto* pdual_cmd = app.add_subcommand("pdual", "Partial dual of a graph along one edge");
    pdual_cmd->add_option("graph", graph_path, "graph file")->required();
    pdual_cmd->add_option("edge", edge, "edge id")->required();
    add_common(pdual_cmd, o);

    vknot::VerifyOptions vo;
    bool verify_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive property suites");
    verify_cmd->add_flag("--timings", verify_timings, "include per-check wall times");
    verify_cmd->add_option("--max-edges", vo.max_edges, "exhaustive family edge bound")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
    verify_cmd->add_option("--max-vertices", vo.max_vertices, "exhaustive family vertex bound")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    verify_cmd->add_option("--random", vo.random_instances, "number of random instances")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", vo.seed, "seed for random instances and orders")
        ->capture_default_str();
    verify_cmd->add_option("--jobs", vo.jobs, "worker threads (0 = hardware)")
        ->capture_default_str();

    int gen_vertices = 1, gen_edges = 0;
    double gen_bias = 0.5;
    std::uint64_t gen_seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph file");
    gen_cmd->add_option("--vertices", gen_vertices, "vertex count")
        ->check(CLI::PositiveNumber)
        ->required();
    gen_cmd->add_option("--edges", gen_edges, "edge count")
        ->check(CLI::NonNegativeNumber)
        ->required();
    gen_cmd->add_option("--seed", gen_seed, "seed")->capture_default_str();
    gen_cmd->add_option("--sign-bias", gen_bias, "probability of a positive sign")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (fpoly->parsed()) return run_fpoly(graph_path, recursive, o);
        if (medial_cmd->parsed()) return run_medial(graph_path, o);
        if (bracket_cmd->parsed()) return run_bracket(diagram_path, o);
        if (jones_cmd->parsed()) return run_jones(diagram_path, o);
        if (report_cmd->parsed()) return run_report(diagram_path, o);
        if (checker_cmd->parsed()) return run_checkerboard(diagram_path, o);
        if (tait_cmd->parsed()) return run_tait(diagram_path, o);
        if (virt_cmd->parsed()) return run_virtualize(diagram_path, crossing, false, o);
        if (switch_cmd->parsed()) return run_virtualize(diagram_path, crossing, true, o);
        if (pdual_cmd->parsed()) return run_pdual(graph_path, edge, o);
        if (verify_cmd->parsed()) return run_verify(vo, verify_timings);
        if (gen_cmd->parsed()) return run_gen(gen_vertices, gen_edges, gen_bias, gen_seed);
    } catch (const vknot::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
