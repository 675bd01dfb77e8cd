#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clarcube/cube_search.hpp"
#include "clarcube/error.hpp"
#include "clarcube/io.hpp"
#include "clarcube/verify.hpp"

namespace {

using namespace clarcube;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitBudgetExceeded = 3;

struct CommonArgs {
    std::string input;
    std::string format;
    bool json = false;
    int threads = 1;
};

std::optional<Family> family_flag(const std::string& format) {
    if (format.empty()) return std::nullopt;
    auto family = parse_family_name(format);
    if (!family) throw Error(ErrorCode::ParseError, "unknown format '" + format + "'");
    return family;
}

MolecularGraph load_input(const CommonArgs& args) {
    return read_molecular_graph_file(args.input, family_flag(args.format));
}

void print_poly(const BivariatePoly& poly, bool json) {
    if (json)
        std::cout << poly.to_json() << '\n';
    else
        std::cout << poly.to_string() << '\n';
}

int cmd_gzz(const CommonArgs& args) {
    print_poly(gzz_polynomial(load_input(args)), args.json);
    return kExitOk;
}

int cmd_gc(const CommonArgs& args) {
    MolecularGraph g = load_input(args);
    auto matchings = enumerate_perfect_matchings(g);
    ResonanceGraph r = build_resonance_graph(g, matchings);
    print_poly(gc_polynomial(r.graph(), args.threads), args.json);
    return kExitOk;
}

int cmd_verify(const CommonArgs& args, const VerifyOptions& options) {
    MolecularGraph g = load_input(args);
    RunReport report = verify_pipeline(g, options);
    if (args.json) {
        std::cout << report.to_json() << '\n';
    } else {
        std::cout << "family: " << family_name(report.family) << '\n'
                  << "vertices: " << report.vertices << "  edges: " << report.edges
                  << "  hexagons: " << report.hexagons << "  pentagons: " << report.pentagons << '\n'
                  << "matchings: " << report.matchings << '\n'
                  << "gzz: " << report.gzz.to_string() << '\n'
                  << "gc:  " << report.gc.to_string() << '\n'
                  << "equal: " << (report.equal ? "true" : "false") << '\n'
                  << "bijection: " << (report.bijection.passed() ? "pass" : "FAIL") << '\n'
                  << "four_cycle_lemma: " << (report.four_cycle.passed ? "pass" : "FAIL") << " ("
                  << report.four_cycle.cycles_checked << " cycles)" << '\n';
    }
    if (!report.all_passed()) {
        if (!args.json) std::cerr << report.to_json() << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_gen(const std::string& preset, const std::string& output) {
    PresetInput input = make_preset(preset);
    if (output.empty())
        std::cout << format_preset_file(input);
    else
        write_preset_file(output, input);
    return kExitOk;
}

int cmd_resgraph(const CommonArgs& args, const std::string& dot_path, const std::string& json_path) {
    MolecularGraph g = load_input(args);
    auto matchings = enumerate_perfect_matchings(g);
    ResonanceGraph r = build_resonance_graph(g, matchings);
    if (dot_path.empty() && json_path.empty()) {
        std::cout << resonance_to_dot(r);
        return kExitOk;
    }
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + dot_path + "'");
        out << resonance_to_dot(r);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + json_path + "'");
        out << resonance_to_json(r);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Zhang-Zhang vs. generalized cube polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonArgs args;
    VerifyOptions options;
    std::string preset, output, dot_path, json_path;

    app.add_option("--threads", args.threads, "worker cap for the convex-subgraph search")
        ->capture_default_str();

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", args.input, "input file")->required();
        cmd->add_option("--format", args.format, "benzenoid|tubulene|fullerene (default: sniff)");
    };

    CLI::App* gzz = app.add_subcommand("gzz", "print the generalized Zhang-Zhang polynomial");
    add_input(gzz);
    gzz->add_flag("--json", args.json, "emit [[k,l,coeff],...] JSON");

    CLI::App* gc = app.add_subcommand("gc", "print the generalized cube polynomial of the resonance graph");
    add_input(gc);
    gc->add_flag("--json", args.json, "emit [[k,l,coeff],...] JSON");

    CLI::App* verify = app.add_subcommand("verify", "check GZZ = GC plus the bijection and 4-cycle lemma");
    add_input(verify);
    verify->add_flag("--json", args.json, "emit the full run report as JSON");
    verify->add_option("--max-vertices", options.max_vertices, "input size budget")
        ->capture_default_str();
    verify
        ->add_option("--max-resonance-vertices", options.max_resonance_vertices,
                     "resonance graph size budget")
        ->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "write a preset input file");
    gen->add_option("preset", preset,
                    "linear:H zigzag:H pyrene coronene tube:N,M,R c20 c24 c60")
        ->required();
    gen->add_option("-o,--output", output, "output path (default: stdout)");

    CLI::App* resgraph = app.add_subcommand("resgraph", "export the resonance graph");
    add_input(resgraph);
    resgraph->add_option("--dot", dot_path, "write DOT to this path");
    resgraph->add_option("--json", json_path, "write JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    options.threads = args.threads;
    try {
        if (gzz->parsed()) return cmd_gzz(args);
        if (gc->parsed()) return cmd_gc(args);
        if (verify->parsed()) return cmd_verify(args, options);
        if (gen->parsed()) return cmd_gen(preset, output);
        if (resgraph->parsed()) return cmd_resgraph(args, dot_path, json_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::BudgetExceeded ? kExitBudgetExceeded : kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
