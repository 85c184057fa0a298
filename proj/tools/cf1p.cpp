// cf1p: command-line front end for the drawing, oracle, audit and bounds code.
//
// Exit codes: 0 ok, 1 property fails or oracle refuted, 2 invalid input or
// usage, 3 search budget exceeded, 4 audit alarm.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cf1p/audit.hpp"
#include "cf1p/bounds.hpp"
#include "cf1p/connectivity.hpp"
#include "cf1p/generators.hpp"
#include "cf1p/io.hpp"
#include "cf1p/oracle.hpp"
#include "cf1p/properties.hpp"

namespace {

enum Exit { ok = 0, fails = 1, bad_input = 2, budget = 3, alarm = 4 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cf1p::InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_validate(const std::string& path) {
    auto f = cf1p::parse_file(read_file(path));
    if (!f.drawing) {
        std::cout << "graph " << f.name << " n " << f.graph.order() << " e " << f.graph.size() << " no-drawing\n";
        return ok;
    }
    auto report = cf1p::validate_drawing(*f.drawing);
    for (const auto& v : report.violations)
        std::cout << "violation " << cf1p::to_string(v.kind) << " line " << v.line << ' ' << v.witness << '\n';
    if (!report.ok()) return fails;
    std::cout << "valid " << f.name << " crossings " << f.drawing->crossings.size() << '\n';
    return ok;
}

int cmd_analyze(const std::string& path, bool delta, bool kappa, bool claw) {
    auto g = cf1p::parse_file(read_file(path)).graph;
    const bool all = !delta && !kappa && !claw;
    std::cout << "n " << g.order() << "\ne " << g.size() << '\n';
    if (all || delta) std::cout << "delta " << cf1p::max_degree(g) << '\n';
    if (all || kappa) std::cout << "kappa " << cf1p::vertex_connectivity(g) << '\n';
    if (all || claw) {
        if (auto w = cf1p::find_induced_claw(g))
            std::cout << "claw-free no " << g.name(w->center) << ' ' << g.name(w->leaves[0]) << ' '
                      << g.name(w->leaves[1]) << ' ' << g.name(w->leaves[2]) << '\n';
        else
            std::cout << "claw-free yes\n";
    }
    return ok;
}

int cmd_gen(const std::string& name, std::optional<int> k, std::optional<int> m, const std::string& out_path,
            bool search) {
    auto f = cf1p::generate(name, k, m);
    auto drawing = f.drawing;
    if (search) {
        auto r = cf1p::min_crossings_one_planar(f.graph, f.graph.size() / 2, {});
        if (r.status != cf1p::OracleStatus::witness) {
            std::cerr << "search: " << cf1p::to_string(r.status) << '\n';
            return r.status == cf1p::OracleStatus::budget_exceeded ? budget : fails;
        }
        drawing = *r.witness;
    }
    auto text = cf1p::serialize_drawing(f.name, drawing);
    if (out_path.empty()) {
        std::cout << text;
        return ok;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw cf1p::InputError("cannot write " + out_path);
    out << text;
    return ok;
}

int cmd_oracle(const std::string& path, const cf1p::SearchBudget& b) {
    auto f = cf1p::parse_file(read_file(path));
    auto r = cf1p::find_one_planar_drawing(f.graph, b);
    std::cout << cf1p::to_string(r.status) << "\nnodes " << r.nodes << '\n';
    if (r.witness) std::cout << cf1p::serialize_drawing(f.name, *r.witness);
    switch (r.status) {
        case cf1p::OracleStatus::witness: return ok;
        case cf1p::OracleStatus::refuted: return fails;
        case cf1p::OracleStatus::budget_exceeded: return budget;
    }
    return fails;
}

int cmd_audit(const std::string& path, std::optional<int> assumed, bool trust) {
    auto f = cf1p::parse_file(read_file(path));
    std::optional<cf1p::OnePlaneDrawing> d;
    if (f.drawing) d = cf1p::build_drawing(std::move(*f.drawing));
    auto report = cf1p::audit_theorems(f.graph, d);
    if (d) {
        const int kappa = static_cast<int>(cf1p::vertex_connectivity(f.graph));
        const int k = assumed.value_or(std::min(kappa, 7));
        report.append(cf1p::audit_lemma3(*d, k, !trust));
        report.append(cf1p::audit_propositions(*d, k, !trust));
    } else if (assumed) {
        throw cf1p::InputError("--assume-kappa needs a drawing");
    }
    std::cout << cf1p::format_report(report);
    return report.ok() ? ok : alarm;
}

int cmd_bounds() {
    auto solve = cf1p::max_degree_bound_solve();
    // lower: fewest edges G[N[v]] needs when d(v) = k; upper: most it can have.
    std::cout << "# row k lower upper feasible\n";
    for (const auto& row : solve.ledger)
        std::cout << "row " << row.k << ' ' << row.lower << ' ' << row.upper << ' ' << (row.feasible ? "yes" : "no")
                  << '\n';
    std::cout << "max-degree " << solve.max_degree << "\nfloor(6+sqrt(21)) " << cf1p::six_plus_sqrt21_floor()
              << '\n';
    return ok;
}

int cmd_export_dot(const std::string& path) {
    auto f = cf1p::parse_file(read_file(path));
    if (!f.drawing) throw cf1p::InputError("export-dot needs a drawing");
    std::cout << cf1p::export_dot(f.name, cf1p::build_drawing(std::move(*f.drawing)));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free 1-planar graph toolkit"};
    app.require_subcommand(1);
    std::string file;

    auto* validate = app.add_subcommand("validate", "check a graph or drawing file");
    validate->add_option("file", file)->required();

    bool delta = false, kappa = false, claw = false;
    auto* analyze = app.add_subcommand("analyze", "max degree, connectivity, claw-freeness");
    analyze->add_option("file", file)->required();
    analyze->add_flag("--delta", delta);
    analyze->add_flag("--kappa", kappa);
    analyze->add_flag("--claw", claw);

    std::string name, out_path;
    std::optional<int> gen_k, gen_m;
    bool search = false;
    auto* gen = app.add_subcommand("gen", "write a fixture drawing");
    gen->add_option("name", name, "fixture name (see --list)");
    gen->add_option("--k", gen_k, "path length for gk");
    gen->add_option("--m", gen_m, "copies for h0-chain");
    gen->add_option("-o", out_path, "output file");
    gen->add_flag("--search", search, "replace the bundled drawing by a fresh oracle witness");
    bool list = false;
    gen->add_flag("--list", list, "print fixture names and claims");

    cf1p::SearchBudget b;
    auto* oracle = app.add_subcommand("oracle", "decide 1-planarity by exhaustive search");
    oracle->add_option("file", file)->required();
    oracle->add_option("--max-crossings", b.max_crossings);
    oracle->add_option("--node-limit", b.node_limit);
    oracle->add_option("--threads", b.threads)->check(CLI::Range(1u, 256u));

    std::optional<int> assume;
    auto* audit = app.add_subcommand("audit", "check the structural results on a drawing");
    audit->add_option("file", file)->required();
    audit->add_option("--assume-kappa", assume, "connectivity the clauses may assume (default min(kappa, 7))");
    bool trust = false;
    audit->add_flag("--trust-kappa", trust, "skip checking the assumption against the graph");

    auto* bounds = app.add_subcommand("bounds", "print the degree bound ledger");

    auto* dot = app.add_subcommand("export-dot", "write a drawing as DOT");
    dot->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return bad_input;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*analyze) return cmd_analyze(file, delta, kappa, claw);
        if (*gen) {
            if (list) {
                for (const auto& c : cf1p::catalog())
                    std::cout << c.name << " delta " << c.claims.delta << " kappa " << c.claims.kappa << " claw-free "
                              << (c.claims.claw_free ? "yes" : "no") << '\n';
                return ok;
            }
            if (name.empty()) throw cf1p::InputError("gen: missing fixture name");
            return cmd_gen(name, gen_k, gen_m, out_path, search);
        }
        if (*oracle) return cmd_oracle(file, b);
        if (*audit) return cmd_audit(file, assume, trust);
        if (*bounds) return cmd_bounds();
        if (*dot) return cmd_export_dot(file);
    } catch (const cf1p::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}
