#include "graft/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graft/distance.hpp"
#include "graft/io.hpp"
#include "graft/join.hpp"
#include "graft/oracle.hpp"
#include "graft/sebo.hpp"
#include "graft/structure.hpp"
#include "graft/verify.hpp"

namespace graft {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

std::string joined(const VertexSet& vs) {
    std::string out;
    for (const VertexId& v : vs) {
        if (!out.empty()) out += " ";
        out += v;
    }
    return out;
}

std::string edge_pair(const Graph& g, EdgeId id) {
    auto [a, b] = g.endpoints(id);
    return a + " " + b;
}

void emit_header(std::ostream& out, const std::string& command) {
    out << "format: graft-result/1\n";
    out << "command: " << command << "\n";
}

void emit_edges(std::ostream& out, const Graph& g, const EdgeSet& edges,
                const std::string& indent) {
    for (EdgeId id : edges) out << indent << "edge: " << edge_pair(g, id) << "\n";
}

struct CommonArgs {
    std::string input;
    std::string draw_path;
    std::string join_path;
    std::string root;
    std::string from, to;
    int max_n = 4;
    std::uint64_t seed = 1;
};

int cmd_verify_stream(const CommonArgs& args, std::ostream& out);

int dispatch(const std::string& command, const CommonArgs& args, std::ostream& out) {
    if (command == "verify" && args.input.empty()) return cmd_verify_stream(args, out);

    Graft g = parse_graft(read_input(args.input));
    const Graph& graph = g.graph();
    JoinSolver solver(g);

    if (command == "nu") {
        emit_header(out, "nu");
        out << "nu: " << solver.nu() << "\n";
        return 0;
    }

    if (command == "min-join") {
        emit_header(out, "min-join");
        JoinCertificate c = solver.certify();
        out << "nu: " << c.size << "\n";
        out << "join:\n";
        emit_edges(out, graph, c.edges, "  ");
        return 0;
    }

    if (command == "dist") {
        emit_header(out, "dist");
        if (args.from.empty() != args.to.empty())
            throw InputError("--from and --to must be used together");
        if (!args.from.empty()) {
            out << "from: " << args.from << "\n";
            out << "to: " << args.to << "\n";
            out << "dist: " << dist(solver, args.from, args.to) << "\n";
        } else {
            DistanceTable table = distance_table(solver);
            out << "distances:\n";
            for (const auto& [pair, value] : table.entries)
                out << "  " << pair.first << " " << pair.second << ": " << value
                    << "\n";
        }
        return 0;
    }

    if (command == "allowed") {
        emit_header(out, "allowed");
        const EdgeSet& allowed = solver.allowed();
        out << "count: " << allowed.size() << "\n";
        emit_edges(out, graph, allowed, "");
        return 0;
    }

    if (command == "components") {
        emit_header(out, "components");
        std::vector<FactorComponent> comps = factor_components(solver);
        out << "count: " << comps.size() << "\n";
        for (size_t i = 0; i < comps.size(); ++i) {
            out << "component " << i << ":\n";
            out << "  vertices: " << joined(comps[i].vertices) << "\n";
            emit_edges(out, graph, comps[i].edges, "  ");
        }
        return 0;
    }

    if (command == "kl") {
        emit_header(out, "kl");
        KLPartition p = kl_partition(solver);
        out << "components: " << p.components.size() << "\n";
        for (size_t i = 0; i < p.components.size(); ++i)
            out << "component " << i << ": " << joined(p.components[i].vertices)
                << "\n";
        out << "classes: " << p.classes.size() << "\n";
        for (size_t c = 0; c < p.classes.size(); ++c) {
            out << "class " << c << ":\n";
            out << "  component: " << p.class_component[c] << "\n";
            out << "  members: " << joined(p.classes[c]) << "\n";
        }
        if (!args.draw_path.empty())
            write_file(args.draw_path, draw_partition(g, p, solver.allowed()));
        return 0;
    }

    if (command == "comb") {
        emit_header(out, "comb");
        std::optional<CombBipartiteView> view = is_comb_bipartite(solver);
        out << "comb_bipartite: " << (view ? "true" : "false") << "\n";
        if (view) {
            out << "spine: " << joined(view->spine) << "\n";
            out << "tooth: " << joined(view->tooth) << "\n";
            out << "swap_also_valid: " << (view->swap_also_valid ? "true" : "false")
                << "\n";
        }
        return 0;
    }

    if (command == "sebo") {
        emit_header(out, "sebo");
        if (args.root.empty()) throw InputError("sebo requires --root <vertex>");
        EdgeSet join = args.join_path.empty()
                           ? solver.min_join()
                           : parse_join_file(read_input(args.join_path), graph);
        SeboDecomposition d = sebo_decomposition(g, join, args.root);
        out << "root: " << d.root << "\n";
        out << "join:\n";
        emit_edges(out, graph, d.join, "  ");
        out << "level0: " << joined(d.level0) << "\n";
        out << "negative: " << joined(d.negative) << "\n";
        out << "core: " << joined(d.core) << "\n";
        out << "negative_components: " << d.components.size() << "\n";
        for (size_t i = 0; i < d.components.size(); ++i) {
            const NegativeComponent& k = d.components[i];
            out << "negative_component " << i << ":\n";
            out << "  vertices: " << joined(k.vertices) << "\n";
            out << "  contracted_name: " << k.contracted_name << "\n";
            if (k.anchor_edge) {
                out << "  anchor_inner: " << *k.anchor_inner << "\n";
                out << "  anchor_level0: " << *k.anchor_level0 << "\n";
                out << "  anchor_edge: " << edge_pair(graph, *k.anchor_edge) << "\n";
            }
        }
        out << "contracted:\n";
        out << "  vertices: "
            << joined(VertexSet(d.contracted_graph.vertices().begin(),
                                d.contracted_graph.vertices().end()))
            << "\n";
        out << "  terminals: " << joined(d.contracted_terminals) << "\n";
        for (const Graph::Edge& e : d.contracted_graph.edges())
            out << "  edge: " << d.contracted_graph.id_of(e.u) << " "
                << d.contracted_graph.id_of(e.v) << "\n";
        SeboChecklist checks = verify_sebo(d);
        for (const auto& item : checks.items) {
            out << "check " << item.name << ": " << (item.pass ? "pass" : "fail");
            if (!item.pass) out << " (" << item.detail << ")";
            out << "\n";
        }
        out << "verified: " << (checks.all_pass() ? "true" : "false") << "\n";
        if (!args.draw_path.empty())
            write_file(args.draw_path, draw_decomposition(d, solver.allowed()));
        return checks.all_pass() ? 0 : 2;
    }

    if (command == "refine") {
        emit_header(out, "refine");
        std::vector<ComponentRefinement> report = refinement_report(solver);
        out << "components: " << report.size() << "\n";
        for (size_t i = 0; i < report.size(); ++i) {
            const ComponentRefinement& r = report[i];
            out << "component " << i << ":\n";
            out << "  vertices: " << joined(r.component.vertices) << "\n";
            out << "  host_classes: " << r.host_classes.size() << "\n";
            for (const VertexSet& c : r.host_classes)
                out << "  host_class: " << joined(c) << "\n";
            out << "  standalone_classes: " << r.standalone_classes.size() << "\n";
            for (const VertexSet& c : r.standalone_classes)
                out << "  standalone_class: " << joined(c) << "\n";
            out << "  refines: " << (r.refines ? "true" : "false") << "\n";
            out << "  proper: " << (r.proper ? "true" : "false") << "\n";
        }
        bool ok = std::all_of(report.begin(), report.end(),
                              [](const ComponentRefinement& r) { return r.refines; });
        return ok ? 0 : 2;
    }

    if (command == "verify") {
        emit_header(out, "verify");
        VerifyOptions opt;
        std::vector<CheckResult> checks = verify_instance(g, opt);
        int failures = 0;
        for (const CheckResult& c : checks) {
            out << "check " << c.name << ": ";
            switch (c.status) {
            case CheckStatus::pass:
                out << "pass";
                if (!c.detail.empty()) out << " (" << c.detail << ")";
                break;
            case CheckStatus::fail:
                out << "fail (" << c.detail << ")";
                ++failures;
                break;
            case CheckStatus::skipped:
                out << "skip (" << c.detail << ")";
                break;
            }
            out << "\n";
        }
        out << "failures: " << failures << "\n";
        return failures == 0 ? 0 : 2;
    }

    throw InputError("unknown command '" + command + "'");
}

int cmd_verify_stream(const CommonArgs& args, std::ostream& out) {
    emit_header(out, "verify");
    out << "mode: stream\n";
    out << "max_n: " << args.max_n << "\n";
    out << "seed: " << args.seed << "\n";

    oracle::StreamParams params;
    params.exhaustive_max_n = std::min(args.max_n, 6);
    params.dedup = true;
    params.random_count = 100;
    params.random_max_n = std::max(6, std::min(args.max_n, 10));
    params.seed = args.seed;
    oracle::InstanceStream stream(params);

    std::map<std::string, std::pair<int, int>> tally; // name -> (pass, fail)
    int instances = 0;
    std::string first_failure;
    while (std::optional<Graft> g = stream.next()) {
        ++instances;
        for (const CheckResult& c : verify_instance(*g)) {
            if (c.status == CheckStatus::pass) ++tally[c.name].first;
            if (c.status == CheckStatus::fail) {
                ++tally[c.name].second;
                if (first_failure.empty())
                    first_failure = c.name + " (" + c.detail + ") on:\n" +
                                    serialize(to_document(*g));
            }
        }
    }
    out << "instances: " << instances << "\n";
    int failures = 0;
    for (const auto& [name, counts] : tally) {
        out << "check " << name << ": " << counts.first << " pass, "
            << counts.second << " fail\n";
        failures += counts.second;
    }
    if (!first_failure.empty()) out << "first_failure: " << first_failure;
    out << "failures: " << failures << "\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact minimum joins, distances and canonical decompositions "
                 "of grafts"};
    app.name("graft");
    app.require_subcommand(1);

    CommonArgs common;
    std::string command;

    struct CommandDef {
        std::string name;
        std::string help;
        bool input_required;
    };
    const std::vector<CommandDef> commands = {
        {"nu", "Minimum join size", true},
        {"min-join", "A deterministic minimum join", true},
        {"dist", "Join-induced distance (--from/--to) or the full table", true},
        {"allowed", "Edges lying in some minimum join", true},
        {"components", "Factor-components", true},
        {"kl", "Equivalence classes of the graft partition", true},
        {"sebo", "Distance decomposition for --root", true},
        {"comb", "Comb-bipartite recognition", true},
        {"refine", "Per-component partition refinement report", true},
        {"verify", "Run structural checks (on a file, or a generated stream)",
         false},
    };
    for (const CommandDef& def : commands) {
        CLI::App* sub = app.add_subcommand(def.name, def.help);
        CLI::Option* input =
            sub->add_option("input", common.input, "graft file ('-' for stdin)");
        if (def.input_required) input->required();
        if (def.name == "dist") {
            sub->add_option("--from", common.from, "first vertex");
            sub->add_option("--to", common.to, "second vertex");
        }
        if (def.name == "sebo") {
            sub->add_option("--root", common.root, "root vertex")->required();
            sub->add_option("--join", common.join_path,
                            "minimum join file (one 'u v' edge per line)");
        }
        if (def.name == "kl" || def.name == "sebo")
            sub->add_option("--draw", common.draw_path, "write a DOT drawing here");
        if (def.name == "verify") {
            sub->add_option("--max-n", common.max_n,
                            "exhaustive bound for stream mode");
            sub->add_option("--seed", common.seed, "random stream seed");
        }
        sub->callback([&command, name = def.name]() { command = name; });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return dispatch(command, common, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BoundError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace graft
