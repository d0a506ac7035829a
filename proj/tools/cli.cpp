#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "chipfire/arith.hpp"
#include "chipfire/critgrp.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/randomlab.hpp"

namespace chipfire::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Multigraph load_undirected(const std::string& path) {
    AnyGraph g = parse_graph(read_file(path));
    if (auto* u = std::get_if<Multigraph>(&g)) return *u;
    throw UsageError("'" + path + "' is a directed graph; this command needs an undirected one");
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
    return s;
}

Vertex vertex_or_default(const Multigraph& g, const std::string& label) {
    return label.empty() ? default_base(g) : g.index_of(label);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chip-firing and critical group toolkit", "chipfire"};
    app.require_subcommand(1);

    std::string graph_file;

    auto* group = app.add_subcommand("group", "critical group, SNF diagonal, tree count and genus");
    std::string reduced_at;
    bool directed = false;
    group->add_option("graph", graph_file, "graph file")->required();
    group->add_option("--reduced-at", reduced_at, "delete this vertex's row and column");
    group->add_flag("--directed", directed, "read the file as a directed graph");

    auto* trees = app.add_subcommand("tree-count", "number of spanning trees");
    trees->add_option("graph", graph_file, "graph file")->required();

    auto* div = app.add_subcommand("divisor", "divisor calculus");
    std::string div_verb, d1_text, d2_text, q_label;
    div->add_option("action", div_verb, "reduce | order | pairing | gonality")
        ->required()
        ->check(CLI::IsMember({"reduce", "order", "pairing", "gonality"}));
    div->add_option("graph", graph_file, "graph file")->required();
    div->add_option("--divisor", d1_text, "divisor as 'label:value ...'");
    div->add_option("--divisor2", d2_text, "second divisor for pairing");
    div->add_option("--q", q_label, "base vertex (default: last vertex)");

    auto* ar = app.add_subcommand("arith", "arithmetical structures");
    std::string ar_verb, r_text, at_label;
    std::int64_t rmax = 20;
    ar->add_option("action", ar_verb, "enumerate | validate | smooth")
        ->required()
        ->check(CLI::IsMember({"enumerate", "validate", "smooth"}));
    ar->add_option("graph", graph_file, "graph file")->required();
    ar->add_option("--rmax", rmax, "largest r entry searched")->check(CLI::PositiveNumber);
    ar->add_option("--r", r_text, "structure vector, e.g. 3,2,4,9");
    ar->add_option("--at", at_label, "vertex to smooth at");

    auto* rnd = app.add_subcommand("random", "Erdos-Renyi critical group experiment");
    randomlab::ExperimentConfig cfg;
    std::string q_text = "1/2";
    rnd->add_option("--n", cfg.n, "vertices")->check(CLI::PositiveNumber);
    rnd->add_option("--q", q_text, "edge probability a/b");
    rnd->add_option("--p", cfg.p, "prime for Sylow statistics");
    rnd->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);
    rnd->add_option("--seed", cfg.seed, "64-bit seed");
    rnd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"chipfire"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*group) {
            AnyGraph any = parse_graph(read_file(graph_file));
            if (directed) {
                DirectedMultigraph dg;
                if (auto* d = std::get_if<DirectedMultigraph>(&any)) {
                    dg = *d;
                } else {
                    const auto& u = std::get<Multigraph>(any);
                    dg = DirectedMultigraph(u.labels());
                    for (Vertex i = 0; i < u.size(); ++i)
                        for (Vertex j = 0; j < u.size(); ++j)
                            if (u.mult(i, j) > 0) dg.add_arc(i, j, u.mult(i, j));
                }
                CokernelResult c = directed_critical_group(dg);
                out << "group: " << c.torsion.to_string() << "\n";
                out << "free rank: " << c.free_rank << "\n";
                out << "snf: " << join(smith_diagonal(directed_laplacian(dg))) << "\n";
                return 0;
            }
            auto* gp = std::get_if<Multigraph>(&any);
            if (!gp) throw UsageError("'" + graph_file + "' is a directed graph; pass --directed");
            const Multigraph& g = *gp;
            if (!is_connected(g)) throw GraphError("graph is not connected");
            AbelianGroup k;
            std::vector<BigInt> snf;
            if (reduced_at.empty()) {
                k = critical_group(g);
                snf = smith_diagonal(laplacian(g));
            } else {
                const Vertex v = g.index_of(reduced_at);
                k = critical_group_reduced_at(g, v, v);
                snf = smith_diagonal(reduced_laplacian(g, v, v));
            }
            out << "group: " << k.to_string() << "\n";
            out << "snf: " << join(snf) << "\n";
            out << "trees: " << spanning_tree_count(g).get_str() << "\n";
            out << "genus: " << genus(g) << "\n";
            return 0;
        }
        if (*trees) {
            Multigraph g = load_undirected(graph_file);
            out << spanning_tree_count(g).get_str() << "\n";
            return 0;
        }
        if (*div) {
            Multigraph g = load_undirected(graph_file);
            if (!is_connected(g)) throw GraphError("graph is not connected");
            const Vertex q = vertex_or_default(g, q_label);
            if (div_verb == "gonality") {
                GonalityResult r = gonality(g);
                out << "gonality: " << r.gonality << "\n";
                out << "witness: " << write_divisor(g, r.witness) << "\n";
                return 0;
            }
            if (d1_text.empty()) throw UsageError("--divisor is required for '" + div_verb + "'");
            Divisor d1 = parse_divisor(g, d1_text);
            if (div_verb == "reduce") {
                out << write_divisor(g, q_reduce(g, d1, q)) << "\n";
            } else if (div_verb == "order") {
                if (degree(d1) != 0) throw DomainError("order needs a degree-0 divisor");
                out << element_order(g, d1, q).get_str() << "\n";
            } else {
                if (d2_text.empty()) throw UsageError("--divisor2 is required for 'pairing'");
                Divisor d2 = parse_divisor(g, d2_text);
                out << monodromy_pairing(g, d1, d2, q).to_string() << "\n";
            }
            return 0;
        }
        if (*ar) {
            Multigraph g = load_undirected(graph_file);
            if (ar_verb == "enumerate") {
                arith::Enumeration e = arith::enumerate(g, rmax);
                out << e.structures.size() << " structures\n";
                out << "r_max: " << e.r_max << "\n";
                out << "completeness: " << arith::Enumeration::completeness << "\n";
                for (const auto& s : e.structures) out << arith::to_string(s) << "\n";
                return 0;
            }
            if (r_text.empty()) throw UsageError("--r is required for '" + ar_verb + "'");
            arith::Structure s = arith::validate(g, arith::parse_r(r_text));
            if (ar_verb == "validate") {
                out << arith::to_string(s) << "\n";
                out << "group: " << arith::critical_group(g, s).to_string() << "\n";
                return 0;
            }
            if (at_label.empty()) {
                std::string list;
                for (Vertex v : arith::smoothable_vertices(g, s)) list += (list.empty() ? "" : " ") + g.label(v);
                out << "smoothable: " << (list.empty() ? "none" : list) << "\n";
                return 0;
            }
            arith::Smoothed sm = arith::smooth_at(g, s, g.index_of(at_label));
            out << arith::to_string(sm.structure) << "\n";
            out << write_graph(sm.graph);
            return 0;
        }
        if (*rnd) {
            cfg.q = randomlab::Probability::parse(q_text);
            out << randomlab::run_experiment(cfg).to_json();
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        err << "graph error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const GuardError& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

}  // namespace chipfire::cli
