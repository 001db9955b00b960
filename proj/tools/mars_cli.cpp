// mars: command-line front end for multiset anonymity analysis.
//
// Exit codes: 0 decisive result, 1 usage or input error, 2 inconclusive
// (budget or cardinality bound reached before a proof).

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mars/edge_list.hpp"
#include "mars/families.hpp"
#include "mars/milp.hpp"
#include "mars/multiset.hpp"
#include "mars/report.hpp"
#include "mars/solver.hpp"

namespace {

using namespace mars;

struct GlobalOptions {
    std::string format = "text";
    unsigned threads = 0;
    double budget_seconds = 60.0;
    std::uint64_t max_subsets = 100'000'000;
    std::size_t max_card = 0;
    std::uint64_t seed = 0;
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t parse_index(std::string_view token, std::string_view what) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || token.empty())
        throw UsageError("bad " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

// "1..5" or "1,2,4" (ranges and single values may be mixed).
std::vector<std::size_t> parse_k_list(const std::string& text) {
    std::vector<std::size_t> ks;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            ks.push_back(parse_index(part, "k"));
            continue;
        }
        std::size_t lo = parse_index(std::string_view(part).substr(0, dots), "k");
        std::size_t hi = parse_index(std::string_view(part).substr(dots + 2), "k");
        if (lo > hi) throw UsageError("empty k range '" + part + "'");
        for (std::size_t k = lo; k <= hi; ++k) ks.push_back(k);
    }
    if (ks.empty()) throw UsageError("no k values given");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

VertexSet parse_set(const std::string& text) {
    VertexSet s;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) s.push_back(Vertex(parse_index(part, "vertex")));
    return s;
}

Graph load_graph(const std::string& path) {
    BuildNotes notes;
    Graph g = path == "-" ? read_edge_list(std::cin, &notes) : read_edge_list_file(path, &notes);
    if (notes.duplicate_edges)
        std::cerr << "warning: " << path << ": " << notes.duplicate_edges << " duplicate edge(s) merged\n";
    return g;
}

SolverOptions solver_options(const GlobalOptions& g) {
    SolverOptions o;
    o.max_card = g.max_card;
    o.budget.wall_seconds = g.budget_seconds;
    o.budget.max_subsets = g.max_subsets;
    o.threads = g.threads ? g.threads : default_thread_count();
    return o;
}

void emit(const GlobalOptions& g, const Report& report) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) throw std::runtime_error("cannot write " + g.out);
        out = &file;
    }
    if (g.format == "json")
        report.write_json(*out);
    else
        report.write_text(*out);
}

Report base_report(const std::string& op, const std::string& path, const Graph& graph, const DistanceMatrix& dm,
                   const SolverOptions& options) {
    Report r;
    r.operation = op;
    r.input = describe_input(path, graph, dm);
    if (!graph.labels().empty()) r.input["labels"] = graph.labels();
    r.parameters = describe_budget(options);
    return r;
}

void fill_timings(Report& r, double seconds, std::uint64_t subsets, unsigned threads) {
    r.timings["elapsed_seconds"] = seconds;
    r.timings["subsets_evaluated"] = subsets;
    r.timings["threads"] = threads;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (k,l)-multiset anonymity analysis of graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", g.threads, "Worker threads (default: MARS_THREADS or all cores)");
    app.add_option("--budget", g.budget_seconds, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--max-subsets", g.max_subsets, "Subset evaluation budget");
    app.add_option("--max-card", g.max_card, "Largest set size to enumerate (default n-1)");
    app.add_option("--seed", g.seed, "Seed for random families");
    app.add_option("-o,--out", g.out, "Output file");

    std::string graph_path;
    std::size_t k = 0, ell = 0;
    std::string k_list, set_text;

    auto* analyze = app.add_subcommand("analyze", "msad_k: size of a smallest k-MARS");
    analyze->add_option("graph", graph_path, "Edge-list file ('-' for stdin)")->required();
    analyze->add_option("--k", k, "Anonymity value k")->required();

    auto* kappa_cmd = app.add_subcommand("kappa", "Largest k with a k-MARS");
    kappa_cmd->add_option("graph", graph_path, "Edge-list file")->required();

    auto* anonymity = app.add_subcommand("anonymity", "Anonymity level against attackers of size <= ell");
    anonymity->add_option("graph", graph_path, "Edge-list file")->required();
    anonymity->add_option("--ell", ell, "Largest attacker set")->required();

    auto* spectrum = app.add_subcommand("spectrum", "msad_k for several k in one sweep");
    spectrum->add_option("graph", graph_path, "Edge-list file")->required();
    spectrum->add_option("--k", k_list, "k values, e.g. 1..5 or 1,2,4")->required();

    FamilySpec spec;
    std::string family;
    auto* gen = app.add_subcommand("gen", "Generate a family graph as an edge list");
    gen->add_option("--family", family, "path|cycle|bipartite|wheel|btree|q3|gstar|sparse|dense|tree")->required();
    gen->add_option("--n", spec.n, "Vertex count");
    gen->add_option("--r", spec.r, "Bipartite side r");
    gen->add_option("--t", spec.t, "Bipartite side t");
    gen->add_option("--d", spec.depth, "Binary tree depth");
    gen->add_option("--delta", spec.delta, "Degree bound (sparse) or removed edges (dense)");

    auto* export_milp = app.add_subcommand("export-milp", "Write the MILP model in LP format");
    export_milp->add_option("graph", graph_path, "Edge-list file")->required();
    export_milp->add_option("--k", k, "Anonymity value k")->required();

    auto* verify = app.add_subcommand("verify", "Check whether a set is a k-MARS");
    verify->add_option("graph", graph_path, "Edge-list file")->required();
    verify->add_option("--k", k, "Anonymity value k")->required();
    verify->add_option("--set", set_text, "Comma-separated vertices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            spec.kind = parse_family_name(family);
            spec.seed = g.seed;
            const Graph graph = generate(spec);
            const DistanceMatrix dm(graph);
            std::ostringstream summary;
            summary << spec.describe() << ": n=" << graph.order() << " m=" << graph.size()
                    << " diameter=" << dm.diameter() << '\n';
            if (g.out.empty()) {
                std::cout << write_edge_list(graph);
                std::cerr << summary.str();
            } else {
                write_edge_list_file(graph, g.out);
                std::cout << summary.str();
            }
            return 0;
        }

        const Graph graph = load_graph(graph_path);
        const DistanceMatrix dm(graph);
        const SolverOptions options = solver_options(g);

        if (export_milp->parsed()) {
            const MilpModel model = build_model(graph, dm, k);
            const auto counts = model_json(model);
            if (g.out.empty()) {
                export_lp(model, std::cout);
                std::cerr << counts.dump() << '\n';
            } else {
                std::ofstream file(g.out);
                if (!file) throw std::runtime_error("cannot write " + g.out);
                export_lp(model, file);
                Report r;
                r.operation = "export-milp";
                r.input = describe_input(graph_path, graph, dm);
                r.parameters["k"] = k;
                r.outcome = counts;
                r.outcome["file"] = g.out;
                if (g.format == "json")
                    r.write_json(std::cout);
                else
                    r.write_text(std::cout);
            }
            return 0;
        }

        Report r = base_report(app.get_subcommands().front()->get_name(), graph_path, graph, dm, options);
        if (analyze->parsed()) {
            const SolveOutcome o = msad(dm, k, options);
            r.parameters["k"] = k;
            r.outcome = outcome_json(o);
            r.decisive = is_decisive(o.status);
            fill_timings(r, o.elapsed_seconds, o.subsets_evaluated, options.threads);
        } else if (kappa_cmd->parsed()) {
            const KappaResult res = kappa(dm, options);
            r.outcome = kappa_json(res);
            r.decisive = res.exact;
            fill_timings(r, res.elapsed_seconds, res.subsets_evaluated, options.threads);
        } else if (anonymity->parsed()) {
            const AnonymityProfile p = anonymity_level(dm, ell, options);
            r.parameters["ell"] = ell;
            r.outcome = anonymity_json(p);
            r.decisive = p.exact;
            fill_timings(r, p.elapsed_seconds, p.subsets_evaluated, options.threads);
        } else if (spectrum->parsed()) {
            const auto ks = parse_k_list(k_list);
            const auto outcomes = k_spectrum(dm, ks, options);
            r.parameters["k"] = ks;
            r.outcome = spectrum_json(outcomes);
            for (const auto& [_, o] : outcomes) r.decisive = r.decisive && is_decisive(o.status);
            const auto& any = outcomes.begin()->second;
            fill_timings(r, any.elapsed_seconds, any.subsets_evaluated, options.threads);
        } else if (verify->parsed()) {
            const WitnessCertificate cert = verify_witness(dm, parse_set(set_text), k);
            r.parameters = {{"k", k}};
            r.outcome = certificate_json(cert);
        }
        emit(g, r);
        return r.decisive ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
