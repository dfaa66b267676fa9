// command-line front end: construct graphs, run closures, compute m(G,r),
// verify extremal families and degree-threshold theorems, sweep random
// instances, and evaluate bounds.  Identical invocations (same flags, same
// seed) produce byte-identical primary output.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "bootperc/closure.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/edge_list.hpp"
#include "bootperc/serialize.hpp"
#include "bootperc/solver.hpp"
#include "bootperc/verifier.hpp"

namespace {

using namespace bootperc;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string graph_path;
    std::string family;
    int n = 0;
    int r = 3;
    int d = 0;
    std::string strategy = "sidon";
    std::uint64_t seed = 0;
    long long budget = -1; // -1: fall back to env, then built-in default
    double p = 0.55;
    std::string format = "json";
    std::string out_path;
    int workers = 0;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_budget = true) {
    sub->add_option("--graph", o.graph_path, "edge-list file (\"n m\" header, one edge per line)");
    sub->add_option("--family", o.family,
                    "construction family: double-clique-matching, clique-pair-bipartite, "
                    "odd-deletion, grid, random-min-degree, sidon-bipartite");
    sub->add_option("--n", o.n, "vertex count (grid: side length)");
    sub->add_option("--r", o.r, "infection threshold");
    sub->add_option("--d", o.d, "grid dimension / bipartite regularity / min-degree target");
    sub->add_option("--strategy", o.strategy, "sidon or random-matchings")
        ->check(CLI::IsMember({"sidon", "random-matchings"}));
    sub->add_option("--seed", o.seed, "64-bit seed for randomized pieces");
    if (with_budget)
        sub->add_option("--budget", o.budget,
                        "closure-call limit (default: BOOTPERC_BUDGET env or 10000000)");
    sub->add_option("--p", o.p, "edge probability for random-min-degree (default 0.55)");
    sub->add_option("--format", o.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out_path, "write primary output to this file instead of stdout");
    sub->add_option("--workers", o.workers, "worker threads (default: machine parallelism)");
}

long long resolve_budget(const CommonOpts& o) {
    if (o.budget >= 0) return o.budget;
    if (const char* env = std::getenv("BOOTPERC_BUDGET")) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(env, &pos);
            if (pos == std::string(env).size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("BOOTPERC_BUDGET is not a nonnegative integer: " +
                                    std::string(env));
    }
    return kDefaultBudget;
}

ConstructionSpec spec_from(const CommonOpts& o) {
    ConstructionSpec spec;
    spec.family = o.family;
    spec.n = o.n;
    spec.r = o.r;
    spec.d = o.d;
    spec.strategy = parse_strategy(o.strategy);
    spec.seed = o.seed;
    spec.edge_prob = o.p;
    return spec;
}

Graph load_input(const CommonOpts& o) {
    if (!o.graph_path.empty() && !o.family.empty())
        throw std::invalid_argument("give either --graph or --family, not both");
    if (!o.graph_path.empty()) return load_edge_list_file(o.graph_path);
    if (!o.family.empty()) return build_construction(spec_from(o));
    throw std::invalid_argument("an input graph is required: --graph FILE or --family NAME");
}

json config_json(const std::string& command, const CommonOpts& o, long long budget = -1) {
    json c;
    c["command"] = command;
    if (!o.graph_path.empty()) c["graph"] = o.graph_path;
    if (!o.family.empty()) c["construction"] = to_json(spec_from(o));
    c["r"] = o.r;
    c["seed"] = o.seed;
    if (budget >= 0) c["budget"] = budget;
    c["format"] = o.format;
    c["workers"] = o.workers;
    return c;
}

std::vector<int> parse_id_list(const std::string& csv) {
    std::vector<int> ids;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad vertex id: " + tok);
        ids.push_back(v);
    }
    return ids;
}

std::string ids_to_string(const std::vector<int>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ' ';
        os << ids[i];
    }
    return os.str();
}

// Primary output goes to stdout unless --out redirects it.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void apply_workers(const CommonOpts& o) {
    if (o.workers > 0) omp_set_num_threads(o.workers);
}

int exit_code_for(const Report& rep) {
    if (!rep.passed) return kExitCounterexample;
    if (rep.inconclusive > 0) return kExitBudget;
    return kExitPass;
}

void print_report_text(std::ostream& os, const Report& rep) {
    os << "suite " << rep.suite << "\n";
    os << "instances " << rep.instances_checked << "\n";
    os << "passed " << (rep.passed ? "yes" : "no") << "\n";
    if (rep.inconclusive > 0) os << "inconclusive " << rep.inconclusive << "\n";
    if (!rep.notes.empty()) os << "notes " << rep.notes << "\n";
    if (rep.counterexample) {
        os << "counterexample " << rep.counterexample->parameters << "\n";
        os << "offending_set " << ids_to_string(rep.counterexample->offending_set) << "\n";
    }
}

int run_closure(const CommonOpts& o, const std::string& set_csv) {
    if (o.format == "csv") throw std::invalid_argument("closure output is json or text");
    apply_workers(o);
    Graph g = load_input(o);
    VertexSet a = VertexSet::from_ids(g.vertex_count(), parse_id_list(set_csv));
    ClosureTrace trace = closure(g, a, o.r);
    bool perc = trace.final.count() == g.vertex_count();

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    if (o.format == "json") {
        json j;
        j["config"] = config_json("closure", o);
        j["config"]["set"] = parse_id_list(set_csv);
        j["trace"] = to_json(trace);
        j["percolates"] = perc;
        os << j.dump(2) << "\n";
    } else {
        os << "r " << trace.r << "\n";
        os << "initial " << ids_to_string(trace.initial.members()) << "\n";
        for (std::size_t t = 0; t < trace.steps.size(); ++t)
            os << "step " << (t + 1) << " " << ids_to_string(trace.steps[t].members()) << "\n";
        os << "final " << ids_to_string(trace.final.members()) << "\n";
        os << "size " << trace.final.count() << "\n";
        os << "time " << trace.time << "\n";
        os << "percolates " << (perc ? "yes" : "no") << "\n";
    }
    return kExitPass;
}

int run_solve(const CommonOpts& o) {
    if (o.format == "csv") throw std::invalid_argument("solve output is json or text");
    apply_workers(o);
    Graph g = load_input(o);
    Budget budget{.limit = resolve_budget(o)};
    SolveResult res = min_percolating_set(g, o.r, budget);

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    if (o.format == "json") {
        json j;
        j["config"] = config_json("solve", o, budget.limit);
        j["result"] = to_json(res);
        os << j.dump(2) << "\n";
    } else {
        os << "status " << to_string(res.status) << "\n";
        os << "value " << res.value << "\n";
        if (res.witness) os << "witness " << ids_to_string(res.witness->members()) << "\n";
        os << "subsets_examined " << res.subsets_examined << "\n";
        os << "closures_used " << res.closures_used << "\n";
    }
    return res.status == solve_status::exact ? kExitPass : kExitBudget;
}

int run_construct(const CommonOpts& o) {
    if (o.family.empty()) throw std::invalid_argument("construct requires --family");
    if (o.format == "csv") throw std::invalid_argument("construct output is json or text");
    Graph g = build_construction(spec_from(o));

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    if (o.format == "json") {
        json j;
        j["config"] = config_json("construct", o);
        j["graph"] = json{{"n", g.vertex_count()},
                          {"m", g.edge_count()},
                          {"min_degree", g.vertex_count() > 0 ? min_degree(g) : 0},
                          {"edge_list", serialize_edge_list(g)}};
        os << j.dump(2) << "\n";
    } else {
        os << serialize_edge_list(g); // raw edge list, ready for --graph
    }
    return kExitPass;
}

int run_bound(const CommonOpts& o) {
    if (o.format == "csv") throw std::invalid_argument("bound output is json or text");
    apply_workers(o);
    Graph g = load_input(o);
    RationalBound rb = reichman_bound(g, o.r);
    auto [greedy_size, greedy_set] = greedy_upper_bound(g, o.r, o.seed);

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    if (o.format == "json") {
        json j;
        j["config"] = config_json("bound", o);
        j["reichman"] = to_json(rb);
        j["greedy"] = json{{"size", greedy_size}, {"witness", to_json(greedy_set)}};
        os << j.dump(2) << "\n";
    } else {
        os << "reichman " << rb.exact << " (ceiling " << rb.ceiling << ")\n";
        os << "greedy " << greedy_size << ": " << ids_to_string(greedy_set.members()) << "\n";
    }
    return kExitPass;
}

int run_verify(const CommonOpts& o, const std::string& suite, long long sample_count, int k_flag,
               const std::string& set_csv) {
    if (o.format == "csv") throw std::invalid_argument("verify output is json or text");
    apply_workers(o);
    Budget budget{.limit = resolve_budget(o)};

    Report rep;
    if (suite == "construction") {
        if (o.family.empty())
            throw std::invalid_argument("verify --suite construction requires --family");
        rep = verify_construction_extremal(spec_from(o), budget);
    } else if (suite == "closure-gap") {
        Graph g = load_input(o);
        rep = check_closure_gap(g, o.r, sample_count, o.seed);
    } else if (suite == "big-sets") {
        Graph g = load_input(o);
        int k = k_flag;
        if (k < 0) { // strongest hypothesis this graph satisfies
            k = min_degree(g) - g.vertex_count() / 2;
            if (k > o.r - 1) k = o.r - 1;
            if (k < 1) k = 1;
        }
        rep = check_big_sets_percolate(g, o.r, k, sample_count, o.seed);
    } else if (suite == "all-r-sets") {
        Graph g = load_input(o);
        int k = k_flag;
        if (k < 0) k = g.vertex_count() - min_degree(g);
        rep = check_all_r_sets_percolate(g, o.r, k);
    } else if (suite == "structure") {
        Graph g = load_input(o);
        VertexSet a = VertexSet::from_ids(g.vertex_count(), parse_id_list(set_csv));
        rep = check_closed_set_structure(g, a, o.r);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    if (o.format == "json") {
        json j;
        j["config"] = config_json("verify", o, budget.limit);
        j["config"]["suite"] = suite;
        if (suite == "closure-gap" || suite == "big-sets")
            j["config"]["sample_count"] = sample_count;
        j["report"] = to_json(rep);
        os << j.dump(2) << "\n";
    } else {
        print_report_text(os, rep);
    }
    return exit_code_for(rep);
}

int run_sweep(const CommonOpts& o, int n_min, int n_max, int trials) {
    if (o.format != "csv")
        throw std::invalid_argument("sweep streams csv rows; use --format csv");
    apply_workers(o);
    Budget budget{.limit = resolve_budget(o)};

    OutputTarget target(o.out_path);
    std::ostream& os = target.stream();
    os << csv_header() << "\n";
    Report rep = verify_main_theorem_sweep(
        o.r, {n_min, n_max}, trials, o.seed, budget, o.p,
        [&](const InstanceRow& row) { os << csv_row(row) << "\n" << std::flush; });

    json summary;
    summary["config"] = config_json("sweep", o, budget.limit);
    summary["config"]["n_min"] = n_min;
    summary["config"]["n_max"] = n_max;
    summary["config"]["trials"] = trials;
    summary["config"]["p"] = o.p;
    summary["report"] = to_json(rep);
    std::cerr << summary.dump(2) << "\n";
    return exit_code_for(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bootstrap percolation toolkit: closures, minimum percolating sets, "
                 "extremal families, and degree-threshold verification"};
    app.require_subcommand(1);

    CommonOpts closure_o, solve_o, construct_o, bound_o, verify_o, sweep_o;
    std::string closure_set, verify_set;
    std::string verify_suite;
    long long sample_count = 1000;
    int k_flag = -1;
    int n_min = 0, n_max = 0, trials = 10;

    CLI::App* c_closure = app.add_subcommand("closure", "run the infection process to its fixed point");
    add_common(c_closure, closure_o, false);
    c_closure->add_option("--set", closure_set, "comma-separated initially infected ids")
        ->required();

    CLI::App* c_solve = app.add_subcommand("solve", "compute the minimum percolating set size");
    add_common(c_solve, solve_o);

    CLI::App* c_construct = app.add_subcommand("construct", "emit a generated graph");
    add_common(c_construct, construct_o, false);

    CLI::App* c_bound = app.add_subcommand("bound", "degree-sum and greedy upper bounds");
    add_common(c_bound, bound_o, false);

    CLI::App* c_verify = app.add_subcommand("verify", "run one verification suite");
    add_common(c_verify, verify_o);
    c_verify
        ->add_option("--suite", verify_suite,
                     "construction, closure-gap, big-sets, all-r-sets, or structure")
        ->required()
        ->check(CLI::IsMember({"construction", "closure-gap", "big-sets", "all-r-sets",
                               "structure"}));
    c_verify->add_option("--sample-count", sample_count, "random sets to draw (default 1000)");
    c_verify->add_option("--k", k_flag,
                         "degree-slack parameter (default: derived from the graph)");
    c_verify->add_option("--set", verify_set, "set to check (structure suite)");

    CLI::App* c_sweep = app.add_subcommand("sweep", "random graphs at the degree threshold");
    add_common(c_sweep, sweep_o);
    sweep_o.format = "csv";
    c_sweep->add_option("--n-min", n_min, "smallest n (inclusive)")->required();
    c_sweep->add_option("--n-max", n_max, "largest n (inclusive)")->required();
    c_sweep->add_option("--trials", trials, "instances per n (default 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (c_closure->parsed()) return run_closure(closure_o, closure_set);
        if (c_solve->parsed()) return run_solve(solve_o);
        if (c_construct->parsed()) return run_construct(construct_o);
        if (c_bound->parsed()) return run_bound(bound_o);
        if (c_verify->parsed())
            return run_verify(verify_o, verify_suite, sample_count, k_flag, verify_set);
        if (c_sweep->parsed()) return run_sweep(sweep_o, n_min, n_max, trials);
    } catch (const ParseError& e) {
        std::cerr << "error: input file: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
