#include "bootperc/serialize.hpp"

#include <sstream>

namespace bootperc {

json to_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

json to_json(const ClosureTrace& t) {
    json steps = json::array();
    for (const VertexSet& s : t.steps) steps.push_back(to_json(s));
    return json{{"r", t.r},
                {"initial", to_json(t.initial)},
                {"steps", std::move(steps)},
                {"final", to_json(t.final)},
                {"time", t.time}};
}

json to_json(const SolveResult& s, bool with_timing) {
    json j{{"status", to_string(s.status)},
           {"value", s.value},
           {"witness", s.witness ? to_json(*s.witness) : json(nullptr)},
           {"subsets_examined", s.subsets_examined},
           {"closures_used", s.closures_used}};
    if (with_timing) j["elapsed_ms"] = s.elapsed_ms;
    return j;
}

json to_json(const RationalBound& b) {
    return json{{"exact", b.exact}, {"ceiling", b.ceiling}, {"approx", b.approx}};
}

json to_json(const Counterexample& c) {
    return json{{"graph", c.graph_edge_list},
                {"parameters", c.parameters},
                {"offending_set", c.offending_set}};
}

json to_json(const Report& rep) {
    return json{{"suite", rep.suite},
                {"instances_checked", rep.instances_checked},
                {"passed", rep.passed},
                {"counterexample", rep.counterexample ? to_json(*rep.counterexample)
                                                      : json(nullptr)},
                {"notes", rep.notes},
                {"inconclusive", rep.inconclusive},
                {"closures_used", rep.closures_used}};
}

json to_json(const ConstructionSpec& spec) {
    json j{{"family", spec.family},
           {"n", spec.n},
           {"r", spec.r},
           {"d", spec.d},
           {"strategy", strategy_name(spec.strategy)},
           {"seed", spec.seed}};
    if (spec.family == "random-min-degree") j["p"] = spec.edge_prob;
    return j;
}

std::string csv_header() { return "suite,n,r,seed,outcome,witness_size,closures_used"; }

std::string csv_row(const InstanceRow& row) {
    std::ostringstream os;
    os << row.suite << ',' << row.n << ',' << row.r << ',' << row.seed << ',' << row.outcome
       << ',' << row.witness_size << ',' << row.closures_used;
    return os.str();
}

} // namespace bootperc
