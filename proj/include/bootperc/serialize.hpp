#pragma once

#include <string>

#include <json.hpp>

#include "bootperc/closure.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/solver.hpp"
#include "bootperc/verifier.hpp"

namespace bootperc {

// All emitters use insertion-ordered JSON and fixed field orders, so a given
// value always serializes to the same bytes.
using json = nlohmann::ordered_json;

json to_json(const VertexSet& s); // ascending id array

json to_json(const ClosureTrace& t);

// elapsed_ms is attached only on request: timing is machine noise and the
// default output must be identical across runs of the same config.
json to_json(const SolveResult& s, bool with_timing = false);

json to_json(const RationalBound& b);
json to_json(const Counterexample& c);
json to_json(const Report& rep); // summary only; rows travel as CSV
json to_json(const ConstructionSpec& spec);

std::string csv_header();
std::string csv_row(const InstanceRow& row);

} // namespace bootperc
