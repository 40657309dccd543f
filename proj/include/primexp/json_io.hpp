// json_io.hpp — JSON and CSV views of censuses, reports and the structural
// parameter dump.  Field order is fixed so equal data serializes to equal
// bytes regardless of worker count.
#pragma once

#include <string>

#include <json.hpp>

#include "primexp/census.hpp"
#include "primexp/structure.hpp"

namespace primexp {

using ordered_json = nlohmann::ordered_json;

/// {v1, v2, runs, m, mo, q_even, se, h, h_prime, cycles, combined} plus
/// v1h; absent parameters serialize as null.  Cycles in `combined` are
/// referenced by their first vertex.
ordered_json struct_params_json(const SymCompanionGraph& g);

/// {n, class:{alpha,eps}, primitive, imprimitive, histogram, mismatches}.
ordered_json census_json(const ExponentCensus& c);

/// CSV with header n,alpha,eps,exponent,count; one row per histogram cell.
std::string census_csv(const ExponentCensus& c);

ordered_json report_json(const CensusReport& r);

/// Full description of one graph: identity, primitivity, formula and
/// oracle exponents, and the parameter dump.
ordered_json describe_graph_json(const SymCompanionGraph& g);

}  // namespace primexp
