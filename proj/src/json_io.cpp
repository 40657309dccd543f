// json_io.cpp — JSON/CSV serialization of censuses, reports and parameter
// dumps.
#include "primexp/json_io.hpp"

#include <sstream>

#include "primexp/formula.hpp"
#include "primexp/oracle.hpp"

namespace primexp {

namespace {

ordered_json opt_json(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

ordered_json struct_params_json(const SymCompanionGraph& g) {
    StructParams p = struct_params(g);
    ordered_json j;
    j["v1"] = p.partition.v1;
    j["v2"] = p.partition.v2;
    j["h"] = p.h;
    j["v1h"] = p.v1h;
    ordered_json runs = ordered_json::array();
    for (const Run& r : p.runs.runs) runs.push_back({r.lo, r.hi});
    j["runs"] = runs;
    j["m"] = p.m;
    j["mo"] = opt_json(p.mo);
    j["q_even"] = opt_json(p.q_even);
    j["se"] = opt_json(p.se);
    j["h_prime"] = opt_json(p.h_prime);

    if (p.se) {
        CycleSystem cs = cycle_system(g, p.v1h);
        ordered_json cycles = ordered_json::array();
        for (const Cycle& c : cs.cycles)
            cycles.push_back({{"first", c.first}, {"last", c.last}, {"len", c.length}});
        j["cycles"] = cycles;
        ordered_json combined = ordered_json::array();
        for (const CombinedCycle& c : cs.combined)
            combined.push_back({{"d1", cs.cycles[static_cast<std::size_t>(c.d1)].first},
                                {"d2", cs.cycles[static_cast<std::size_t>(c.d2)].first},
                                {"len", c.length},
                                {"overlap", c.v2_overlap}});
        j["combined"] = combined;
    } else {
        j["cycles"] = nullptr;
        j["combined"] = nullptr;
    }
    return j;
}

ordered_json census_json(const ExponentCensus& c) {
    ordered_json j;
    j["n"] = c.n;
    j["class"] = {{"alpha", c.tag.alpha ? 1 : 0}, {"eps", c.tag.eps ? 1 : 0}};
    j["primitive"] = c.primitive_count;
    j["imprimitive"] = c.imprimitive_count;
    ordered_json hist = ordered_json::object();
    for (const auto& [b, count] : c.histogram) hist[std::to_string(b)] = count;
    j["histogram"] = hist;
    ordered_json rows = ordered_json::array();
    for (const Mismatch& mm : c.mismatches) {
        ordered_json row;
        row["y"] = mm.y;
        row["kind"] = mm.kind == MismatchKind::exponent ? "exponent" : "primitivity";
        row["formula"] = mm.formula_value;
        row["rule"] = rule_name(mm.rule);
        row["oracle_bfs"] = mm.oracle_bfs;
        row["oracle_power"] = mm.oracle_power;
        rows.push_back(row);
    }
    j["mismatches"] = rows;
    return j;
}

std::string census_csv(const ExponentCensus& c) {
    std::ostringstream out;
    out << "n,alpha,eps,exponent,count\n";
    for (const auto& [b, count] : c.histogram)
        out << c.n << "," << (c.tag.alpha ? 1 : 0) << "," << (c.tag.eps ? 1 : 0) << ","
            << b << "," << count << "\n";
    return out.str();
}

ordered_json report_json(const CensusReport& r) {
    ordered_json j;
    ordered_json censuses = ordered_json::array();
    for (const ExponentCensus& c : r.censuses) censuses.push_back(census_json(c));
    j["censuses"] = censuses;
    ordered_json rows = ordered_json::array();
    for (const Comparison& c : r.comparisons)
        rows.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}});
    j["comparisons"] = rows;
    j["failed"] = r.failed_comparisons();
    return j;
}

ordered_json describe_graph_json(const SymCompanionGraph& g) {
    ordered_json j;
    j["n"] = g.order();
    j["class"] = {{"alpha", g.tag().alpha ? 1 : 0}, {"eps", g.tag().eps ? 1 : 0}};
    j["y"] = g.y_string();
    j["row"] = g.row_string();
    bool prim = is_primitive(g);
    j["primitive"] = prim;
    j["primitive_formula"] = is_primitive_formula(g);
    if (prim) {
        ExponentResult r = exponent_formula(g);
        j["formula"] = {{"value", r.value}, {"rule", rule_name(r.rule)}};
        j["oracle"] = {{"bfs", exponent_oracle_bfs(g)}, {"power", exponent_oracle_power(g)}};
        j["params"] = struct_params_json(g);
    } else {
        j["formula"] = nullptr;
        j["oracle"] = nullptr;
        j["params"] = nullptr;
    }
    return j;
}

}  // namespace primexp
