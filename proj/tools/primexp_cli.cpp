// primexp_cli.cpp — command line front end: per-matrix exponents, censuses,
// the reference-table check, the formula-vs-oracle harness, exponent sets
// and the string-combinatorics counters.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primexp/census.hpp"
#include "primexp/formula.hpp"
#include "primexp/json_io.hpp"
#include "primexp/oracle.hpp"
#include "primexp/strings.hpp"

using namespace primexp;

namespace {

std::string set_text(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string histogram_text(const ExponentCensus& c) {
    std::string out;
    for (const auto& [b, count] : c.histogram)
        out += (out.empty() ? "" : "  ") + std::to_string(b) + ":" + std::to_string(count);
    return out.empty() ? "-" : out;
}

int run_exp(int n, const std::string& klass, const std::string& y,
            const std::string& row, bool loop, bool as_json) {
    std::optional<SymCompanionGraph> graph;
    if (!row.empty()) {
        graph = graph_from_row(row, loop);
    } else {
        if (n == 0 || klass.empty())
            throw CLI::ValidationError("exp", "need --row or all of --n/--class/--y");
        ClassTag tag = parse_class_tag(klass);
        std::uint64_t bits = parse_y_bits(y);
        if (static_cast<int>(y.size()) != n - 3)
            throw CLI::ValidationError("exp", "Y must have exactly n-3 bits");
        graph = SymCompanionGraph(n, tag, bits);
    }

    if (as_json) {
        std::cout << describe_graph_json(*graph).dump(2) << "\n";
        return 0;
    }
    std::printf("n=%d  class=(%s)  y=%s  row=%s\n", graph->order(),
                to_string(graph->tag()).c_str(), graph->y_string().c_str(),
                graph->row_string().c_str());
    bool prim = is_primitive(*graph);
    std::printf("primitive: %s (characterization agrees: %s)\n", prim ? "yes" : "no",
                is_primitive_formula(*graph) == prim ? "yes" : "NO");
    if (!prim) return 0;
    ExponentResult r = exponent_formula(*graph);
    std::printf("exponent (formula): %d  rule %s\n", r.value, rule_name(r.rule));
    std::printf("exponent (walk oracle): %d\n", exponent_oracle_bfs(*graph));
    std::printf("exponent (power oracle): %d\n", exponent_oracle_power(*graph));
    std::cout << "params: " << struct_params_json(*graph).dump() << "\n";
    return 0;
}

int run_census_cmd(int n, const std::string& klass, const CensusOptions& opts,
                   const std::string& format, const std::string& out_path) {
    std::vector<ClassTag> tags =
        klass.empty() ? all_class_tags() : std::vector<ClassTag>{parse_class_tag(klass)};
    std::string out;
    for (ClassTag tag : tags) {
        ExponentCensus c = run_census(n, tag, opts);
        if (format == "json") {
            out += census_json(c).dump(2) + "\n";
        } else if (format == "csv") {
            out += census_csv(c);
        } else {
            out += "n=" + std::to_string(n) + " class (" + to_string(tag) +
                   ")  primitive=" + std::to_string(c.primitive_count) +
                   " imprimitive=" + std::to_string(c.imprimitive_count) +
                   "  histogram: " + histogram_text(c) + "\n";
            for (const Mismatch& mm : c.mismatches)
                out += "  mismatch y=" + std::to_string(mm.y) + "\n";
        }
    }
    write_output(out, out_path);
    return 0;
}

int run_table1(int from, int to, bool check, const CensusOptions& opts) {
    CensusReport report = table1(from, to, opts);
    for (const ExponentCensus& c : report.censuses) {
        std::printf("n=%-2d (%s)  %s\n", c.n, to_string(c.tag).c_str(),
                    histogram_text(c).c_str());
    }
    int bad_cells = 0;
    for (const Comparison& c : report.comparisons)
        if (!c.pass) {
            ++bad_cells;
            std::printf("MISMATCH %s: reference %s, census %s\n", c.name.c_str(),
                        c.expected.c_str(), c.actual.c_str());
        }
    if (check) {
        std::printf("%d mismatching cells\n", bad_cells);
        return bad_cells > 0 ? 1 : 0;
    }
    return 0;
}

int run_verify(int from, int to, const CensusOptions& opts) {
    CensusReport report = verify(from, to, opts);
    int bad_blocks = 0;
    for (const ExponentCensus& c : report.censuses) {
        std::printf("n=%-2d (%s)  %llu matrices, %zu mismatches\n", c.n,
                    to_string(c.tag).c_str(),
                    static_cast<unsigned long long>(c.primitive_count +
                                                    c.imprimitive_count),
                    c.mismatches.size());
        if (c.mismatches.empty()) continue;
        ++bad_blocks;
        for (const Mismatch& mm : c.mismatches) {
            SymCompanionGraph g(c.n, c.tag, mm.y);
            std::cout << "  offending y=" << mm.y << ": "
                      << describe_graph_json(g).dump() << "\n";
        }
    }
    std::printf("%d block(s) with mismatches\n", bad_blocks);
    return std::min(bad_blocks, 125);
}

int run_sets(int n, std::optional<int> k, const CensusOptions& opts) {
    if (k) {
        KStratifiedSet s = exponent_set_10_by_k(n, *k);
        if (!s.covered) {
            std::printf("n=%d k=%d: not covered by any clause (%s)\n", n, *k,
                        s.note.c_str());
            return 0;
        }
        std::printf("n=%d k=%d class (1,0): %s  [%s]\n", n, *k,
                    set_text(s.exponents).c_str(), s.clause.c_str());
        if (!s.note.empty()) std::printf("note: %s\n", s.note.c_str());
        if (n <= opts.cap) {
            std::map<int, std::set<int>> census = k_stratified_sets(n, opts);
            std::printf("census: %s  agree: %s\n", set_text(census[*k]).c_str(),
                        census[*k] == s.exponents ? "yes" : "NO");
        }
        return 0;
    }
    for (ClassTag tag : all_class_tags()) {
        std::set<int> predicted = exponent_set_formula(n, tag);
        std::printf("n=%d class (%s): %s", n, to_string(tag).c_str(),
                    set_text(predicted).c_str());
        if (n <= opts.cap) {
            ExponentCensus c = run_census(n, tag, opts);
            std::set<int> censused;
            for (const auto& [b, count] : c.histogram) censused.insert(b);
            std::printf("  census: %s  agree: %s", set_text(censused).c_str(),
                        censused == predicted ? "yes" : "NO");
        }
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive exponents of symmetric companion matrices"};
    app.require_subcommand(1);

    CensusOptions opts;
    int jobs = 0;
    int cap = 16;

    // exp
    auto* exp_cmd = app.add_subcommand("exp", "exponent of one matrix");
    int exp_n = 0;
    std::string exp_class, exp_y, exp_row;
    bool exp_loop = false, exp_json = false;
    exp_cmd->add_option("--n", exp_n, "matrix order");
    exp_cmd->add_option("--class", exp_class, "class tag A,E");
    exp_cmd->add_option("--y", exp_y, "Y bits, leftmost = a_{n,2}");
    exp_cmd->add_option("--row", exp_row, "full last row a_{n,1}..a_{n,n-1}");
    exp_cmd->add_flag("--loop", exp_loop, "a_{n,n} = 1 (with --row)");
    exp_cmd->add_flag("--json", exp_json, "JSON output");

    // census
    auto* census_cmd = app.add_subcommand("census", "exhaustive class census");
    int census_n = 0;
    std::string census_class, census_format = "table", census_out;
    census_cmd->add_option("--n", census_n, "matrix order")->required();
    census_cmd->add_option("--class", census_class, "restrict to one class A,E");
    census_cmd->add_option("--jobs", jobs, "worker count (0 = auto)");
    census_cmd->add_option("--format", census_format, "json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    census_cmd->add_option("--out", census_out, "write to a file");
    census_cmd->add_option("--max-n", cap, "census size cap");

    // table1
    auto* table_cmd = app.add_subcommand("table1", "small-order count table");
    int from = 3, to = 10;
    bool check = false;
    table_cmd->add_option("--from", from, "first order");
    table_cmd->add_option("--to", to, "last order");
    table_cmd->add_flag("--check", check, "exit nonzero on any reference mismatch");
    table_cmd->add_option("--jobs", jobs, "worker count (0 = auto)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "formula vs oracle harness");
    int vfrom = 4, vto = 12;
    verify_cmd->add_option("--from", vfrom, "first order");
    verify_cmd->add_option("--to", vto, "last order");
    verify_cmd->add_option("--jobs", jobs, "worker count (0 = auto)");
    verify_cmd->add_option("--max-n", cap, "census size cap");

    // sets
    auto* sets_cmd = app.add_subcommand("sets", "exponent sets");
    int sets_n = 0;
    int sets_k = -1;
    sets_cmd->add_option("--n", sets_n, "matrix order")->required();
    sets_cmd->add_option("--k", sets_k, "stratify class (1,0) by zero-run length");

    // comb
    auto* comb_cmd = app.add_subcommand("comb", "string combinatorics");
    comb_cmd->require_subcommand(1);
    auto* comb_f = comb_cmd->add_subcommand("f", "F(n,q,k)");
    int f_n = 0, f_q = 0, f_k = 0;
    comb_f->add_option("--n", f_n)->required();
    comb_f->add_option("--q", f_q)->required();
    comb_f->add_option("--k", f_k)->required();
    auto* comb_t = comb_cmd->add_subcommand("t", "T(r,n)");
    int t_r = 0, t_n = 0;
    comb_t->add_option("--r", t_r)->required();
    comb_t->add_option("--n", t_n)->required();
    auto* comb_count = comb_cmd->add_subcommand("count", "matrices with a given exponent");
    int cnt_n = 0, cnt_b = 0;
    std::string cnt_class;
    comb_count->add_option("--class", cnt_class)->required();
    comb_count->add_option("--n", cnt_n)->required();
    comb_count->add_option("--b", cnt_b)->required();

    CLI11_PARSE(app, argc, argv);

    opts.jobs = jobs;
    opts.cap = std::max(cap, 3);

    try {
        if (*exp_cmd) return run_exp(exp_n, exp_class, exp_y, exp_row, exp_loop, exp_json);
        if (*census_cmd)
            return run_census_cmd(census_n, census_class, opts, census_format, census_out);
        if (*table_cmd) return run_table1(from, to, check, opts);
        if (*verify_cmd) return run_verify(vfrom, vto, opts);
        if (*sets_cmd)
            return run_sets(sets_n, sets_k >= 0 ? std::optional<int>(sets_k) : std::nullopt,
                            opts);
        if (*comb_f) {
            std::printf("%llu\n", static_cast<unsigned long long>(f_count(f_n, f_q, f_k)));
            return 0;
        }
        if (*comb_t) {
            std::printf("%llu\n", static_cast<unsigned long long>(t_count(t_r, t_n)));
            return 0;
        }
        if (*comb_count) {
            ClassTag tag = parse_class_tag(cnt_class);
            if (tag.eps) {
                std::uint64_t value =
                    tag.alpha ? n11_count(cnt_n, cnt_b) : n01_count(cnt_n, cnt_b);
                std::printf("%llu\n", static_cast<unsigned long long>(value));
                return 0;
            }
            if (tag.alpha) {
                if (cnt_b == 2) {
                    std::printf("%llu\n",
                                static_cast<unsigned long long>(n10_lowest(cnt_n)));
                    return 0;
                }
                int top = (cnt_n - 1) % 2 == 0 ? cnt_n - 1 : cnt_n - 2;
                if (cnt_b == top) {
                    if (auto v = n10_extremal(cnt_n)) {
                        std::printf("%llu\n", static_cast<unsigned long long>(*v));
                        return 0;
                    }
                }
                std::printf("no closed form for this (n,b); allowed k: %s\n",
                            set_text(s10_allowed_k(cnt_n, cnt_b)).c_str());
                return 0;
            }
            if (cnt_b == 2 * cnt_n - 4) {
                std::printf("%llu\n", static_cast<unsigned long long>(n00_extremal(cnt_n)));
                return 0;
            }
            if (cnt_b == 4) {
                CountBounds bounds = n00_lowest_bounds(cnt_n);
                std::printf("bounds: %llu..%llu\n",
                            static_cast<unsigned long long>(bounds.lo),
                            static_cast<unsigned long long>(bounds.hi));
                return 0;
            }
            std::printf("no closed form for this (n,b)\n");
            return 0;
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    }
    return 0;
}
