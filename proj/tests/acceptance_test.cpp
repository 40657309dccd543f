// acceptance_test.cpp — the acceptance suite: one line per criterion, exit
// code = number of failed criteria.  `--criterion N` runs a single one.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "primexp/census.hpp"
#include "primexp/formula.hpp"
#include "primexp/json_io.hpp"
#include "primexp/oracle.hpp"
#include "primexp/strings.hpp"

using namespace primexp;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& detail) {
        if (ok) return;
        pass = false;
        details.push_back(detail);
    }
};

CensusOptions options() {
    CensusOptions opts;
    opts.use_cache = false;
    opts.jobs = 8;
    return opts;
}

std::string fmt_tag(ClassTag tag) { return "(" + to_string(tag) + ")"; }

// [1] Every matrix in every class, n in [4,14]: closed form and both
// oracles agree exactly; the two primitivity tests agree as well.
Outcome criterion_equivalence() {
    Outcome out;
    std::uint64_t graphs = 0;
    CensusReport report = verify(4, 14, options());
    for (const ExponentCensus& c : report.censuses) {
        graphs += canonical_class_size(c.n);
        for (const Mismatch& mm : c.mismatches) {
            std::ostringstream msg;
            msg << "n=" << c.n << " class " << fmt_tag(c.tag) << " y=" << mm.y
                << (mm.kind == MismatchKind::primitivity ? " primitivity " : " exponent ")
                << "formula=" << mm.formula_value << " (" << rule_name(mm.rule) << ")"
                << " bfs=" << mm.oracle_bfs << " power=" << mm.oracle_power;
            out.require(false, msg.str());
        }
    }
    out.details.insert(out.details.begin(),
                       std::to_string(graphs) + " canonical graphs checked");
    return out;
}

// [2] Census primitive totals equal the closed-form counts, n in [4,16].
Outcome criterion_counts() {
    Outcome out;
    for (int n = 4; n <= 16; ++n)
        for (ClassTag tag : all_class_tags()) {
            ExponentCensus c = run_census(n, tag, options());
            std::ostringstream msg;
            msg << "n=" << n << " class " << fmt_tag(tag) << ": census "
                << c.primitive_count << " vs closed form "
                << expected_primitive_count(n, tag);
            out.require(c.primitive_count == expected_primitive_count(n, tag), msg.str());
        }
    return out;
}

// [3] The reference table for n in [3,10], cell for cell.
Outcome criterion_reference_table() {
    Outcome out;
    CensusReport report = table1(3, 10, options());
    int cells = 0;
    for (const Comparison& c : report.comparisons) {
        ++cells;
        out.require(c.pass,
                    c.name + ": reference " + c.expected + ", census " + c.actual);
    }
    out.details.insert(out.details.begin(), std::to_string(cells) + " cells compared");

    // Context for any failure: reference rows against the closed-form class
    // sizes and the closed-form extremal count.
    if (!out.pass) {
        std::map<std::pair<int, std::string>, std::uint64_t> row_totals;
        for (const ReferenceCell& cell : reference_table()) {
            row_totals[{cell.n, std::to_string(cell.alpha) + "," +
                                    std::to_string(cell.eps)}] += cell.count;
            if (cell.alpha == 0 && cell.eps == 0 && cell.b == 2 * cell.n - 4 &&
                cell.count != n00_extremal(cell.n)) {
                std::ostringstream msg;
                msg << "note: reference n=" << cell.n << " class (0,0) claims "
                    << cell.count << " matrices at the top exponent " << cell.b
                    << " but the closed form proves exactly " << n00_extremal(cell.n);
                out.details.push_back(msg.str());
            }
        }
        for (const auto& [key, total] : row_totals) {
            ClassTag tag = parse_class_tag(key.second);
            std::uint64_t expected = expected_primitive_count(key.first, tag);
            if (total != expected) {
                std::ostringstream msg;
                msg << "note: reference row n=" << key.first << " class " << fmt_tag(tag)
                    << " totals " << total << " but the class has " << expected
                    << " primitive matrices; the reference row is internally inconsistent";
                out.details.push_back(msg.str());
            }
        }
    }
    return out;
}

// [4] Census-derived exponent sets equal the per-class formulas for
// n in [4,16] and the k-stratified clauses for n in [5,16].
Outcome criterion_exponent_sets() {
    Outcome out;
    CensusReport report = exponent_sets_report(4, 16, options());
    int rows = 0;
    for (const Comparison& c : report.comparisons) {
        ++rows;
        out.require(c.pass, c.name + ": formula " + c.expected + ", census " + c.actual);
    }
    out.details.insert(out.details.begin(), std::to_string(rows) + " set comparisons");

    // The union over k must reassemble the class set.
    for (int n = 5; n <= 16; ++n) {
        std::set<int> whole;
        for (const auto& [k, s] : k_stratified_sets(n, options()))
            whole.insert(s.begin(), s.end());
        std::ostringstream msg;
        msg << "n=" << n << ": union over k differs from the class exponent set";
        out.require(whole == exponent_set_formula(n, ClassTag{true, false}), msg.str());
    }
    return out;
}

// [5] Extremal counts: bottom and top of (1,0), top of (0,0), and the
// bracket for the bottom of (0,0).
Outcome criterion_extremal_counts() {
    Outcome out;
    auto histogram_at = [](const ExponentCensus& c, int b) -> std::uint64_t {
        auto it = c.histogram.find(b);
        return it == c.histogram.end() ? 0 : it->second;
    };
    for (int n = 4; n <= 16; ++n) {
        ExponentCensus c10 = run_census(n, ClassTag{true, false}, options());
        std::ostringstream low;
        low << "n=" << n << " class (1,0) count at 2: " << histogram_at(c10, 2);
        out.require(histogram_at(c10, 2) == n10_lowest(n), low.str());

        int top = (n - 1) % 2 == 0 ? n - 1 : n - 2;
        if (auto expected = n10_extremal(n)) {
            std::ostringstream msg;
            msg << "n=" << n << " class (1,0) count at " << top << ": census "
                << histogram_at(c10, top) << " vs " << *expected;
            out.require(histogram_at(c10, top) == *expected, msg.str());
        }

        ExponentCensus c00 = run_census(n, ClassTag{false, false}, options());
        std::ostringstream topmsg;
        topmsg << "n=" << n << " class (0,0) count at " << 2 * n - 4 << ": "
               << histogram_at(c00, 2 * n - 4);
        out.require(histogram_at(c00, 2 * n - 4) == n00_extremal(n), topmsg.str());

        if (n >= 5 && n <= 14) {
            CountBounds bounds = n00_lowest_bounds(n);
            std::uint64_t at4 = histogram_at(c00, 4);
            std::ostringstream msg;
            msg << "n=" << n << " class (0,0) count at 4: " << at4 << " outside ["
                << bounds.lo << "," << bounds.hi << "]";
            out.require(bounds.lo <= at4 && at4 <= bounds.hi, msg.str());
        }
    }
    return out;
}

// [6] String combinatorics: totals, brute force, pinned values, and the
// closed-form counts against the census histograms.
Outcome criterion_combinatorics() {
    Outcome out;
    for (int n = 0; n <= 16; ++n) {
        std::uint64_t total = 0;
        std::map<std::pair<int, int>, std::uint64_t> brute;
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
            int zeros = 0, run = 0, longest = 0;
            for (int i = 0; i < n; ++i) {
                if ((word >> i) & 1u) {
                    ++zeros;
                    ++run;
                    if (run > longest) longest = run;
                } else {
                    run = 0;
                }
            }
            ++brute[{zeros, longest}];
        }
        for (int q = 0; q <= n; ++q)
            for (int k = 0; k <= q; ++k) {
                std::uint64_t direct = f_count(n, q, k);
                total += direct;
                auto it = brute.find({q, k});
                std::uint64_t expected = it == brute.end() ? 0 : it->second;
                std::ostringstream msg;
                msg << "F(" << n << "," << q << "," << k << ") = " << direct
                    << " but enumeration gives " << expected;
                out.require(direct == expected, msg.str());
            }
        std::ostringstream msg;
        msg << "F totals for n=" << n << " miss 2^n";
        out.require(total == (std::uint64_t{1} << n), msg.str());
    }

    out.require(t_count(2, 3) == 5, "T(2,3) != 5");
    out.require(f_count(6, 4, 2) == 6, "F(6,4,2) != 6");
    for (int n = 1; n <= 16; ++n)
        for (int k = 1; k <= n; ++k)
            out.require(f_count(n, k, k) == static_cast<std::uint64_t>(n - k + 1),
                        "F(n,k,k) != n-k+1");
    out.require(n01_count(7, 6) == 10, "count at exponent 6, order 7, class (0,1)");

    for (int n = 4; n <= 12; ++n) {
        ExponentCensus c11 = run_census(n, ClassTag{true, true}, options());
        ExponentCensus c01 = run_census(n, ClassTag{false, true}, options());
        for (int b = 2; b <= 2 * n - 2; b += 2) {
            std::uint64_t census11 =
                c11.histogram.count(b) ? c11.histogram.at(b) : 0;
            std::uint64_t census01 =
                c01.histogram.count(b) ? c01.histogram.at(b) : 0;
            std::ostringstream m11, m01;
            m11 << "n=" << n << " b=" << b << " class (1,1): closed form "
                << n11_count(n, b) << " vs census " << census11;
            m01 << "n=" << n << " b=" << b << " class (0,1): closed form "
                << n01_count(n, b) << " vs census " << census01;
            out.require(n11_count(n, b) == census11, m11.str());
            out.require(n01_count(n, b) == census01, m01.str());
        }
    }
    return out;
}

// [7] Named fixtures.
Outcome criterion_fixtures() {
    Outcome out;
    out.require(exponent_formula(fixtures::fan(8)).value == 2 &&
                    exponent_oracle_bfs(fixtures::fan(8)) == 2,
                "fan of order 8");
    for (int n = 4; n <= 12; ++n) {
        std::ostringstream path_msg, lolli_msg;
        path_msg << "path with loop, n=" << n;
        lolli_msg << "lollipop, n=" << n;
        out.require(exponent_formula(fixtures::path_with_loop(n)).value == 2 * n - 2 &&
                        exponent_oracle_bfs(fixtures::path_with_loop(n)) == 2 * n - 2,
                    path_msg.str());
        out.require(exponent_formula(fixtures::lollipop(n)).value == 2 * (n - 2) &&
                        exponent_oracle_bfs(fixtures::lollipop(n)) == 2 * (n - 2),
                    lolli_msg.str());
    }
    out.require(!is_primitive(fixtures::alternating_odd_v2(10)) &&
                    !is_primitive_formula(fixtures::alternating_odd_v2(10)),
                "alternating graph of order 10 must be imprimitive");
    out.require(!is_primitive(fixtures::alternating_even_v2(11)) &&
                    !is_primitive_formula(fixtures::alternating_even_v2(11)),
                "alternating graph of order 11 must be imprimitive");
    out.require(exp_pair(fixtures::two_block_11(), 2, 2) == 4,
                "two-block graph: exp at (2,2)");
    out.require(exp_pair(fixtures::two_block_11(), 1, 1) == 6,
                "two-block graph: exp at (1,1)");
    out.require(exponent_oracle_bfs(fixtures::exponent_six_a()) == 6 &&
                    exponent_formula(fixtures::exponent_six_a()).value == 6,
                "first order-7 exponent-6 fixture");
    out.require(exponent_oracle_bfs(fixtures::exponent_six_b()) == 6 &&
                    exponent_formula(fixtures::exponent_six_b()).value == 6,
                "second order-7 exponent-6 fixture");
    return out;
}

// [8] Byte-identical census JSON for worker counts 1, 4 and max.
Outcome criterion_determinism() {
    Outcome out;
    for (int n : {6, 10, 12})
        for (ClassTag tag : all_class_tags()) {
            std::string reference;
            for (int jobs : {1, 4, 0}) {  // 0 resolves to the hardware maximum
                CensusOptions opts = options();
                opts.jobs = jobs;
                std::string dump = census_json(run_census(n, tag, opts)).dump(2);
                if (reference.empty()) reference = dump;
                std::ostringstream msg;
                msg << "n=" << n << " class " << fmt_tag(tag) << " jobs=" << jobs
                    << " changed the serialized census";
                out.require(dump == reference, msg.str());
            }
        }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "formula equals both oracles, n=4..14, all classes", criterion_equivalence},
        {2, "primitive totals equal the closed forms, n=4..16", criterion_counts},
        {3, "reference table reproduced cell-for-cell, n=3..10", criterion_reference_table},
        {4, "exponent sets equal the formulas, n=4..16", criterion_exponent_sets},
        {5, "extremal counts and bounds, n=4..16", criterion_extremal_counts},
        {6, "string combinatorics and closed-form counts", criterion_combinatorics},
        {7, "named fixtures", criterion_fixtures},
        {8, "census JSON is deterministic across worker counts", criterion_determinism},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[i + 1]);

    int failed = 0;
    for (const Criterion& criterion : criteria()) {
        if (only != 0 && criterion.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = criterion.run();
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%d] %-55s %s  (%.1fs)\n", criterion.id, criterion.name,
                    outcome.pass ? "PASS" : "FAIL", seconds);
        int shown = 0;
        for (const std::string& detail : outcome.details) {
            if (!outcome.pass || detail.rfind("note:", 0) == 0 || shown == 0)
                std::printf("      %s\n", detail.c_str());
            if (++shown >= 12 && outcome.details.size() > 13) {
                std::printf("      ... %zu further lines\n", outcome.details.size() - shown);
                break;
            }
        }
        if (!outcome.pass) ++failed;
    }
    return failed;
}
