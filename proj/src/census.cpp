// census.cpp — exhaustive censuses, reference-table checks and report
// assembly.
#include "primexp/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "primexp/json_io.hpp"
#include "primexp/oracle.hpp"
#include "primexp/strings.hpp"
#include "primexp/structure.hpp"

namespace primexp {

namespace {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Census of one contiguous Y range; chunks merge in range order, so the
// result is independent of the worker count.
ExponentCensus census_chunk(int n, ClassTag tag, std::uint64_t y_lo, std::uint64_t y_hi,
                            const std::optional<Rule>& perturb) {
    ExponentCensus c;
    c.n = n;
    c.tag = tag;
    for (std::uint64_t y = y_lo; y < y_hi; ++y) {
        SymCompanionGraph g(n, tag, y);
        bool prim = is_primitive(g);
        if (prim != is_primitive_formula(g)) {
            Mismatch mm;
            mm.y = y;
            mm.kind = MismatchKind::primitivity;
            mm.formula_value = is_primitive_formula(g) ? 1 : 0;
            mm.oracle_bfs = prim ? 1 : 0;
            mm.oracle_power = mm.oracle_bfs;
            c.mismatches.push_back(mm);
        }
        if (!prim) {
            c.imprimitive_count += kMultiplicity;
            continue;
        }
        c.primitive_count += kMultiplicity;
        ExponentResult fr = exponent_formula(g);
        if (perturb && fr.rule == *perturb) fr.value += 2;
        int bfs = exponent_oracle_bfs(g);
        int power = exponent_oracle_power(g);
        c.histogram[bfs] += kMultiplicity;
        if (fr.value != bfs || bfs != power) {
            Mismatch mm;
            mm.y = y;
            mm.kind = MismatchKind::exponent;
            mm.formula_value = fr.value;
            mm.rule = fr.rule;
            mm.oracle_bfs = bfs;
            mm.oracle_power = power;
            c.mismatches.push_back(mm);
        }
    }
    return c;
}

std::filesystem::path cache_file(const std::string& dir, int n, ClassTag tag) {
    std::ostringstream name;
    name << "census-n" << n << "-a" << (tag.alpha ? 1 : 0) << "e" << (tag.eps ? 1 : 0)
         << ".json";
    return std::filesystem::path(dir) / name.str();
}

std::optional<ExponentCensus> load_cached(const std::string& dir, int n, ClassTag tag) {
    std::ifstream in(cache_file(dir, n, tag));
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("schema_version").get<int>() != kCensusSchemaVersion) return std::nullopt;
        if (doc.at("rules_revision").get<std::string>() != kRulesRevision) return std::nullopt;
        const auto& body = doc.at("census");
        ExponentCensus c;
        c.n = body.at("n").get<int>();
        c.tag = ClassTag{body.at("class").at("alpha").get<int>() == 1,
                         body.at("class").at("eps").get<int>() == 1};
        if (c.n != n || !(c.tag == tag)) return std::nullopt;
        c.primitive_count = body.at("primitive").get<std::uint64_t>();
        c.imprimitive_count = body.at("imprimitive").get<std::uint64_t>();
        for (const auto& [key, value] : body.at("histogram").items())
            c.histogram[std::stoi(key)] = value.get<std::uint64_t>();
        for (const auto& row : body.at("mismatches")) {
            Mismatch mm;
            mm.y = row.at("y").get<std::uint64_t>();
            mm.kind = row.at("kind").get<std::string>() == "primitivity"
                          ? MismatchKind::primitivity
                          : MismatchKind::exponent;
            mm.formula_value = row.at("formula").get<int>();
            mm.oracle_bfs = row.at("oracle_bfs").get<int>();
            mm.oracle_power = row.at("oracle_power").get<int>();
            for (Rule r : {Rule::T32_1, Rule::T32_2, Rule::T42_1a, Rule::T42_1b,
                           Rule::T42_2a, Rule::T42_2b, Rule::T42_3, Rule::T53_1a,
                           Rule::T53_1b, Rule::T53_1c, Rule::T53_2a, Rule::T53_2b,
                           Rule::T53_2c, Rule::NOTE51})
                if (row.at("rule").get<std::string>() == rule_name(r)) mm.rule = r;
            c.mismatches.push_back(mm);
        }
        return c;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void store_cached(const std::string& dir, const ExponentCensus& c) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    ordered_json doc;
    doc["schema_version"] = kCensusSchemaVersion;
    doc["rules_revision"] = kRulesRevision;
    doc["census"] = census_json(c);
    std::filesystem::path final_path = cache_file(dir, c.n, c.tag);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, final_path, ec);
}

std::string set_to_string(const std::set<int>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : s) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

std::set<int> histogram_keys(const ExponentCensus& c) {
    std::set<int> s;
    for (const auto& [b, count] : c.histogram) s.insert(b);
    return s;
}

void add_comparison(CensusReport& report, std::string name, std::string expected,
                    std::string actual) {
    bool pass = expected == actual;
    report.comparisons.push_back(
        {std::move(name), std::move(expected), std::move(actual), pass});
}

std::uint64_t closed_form_primitive_count(int n, ClassTag tag) {
    std::uint64_t all = std::uint64_t{1} << (n - 2);
    if (tag.eps) return all;
    if (tag.alpha)
        return n % 2 == 1 ? all : all - (std::uint64_t{1} << ((n - 2) / 2));
    return all - (std::uint64_t{1} << ((n - 1) / 2));
}

}  // namespace

int CensusReport::failed_comparisons() const {
    int failed = 0;
    for (const Comparison& c : comparisons)
        if (!c.pass) ++failed;
    return failed;
}

ExponentCensus run_census(int n, ClassTag tag, const CensusOptions& opts) {
    if (n < 3) throw invalid_order_error("census needs n >= 3");
    if (n > opts.cap) {
        std::ostringstream msg;
        msg << "census for n=" << n << " exceeds the cap " << opts.cap << "; it would visit "
            << canonical_class_size(n) << " graphs per class (raise the cap to proceed)";
        throw std::invalid_argument(msg.str());
    }

    const char* env = std::getenv(kCacheEnvVar);
    bool cache = opts.use_cache && env != nullptr && !opts.perturb_rule;
    if (cache)
        if (auto hit = load_cached(env, n, tag)) return *hit;

    std::uint64_t count = canonical_class_size(n);
    int jobs = std::min<std::uint64_t>(resolve_jobs(opts.jobs), count);
    std::vector<std::future<ExponentCensus>> parts;
    parts.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = count * w / jobs;
        std::uint64_t hi = count * (w + 1) / jobs;
        parts.push_back(std::async(std::launch::async, census_chunk, n, tag, lo, hi,
                                   opts.perturb_rule));
    }

    ExponentCensus merged;
    merged.n = n;
    merged.tag = tag;
    for (auto& part : parts) {
        ExponentCensus c = part.get();
        merged.primitive_count += c.primitive_count;
        merged.imprimitive_count += c.imprimitive_count;
        for (const auto& [b, cnt] : c.histogram) merged.histogram[b] += cnt;
        merged.mismatches.insert(merged.mismatches.end(), c.mismatches.begin(),
                                 c.mismatches.end());
    }

    if (cache) store_cached(env, merged);
    return merged;
}

const std::vector<ReferenceCell>& reference_table() {
    static const std::vector<ReferenceCell> cells = {
        {3, 1, 1, 2, 2},
        {3, 0, 1, 4, 2},
        {3, 1, 0, 2, 2},
        {4, 1, 1, 2, 2},   {4, 1, 1, 4, 2},
        {4, 0, 1, 4, 2},   {4, 0, 1, 6, 2},
        {4, 1, 0, 2, 2},
        {4, 0, 0, 4, 2},
        {5, 1, 1, 2, 2},   {5, 1, 1, 4, 6},
        {5, 0, 1, 4, 4},   {5, 0, 1, 6, 2},   {5, 0, 1, 8, 2},
        {5, 1, 0, 2, 2},   {5, 1, 0, 4, 6},
        {5, 0, 0, 4, 2},   {5, 0, 0, 6, 2},
        {6, 1, 1, 2, 2},   {6, 1, 1, 4, 12},  {6, 1, 1, 6, 2},
        {6, 0, 1, 4, 8},   {6, 0, 1, 6, 4},   {6, 0, 1, 8, 2},   {6, 0, 1, 10, 2},
        {6, 1, 0, 2, 2},   {6, 1, 0, 4, 10},
        {6, 0, 0, 4, 4},   {6, 0, 0, 6, 6},   {6, 0, 0, 8, 2},
        {7, 1, 1, 2, 2},   {7, 1, 1, 4, 24},  {7, 1, 1, 6, 6},
        {7, 0, 1, 4, 14},  {7, 0, 1, 6, 10},  {7, 0, 1, 8, 4},   {7, 0, 1, 10, 2},
        {7, 0, 1, 12, 2},
        {7, 1, 0, 2, 2},   {7, 1, 0, 4, 16},  {7, 1, 0, 6, 14},
        {7, 0, 0, 4, 8},   {7, 0, 0, 6, 8},   {7, 0, 0, 8, 6},   {7, 0, 0, 10, 2},
        {8, 1, 1, 2, 2},   {8, 1, 1, 4, 46},  {8, 1, 1, 6, 14},  {8, 1, 1, 8, 2},
        {8, 0, 1, 4, 26},  {8, 0, 1, 6, 22},  {8, 0, 1, 8, 8},   {8, 0, 1, 10, 4},
        {8, 0, 1, 12, 2},  {8, 0, 1, 14, 2},
        {8, 1, 0, 2, 2},   {8, 1, 0, 4, 36},  {8, 1, 0, 6, 18},
        {8, 0, 0, 4, 12},  {8, 0, 0, 6, 24},  {8, 0, 0, 8, 10},  {8, 0, 0, 10, 6},
        {8, 0, 0, 12, 2},
        {9, 1, 1, 2, 2},   {9, 1, 1, 4, 86},  {9, 1, 1, 6, 34},  {9, 1, 1, 8, 6},
        {9, 0, 1, 4, 48},  {9, 0, 1, 6, 46},  {9, 0, 1, 8, 18},  {9, 0, 1, 10, 8},
        {9, 0, 1, 12, 4},  {9, 0, 1, 14, 2},  {9, 0, 1, 16, 2},
        {9, 1, 0, 2, 2},   {9, 1, 0, 4, 66},  {9, 1, 0, 6, 38},  {9, 1, 0, 8, 22},
        {9, 0, 0, 4, 22},  {9, 0, 0, 6, 50},  {9, 0, 0, 8, 20},  {9, 0, 0, 10, 10},
        {9, 0, 0, 12, 6},  {9, 0, 0, 14, 4},
        {10, 1, 1, 2, 2},  {10, 1, 1, 4, 160}, {10, 1, 1, 6, 78}, {10, 1, 1, 8, 14},
        {10, 1, 1, 10, 2},
        {10, 0, 1, 4, 88}, {10, 0, 1, 6, 96},  {10, 0, 1, 8, 40}, {10, 0, 1, 10, 16},
        {10, 0, 1, 12, 8}, {10, 0, 1, 14, 4},  {10, 0, 1, 16, 2}, {10, 0, 1, 18, 2},
        {10, 1, 0, 2, 2},  {10, 1, 0, 4, 110}, {10, 1, 0, 6, 110}, {10, 1, 0, 8, 18},
        {10, 0, 0, 4, 42}, {10, 0, 0, 6, 94},  {10, 0, 0, 8, 60}, {10, 0, 0, 10, 24},
        {10, 0, 0, 12, 12}, {10, 0, 0, 14, 6}, {10, 0, 0, 16, 2},
    };
    return cells;
}

CensusReport table1(int from, int to, const CensusOptions& opts) {
    CensusReport report;
    for (int n = from; n <= to; ++n)
        for (ClassTag tag : all_class_tags())
            report.censuses.push_back(run_census(n, tag, opts));

    auto census_at = [&](int n, int alpha, int eps) -> const ExponentCensus* {
        for (const ExponentCensus& c : report.censuses)
            if (c.n == n && c.tag.alpha == (alpha == 1) && c.tag.eps == (eps == 1))
                return &c;
        return nullptr;
    };

    // Cell-for-cell: every reference cell in range must match, and the
    // census must not have extra nonzero cells where the reference row is
    // present.
    for (int n = std::max(from, 3); n <= std::min(to, 10); ++n) {
        for (ClassTag tag : all_class_tags()) {
            const ExponentCensus* c = census_at(n, tag.alpha ? 1 : 0, tag.eps ? 1 : 0);
            std::map<int, std::uint64_t> expected;
            for (const ReferenceCell& cell : reference_table())
                if (cell.n == n && (cell.alpha == 1) == tag.alpha &&
                    (cell.eps == 1) == tag.eps)
                    expected[cell.b] = cell.count;
            std::set<int> bs;
            for (const auto& [b, cnt] : expected) bs.insert(b);
            for (const auto& [b, cnt] : c->histogram) bs.insert(b);
            for (int b : bs) {
                std::uint64_t want = expected.count(b) ? expected.at(b) : 0;
                std::uint64_t got = c->histogram.count(b) ? c->histogram.at(b) : 0;
                std::ostringstream name;
                name << "reference n=" << n << " class (" << to_string(tag) << ") b=" << b;
                add_comparison(report, name.str(), std::to_string(want),
                               std::to_string(got));
            }
        }
    }
    return report;
}

CensusReport verify(int from, int to, const CensusOptions& opts) {
    CensusReport report;
    for (int n = from; n <= to; ++n) {
        for (ClassTag tag : all_class_tags()) {
            ExponentCensus c = run_census(n, tag, opts);
            std::ostringstream name;
            name << "mismatches n=" << n << " class (" << to_string(tag) << ")";
            add_comparison(report, name.str(), "0", std::to_string(c.mismatches.size()));
            report.censuses.push_back(std::move(c));
        }
    }
    return report;
}

std::map<int, std::set<int>> k_stratified_sets(int n, const CensusOptions& opts) {
    if (n > opts.cap)
        throw std::invalid_argument("stratified census exceeds the cap");
    std::map<int, std::set<int>> sets;
    for (int k = 0; k <= n - 3; ++k) sets[k];
    ClassTag tag{true, false};
    for (std::uint64_t y = 0; y < canonical_class_size(n); ++y) {
        SymCompanionGraph g(n, tag, y);
        if (!is_primitive(g)) continue;
        VertexPartition part = vertex_partition(g);
        int k = decompose_runs(part.v1).max_length();
        sets[k].insert(exponent_oracle_bfs(g));
    }
    return sets;
}

CensusReport exponent_sets_report(int from, int to, const CensusOptions& opts) {
    CensusReport report;
    for (int n = from; n <= to; ++n) {
        for (ClassTag tag : all_class_tags()) {
            ExponentCensus c = run_census(n, tag, opts);
            std::ostringstream name;
            name << "exponent set n=" << n << " class (" << to_string(tag) << ")";
            add_comparison(report, name.str(), set_to_string(exponent_set_formula(n, tag)),
                           set_to_string(histogram_keys(c)));
            report.censuses.push_back(std::move(c));
        }
        if (n < 5) continue;
        std::map<int, std::set<int>> strata = k_stratified_sets(n, opts);
        for (const auto& [k, censused] : strata) {
            KStratifiedSet predicted = exponent_set_10_by_k(n, k);
            std::ostringstream name;
            name << "exponent set n=" << n << " class (1,0) k=" << k;
            if (!predicted.covered) {
                // The uncovered shape holds no primitive matrix; record that.
                name << " (uncovered)";
                add_comparison(report, name.str(), "{}", set_to_string(censused));
                continue;
            }
            add_comparison(report, name.str(), set_to_string(predicted.exponents),
                           set_to_string(censused));
        }
    }
    return report;
}

// Referenced by the acceptance suite via strings.hpp as well; kept here so
// the report and the formula share one source of truth.
std::uint64_t expected_primitive_count(int n, ClassTag tag) {
    return closed_form_primitive_count(n, tag);
}

}  // namespace primexp
