// structure.cpp — V1/V2 partition, run decomposition, cycle system and the
// associate-sharing test.
#include "primexp/structure.hpp"

#include <algorithm>

namespace primexp {

namespace {

// Consecutive V2 pairs {i, i+1}, reported by their smaller vertex.
std::vector<int> consecutive_v2_pairs(const std::vector<int>& v2) {
    std::vector<int> firsts;
    for (std::size_t i = 0; i + 1 < v2.size(); ++i)
        if (v2[i + 1] == v2[i] + 1) firsts.push_back(v2[i]);
    return firsts;
}

std::optional<int> smallest_even_cycle_source(const RunDecomposition& runs,
                                              const std::vector<int>& pair_firsts) {
    if (!pair_firsts.empty()) return 0;
    return runs.min_even_length();
}

}  // namespace

int RunDecomposition::max_length() const {
    int m = 0;
    for (const Run& r : runs) m = std::max(m, r.length());
    return m;
}

std::optional<int> RunDecomposition::max_odd_length() const {
    std::optional<int> mo;
    for (const Run& r : runs)
        if (r.length() % 2 == 1 && (!mo || r.length() > *mo)) mo = r.length();
    return mo;
}

std::optional<int> RunDecomposition::min_even_length() const {
    std::optional<int> q;
    for (const Run& r : runs)
        if (r.length() % 2 == 0 && (!q || r.length() < *q)) q = r.length();
    return q;
}

VertexPartition vertex_partition(const SymCompanionGraph& g) {
    VertexPartition p;
    std::uint64_t v2 = g.v2_mask();
    for (int i = 1; i < g.order(); ++i)
        ((v2 >> i) & 1u ? p.v2 : p.v1).push_back(i);
    return p;
}

RunDecomposition decompose_runs(const std::vector<int>& sorted_vertices) {
    RunDecomposition d;
    for (int v : sorted_vertices) {
        if (!d.runs.empty() && d.runs.back().hi + 1 == v)
            d.runs.back().hi = v;
        else
            d.runs.push_back(Run{v, v});
    }
    return d;
}

StructParams struct_params(const SymCompanionGraph& g) {
    if (!is_primitive(g))
        throw structural_error("structural parameters exist only for primitive graphs");

    StructParams p;
    p.partition = vertex_partition(g);
    p.h = p.partition.v2.front();
    for (int v : p.partition.v1)
        if (v >= p.h) p.v1h.push_back(v);
    p.runs = decompose_runs(p.v1h);
    p.m = p.runs.max_length();
    p.mo = p.runs.max_odd_length();
    p.q_even = p.runs.min_even_length();

    std::vector<int> pairs = consecutive_v2_pairs(p.partition.v2);
    p.se = smallest_even_cycle_source(p.runs, pairs);

    // c^h: the cycle whose first vertex is h.  Either the triangle on the
    // pair {h, h+1} or the cycle around the run starting at h+1.
    int n = g.order();
    if (p.h + 1 < n) {
        if (g.has_edge(n, p.h + 1)) {
            p.cycle_at_h_length = 3;
        } else {
            int j = p.h + 1;
            while (j + 1 < n && !g.has_edge(n, j + 1)) ++j;
            p.cycle_at_h_length = (j - p.h) + 3;  // run [h+1, j]
        }
    }
    if (p.se && p.cycle_at_h_length)
        p.h_prime = (*p.cycle_at_h_length == *p.se + 3) ? p.h : p.h + 1;
    return p;
}

CycleSystem cycle_system(const SymCompanionGraph& g, const std::vector<int>& base) {
    CycleSystem cs;
    int n = g.order();
    RunDecomposition runs = decompose_runs(base);
    for (const Run& r : runs.runs) {
        if (r.lo < 2 || r.hi > n - 2 || !g.has_edge(n, r.lo - 1) || !g.has_edge(n, r.hi + 1))
            throw std::invalid_argument("base run is not bounded by V2 vertices");
        cs.cycles.push_back(Cycle{r, r.lo - 1, r.hi + 1, r.length() + 3});
    }
    VertexPartition part = vertex_partition(g);
    std::vector<int> pairs = consecutive_v2_pairs(part.v2);
    for (int i : pairs) cs.cycles.push_back(Cycle{std::nullopt, i, i + 1, 3});

    std::optional<int> se = smallest_even_cycle_source(runs, pairs);
    for (std::size_t d1 = 0; d1 < cs.cycles.size(); ++d1) {
        if (cs.cycles[d1].length % 2 != 0) continue;
        if (!se)
            throw structural_error("even cycle has no odd cycle to associate with");
        // Candidates are exactly the cycles of length se+3; pick the one
        // minimizing the combined length, smallest first vertex on ties.
        std::optional<CombinedCycle> best;
        for (std::size_t d2 = 0; d2 < cs.cycles.size(); ++d2) {
            if (d2 == d1 || cs.cycles[d2].length != *se + 3) continue;
            bool shares = cs.cycles[d2].first == cs.cycles[d1].first ||
                          cs.cycles[d2].first == cs.cycles[d1].last ||
                          cs.cycles[d2].last == cs.cycles[d1].first ||
                          cs.cycles[d2].last == cs.cycles[d1].last;
            CombinedCycle cand;
            cand.d1 = static_cast<int>(d1);
            cand.d2 = static_cast<int>(d2);
            cand.v2_overlap = shares ? 3 : 4;
            cand.length = cs.cycles[d1].length + *se + (shares ? 1 : 3);
            if (!best || cand.length < best->length ||
                (cand.length == best->length &&
                 cs.cycles[cand.d2].first < cs.cycles[best->d2].first))
                best = cand;
        }
        if (!best)
            throw structural_error("even cycle has no odd cycle to associate with");
        cs.combined.push_back(*best);
    }
    return cs;
}

bool association_flag(const SymCompanionGraph& g, const std::vector<int>& base,
                      int target) {
    if (target % 2 != 1)
        throw std::invalid_argument("association target must be an odd run length");
    CycleSystem cs = cycle_system(g, base);
    bool seen = false;
    for (const CombinedCycle& c : cs.combined) {
        const Cycle& d1 = cs.cycles[static_cast<std::size_t>(c.d1)];
        if (!d1.run || d1.run->length() != target) continue;
        seen = true;
        if (c.v2_overlap == 4) return true;
    }
    if (!seen)
        throw std::invalid_argument("no run of the requested target length");
    return false;
}

}  // namespace primexp
