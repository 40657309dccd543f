// structure.hpp — structural parameters of a support graph: the V1/V2
// partition, run decomposition, the cycle system through vertex n, and the
// boundary-sharing test that decides between the +3 and +5 exponent rules.
#pragma once

#include <optional>
#include <vector>

#include "primexp/companion.hpp"

namespace primexp {

/// Last-row positions split by support: v1 = zeros, v2 = nonzeros, both
/// within [1, n-1].  n-1 always lies in v2.
struct VertexPartition {
    std::vector<int> v1;
    std::vector<int> v2;
};

/// Maximal interval [lo, hi] of consecutive vertices.
struct Run {
    int lo = 0;
    int hi = 0;
    int length() const { return hi - lo + 1; }
    friend bool operator==(const Run& a, const Run& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Maximal-interval decomposition of a vertex set; consecutive runs are
/// separated by at least one missing vertex.
struct RunDecomposition {
    std::vector<Run> runs;

    /// m: longest run length, 0 for the empty set.
    int max_length() const;
    /// mo: longest odd run length, absent when every run is even.
    std::optional<int> max_odd_length() const;
    /// q: shortest even run length, absent when every run is odd.
    std::optional<int> min_even_length() const;
};

/// One elementary cycle through vertex n: either the cycle around a run of
/// the base set (length |run|+3, first/last vertex = the bounding V2
/// vertices), or the triangle on a consecutive V2 pair {first, first+1}.
struct Cycle {
    std::optional<Run> run;  // absent for a triangle
    int first = 0;
    int last = 0;
    int length = 0;
    bool is_triangle() const { return !run.has_value(); }
};

/// Even elementary cycle d1 glued with its chosen odd cycle d2 of length
/// se+3.  v2_overlap 3 means d1 and d2 share a V2 vertex and the combined
/// length is l(d1)+se+1; overlap 4 means disjoint, l(d1)+se+3.
struct CombinedCycle {
    int d1 = 0;  // indices into CycleSystem::cycles
    int d2 = 0;
    int length = 0;
    int v2_overlap = 0;
};

struct CycleSystem {
    std::vector<Cycle> cycles;
    std::vector<CombinedCycle> combined;
};

/// The structural quantities driving every exponent formula.  All run
/// parameters refer to v1h = V1 \ [1, h-1], which equals V1 whenever
/// alpha = 1 (then h = 1).
struct StructParams {
    VertexPartition partition;
    int h = 0;                  // min(V2)
    std::vector<int> v1h;
    RunDecomposition runs;      // runs of v1h
    int m = 0;                  // longest run length
    std::optional<int> mo;      // longest odd run length
    std::optional<int> q_even;  // shortest even run length
    // se: 0 when two consecutive vertices lie in V2, else q_even.  Absent
    // exactly when the graph has no odd cycle through two V2 vertices
    // (possible only for loop classes, which never consult it).
    std::optional<int> se;
    std::optional<int> cycle_at_h_length;  // l(c^h), c^h = cycle with first vertex h
    std::optional<int> h_prime;            // h if l(c^h) = se+3, else h+1
};

VertexPartition vertex_partition(const SymCompanionGraph& g);

/// Decomposes a strictly ascending vertex set into maximal runs.
RunDecomposition decompose_runs(const std::vector<int>& sorted_vertices);

/// Extracts all structural parameters.  Throws structural_error when the
/// graph is imprimitive (the parameters only exist on primitive graphs).
StructParams struct_params(const SymCompanionGraph& g);

/// Elementary cycles for the given base set (V1 or V1h): one per run plus
/// one triangle per consecutive V2 pair, plus the combined cycle of every
/// even-length cycle with its chosen associate.  The chosen associate
/// minimizes the combined length (a V2-sharing associate, overlap 3, beats
/// a disjoint one, overlap 4); ties break on the smallest first vertex.
/// Throws structural_error when no odd cycle exists to associate with.
CycleSystem cycle_system(const SymCompanionGraph& g, const std::vector<int>& base);

/// True iff some run of `base` of length exactly `target` has its chosen
/// associate at overlap 4, i.e. no odd structure of length se+3 (run cycle
/// or triangle) touches that run's bounding V2 vertices.  `target` must be
/// odd and realized by some run.
bool association_flag(const SymCompanionGraph& g, const std::vector<int>& base,
                      int target);

}  // namespace primexp
