// fixtures.hpp — named graphs the suites keep coming back to.
#pragma once

#include <string_view>

#include "primexp/companion.hpp"
#include "primexp/oracle.hpp"

namespace primexp::fixtures {

inline SymCompanionGraph make(int n, int alpha, int eps, std::string_view y) {
    return SymCompanionGraph(n, ClassTag{alpha == 1, eps == 1}, parse_y_bits(y));
}

// Vertex n adjacent to everything, exponent 2.
inline SymCompanionGraph fan(int n) {
    return SymCompanionGraph(n, ClassTag{true, false},
                             (std::uint64_t{1} << (n - 3)) - 1);
}

// Path 1-...-n with a loop at n; the extremal symmetric exponent 2n-2.
inline SymCompanionGraph path_with_loop(int n) {
    return SymCompanionGraph(n, ClassTag{false, true}, 0);
}

// Path ending in the triangle {n-2, n-1, n}; the extremal trace-zero
// exponent 2(n-2).
inline SymCompanionGraph lollipop(int n) {
    std::uint64_t y = std::uint64_t{1} << (n - 4);  // V2 = {n-2, n-1}
    return SymCompanionGraph(n, ClassTag{false, false}, y);
}

// V2 = all odd positions; bipartite for even n.
inline SymCompanionGraph alternating_odd_v2(int n) {
    std::uint64_t y = 0;
    for (int j = 3; j <= n - 2; j += 2) y |= std::uint64_t{1} << (j - 2);
    return SymCompanionGraph(n, ClassTag{true, false}, y);
}

// V2 = all even positions; bipartite for odd n.
inline SymCompanionGraph alternating_even_v2(int n) {
    std::uint64_t y = 0;
    for (int j = 2; j <= n - 2; j += 2) y |= std::uint64_t{1} << (j - 2);
    return SymCompanionGraph(n, ClassTag{false, false}, y);
}

// n=12, V1 = {2..5} u {7} u {9,10}: the three-cycle system with m=4, mo=1,
// se=2 and a sharing associate.
inline SymCompanionGraph branched_runs_12() { return make(12, 1, 0, "000010100"); }

// n=11, V1 = {1,3,4,6,8,9}: h=2 with exp(A:2,2)=4 and exp(A:1,1)=6.
inline SymCompanionGraph two_block_11() { return make(11, 0, 0, "10010100"); }

// n=10, V1 = {3,5,7}: the middle length-1 run sees no sharing odd
// structure, so the +5 rule fires (exponent 6).
inline SymCompanionGraph isolated_run_10() { return make(10, 1, 0, "1010101"); }

// Two order-7 loop graphs with exponent 6.
inline SymCompanionGraph exponent_six_a() { return make(7, 0, 1, "1000"); }
inline SymCompanionGraph exponent_six_b() { return make(7, 0, 1, "0100"); }

// Directed n-cycle plus the chord n->2; exponent (n-1)^2 + 1.
inline BooleanMatrix wielandt_digraph(int n) {
    BooleanMatrix m(n);
    for (int i = 1; i < n; ++i) m.set(i, i + 1);
    m.set(n, 1);
    m.set(n, 2);
    return m;
}

}  // namespace primexp::fixtures
