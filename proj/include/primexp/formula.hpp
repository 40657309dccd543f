// formula.hpp — closed-form primitive exponents of symmetric companion
// matrices, dispatched on the class tag, plus the per-class and
// k-stratified exponent sets.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "primexp/companion.hpp"
#include "primexp/structure.hpp"

namespace primexp {

/// Stable tag of the dispatch clause that produced an exponent; these ids
/// appear verbatim in reports and CLI JSON so a census discrepancy
/// localizes to one clause.
enum class Rule {
    T32_1,   // loop class (1,1): 2(t+1), t = floor((m+1)/2)
    T32_2,   // loop class (0,1): 2(t+1), t = max(h-1, floor((m+1)/2))
    T42_1a,  // (1,0), m odd, disjoint associate: m+se+5
    T42_1b,  // (1,0), m odd, sharing associate:  m+se+3
    T42_2a,  // (1,0), m even, mo >= m-se-1, disjoint: mo+se+5
    T42_2b,  // (1,0), m even, mo >= m-se-1, sharing:  mo+se+3
    T42_3,   // (1,0), remaining: m+2
    T53_1a,  // (0,0), m odd, h' >= (m+5)/2: 2h'+se
    T53_1b,  // (0,0), m odd, h' <= (m+3)/2, disjoint: m+se+5
    T53_1c,  // (0,0), m odd, h' <= (m+3)/2, sharing:  m+se+3
    T53_2a,  // (0,0), m even, no qualifying mo, h <= (m-se)/2: m+2
    T53_2b,  // (0,0), m even, h >= (m-se+2)/2, l(c^h) = se+3: 2h+se
    T53_2c,  // (0,0), m even, h >= (m-se+2)/2, l(c^h) != se+3: 2h+se+2
    NOTE51,  // (0,0), m even but mo > m-se-3: odd-case dispatch with m := mo
};

const char* rule_name(Rule rule);

struct ExponentResult {
    int value = 0;  // always even, within [2, 2n-2]
    Rule rule = Rule::T32_1;
};

/// Closed-form exponent of a primitive support graph.  Throws
/// imprimitive_error on imprimitive input.
ExponentResult exponent_formula(const SymCompanionGraph& g);

/// Exponent set of the primitive members of one class, n >= 4:
///   (1,1): {2(t+1) : t in [0, floor((n-2)/2)]}
///   (0,1): {2t : t in [2, n-1]}
///   (1,0): {2t : t in [1, floor((n-1)/2)]}
///   (0,0): {2t : t in [2, n-2]}
std::set<int> exponent_set_formula(int n, ClassTag tag);

/// Exponent set of the (1,0) subclass with longest zero-run exactly k.
struct KStratifiedSet {
    bool covered = false;       // false: no clause applies (reported, not guessed)
    std::set<int> exponents;
    std::string clause;         // which case fired, e.g. "T43-4"
    std::string note;           // non-empty when overlapping clauses disagree
};

/// All five cases for n >= 5, k in [0, n-3], including k = 0 -> {2}.  The
/// single uncovered pair shape (n even with k = n-3) returns covered=false;
/// its subclass holds no primitive matrix at all.
KStratifiedSet exponent_set_10_by_k(int n, int k);

}  // namespace primexp
