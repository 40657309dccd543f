// companion.hpp — symmetric companion support graphs: construction, class
// enumeration and primitivity tests.
//
// A 0/1 companion matrix of order n is fixed except for its last row
// [a1 ... an]; the symmetrized matrix A + A^T collapses (entries 2 become
// support bit 1) to a graph on vertices 1..n that contains the path
// 1-2-...-n, extra edges {n,i} for every nonzero a_i, and a loop at n iff
// an = 1.  Each support graph stands for exactly two matrices, because
// a_{n,n-1} may be 1 or 2.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primexp {

// Adjacency rows are single 64-bit masks with 1-based vertex bits.
inline constexpr int kMaxOrder = 62;

// Matrices per canonical support graph (a_{n,n-1} is 1 or 2).
inline constexpr int kMultiplicity = 2;

class invalid_order_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural parameter was requested that the graph does not define
// (equivalently for loop-free classes: the graph is imprimitive).
class structural_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class imprimitive_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Class tag (alpha, eps) = (a_{n,1}, a_{n,n}) of the last row.
struct ClassTag {
    bool alpha = false;
    bool eps = false;

    friend bool operator==(ClassTag a, ClassTag b) {
        return a.alpha == b.alpha && a.eps == b.eps;
    }
    friend bool operator<(ClassTag a, ClassTag b) {
        return std::pair(a.alpha, a.eps) < std::pair(b.alpha, b.eps);
    }
};

/// All four tags, in enumeration order (1,1), (0,1), (1,0), (0,0).
const std::vector<ClassTag>& all_class_tags();

/// Parses "A,E" with A,E in {0,1}.
ClassTag parse_class_tag(std::string_view text);
std::string to_string(ClassTag tag);

/// Last row of a companion matrix: [alpha, Y, heavy, eps] with Y of length
/// n-3 and heavy in {1,2}.  Bit j of `y` is a_{n, j+2}.
struct LastRowSpec {
    int n = 0;
    ClassTag tag;
    std::uint64_t y = 0;
    int heavy = 1;
};

/// Canonical support graph of a symmetric companion matrix.
///
/// Invariants: symmetric; contains the path 1-2-...-n; the only possible
/// loop sits at vertex n (present iff eps); row n restricted to [1,n-1]
/// equals [alpha, Y, 1].
class SymCompanionGraph {
public:
    SymCompanionGraph(int n, ClassTag tag, std::uint64_t y);

    int order() const { return n_; }
    ClassTag tag() const { return tag_; }

    /// Neighbor mask of vertex v (1-based bits).
    std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return (row(u) >> v) & 1u; }

    /// Mask of V2 = last-row support positions within [1, n-1].
    std::uint64_t v2_mask() const;

    /// Y as an (n-3)-bit integer, bit 0 = a_{n,2}.
    std::uint64_t y_bits() const;
    /// Y as text, leftmost character = a_{n,2}.
    std::string y_string() const;
    /// Last-row text form [a_{n,1} .. a_{n,n-1}] used by the CLI.
    std::string row_string() const;

    friend bool operator==(const SymCompanionGraph& a, const SymCompanionGraph& b) {
        return a.n_ == b.n_ && a.tag_ == b.tag_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    ClassTag tag_;
    std::vector<std::uint64_t> adj_;  // index 0 unused
};

/// Builds the support graph of F(A) for the given last row; heavy is
/// forgotten by the support collapse.  Throws invalid_order_error for n < 3.
SymCompanionGraph build_graph(const LastRowSpec& spec);

/// Parses the CLI last-row form: a {0,1} string [a_{n,1} .. a_{n,n-1}] with
/// a_{n,n-1} = 1 required, plus the loop flag for a_{n,n}.
SymCompanionGraph graph_from_row(std::string_view row, bool loop);

/// Parses Y text (leftmost character = a_{n,2}) into its bit form.
std::uint64_t parse_y_bits(std::string_view text);

/// Number of canonical support graphs in one class: 2^{n-3}.
std::uint64_t canonical_class_size(int n);

struct ClassMember {
    SymCompanionGraph graph;
    int multiplicity;  // always kMultiplicity
};

/// All canonical graphs of the class, ascending by Y.  Each member counts
/// kMultiplicity matrices, so the class totals 2^{n-2}.
std::vector<ClassMember> enumerate_class(int n, ClassTag tag);

/// Reference primitivity test: connected (always true here) and
/// non-bipartite, by two-coloring traversal.  A loop forces true.
bool is_primitive(const SymCompanionGraph& g);

/// Parity-subset characterization of primitivity, per class:
///   (alpha,1): always primitive;
///   (1,0):     imprimitive iff n even and V2 \ {1,n-1} within {3,5,...,n-3};
///   (0,0):     imprimitive iff V2 \ {n-1} within {3,5,...,n-3} (n even)
///              or within {2,4,...,n-3} (n odd).
bool is_primitive_formula(const SymCompanionGraph& g);

}  // namespace primexp
