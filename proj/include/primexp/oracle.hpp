// oracle.hpp — brute-force exponent oracles over the Boolean semiring.
// Two independent routes: parity-constrained shortest walks (double-cover
// breadth-first search) and iterated Boolean matrix powering.  These are
// the ground truth the closed forms are checked against.
#pragma once

#include <cstdint>
#include <vector>

#include "primexp/companion.hpp"

namespace primexp {

/// Universal exponent cap for a primitive matrix of order n: (n-1)^2 + 1.
constexpr int wielandt_bound(int n) { return (n - 1) * (n - 1) + 1; }

/// Square 0/1 matrix with bit-packed rows (1-based vertex bits).
class BooleanMatrix {
public:
    explicit BooleanMatrix(int n);
    static BooleanMatrix from_graph(const SymCompanionGraph& g);

    int order() const { return n_; }
    void set(int i, int j) { rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j; }
    bool get(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1u; }
    std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    bool symmetric() const;
    bool all_positive() const;

    friend BooleanMatrix multiply(const BooleanMatrix& a, const BooleanMatrix& b);

private:
    int n_;
    std::vector<std::uint64_t> rows_;  // index 0 unused
};

/// Shortest even/odd walk lengths between all vertex pairs; -1 marks
/// "no walk of that parity".  Loops count as length-1 steps, and the empty
/// walk makes even(i,i) = 0.
struct ParityDistances {
    int n = 0;
    std::vector<int> even;  // n*n flattened, (i-1)*n + (j-1)
    std::vector<int> odd;

    int even_at(int i, int j) const { return even[idx(i, j)]; }
    int odd_at(int i, int j) const { return odd[idx(i, j)]; }

    /// exp(A:i,j) = max(even, odd) - 1.  Throws imprimitive_error when a
    /// parity is unreachable.
    int exp_pair(int i, int j) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j - 1);
    }
};

/// Breadth-first search over the double cover (vertex, walk parity).
ParityDistances parity_distances(const BooleanMatrix& m);

/// exp(A:i,j) from a single-source parity search.  Symmetric input only.
int exp_pair(const BooleanMatrix& m, int i, int j);
int exp_pair(const SymCompanionGraph& g, int i, int j);

/// exp(A) as the maximum of exp(A:i,j) over all pairs.  Symmetric input only.
int exponent_oracle_bfs(const BooleanMatrix& m);
int exponent_oracle_bfs(const SymCompanionGraph& g);

/// exp(A) by repeated Boolean multiplication with early exit; certifies
/// minimality by observing A^{k-1} still has a zero entry.  Works for
/// directed inputs too.  Throws imprimitive_error when no power turns
/// all-positive by the Wielandt cap.
int exponent_oracle_power(const BooleanMatrix& m);
int exponent_oracle_power(const SymCompanionGraph& g);

}  // namespace primexp
