// strings.hpp — run-length string combinatorics: F_n(q,k), T_r(n), the
// closed-form matrix counts per exponent for the loop classes, and the
// extremal counts and bounds for the loop-free ones.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace primexp {

/// F(n,q,k): binary strings of length n with q zeros whose longest zero run
/// is exactly k.  Zero outside n >= q >= k >= 0 and for n < 0.
std::uint64_t f_count(int n, int q, int k);

/// T(r,n): binary strings of length n without r consecutive ones, r >= 2.
/// Throws std::invalid_argument for r < 2.
std::uint64_t t_count(int r, int n);

/// Memoized F/T tables for bulk use; build once, then share read-only.
class RunCountTable {
public:
    explicit RunCountTable(int max_n);
    std::uint64_t f(int n, int q, int k) const;
    std::uint64_t t(int r, int n) const { return t_count(r, n); }

private:
    int max_n_;
    std::vector<std::uint64_t> f_;  // (n, q, k) flattened
};

/// Number of class-(1,1) matrices of order n with exponent b.
std::uint64_t n11_count(int n, int b);

/// Number of class-(0,1) matrices of order n with exponent b.
std::uint64_t n01_count(int n, int b);

/// Zero-run lengths k that can realize exponent b in class (1,0); the
/// refinement that sharpens the F-sum upper bound on the count.  Even
/// orders are characterized exactly, as are odd orders inside the window
/// [b+5, 2b-5]; other odd orders fall back to the base containment
/// [(b-4)/2, b-2].
std::set<int> s10_allowed_k(int n, int b);

/// Count at the top exponent max[2,n-1]^e of class (1,0): 2(2n-7) for odd
/// n >= 5, 18 for even n >= 8, and 10 for n = 6; absent otherwise.
std::optional<std::uint64_t> n10_extremal(int n);

/// Count at the bottom exponent 2 of class (1,0): always 2 (n >= 3).
std::uint64_t n10_lowest(int n);

/// Count at the top exponent 2n-4 of class (0,0): always 2 (n >= 4).
std::uint64_t n00_extremal(int n);

struct CountBounds {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// Proven bracket for the count at the bottom exponent 4 of class (0,0),
/// n >= 5.
CountBounds n00_lowest_bounds(int n);

}  // namespace primexp
