// strings.cpp — run-length string counts and the closed-form matrix counts.
#include "primexp/strings.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace primexp {

namespace {

// Strings of length n with q zeros and every zero run <= k: distribute the
// q zeros over the n-q+1 gaps between ones, each gap capped at k.
std::uint64_t f_count_at_most(int n, int q, int k) {
    if (n < 0 || q < 0 || q > n || k < 0) return 0;
    if (q == 0) return 1;
    int gaps = n - q + 1;
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(q) + 1, 0);
    dp[0] = 1;
    for (int gap = 0; gap < gaps; ++gap) {
        std::vector<std::uint64_t> next(dp.size(), 0);
        for (int used = 0; used <= q; ++used) {
            if (dp[static_cast<std::size_t>(used)] == 0) continue;
            for (int take = 0; take <= k && used + take <= q; ++take)
                next[static_cast<std::size_t>(used + take)] +=
                    dp[static_cast<std::size_t>(used)];
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(q)];
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

}  // namespace

std::uint64_t f_count(int n, int q, int k) {
    if (n < 0 || q < 0 || k < 0 || q > n || k > q) return 0;
    return f_count_at_most(n, q, k) - (k > 0 ? f_count_at_most(n, q, k - 1) : 0);
}

std::uint64_t t_count(int r, int n) {
    if (r < 2) throw std::invalid_argument("run bound r must be at least 2");
    if (n < 0) return 0;
    // First zero after i < r ones splits the string; below r the bound is void.
    std::vector<std::uint64_t> t(static_cast<std::size_t>(n) + 1);
    for (int len = 0; len <= n; ++len) {
        if (len < r) {
            t[static_cast<std::size_t>(len)] = std::uint64_t{1} << len;
            continue;
        }
        std::uint64_t sum = 0;
        for (int ones = 0; ones < r; ++ones)
            sum += t[static_cast<std::size_t>(len - ones - 1)];
        t[static_cast<std::size_t>(len)] = sum;
    }
    return t[static_cast<std::size_t>(n)];
}

RunCountTable::RunCountTable(int max_n) : max_n_(max_n) {
    std::size_t side = static_cast<std::size_t>(max_n_) + 1;
    f_.assign(side * side * side, 0);
    for (int n = 0; n <= max_n_; ++n)
        for (int q = 0; q <= n; ++q)
            for (int k = 0; k <= q; ++k)
                f_[(static_cast<std::size_t>(n) * side + q) * side + k] = f_count(n, q, k);
}

std::uint64_t RunCountTable::f(int n, int q, int k) const {
    if (n < 0 || q < 0 || k < 0 || q > n || k > q) return 0;
    if (n > max_n_) return f_count(n, q, k);
    std::size_t side = static_cast<std::size_t>(max_n_) + 1;
    return f_[(static_cast<std::size_t>(n) * side + q) * side + k];
}

std::uint64_t n11_count(int n, int b) {
    if (n < 4 || b < 2 || b % 2 != 0) return 0;
    int t = b / 2 - 1;
    std::uint64_t sum = 0;
    for (int m : {2 * t - 1, 2 * t}) {
        if (m < 0 || m > n - 3) continue;
        if (m == 0 && t != 0) continue;
        for (int q = m; q <= n - 3; ++q) sum += f_count(n - 3, q, m);
    }
    return 2 * sum;
}

std::uint64_t n01_count(int n, int b) {
    if (n < 4 || b < 4 || b % 2 != 0) return 0;
    int t = b / 2 - 1;
    std::uint64_t sum = 0;
    for (int i = 0; i <= t - 2; ++i)
        for (int k = 2 * t - 1; k <= 2 * t; ++k)
            for (int q = k; q <= n - i - 4; ++q) sum += f_count(n - i - 4, q, k);
    if (n - t - 3 >= 0)
        sum += t_count(2 * t + 1, n - t - 3);
    else if (n - t - 3 == -1)
        sum += 1;  // the all-zero word: min(V2) = n-1 leaves no free suffix
    return 2 * sum;
}

std::set<int> s10_allowed_k(int n, int b) {
    if (b < 4 || b % 2 != 0)
        throw std::invalid_argument("refinement applies to even exponents >= 4");
    std::set<int> s = {b - 2};
    int lo = (b - 4) / 2;
    int hi = b - 2;
    if (n % 2 == 1) {
        // Inside the window the set is pinned exactly; elsewhere only the
        // base containment [lo, hi] is known.
        for (int k = lo; k <= hi; ++k)
            if (!(n >= b + 5 && n <= 2 * b - 5 && k == b - 4)) s.insert(k);
        return s;
    }
    if (n % 2 == 0) {
        int cut = (n + 1) / 3 - 2;
        for (int k = lo; k <= std::min(cut, hi); ++k) s.insert(k);
        for (int k = std::max(lo, cut + 1); k <= hi; ++k) {
            if (k % 2 == 1) {
                int d = n - k - 4;
                if (d < 1) continue;
                int l = (d % 4 == 1) ? k + 2 * (d / 4) + 3 : k + 2 * (d / 4) + 5;
                if (l >= b) s.insert(k);
            } else {
                if (k <= n - b && n >= 2 * k + 4 && n <= 3 * k + 2) s.insert(k);
                if (n == 3 * k + 4 && 3 * b <= 2 * (n - 1)) s.insert(k);
            }
        }
    }
    return s;
}

std::optional<std::uint64_t> n10_extremal(int n) {
    if (n == 6) return 10;
    if (n % 2 == 1 && n >= 5) return static_cast<std::uint64_t>(2 * (2 * n - 7));
    if (n % 2 == 0 && n >= 8) return 18;
    return std::nullopt;
}

std::uint64_t n10_lowest(int n) {
    if (n < 3) throw std::invalid_argument("order must be at least 3");
    return 2;  // only the all-ones word reaches exponent 2
}

std::uint64_t n00_extremal(int n) {
    if (n < 4) throw std::invalid_argument("order must be at least 4");
    return 2;
}

CountBounds n00_lowest_bounds(int n) {
    if (n < 5) throw std::invalid_argument("bounds are stated for n >= 5");
    std::uint64_t lo = 0;
    for (int q = 0; q <= (n + 1) / 3; ++q) lo += binomial(n - 2 * q - 4, q);
    std::uint64_t hi = 1;
    for (int q = 1; q <= (2 * n - 7) / 5; ++q) hi += f_count(n - 5, q, 1);
    for (int q = 2; q <= (2 * n + 2) / 3; ++q) hi += f_count(n - 5, q, 2);
    return {2 * lo, 2 * hi};
}

}  // namespace primexp
