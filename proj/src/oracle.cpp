// oracle.cpp — parity-walk and Boolean-powering exponent oracles.
#include "primexp/oracle.hpp"

#include <algorithm>
#include <bit>

namespace primexp {

BooleanMatrix::BooleanMatrix(int n)
    : n_(n), rows_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 1 || n > kMaxOrder)
        throw invalid_order_error("matrix order out of range");
}

BooleanMatrix BooleanMatrix::from_graph(const SymCompanionGraph& g) {
    BooleanMatrix m(g.order());
    for (int i = 1; i <= g.order(); ++i) m.rows_[static_cast<std::size_t>(i)] = g.row(i);
    return m;
}

bool BooleanMatrix::symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool BooleanMatrix::all_positive() const {
    std::uint64_t full = ((std::uint64_t{1} << n_) - 1) << 1;
    for (int i = 1; i <= n_; ++i)
        if ((row(i) & full) != full) return false;
    return true;
}

BooleanMatrix multiply(const BooleanMatrix& a, const BooleanMatrix& b) {
    BooleanMatrix c(a.n_);
    for (int i = 1; i <= a.n_; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t bits = a.row(i);
        while (bits) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            acc |= b.row(j);
        }
        c.rows_[static_cast<std::size_t>(i)] = acc;
    }
    return c;
}

int ParityDistances::exp_pair(int i, int j) const {
    int e = even_at(i, j);
    int o = odd_at(i, j);
    if (e < 0 || o < 0)
        throw imprimitive_error("walks of one parity never reach the target");
    return std::max(e, o) - 1;
}

namespace {

// Single-source search over states (vertex, parity); fills one row each of
// the even/odd tables.
void parity_bfs(const BooleanMatrix& m, int source, int* even_row, int* odd_row) {
    int n = m.order();
    std::vector<int> dist(2 * static_cast<std::size_t>(n) + 2, -1);
    std::vector<int> queue;
    queue.reserve(2 * static_cast<std::size_t>(n));
    auto state = [](int v, int parity) { return 2 * (v - 1) + parity; };
    dist[static_cast<std::size_t>(state(source, 0))] = 0;
    queue.push_back(state(source, 0));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int s = queue[head];
        int v = s / 2 + 1;
        int parity = s & 1;
        std::uint64_t nb = m.row(v);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            int t = state(w, parity ^ 1);
            if (dist[static_cast<std::size_t>(t)] == -1) {
                dist[static_cast<std::size_t>(t)] = dist[static_cast<std::size_t>(s)] + 1;
                queue.push_back(t);
            }
        }
    }
    for (int j = 1; j <= m.order(); ++j) {
        even_row[j - 1] = dist[static_cast<std::size_t>(state(j, 0))];
        odd_row[j - 1] = dist[static_cast<std::size_t>(state(j, 1))];
    }
}

}  // namespace

ParityDistances parity_distances(const BooleanMatrix& m) {
    int n = m.order();
    ParityDistances pd;
    pd.n = n;
    pd.even.assign(static_cast<std::size_t>(n) * n, -1);
    pd.odd.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 1; i <= n; ++i)
        parity_bfs(m, i, &pd.even[static_cast<std::size_t>(i - 1) * n],
                   &pd.odd[static_cast<std::size_t>(i - 1) * n]);
    return pd;
}

int exp_pair(const BooleanMatrix& m, int i, int j) {
    std::vector<int> even(static_cast<std::size_t>(m.order()));
    std::vector<int> odd(static_cast<std::size_t>(m.order()));
    parity_bfs(m, i, even.data(), odd.data());
    int e = even[static_cast<std::size_t>(j - 1)];
    int o = odd[static_cast<std::size_t>(j - 1)];
    if (e < 0 || o < 0)
        throw imprimitive_error("walks of one parity never reach the target");
    return std::max(e, o) - 1;
}

int exp_pair(const SymCompanionGraph& g, int i, int j) {
    return exp_pair(BooleanMatrix::from_graph(g), i, j);
}

int exponent_oracle_bfs(const BooleanMatrix& m) {
    ParityDistances pd = parity_distances(m);
    int best = 0;
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j) best = std::max(best, pd.exp_pair(i, j));
    return best;
}

int exponent_oracle_bfs(const SymCompanionGraph& g) {
    return exponent_oracle_bfs(BooleanMatrix::from_graph(g));
}

int exponent_oracle_power(const BooleanMatrix& m) {
    // Repeated multiplication, not squaring: every power below the returned
    // k was seen to contain a zero, which certifies minimality.
    BooleanMatrix power = m;
    int cap = wielandt_bound(m.order());
    for (int k = 1; k <= cap; ++k) {
        if (power.all_positive()) return k;
        power = multiply(power, m);
    }
    throw imprimitive_error("no all-positive power up to the Wielandt bound");
}

int exponent_oracle_power(const SymCompanionGraph& g) {
    return exponent_oracle_power(BooleanMatrix::from_graph(g));
}

}  // namespace primexp
