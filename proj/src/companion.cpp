// companion.cpp — support graph construction, class enumeration and the two
// primitivity tests.
#include "primexp/companion.hpp"

#include <algorithm>
#include <bit>

namespace primexp {

const std::vector<ClassTag>& all_class_tags() {
    static const std::vector<ClassTag> tags = {
        {true, true}, {false, true}, {true, false}, {false, false}};
    return tags;
}

ClassTag parse_class_tag(std::string_view text) {
    if (text.size() == 3 && text[1] == ',' &&
        (text[0] == '0' || text[0] == '1') && (text[2] == '0' || text[2] == '1')) {
        return ClassTag{text[0] == '1', text[2] == '1'};
    }
    throw std::invalid_argument("class tag must be A,E with A,E in {0,1}");
}

std::string to_string(ClassTag tag) {
    return std::string(1, tag.alpha ? '1' : '0') + "," + (tag.eps ? '1' : '0');
}

SymCompanionGraph::SymCompanionGraph(int n, ClassTag tag, std::uint64_t y)
    : n_(n), tag_(tag), adj_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 3) throw invalid_order_error("matrix order must be at least 3");
    if (n > kMaxOrder) throw invalid_order_error("matrix order exceeds bit-row capacity");
    if (n > 3 && (y >> (n - 3)) != 0)
        throw std::invalid_argument("Y has more than n-3 bits");

    auto add_edge = [&](int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    };
    for (int i = 1; i < n; ++i) add_edge(i, i + 1);
    if (tag.alpha) add_edge(n, 1);
    for (int j = 0; j < n - 3; ++j)
        if ((y >> j) & 1u) add_edge(n, j + 2);
    if (tag.eps) adj_[static_cast<std::size_t>(n)] |= std::uint64_t{1} << n;
}

std::uint64_t SymCompanionGraph::v2_mask() const {
    std::uint64_t in_range = (std::uint64_t{1} << n_) - 2;  // bits 1..n-1
    return row(n_) & in_range;
}

std::uint64_t SymCompanionGraph::y_bits() const {
    return (row(n_) >> 2) & ((std::uint64_t{1} << (n_ - 3 > 0 ? n_ - 3 : 0)) - 1);
}

std::string SymCompanionGraph::y_string() const {
    std::string s;
    std::uint64_t y = y_bits();
    for (int j = 0; j < n_ - 3; ++j) s += ((y >> j) & 1u) ? '1' : '0';
    return s;
}

std::string SymCompanionGraph::row_string() const {
    std::string s;
    for (int i = 1; i < n_; ++i) s += has_edge(n_, i) ? '1' : '0';
    return s;
}

SymCompanionGraph build_graph(const LastRowSpec& spec) {
    if (spec.heavy != 1 && spec.heavy != 2)
        throw std::invalid_argument("heavy entry must be 1 or 2");
    return SymCompanionGraph(spec.n, spec.tag, spec.y);
}

SymCompanionGraph graph_from_row(std::string_view row, bool loop) {
    int n = static_cast<int>(row.size()) + 1;
    if (n < 3) throw invalid_order_error("last row needs at least two entries");
    for (char c : row)
        if (c != '0' && c != '1')
            throw std::invalid_argument("last row must be over {0,1}");
    if (row.back() != '1')
        throw std::invalid_argument("a_{n,n-1} must be nonzero in a companion last row");
    std::uint64_t y = 0;
    for (int j = 0; j < n - 3; ++j)
        if (row[static_cast<std::size_t>(j) + 1] == '1') y |= std::uint64_t{1} << j;
    ClassTag tag{row.front() == '1', loop};
    return SymCompanionGraph(n, tag, y);
}

std::uint64_t parse_y_bits(std::string_view text) {
    if (text.size() > kMaxOrder)
        throw std::invalid_argument("Y is too long");
    std::uint64_t y = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] != '0' && text[j] != '1')
            throw std::invalid_argument("Y must be over {0,1}");
        if (text[j] == '1') y |= std::uint64_t{1} << j;
    }
    return y;
}

std::uint64_t canonical_class_size(int n) {
    if (n < 3) throw invalid_order_error("matrix order must be at least 3");
    if (n > kMaxOrder) throw invalid_order_error("matrix order exceeds bit-row capacity");
    return std::uint64_t{1} << (n - 3);
}

std::vector<ClassMember> enumerate_class(int n, ClassTag tag) {
    std::uint64_t count = canonical_class_size(n);
    std::vector<ClassMember> members;
    members.reserve(count);
    for (std::uint64_t y = 0; y < count; ++y)
        members.push_back({SymCompanionGraph(n, tag, y), kMultiplicity});
    return members;
}

bool is_primitive(const SymCompanionGraph& g) {
    if (g.tag().eps) return true;  // loop at n is an odd cycle
    int n = g.order();
    // Two-coloring over the path-connected graph; an edge inside one color
    // class is an odd cycle.
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    color[1] = 0;
    queue.push_back(1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint64_t nb = g.row(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[static_cast<std::size_t>(v)] == -1) {
                color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(u)] ^ 1;
                queue.push_back(v);
            } else if (color[static_cast<std::size_t>(v)] ==
                       color[static_cast<std::size_t>(u)]) {
                return true;
            }
        }
    }
    return false;
}

bool is_primitive_formula(const SymCompanionGraph& g) {
    ClassTag tag = g.tag();
    if (tag.eps) return true;
    int n = g.order();
    std::uint64_t v2 = g.v2_mask();

    std::uint64_t odd_interior = 0;   // {3, 5, ..., n-3}
    std::uint64_t even_interior = 0;  // {2, 4, ..., n-3}
    for (int i = 2; i <= n - 3; ++i)
        (i % 2 ? odd_interior : even_interior) |= std::uint64_t{1} << i;

    if (tag.alpha) {
        if (n % 2 == 1) return true;  // the n-cycle through {n,1} is odd
        std::uint64_t rest = v2 & ~(std::uint64_t{1} << 1) & ~(std::uint64_t{1} << (n - 1));
        return (rest & ~odd_interior) != 0;
    }
    std::uint64_t rest = v2 & ~(std::uint64_t{1} << (n - 1));
    std::uint64_t allowed = (n % 2 == 0) ? odd_interior : even_interior;
    return (rest & ~allowed) != 0;
}

}  // namespace primexp
