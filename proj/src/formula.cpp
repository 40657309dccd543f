// formula.cpp — closed-form exponent dispatch and the per-class /
// k-stratified exponent sets.
#include "primexp/formula.hpp"

#include <algorithm>

namespace primexp {

namespace {

std::set<int> evens_in(int lo, int hi) {
    std::set<int> s;
    if (lo % 2 != 0) ++lo;
    for (int v = lo; v <= hi; v += 2) s.insert(v);
    return s;
}

}  // namespace

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::T32_1: return "T32-1";
        case Rule::T32_2: return "T32-2";
        case Rule::T42_1a: return "T42-1a";
        case Rule::T42_1b: return "T42-1b";
        case Rule::T42_2a: return "T42-2a";
        case Rule::T42_2b: return "T42-2b";
        case Rule::T42_3: return "T42-3";
        case Rule::T53_1a: return "T53-1a";
        case Rule::T53_1b: return "T53-1b";
        case Rule::T53_1c: return "T53-1c";
        case Rule::T53_2a: return "T53-2a";
        case Rule::T53_2b: return "T53-2b";
        case Rule::T53_2c: return "T53-2c";
        case Rule::NOTE51: return "NOTE51";
    }
    return "?";
}

ExponentResult exponent_formula(const SymCompanionGraph& g) {
    if (!is_primitive(g)) throw imprimitive_error("exponent of an imprimitive matrix");

    StructParams p = struct_params(g);
    ClassTag tag = g.tag();

    if (tag.eps) {
        int t = (p.m + 1) / 2;
        if (!tag.alpha) t = std::max(p.h - 1, t);
        return {2 * (t + 1), tag.alpha ? Rule::T32_1 : Rule::T32_2};
    }

    // Loop-free classes: se and, for alpha = 0, c^h are always defined on
    // primitive input.
    int se = *p.se;

    if (tag.alpha) {
        if (p.m % 2 == 1) {
            bool disjoint = association_flag(g, p.v1h, p.m);
            return {p.m + se + (disjoint ? 5 : 3),
                    disjoint ? Rule::T42_1a : Rule::T42_1b};
        }
        if (p.mo && *p.mo >= p.m - se - 1) {
            bool disjoint = association_flag(g, p.v1h, *p.mo);
            return {*p.mo + se + (disjoint ? 5 : 3),
                    disjoint ? Rule::T42_2a : Rule::T42_2b};
        }
        return {p.m + 2, Rule::T42_3};
    }

    int hp = *p.h_prime;
    bool substituted = p.m % 2 == 0 && p.mo && *p.mo > p.m - se - 3;
    if (p.m % 2 == 1 || substituted) {
        int mm = substituted ? *p.mo : p.m;
        Rule via = substituted ? Rule::NOTE51 : Rule::T53_1a;
        if (hp >= (mm + 5) / 2) return {2 * hp + se, via};
        if (association_flag(g, p.v1h, mm))
            return {mm + se + 5, substituted ? Rule::NOTE51 : Rule::T53_1b};
        return {mm + se + 3, substituted ? Rule::NOTE51 : Rule::T53_1c};
    }
    if (2 <= p.h && p.h <= (p.m - se) / 2) return {p.m + 2, Rule::T53_2a};
    if (*p.cycle_at_h_length == se + 3) return {2 * p.h + se, Rule::T53_2b};
    return {2 * p.h + se + 2, Rule::T53_2c};
}

std::set<int> exponent_set_formula(int n, ClassTag tag) {
    if (n < 4) throw invalid_order_error("exponent sets are stated for n >= 4");
    std::set<int> s;
    if (tag.eps && tag.alpha) {
        for (int t = 0; t <= (n - 2) / 2; ++t) s.insert(2 * (t + 1));
    } else if (tag.eps) {
        for (int t = 2; t <= n - 1; ++t) s.insert(2 * t);
    } else if (tag.alpha) {
        for (int t = 1; t <= (n - 1) / 2; ++t) s.insert(2 * t);
    } else {
        for (int t = 2; t <= n - 2; ++t) s.insert(2 * t);
    }
    return s;
}

KStratifiedSet exponent_set_10_by_k(int n, int k) {
    if (n < 5) throw invalid_order_error("k-stratified sets are stated for n >= 5");
    if (k < 0 || k > n - 3) throw std::invalid_argument("k must lie in [0, n-3]");

    KStratifiedSet out;
    if (k == 0) {
        out = {true, {2}, "T43-0", ""};
        return out;
    }
    bool n_odd = n % 2 == 1;
    bool k_odd = k % 2 == 1;

    if ((n_odd && n >= 2 * k + 5) || (!n_odd && n >= 3 * k + 5)) {
        out = {true, evens_in(k + 2, 2 * (k + 2)), "T43-1", ""};
    } else if (n_odd && k_odd) {  // n in [k+3, 2k+3]^o
        out = {true, evens_in(k + 2, n - 1), "T43-2", ""};
    } else if (n_odd) {  // k even, n in [k+3, 2k+3]^o
        std::set<int> s = evens_in(k + 2, n - 1);
        if (n != k + 5 && n != k + 7) s.erase(k + 4);
        out = {true, s, "T43-3", ""};
    } else if (k_odd && n >= k + 5 && n <= 3 * k + 3) {
        int d = n - k - 4;
        int l = (d % 4 == 1) ? k + 2 * (d / 4) + 3 : k + 2 * (d / 4) + 5;
        out = {true, evens_in(k + 3, l), "T43-4", ""};
    } else if (!k_odd && n >= k + 4 && n <= 3 * k + 2) {
        if (n - k <= k + 2) {
            out = {true, {k + 2}, "T43-5", ""};
            std::set<int> literal = evens_in(k + 2, n - k);
            if (literal != out.exponents)
                out.note = "overlapping clause reads [k+2, n-k]^e here; the n-k <= k+2 carve-out applies";
        } else {
            out = {true, evens_in(k + 2, n - k), "T43-5", ""};
        }
    } else if (!k_odd && n == 3 * k + 4) {
        out = {true, evens_in(k + 2, 2 * (k + 1)), "T43-5", ""};
    } else {
        // Only n even with k = n-3 lands here; that subclass has no
        // primitive member.
        out = {false, {}, "", "no clause covers this (n,k)"};
    }
    return out;
}

}  // namespace primexp
