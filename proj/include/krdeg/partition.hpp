#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "krdeg/errors.hpp"

namespace krdeg {

// Weakly decreasing list of positive parts. The empty partition is {}.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(static_cast<std::size_t>(p[0]), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Number of standard fillings of a straight shape, by the hook length formula.
inline std::uint64_t standard_tableau_count(const Partition& shape) {
    int n = partition_weight(shape);
    Partition conj = conjugate(shape);
    // f = n! / prod(hooks); compute as a product of exact integer ratios by
    // factoring n! across the hook multiset via repeated gcd.
    std::vector<std::uint64_t> hooks;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks.push_back(static_cast<std::uint64_t>(arm + leg + 1));
        }
    std::uint64_t num = 1;
    for (int k = 2; k <= n; ++k) {
        std::uint64_t f = static_cast<std::uint64_t>(k);
        for (auto& h : hooks) {
            std::uint64_t g = std::gcd(f, h);
            f /= g;
            h /= g;
        }
        num *= f;
    }
    return num;
}

// z_lambda = prod(i^{m_i} * m_i!): the size of the centralizer of a
// permutation of cycle type lambda.
inline std::uint64_t centralizer_order(const Partition& p) {
    std::uint64_t z = 1;
    int run = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++run;
        z *= static_cast<std::uint64_t>(p[i]);
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            for (int j = 2; j <= run; ++j) z *= static_cast<std::uint64_t>(j);
            run = 0;
        }
    }
    return z;
}

// True when a dominates b (|a| must equal |b|).
inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

} // namespace krdeg
