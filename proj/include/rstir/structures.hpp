#pragma once

#include "rstir/pmf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstir {

// A cycle lists successive images: {a, b, c} means a -> b -> c -> a.
struct Cycle {
    int color = 1;
    std::vector<long> elems;
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

namespace detail {

inline void rotate_to_min(std::vector<long>& c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
}

inline void check_cover(long n, const std::vector<long>& all, const char* what) {
    std::vector<long> s = all;
    std::sort(s.begin(), s.end());
    for (long i = 0; i < static_cast<long>(s.size()); ++i)
        if (s[i] != i + 1) throw std::logic_error(std::string(what) + ": labels do not partition [n]");
    if (static_cast<long>(s.size()) != n) throw std::logic_error(std::string(what) + ": labels do not cover [n]");
}

}  // namespace detail

struct ColoredPermutation {
    long n = 0;
    int d = 1;
    std::vector<Cycle> cycles;

    // min-element-first cycles, sorted by minima
    void canonicalize() {
        for (auto& c : cycles) detail::rotate_to_min(c.elems);
        std::sort(cycles.begin(), cycles.end(),
                  [](const Cycle& a, const Cycle& b) { return a.elems.front() < b.elems.front(); });
    }

    void validate() const {
        std::vector<long> all;
        for (const auto& c : cycles) {
            if (c.elems.empty()) throw std::logic_error("ColoredPermutation: empty cycle");
            if (c.color < 1 || c.color > d) throw std::logic_error("ColoredPermutation: color out of range");
            all.insert(all.end(), c.elems.begin(), c.elems.end());
        }
        detail::check_cover(n, all, "ColoredPermutation");
    }

    // number of cycles per color
    std::vector<long> cycle_counts() const {
        std::vector<long> k(static_cast<std::size_t>(d), 0);
        for (const auto& c : cycles) ++k[c.color - 1];
        return k;
    }

    // number of cycles of color j (1-based) with length len
    long count(int color, long len) const {
        long m = 0;
        for (const auto& c : cycles)
            if (c.color == color && static_cast<long>(c.elems.size()) == len) ++m;
        return m;
    }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;
};

struct IncompletePermutation {
    long n = 0;
    std::vector<std::vector<long>> cycles;  // bijection on B
    std::vector<long> red;                  // B0 = [n] \ B, sorted

    void canonicalize() {
        for (auto& c : cycles) detail::rotate_to_min(c);
        std::sort(cycles.begin(), cycles.end());
        std::sort(red.begin(), red.end());
    }

    void validate() const {
        std::vector<long> all = red;
        for (const auto& c : cycles) {
            if (c.empty()) throw std::logic_error("IncompletePermutation: empty cycle");
            all.insert(all.end(), c.begin(), c.end());
        }
        detail::check_cover(n, all, "IncompletePermutation");
    }

    long num_cycles() const { return static_cast<long>(cycles.size()); }

    friend bool operator==(const IncompletePermutation&, const IncompletePermutation&) = default;
    friend auto operator<=>(const IncompletePermutation&, const IncompletePermutation&) = default;
};

struct IncompletePartition {
    long n = 0;
    std::vector<long> red;                  // B0, possibly empty
    std::vector<std::vector<long>> blocks;  // white blocks, nonempty

    void canonicalize() {
        std::sort(red.begin(), red.end());
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
    }

    void validate() const {
        std::vector<long> all = red;
        for (const auto& b : blocks) {
            if (b.empty()) throw std::logic_error("IncompletePartition: empty white block");
            all.insert(all.end(), b.begin(), b.end());
        }
        detail::check_cover(n, all, "IncompletePartition");
    }

    long num_blocks() const { return static_cast<long>(blocks.size()); }

    friend bool operator==(const IncompletePartition&, const IncompletePartition&) = default;
    friend auto operator<=>(const IncompletePartition&, const IncompletePartition&) = default;
};

// b[0] = b0 >= 0, b[1..k] >= 1
struct IncompleteComposition {
    std::vector<long> b;

    long n() const {
        long s = 0;
        for (long x : b) s += x;
        return s;
    }
    long k() const { return static_cast<long>(b.size()) - 1; }

    void validate(long n_expected) const {
        if (b.empty()) throw std::logic_error("IncompleteComposition: missing b0");
        if (b[0] < 0) throw std::logic_error("IncompleteComposition: negative b0");
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i] < 1) throw std::logic_error("IncompleteComposition: empty white part");
        if (n() != n_expected) throw std::logic_error("IncompleteComposition: wrong total");
    }

    friend bool operator==(const IncompleteComposition&, const IncompleteComposition&) = default;
};

// Roots are encoded as -1..-d; nodes are 1..n and node l arrives at time l.
struct HoppeForest {
    long n = 0;
    int d = 1;
    std::vector<double> weights;
    std::vector<long> parent;  // parent[0] unused

    static bool is_root(long v) { return v < 0; }

    void validate() const {
        if (static_cast<long>(parent.size()) != n + 1) throw std::logic_error("HoppeForest: parent map size");
        for (long l = 1; l <= n; ++l) {
            const long p = parent[l];
            if (p < 0 ? (p < -d) : (p < 1 || p >= l)) throw std::logic_error("HoppeForest: invalid parent");
        }
    }

    // 1-based component (root) of each node
    std::vector<int> components() const {
        std::vector<int> c(static_cast<std::size_t>(n + 1), 0);
        for (long l = 1; l <= n; ++l) c[l] = parent[l] < 0 ? static_cast<int>(-parent[l]) : c[parent[l]];
        return c;
    }

    std::vector<long> depths() const {
        std::vector<long> dep(static_cast<std::size_t>(n + 1), 0);
        for (long l = 1; l <= n; ++l) dep[l] = parent[l] < 0 ? 1 : dep[parent[l]] + 1;
        return dep;
    }

    std::vector<long> component_sizes() const {
        std::vector<long> s(static_cast<std::size_t>(d), 0);
        auto c = components();
        for (long l = 1; l <= n; ++l) ++s[c[l] - 1];
        return s;
    }

    std::vector<long> root_degrees() const {
        std::vector<long> s(static_cast<std::size_t>(d), 0);
        for (long l = 1; l <= n; ++l)
            if (parent[l] < 0) ++s[-parent[l] - 1];
        return s;
    }

    // leaves (nodes without children) per component; a bare root has none
    std::vector<long> leaves() const {
        std::vector<char> has_child(static_cast<std::size_t>(n + 1), 0);
        for (long l = 1; l <= n; ++l)
            if (parent[l] > 0) has_child[parent[l]] = 1;
        auto c = components();
        std::vector<long> s(static_cast<std::size_t>(d), 0);
        for (long l = 1; l <= n; ++l)
            if (!has_child[l]) ++s[c[l] - 1];
        return s;
    }

    // number of nodes of component j (1-based) at each depth 1..n
    std::vector<long> level_counts(int j) const {
        std::vector<long> out(static_cast<std::size_t>(n + 1), 0);
        auto c = components();
        auto dep = depths();
        for (long l = 1; l <= n; ++l)
            if (c[l] == j) ++out[dep[l]];
        return out;
    }

    // leaves in the subtree rooted at node ell, not counting ell itself
    long subtree_leaves(long ell) const {
        std::vector<char> in(static_cast<std::size_t>(n + 1), 0), has_child(static_cast<std::size_t>(n + 1), 0);
        in[ell] = 1;
        for (long l = ell + 1; l <= n; ++l)
            if (parent[l] > 0 && in[parent[l]]) in[l] = 1;
        for (long l = 1; l <= n; ++l)
            if (parent[l] > 0) has_child[parent[l]] = 1;
        long m = 0;
        for (long l = ell + 1; l <= n; ++l)
            if (in[l] && !has_child[l]) ++m;
        return m;
    }

    friend bool operator==(const HoppeForest&, const HoppeForest&) = default;
};

}  // namespace rstir
