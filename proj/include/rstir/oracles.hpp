#pragma once

// Brute-force enumerators. Each visits explicit objects with exact weights and
// aggregates a statistic; nothing here calls the closed forms being tested.

#include "rstir/samplers.hpp"
#include "rstir/structures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace rstir {

struct EnumerationReport {
    std::string object_class;
    long n = 0;
    long d = 1;
    ParamList params;
    std::map<std::vector<long>, Rational> law;  // statistic -> probability
    long object_count = 0;                      // objects of positive weight visited
    Rational total_weight{0};                   // unnormalized mass before normalization

    Rational total() const {
        Rational t(0);
        for (const auto& [k, p] : law) t += p;
        return t;
    }

    VectorPmf to_vector_pmf() const { return make_pmf(object_class, params, law); }

    FinitePmf to_pmf(std::size_t idx = 0) const {
        std::map<long, Rational> m;
        for (const auto& [k, p] : law) m[k.at(idx)] += p;
        return make_pmf(object_class, params, m);
    }
};

namespace oracle_detail {

inline void guard(bool ok, const std::string& what) {
    if (!ok) throw std::length_error(what + ": size guard exceeded");
}

// Accumulates weighted statistics, then normalizes by the brute-force total.
struct Accumulator {
    EnumerationReport rep;
    void add(const std::vector<long>& key, const Rational& w) {
        if (w.is_zero()) return;
        rep.law[key] += w;
        rep.total_weight += w;
        ++rep.object_count;
    }
    EnumerationReport finish() {
        if (rep.total_weight.is_zero()) throw std::logic_error(rep.object_class + ": zero total weight");
        for (auto& [k, p] : rep.law) p /= rep.total_weight;
        return rep;
    }
};

inline std::vector<std::vector<long>> cycles_of(const std::vector<long>& perm) {
    const long n = static_cast<long>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<long>> out;
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<long> c;
        for (long v = i; !seen[v]; v = perm[v] - 1) {
            seen[v] = 1;
            c.push_back(v + 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// every permutation of [n] in one-line notation, values 1..n
template <class F>
void for_each_permutation(long n, F f) {
    std::vector<long> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1L);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

// every set partition of the given labels via restricted growth strings
template <class F>
void for_each_set_partition(const std::vector<long>& labels, F f) {
    const long m = static_cast<long>(labels.size());
    std::vector<long> a(static_cast<std::size_t>(m), 0);
    auto emit = [&]() {
        long k = 0;
        for (long x : a) k = std::max(k, x + 1);
        std::vector<std::vector<long>> blocks(static_cast<std::size_t>(m == 0 ? 0 : k));
        for (long i = 0; i < m; ++i) blocks[a[i]].push_back(labels[i]);
        f(blocks);
    };
    auto rec = [&](auto&& self, long i, long mx) -> void {
        if (i == m) {
            emit();
            return;
        }
        for (long v = 0; v <= mx + 1; ++v) {
            a[i] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    if (m == 0) emit();
    else {
        a[0] = 0;
        rec(rec, 1, 0);
    }
}

// mixed-radix walk over choice sequences; radix[t] options at step t
template <class F>
void for_each_choice_sequence(const std::vector<long>& radix, F f) {
    std::vector<long> c(radix.size(), 0);
    for (long r : radix)
        if (r <= 0) return;
    for (;;) {
        f(c);
        std::size_t t = 0;
        while (t < c.size() && ++c[t] == radix[t]) c[t++] = 0;
        if (t == c.size()) return;
    }
}

inline Rational total(const std::vector<Rational>& v) {
    Rational s(0);
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace oracle_detail

using ColoredPermStat = std::function<std::vector<long>(const ColoredPermutation&)>;

inline std::vector<long> cycle_count_stat(const ColoredPermutation& p) { return p.cycle_counts(); }

// Every colored permutation weighted by prod theta_color over cycles.
inline EnumerationReport enumerate_colored_permutations(long n, const std::vector<Rational>& thetas,
                                                        const ColoredPermStat& stat = cycle_count_stat) {
    oracle_detail::guard(n >= 0 && n <= 7 && !thetas.empty() && thetas.size() <= 3, "enumerate_colored_permutations");
    const int d = static_cast<int>(thetas.size());
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "colored_permutations";
    acc.rep.n = n;
    acc.rep.d = d;
    oracle_detail::for_each_permutation(n, [&](const std::vector<long>& perm) {
        auto cyc = oracle_detail::cycles_of(perm);
        std::vector<long> radix(cyc.size(), d);
        oracle_detail::for_each_choice_sequence(radix, [&](const std::vector<long>& colors) {
            ColoredPermutation cp;
            cp.n = n;
            cp.d = d;
            Rational w(1);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                cp.cycles.push_back({static_cast<int>(colors[i] + 1), cyc[i]});
                w *= thetas[static_cast<std::size_t>(colors[i])];
            }
            cp.canonicalize();
            acc.add(stat(cp), w);
        });
    });
    return acc.finish();
}

// Exact law over canonical colored permutations produced by a choice-driven
// builder; step t has d special options (weights thetas) and m_t unit options.
inline std::map<ColoredPermutation, Rational> colored_permutation_path_law(
    long n, const std::vector<Rational>& thetas, bool feller) {
    oracle_detail::guard(n >= 0 && n <= 6 && !thetas.empty() && thetas.size() <= 3, "colored_permutation_path_law");
    const long d = static_cast<long>(thetas.size());
    const Rational theta = oracle_detail::total(thetas);
    std::vector<long> radix;
    std::vector<long> units;
    for (long t = 0; t < n; ++t) {
        const long m = feller ? n - t - 1 : t;  // Feller step t draws D_{n-t}; CRP step t seats customer t+1
        units.push_back(m);
        radix.push_back(d + m);
    }
    std::map<ColoredPermutation, Rational> law;
    oracle_detail::for_each_choice_sequence(radix, [&](const std::vector<long>& c) {
        Rational w(1);
        for (long t = 0; t < n; ++t) {
            const Rational num = c[t] < d ? thetas[static_cast<std::size_t>(c[t])] : Rational(1);
            w *= num / (theta + Rational(units[t]));
        }
        if (w.is_zero()) return;
        auto p = feller ? feller_from_choices(n, static_cast<int>(d), c) : crp_from_choices(n, static_cast<int>(d), c);
        p.canonicalize();
        law[p] += w;
    });
    return law;
}

// Multinomial Ewens probability of one colored permutation.
inline Rational multinomial_ewens_prob(const ColoredPermutation& p, const std::vector<Rational>& thetas) {
    Rational w(1);
    for (const auto& c : p.cycles) w *= thetas[static_cast<std::size_t>(c.color - 1)];
    return w / rising_factorial(oracle_detail::total(thetas), p.n);
}

using IncPermStat = std::function<std::vector<long>(const IncompletePermutation&)>;

// (#cycles, |B0|)
inline std::vector<long> inc_perm_default_stat(const IncompletePermutation& p) {
    return {p.num_cycles(), static_cast<long>(p.red.size())};
}

// (b0, c_1..c_n)
inline std::vector<long> inc_perm_type_stat(const IncompletePermutation& p) {
    std::vector<long> key(static_cast<std::size_t>(p.n + 1), 0);
    key[0] = static_cast<long>(p.red.size());
    for (const auto& c : p.cycles) ++key[c.size()];
    return key;
}

// Every (B, bijection on B) weighted tau^{#cycles} r^{(n-#B) rising}.
inline EnumerationReport enumerate_incomplete_permutations(long n, const Rational& tau, const Rational& r,
                                                           const IncPermStat& stat = inc_perm_default_stat) {
    oracle_detail::guard(n >= 0 && n <= 7, "enumerate_incomplete_permutations");
    require(tau.sign() >= 0 && r.sign() >= 0 && (tau + r).sign() > 0, "enumerate_incomplete_permutations: bad weights");
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "incomplete_permutations";
    acc.rep.n = n;
    acc.rep.params = {{"tau", tau.str()}, {"r", r.str()}};
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<long> B, red;
        for (long i = 0; i < n; ++i) ((mask >> i) & 1UL ? B : red).push_back(i + 1);
        const Rational rw = rising_factorial(r, static_cast<long>(red.size()));
        oracle_detail::for_each_permutation(static_cast<long>(B.size()), [&](const std::vector<long>& perm) {
            IncompletePermutation ip;
            ip.n = n;
            ip.red = red;
            for (auto& c : oracle_detail::cycles_of(perm)) {
                for (auto& v : c) v = B[v - 1];
                ip.cycles.push_back(c);
            }
            ip.canonicalize();
            acc.add(stat(ip), rw * pow(tau, ip.num_cycles()));
        });
    }
    return acc.finish();
}

using IncPartStat = std::function<std::vector<long>(const IncompletePartition&)>;

// (#white blocks, |B0|)
inline std::vector<long> inc_part_default_stat(const IncompletePartition& p) {
    return {p.num_blocks(), static_cast<long>(p.red.size())};
}

inline std::vector<long> inc_part_type_stat(const IncompletePartition& p) {
    std::vector<long> key(static_cast<std::size_t>(p.n + 1), 0);
    key[0] = static_cast<long>(p.red.size());
    for (const auto& b : p.blocks) ++key[b.size()];
    return key;
}

template <class W>
EnumerationReport enumerate_incomplete_partitions_weighted(long n, const std::string& cls, ParamList ps, W weight,
                                                           const IncPartStat& stat) {
    oracle_detail::guard(n >= 0 && n <= 10, "enumerate_incomplete_partitions");
    oracle_detail::Accumulator acc;
    acc.rep.object_class = cls;
    acc.rep.n = n;
    acc.rep.params = std::move(ps);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<long> white, red;
        for (long i = 0; i < n; ++i) ((mask >> i) & 1UL ? white : red).push_back(i + 1);
        oracle_detail::for_each_set_partition(white, [&](const std::vector<std::vector<long>>& blocks) {
            IncompletePartition ip;
            ip.n = n;
            ip.red = red;
            ip.blocks = blocks;
            ip.canonicalize();
            acc.add(stat(ip), weight(ip));
        });
    }
    return acc.finish();
}

// urn law: r^{b0} N^{k falling}
inline EnumerationReport enumerate_incomplete_partitions_urn(long n, long N, const Rational& r,
                                                             const IncPartStat& stat = inc_part_default_stat) {
    require(N >= 1 && r.sign() >= 0, "enumerate_incomplete_partitions_urn: need N >= 1, r >= 0");
    return enumerate_incomplete_partitions_weighted(
        n, "incomplete_partitions_urn", {{"N", std::to_string(N)}, {"r", r.str()}},
        [&](const IncompletePartition& p) {
            return pow(r, static_cast<long>(p.red.size())) * falling_factorial(Rational(N), p.num_blocks());
        },
        stat);
}

// Gibbs law: theta^{k} r^{b0}; total_weight is the normalizer
inline EnumerationReport enumerate_incomplete_partitions_gibbs(long n, const Rational& theta, const Rational& r,
                                                               const IncPartStat& stat = inc_part_default_stat) {
    require(theta.sign() > 0 && r.sign() >= 0, "enumerate_incomplete_partitions_gibbs: need theta > 0, r >= 0");
    return enumerate_incomplete_partitions_weighted(
        n, "incomplete_partitions_gibbs", {{"theta", theta.str()}, {"r", r.str()}},
        [&](const IncompletePartition& p) {
            return pow(r, static_cast<long>(p.red.size())) * pow(theta, p.num_blocks());
        },
        stat);
}

// All (N+1)^n placements of n labeled balls into urn 0 (weight r) and urns 1..N.
inline EnumerationReport enumerate_urn_placements(long n, long N, const Rational& r,
                                                  const IncPartStat& stat = inc_part_default_stat) {
    oracle_detail::guard(n >= 0 && n <= 7 && N >= 1 && N <= 4, "enumerate_urn_placements");
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "urn_placements";
    acc.rep.n = n;
    acc.rep.params = {{"N", std::to_string(N)}, {"r", r.str()}};
    oracle_detail::for_each_choice_sequence(std::vector<long>(static_cast<std::size_t>(n), N + 1),
                                            [&](const std::vector<long>& urn) {
                                                std::vector<std::vector<long>> cells(static_cast<std::size_t>(N + 1));
                                                for (long b = 0; b < n; ++b) cells[urn[b]].push_back(b + 1);
                                                IncompletePartition ip;
                                                ip.n = n;
                                                ip.red = cells[0];
                                                for (long u = 1; u <= N; ++u)
                                                    if (!cells[u].empty()) ip.blocks.push_back(cells[u]);
                                                ip.canonicalize();
                                                acc.add(stat(ip), pow(r, static_cast<long>(ip.red.size())));
                                            });
    return acc.finish();
}

// Every incomplete composition (b0, b1..bk) of n weighted by gen_binomial(b0+r-1, b0);
// the statistic is the composition itself.
inline EnumerationReport enumerate_incomplete_compositions(long n, long k, const Rational& r) {
    oracle_detail::guard(n >= 1 && n <= 20 && k >= 1 && k <= n, "enumerate_incomplete_compositions");
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "incomplete_compositions";
    acc.rep.n = n;
    acc.rep.params = {{"k", std::to_string(k)}, {"r", r.str()}};
    for (long b0 = 0; b0 <= n - k; ++b0) {
        const Rational w = gen_binomial(Rational(b0) - Rational(1) + r, b0);
        for_each_composition(n - b0, k, 1, [&](const std::vector<long>& parts) {
            std::vector<long> key{b0};
            key.insert(key.end(), parts.begin(), parts.end());
            if (w.is_zero()) ++acc.rep.object_count;  // still an incomplete composition
            acc.add(key, w);
        });
    }
    return acc.finish();
}

// number of incomplete compositions of n with k white parts, counted by listing
inline long count_incomplete_compositions(long n, long k) {
    long c = 0;
    for (long b0 = 0; b0 <= n - k; ++b0) for_each_composition(n - b0, k, 1, [&](const std::vector<long>&) { ++c; });
    return c;
}

using ForestStat = std::function<std::vector<long>(const HoppeForest&)>;

// Visits every attachment history with its probability.
template <class F>
void for_each_attachment_history(long n, const std::vector<Rational>& thetas, F f) {
    oracle_detail::guard(n >= 0 && n <= 7 && !thetas.empty(), "for_each_attachment_history");
    const long d = static_cast<long>(thetas.size());
    const Rational theta = oracle_detail::total(thetas);
    require(theta.sign() > 0, "attachment histories: weights must not all be zero");
    std::vector<long> radix;
    for (long l = 1; l <= n; ++l) radix.push_back(d + l - 1);
    std::vector<double> wd;
    for (const auto& t : thetas) wd.push_back(t.to_double());
    oracle_detail::for_each_choice_sequence(radix, [&](const std::vector<long>& c) {
        HoppeForest hf;
        hf.n = n;
        hf.d = static_cast<int>(d);
        hf.weights = wd;
        hf.parent.assign(static_cast<std::size_t>(n + 1), 0);
        Rational w(1);
        for (long l = 1; l <= n; ++l) {
            const long x = c[l - 1];
            w *= (x < d ? thetas[static_cast<std::size_t>(x)] : Rational(1)) / (theta + Rational(l - 1));
            hf.parent[l] = x < d ? -(x + 1) : x - d + 1;
        }
        if (!w.is_zero()) f(hf, w);
    });
}

inline EnumerationReport enumerate_attachment_histories(long n, const std::vector<Rational>& thetas,
                                                        const ForestStat& stat) {
    oracle_detail::guard(n <= 5, "enumerate_attachment_histories");
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "attachment_histories";
    acc.rep.n = n;
    acc.rep.d = static_cast<long>(thetas.size());
    for_each_attachment_history(n, thetas, [&](const HoppeForest& f, const Rational& w) { acc.add(stat(f), w); });
    return acc.finish();
}

// Expected statistic (a vector of counts) over all histories.
inline std::vector<Rational> expected_by_histories(long n, const std::vector<Rational>& thetas, const ForestStat& stat) {
    std::vector<Rational> e;
    for_each_attachment_history(n, thetas, [&](const HoppeForest& f, const Rational& w) {
        auto v = stat(f);
        if (e.size() < v.size()) e.resize(v.size(), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) e[i] += w * Rational(v[i]);
    });
    return e;
}

// Split-root Hoppe(n, r+s) histories times uniform k-subsets; statistic is the edge count.
inline EnumerationReport lah_distribution_by_enumeration(long n, long k, const Rational& r, const Rational& s) {
    oracle_detail::guard(n >= 0 && n <= 6, "lah_distribution_by_enumeration");
    require(k >= 0 && k <= n, "lah_distribution_by_enumeration: need 0 <= k <= n");
    require(r.sign() >= 0 && s.sign() >= 0, "lah_distribution_by_enumeration: need r, s >= 0");
    require(k > 0 || r.sign() > 0 || s.sign() > 0, "lah_distribution_by_enumeration: inadmissible quadruple");
    const Rational rs = r + s;
    oracle_detail::Accumulator acc;
    acc.rep.object_class = "lah_histories";
    acc.rep.n = n;
    acc.rep.params = {{"k", std::to_string(k)}, {"r", r.str()}, {"s", s.str()}};
    std::vector<long> radix;
    for (long l = 1; l <= n; ++l) radix.push_back(2 + l - 1);
    std::vector<std::vector<long>> subsets;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (__builtin_popcountl(mask) != k) continue;
        std::vector<long> sub;
        for (long i = 0; i < n; ++i)
            if ((mask >> i) & 1UL) sub.push_back(i + 1);
        subsets.push_back(sub);
    }
    oracle_detail::for_each_choice_sequence(radix, [&](const std::vector<long>& c) {
        std::vector<long> parent(static_cast<std::size_t>(n + 1), 0);
        Rational w(1);
        for (long l = 1; l <= n; ++l) {
            const long x = c[l - 1];
            Rational num, den = rs + Rational(l - 1);
            if (l == 1 && rs.is_zero()) {
                // node 1 is forced into the r-part
                num = x == 0 ? Rational(1) : Rational(0);
                den = Rational(1);
            } else {
                num = x == 0 ? r : x == 1 ? s : Rational(1);
            }
            w *= num / den;
            parent[l] = x < 2 ? -(x + 1) : x - 1;
        }
        if (w.is_zero()) return;
        for (const auto& sub : subsets) acc.add({lah_subtree_edges(parent, sub)}, w);
    });
    return acc.finish();
}

// ------------------------------------------------------------ deletion maps

struct DeletionFibers {
    long domain_size = 0;                           // objects with reds separated
    std::map<IncompletePermutation, long> perm_fibers;
    std::map<IncompletePartition, long> part_fibers;
};

inline DeletionFibers broder_permutation_fibers(long n, long r) {
    oracle_detail::guard(n >= 0 && r >= 0 && n + r <= 9, "broder_permutation_fibers");
    DeletionFibers out;
    oracle_detail::for_each_permutation(n + r, [&](const std::vector<long>& perm) {
        auto cyc = oracle_detail::cycles_of(perm);
        for (const auto& c : cyc)
            if (std::count_if(c.begin(), c.end(), [&](long v) { return v > n; }) > 1) return;
        ++out.domain_size;
        ColoredPermutation big;
        big.n = n + r;
        for (auto& c : cyc) big.cycles.push_back({1, c});
        ++out.perm_fibers[delete_red_permutation(big, n)];
    });
    return out;
}

inline DeletionFibers broder_partition_fibers(long n, long r) {
    oracle_detail::guard(n >= 0 && r >= 0 && n + r <= 10, "broder_partition_fibers");
    DeletionFibers out;
    std::vector<long> labels(static_cast<std::size_t>(n + r));
    std::iota(labels.begin(), labels.end(), 1L);
    oracle_detail::for_each_set_partition(labels, [&](const std::vector<std::vector<long>>& blocks) {
        for (const auto& b : blocks)
            if (std::count_if(b.begin(), b.end(), [&](long v) { return v > n; }) > 1) return;
        ++out.domain_size;
        IncompletePartition big;
        big.n = n + r;
        big.blocks = blocks;
        ++out.part_fibers[delete_red_partition(big, n)];
    });
    return out;
}

}  // namespace rstir
