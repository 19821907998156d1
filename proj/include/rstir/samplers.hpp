#pragma once

#include "rstir/distributions.hpp"
#include "rstir/rng.hpp"
#include "rstir/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace rstir {

// Inverse-cdf table over exact probabilities. Draws one u64 and returns the
// smallest point of positive mass whose threshold floor(cdf * 2^64) is >= u;
// a u landing exactly on a boundary therefore resolves to the lower point.
class InverseCdf {
public:
    InverseCdf() = default;
    InverseCdf(std::vector<long> support, const std::vector<Rational>& weights) : support_(std::move(support)) {
        require(support_.size() == weights.size() && !weights.empty(), "InverseCdf: bad input");
        Rational total(0);
        for (const auto& w : weights) {
            require(w.sign() >= 0, "InverseCdf: negative weight");
            total += w;
        }
        require(total.sign() > 0, "InverseCdf: zero total mass");
        Rational cum(0);
        const mpz_class two64 = mpz_class(1) << 64;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            cum += weights[i];
            if (weights[i].is_zero()) continue;
            mpq_class scaled = (cum / total).get() * mpq_class(two64);
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            unsigned __int128 t = 0;
            if (fl >= two64) {
                t = static_cast<unsigned __int128>(1) << 64;
            } else {
                mpz_class hi = fl >> 32, lo = fl - (hi << 32);
                t = (static_cast<unsigned __int128>(hi.get_ui()) << 32) | lo.get_ui();
            }
            points_.push_back(support_[i]);
            thresholds_.push_back(t);
        }
        thresholds_.back() = static_cast<unsigned __int128>(1) << 64;
    }

    explicit InverseCdf(const FinitePmf& p) : InverseCdf(p.support, p.probs) {}

    long sample(Rng& rng) const {
        const unsigned __int128 u = rng.next_u64();
        auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), u);
        return points_[static_cast<std::size_t>(it - thresholds_.begin())];
    }

    // exposed for boundary tests
    long lookup(std::uint64_t u) const {
        auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), static_cast<unsigned __int128>(u));
        return points_[static_cast<std::size_t>(it - thresholds_.begin())];
    }

    std::size_t size() const { return points_.size(); }

private:
    std::vector<long> support_;
    std::vector<long> points_;
    std::vector<unsigned __int128> thresholds_;
};

namespace detail {

inline std::vector<double> to_weights(const std::vector<Rational>& thetas) {
    require(!thetas.empty(), "weights: need at least one color");
    std::vector<double> w;
    Rational total(0);
    for (const auto& t : thetas) {
        require(t.sign() >= 0, "weights: must be nonnegative");
        total += t;
        w.push_back(t.to_double());
    }
    require(total.sign() > 0, "weights: sum must be positive");
    return w;
}

// One uniform: index < d picks special weight w[index], otherwise one of m unit
// weights (returned as d + i). The total weight must be positive.
inline long choose(Rng& rng, const std::vector<double>& w, double wsum, long m) {
    const double total = wsum + static_cast<double>(m);
    const double u = rng.uniform() * total;
    const long d = static_cast<long>(w.size());
    if (u < wsum || m == 0) {
        double cum = 0;
        long last = -1;
        for (long j = 0; j < d; ++j) {
            if (w[j] <= 0) continue;
            cum += w[j];
            last = j;
            if (u < cum) return j;
        }
        return last;
    }
    long i = static_cast<long>(u - wsum);
    if (i >= m) i = m - 1;
    return d + i;
}

inline double sum(const std::vector<double>& w) { return std::accumulate(w.begin(), w.end(), 0.0); }

}  // namespace detail

// ------------------------------------------------------------ permutations

// Seat-by-seat: customer l opens a table of color j (choice j-1 < d) or sits
// counterclockwise next to customer i < l (choice d+i-1), i.e. becomes the image of i.
inline ColoredPermutation crp_from_choices(long n, int d, const std::vector<long>& choices) {
    std::vector<long> next(static_cast<std::size_t>(n + 1));
    std::vector<int> color_of(static_cast<std::size_t>(n + 1));
    for (long l = 1; l <= n; ++l) {
        const long c = choices[l - 1];
        if (c < d) {
            next[l] = l;
            color_of[l] = static_cast<int>(c + 1);
        } else {
            const long i = c - d + 1;
            next[l] = next[i];
            next[i] = l;
            color_of[l] = color_of[i];
        }
    }
    ColoredPermutation p;
    p.n = n;
    p.d = d;
    std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
    for (long l = 1; l <= n; ++l) {
        if (seen[l]) continue;
        Cycle cyc;
        cyc.color = color_of[l];
        for (long v = l; !seen[v]; v = next[v]) {
            seen[v] = 1;
            cyc.elems.push_back(v);
        }
        p.cycles.push_back(std::move(cyc));
    }
    return p;
}

inline ColoredPermutation crp_colored(long n, const std::vector<Rational>& thetas, Rng& rng) {
    require(n >= 0, "crp_colored: n must be nonnegative");
    const auto w = detail::to_weights(thetas);
    const double ws = detail::sum(w);
    std::vector<long> choices(static_cast<std::size_t>(n));
    for (long l = 1; l <= n; ++l) choices[l - 1] = detail::choose(rng, w, ws, l - 1);
    return crp_from_choices(n, static_cast<int>(w.size()), choices);
}

// Colored Feller coupling in ordered cycle notation. choices[t] belongs to
// D_{n-t}: a value j-1 < d closes the current cycle with color j, a value
// d+m appends the (m+1)-th smallest unused label (D_i = m+2).
inline ColoredPermutation feller_from_choices(long n, int d, const std::vector<long>& choices) {
    ColoredPermutation p;
    p.n = n;
    p.d = d;
    if (n == 0) return p;
    std::vector<long> unused;
    for (long v = 2; v <= n; ++v) unused.push_back(v);
    Cycle cur;
    cur.elems.push_back(1);
    for (long i = n; i >= 1; --i) {
        const long c = choices[n - i];
        if (c < d) {
            cur.color = static_cast<int>(c + 1);
            p.cycles.push_back(std::move(cur));
            cur = Cycle{};
            if (!unused.empty()) {
                cur.elems.push_back(unused.front());
                unused.erase(unused.begin());
            }
        } else {
            const long idx = c - d;
            cur.elems.push_back(unused[idx]);
            unused.erase(unused.begin() + idx);
        }
    }
    p.canonicalize();
    return p;
}

// D_n, ..., D_1 are drawn in that order; D_i has i-1 unit choices.
inline ColoredPermutation feller_colored(long n, const std::vector<Rational>& thetas, Rng& rng) {
    require(n >= 0, "feller_colored: n must be nonnegative");
    const auto w = detail::to_weights(thetas);
    const double ws = detail::sum(w);
    std::vector<long> choices;
    for (long i = n; i >= 1; --i) choices.push_back(detail::choose(rng, w, ws, i - 1));
    return feller_from_choices(n, static_cast<int>(w.size()), choices);
}

inline IncompletePermutation r_ewens(long n, const Rational& tau, const Rational& r, Rng& rng) {
    require(tau.sign() >= 0 && r.sign() >= 0 && (tau + r).sign() > 0, "r_ewens: need tau, r >= 0, tau + r > 0");
    auto cp = crp_colored(n, {tau, r}, rng);
    IncompletePermutation out;
    out.n = n;
    for (auto& c : cp.cycles) {
        if (c.color == 1) out.cycles.push_back(c.elems);
        else out.red.insert(out.red.end(), c.elems.begin(), c.elems.end());
    }
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------- forests

inline HoppeForest hoppe_forest(long n, const std::vector<Rational>& thetas, Rng& rng) {
    require(n >= 0, "hoppe_forest: n must be nonnegative");
    HoppeForest f;
    f.n = n;
    f.weights = detail::to_weights(thetas);
    f.d = static_cast<int>(f.weights.size());
    const double ws = detail::sum(f.weights);
    f.parent.assign(static_cast<std::size_t>(n + 1), 0);
    for (long l = 1; l <= n; ++l) {
        const long c = detail::choose(rng, f.weights, ws, l - 1);
        f.parent[l] = c < f.d ? -(c + 1) : c - f.d + 1;
    }
    return f;
}

struct RHoppeTree {
    HoppeForest forest;     // two roots, weights (tau, r)
    std::vector<long> B;    // labels in the root-1 component
    long root_degree = 0;
};

inline RHoppeTree r_hoppe_tree(long n, const Rational& tau, const Rational& r, Rng& rng) {
    require(tau.sign() >= 0 && r.sign() >= 0 && (tau + r).sign() > 0, "r_hoppe_tree: need tau, r >= 0, tau + r > 0");
    RHoppeTree t;
    t.forest = hoppe_forest(n, {tau, r}, rng);
    auto comp = t.forest.components();
    for (long l = 1; l <= n; ++l)
        if (comp[l] == 1) t.B.push_back(l);
    t.root_degree = t.forest.root_degrees()[0];
    return t;
}

// -------------------------------------------------------------- partitions

namespace detail {

// urn 0 is red; urns 1..N are white. N may be 0 here.
inline IncompletePartition urn_partition_impl(long n, long N, double r, Rng& rng) {
    std::vector<std::vector<long>> urns(static_cast<std::size_t>(N + 1));
    const std::vector<double> w{r};
    for (long b = 1; b <= n; ++b) {
        const long c = choose(rng, w, r, N);
        urns[static_cast<std::size_t>(c)].push_back(b);
    }
    IncompletePartition p;
    p.n = n;
    p.red = std::move(urns[0]);
    for (long u = 1; u <= N; ++u)
        if (!urns[u].empty()) p.blocks.push_back(std::move(urns[u]));
    p.canonicalize();
    return p;
}

}  // namespace detail

inline IncompletePartition urn_incomplete_partition(long n, long N, const Rational& r, Rng& rng) {
    require(n >= 0, "urn_incomplete_partition: n must be nonnegative");
    require(N >= 1, "urn_incomplete_partition: N must be a positive integer");
    require(r.sign() >= 0, "urn_incomplete_partition: r must be nonnegative");
    return detail::urn_partition_impl(n, N, r.to_double(), rng);
}

// Law of M: P[M = m] proportional to (r+m)^n theta^m / m!, truncated at the
// smallest M* whose geometric tail bound is below 2^-64 of the retained mass.
class StamTable {
public:
    StamTable(long n, const Rational& theta, const Rational& r) {
        require(n >= 1, "gibbs_r_partition: n must be positive");
        require(theta.sign() > 0, "gibbs_r_partition: theta must be positive");
        require(r.sign() >= 0, "gibbs_r_partition: r must be nonnegative");
        const Rational eps = Rational(1) / pow(Rational(2), 64);
        std::vector<Rational> w;
        Rational total(0), wm = pow(r, n);
        for (long m = 0;; ++m) {
            w.push_back(wm);
            total += wm;
            const Rational base = r + Rational(m);
            const Rational next = wm.is_zero() ? pow(r + Rational(m + 1), n) * pow(theta, m + 1) / factorial(m + 1)
                                               : wm * theta * pow((base + Rational(1)) / base, n) / Rational(m + 1);
            if (!base.is_zero()) {
                const Rational base1 = base + Rational(1);
                const Rational rho1 = theta * pow((base1 + Rational(1)) / base1, n) / Rational(m + 2);
                if (rho1 < Rational(1) && next / (Rational(1) - rho1) < eps * total) {
                    m_star_ = m;
                    break;
                }
            }
            wm = next;
            require(m < 100000, "gibbs_r_partition: truncation point not found");
        }
        std::vector<long> support(w.size());
        std::iota(support.begin(), support.end(), 0L);
        cdf_ = InverseCdf(support, w);
    }

    long m_star() const { return m_star_; }
    long sample(Rng& rng) const { return cdf_.sample(rng); }

private:
    long m_star_ = 0;
    InverseCdf cdf_;
};

namespace detail {
inline const StamTable& stam_table(long n, const Rational& theta, const Rational& r) {
    thread_local std::map<std::string, StamTable> cache;
    const std::string key = std::to_string(n) + "|" + theta.str() + "|" + r.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, StamTable(n, theta, r)).first;
    return it->second;
}
}  // namespace detail

struct GibbsDraw {
    IncompletePartition partition;
    long urns = 0;         // M
    long empty_urns = 0;   // M - number of white blocks
};

inline GibbsDraw gibbs_r_partition(long n, const Rational& theta, const Rational& r, Rng& rng) {
    const auto& table = detail::stam_table(n, theta, r);
    GibbsDraw g;
    g.urns = table.sample(rng);
    g.partition = detail::urn_partition_impl(n, g.urns, r.to_double(), rng);
    g.empty_urns = g.urns - g.partition.num_blocks();
    return g;
}

// ------------------------------------------------------------ compositions

// Gamma variates for cells 0..k (cell 0 skipped when r = 0), then n-k+1
// exponentials whose normalized partial sums are the sorted ball positions.
inline IncompleteComposition r_composition_dirichlet(long n, long k, const Rational& r, Rng& rng) {
    require(k >= 1 && k <= n, "r_composition: need 1 <= k <= n");
    require(r.sign() >= 0, "r_composition: r must be nonnegative");
    const double rd = r.to_double();
    std::vector<double> p(static_cast<std::size_t>(k + 1));
    p[0] = rd > 0 ? rng.gamma(rd) : 0.0;
    for (long j = 1; j <= k; ++j) p[j] = rng.exponential();
    double total = 0;
    for (double x : p) total += x;
    IncompleteComposition out;
    out.b.assign(static_cast<std::size_t>(k + 1), 0);
    for (long j = 1; j <= k; ++j) out.b[j] = 1;
    const long balls = n - k;
    if (balls > 0) {
        std::vector<double> e(static_cast<std::size_t>(balls + 1));
        double es = 0;
        for (auto& x : e) {
            x = rng.exponential();
            es += x;
        }
        long cell = 0;
        double edge = p[0] / total, pos = 0;
        for (long i = 0; i < balls; ++i) {
            pos += e[i] / es;
            while (pos >= edge && cell < k) {
                ++cell;
                edge += p[cell] / total;
            }
            ++out.b[cell];
        }
    }
    return out;
}

// Polya urn from (r, 1, ..., 1) with n-k reinforcements; one uniform per step.
inline IncompleteComposition r_composition_polya(long n, long k, const Rational& r, Rng& rng) {
    require(k >= 1 && k <= n, "r_composition: need 1 <= k <= n");
    require(r.sign() >= 0, "r_composition: r must be nonnegative");
    std::vector<double> w(static_cast<std::size_t>(k + 1), 1.0);
    w[0] = r.to_double();
    double total = w[0] + static_cast<double>(k);
    std::vector<long> added(static_cast<std::size_t>(k + 1), 0);
    for (long step = 0; step < n - k; ++step) {
        const double u = rng.uniform() * total;
        double cum = 0;
        long c = k;
        for (long j = 0; j <= k; ++j) {
            if (w[j] <= 0) continue;
            cum += w[j];
            if (u < cum) {
                c = j;
                break;
            }
        }
        w[c] += 1.0;
        ++added[c];
        total += 1.0;
    }
    IncompleteComposition out;
    out.b = added;
    for (long j = 1; j <= k; ++j) out.b[j] += 1;
    return out;
}

// Given points W_1..W_{n+r-1}, the (n,k) composition uses W_1..W_{r+k-1} as
// dividers and the remaining n-k points as balls.
inline IncompleteComposition nested_composition_from_points(const std::vector<double>& W, long n, long k, long r) {
    require(static_cast<long>(W.size()) >= n + r - 1, "nested composition: too few points");
    std::vector<double> div(W.begin(), W.begin() + (r + k - 1));
    std::sort(div.begin(), div.end());
    IncompleteComposition out;
    out.b.assign(static_cast<std::size_t>(k + 1), 0);
    for (long j = 1; j <= k; ++j) out.b[j] = 1;
    for (long i = r + k - 1; i < n + r - 1; ++i) {
        const double x = W[i];
        // number of dividers <= x decides the interval
        const long below = static_cast<long>(std::upper_bound(div.begin(), div.end(), x) - div.begin());
        const long cell = below < r ? 0 : below - r + 1;
        ++out.b[cell];
    }
    return out;
}

// next refines prev by splitting one block (the red part may shed a new first white block)
inline bool is_refinement(const IncompleteComposition& prev, const IncompleteComposition& next) {
    if (next.k() != prev.k() + 1) return false;
    const auto& p = prev.b;
    const auto& q = next.b;
    if (q[0] + q[1] == p[0] && std::equal(q.begin() + 2, q.end(), p.begin() + 1)) return true;
    if (q[0] != p[0]) return false;
    for (long j = 1; j <= prev.k(); ++j) {
        if (q[j] + q[j + 1] != p[j]) continue;
        if (std::equal(p.begin() + 1, p.begin() + j, q.begin() + 1) &&
            std::equal(p.begin() + j + 1, p.end(), q.begin() + j + 2))
            return true;
    }
    return false;
}

// Coupled family over k = 1..n for fixed n; index k-1 holds the (n,k) composition.
inline std::vector<IncompleteComposition> nested_composition_stream(long n, const Rational& r, Rng& rng) {
    require(r.is_integer() && r.sign() > 0, "nested_composition_stream: r must be a positive integer");
    require(n >= 1, "nested_composition_stream: n must be positive");
    const long ri = r.to_int64();
    std::vector<double> W(static_cast<std::size_t>(n + ri - 1));
    for (auto& x : W) x = rng.uniform();
    std::vector<IncompleteComposition> out;
    for (long k = 1; k <= n; ++k) {
        out.push_back(nested_composition_from_points(W, n, k, ri));
        if (k > 1 && !is_refinement(out[k - 2], out[k - 1]))
            throw std::logic_error("nested_composition_stream: refinement violated");
    }
    return out;
}

// ------------------------------------------------------------------ Lah

inline long lah_sample_composition(long n, long k, const Rational& r, const Rational& s, Rng& rng) {
    detail::check_lah(n, k, r, s);
    std::vector<long> b;
    if (k == 0) b = {n};
    else b = r_composition_dirichlet(n, k, r + s, rng).b;
    const double rd = r.to_double(), sd = s.to_double();
    long z = 0;
    for (long m = 1; m <= b[0]; ++m)
        if (rng.bernoulli(sd / (rd + sd + static_cast<double>(m - 1)))) ++z;
    for (std::size_t j = 1; j < b.size(); ++j)
        for (long m = 1; m <= b[j]; ++m)
            if (rng.bernoulli(1.0 / static_cast<double>(m))) ++z;
    return z;
}

// Edges of the minimal subtree spanning the marked nodes plus every child of
// the s-root (-2). parent[] uses the split-root encoding.
inline long lah_subtree_edges(const std::vector<long>& parent, const std::vector<long>& marked_nodes) {
    const long n = static_cast<long>(parent.size()) - 1;
    std::vector<char> marked(static_cast<std::size_t>(n + 1), 0);
    long edges = 0;
    auto climb = [&](long v) {
        while (v > 0 && !marked[v]) {
            marked[v] = 1;
            ++edges;
            v = parent[v];
        }
    };
    for (long v : marked_nodes) climb(v);
    for (long l = 1; l <= n; ++l)
        if (parent[l] == -2) climb(l);
    return edges;
}

// Hoppe(n, r+s) whose root splits into an r-part (root -1) and an s-part (root -2).
// For r = s = 0 node 1 attaches to the r-part without consuming a draw.
inline long lah_sample_subtree(long n, long k, const Rational& r, const Rational& s, Rng& rng) {
    detail::check_lah(n, k, r, s);
    std::vector<long> parent(static_cast<std::size_t>(n + 1), 0);
    const std::vector<double> w{r.to_double(), s.to_double()};
    const double ws = w[0] + w[1];
    for (long l = 1; l <= n; ++l) {
        if (l == 1 && ws == 0) {
            parent[1] = -1;
            continue;
        }
        const long c = detail::choose(rng, w, ws, l - 1);
        parent[l] = c < 2 ? -(c + 1) : c - 1;
    }
    std::vector<long> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1L);
    for (long i = 0; i < k; ++i) {
        const long j = i + static_cast<long>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    return lah_subtree_edges(parent, std::vector<long>(idx.begin(), idx.begin() + k));
}

namespace detail {
inline const InverseCdf& lah_table(long n, long k, const Rational& r, const Rational& s) {
    thread_local std::map<std::string, InverseCdf> cache;
    const std::string key = std::to_string(n) + "|" + std::to_string(k) + "|" + r.str() + "|" + s.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, InverseCdf(lah_pmf(n, k, r, s))).first;
    return it->second;
}
}  // namespace detail

inline long lah_sample_direct(long n, long k, const Rational& r, const Rational& s, Rng& rng) {
    detail::check_lah(n, k, r, s);
    return detail::lah_table(n, k, r, s).sample(rng);
}

// ------------------------------------------------------------ deletion maps

inline constexpr long kBroderMaxN = 10;

// Permutations of [n+r] whose red labels n+1..n+r lie in distinct cycles. Reds
// are placed first as fixed points, then white label l starts a new cycle
// (choice 0) or becomes the image of the c-th placed label (choice c <= r+l-1).
// Each choice sequence gives a distinct permutation, so uniform choices give a
// uniform element.
inline ColoredPermutation red_separated_from_choices(long n, long r, const std::vector<long>& choices) {
    const long total = n + r;
    std::vector<long> next(static_cast<std::size_t>(total + 1));
    std::vector<long> order;
    for (long v = n + 1; v <= total; ++v) {
        next[v] = v;
        order.push_back(v);
    }
    for (long l = 1; l <= n; ++l) {
        const long c = choices[l - 1];
        if (c == 0) {
            next[l] = l;
        } else {
            const long i = order[c - 1];
            next[l] = next[i];
            next[i] = l;
        }
        order.push_back(l);
    }
    ColoredPermutation p;
    p.n = total;
    std::vector<char> seen(static_cast<std::size_t>(total + 1), 0);
    for (long v = 1; v <= total; ++v) {
        if (seen[v]) continue;
        Cycle c;
        for (long x = v; !seen[x]; x = next[x]) {
            seen[x] = 1;
            c.elems.push_back(x);
        }
        p.cycles.push_back(std::move(c));
    }
    return p;
}

inline ColoredPermutation uniform_red_separated_permutation(long n, long r, Rng& rng) {
    std::vector<long> choices(static_cast<std::size_t>(n));
    for (long l = 1; l <= n; ++l) choices[l - 1] = static_cast<long>(rng.below(static_cast<std::uint64_t>(r + l)));
    return red_separated_from_choices(n, r, choices);
}

// Deletion map: cycles holding a red label are merged and the reds removed.
inline IncompletePermutation delete_red_permutation(const ColoredPermutation& big, long n) {
    IncompletePermutation out;
    out.n = n;
    for (const auto& c : big.cycles) {
        const bool has_red = std::any_of(c.elems.begin(), c.elems.end(), [&](long v) { return v > n; });
        if (!has_red) {
            out.cycles.push_back(c.elems);
            continue;
        }
        for (long v : c.elems)
            if (v <= n) out.red.push_back(v);
    }
    out.canonicalize();
    return out;
}

// number of ways to finish placing m labels when j blocks are open
inline std::uint64_t partition_completions(long m, long j) {
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(j + m + 2), 1);
    for (long step = 1; step <= m; ++step) {
        std::vector<std::uint64_t> nxt(cur.size(), 0);
        for (long b = 0; b + 1 < static_cast<long>(cur.size()); ++b)
            nxt[b] = static_cast<std::uint64_t>(b) * cur[b] + cur[b + 1];
        cur.swap(nxt);
    }
    return cur[static_cast<std::size_t>(j)];
}

// Uniform set partition of [n+r] with red labels n+1..n+r in distinct blocks.
inline IncompletePartition uniform_red_separated_partition(long n, long r, Rng& rng) {
    std::vector<std::vector<long>> blocks;
    for (long v = n + 1; v <= n + r; ++v) blocks.push_back({v});
    for (long l = 1; l <= n; ++l) {
        const long left = n - l;
        const long j = static_cast<long>(blocks.size());
        const std::uint64_t stay = partition_completions(left, j);
        const std::uint64_t fresh = partition_completions(left, j + 1);
        const std::uint64_t u = rng.below(stay * static_cast<std::uint64_t>(j) + fresh);
        if (u < stay * static_cast<std::uint64_t>(j)) blocks[u / stay].push_back(l);
        else blocks.push_back({l});
    }
    IncompletePartition p;
    p.n = n + r;
    p.blocks = std::move(blocks);
    p.canonicalize();
    return p;
}

inline IncompletePartition delete_red_partition(const IncompletePartition& big, long n) {
    IncompletePartition out;
    out.n = n;
    for (const auto& b : big.blocks) {
        const bool has_red = std::any_of(b.begin(), b.end(), [&](long v) { return v > n; });
        if (!has_red) {
            out.blocks.push_back(b);
            continue;
        }
        for (long v : b)
            if (v <= n) out.red.push_back(v);
    }
    out.canonicalize();
    return out;
}

inline IncompletePermutation sample_broder_perm(long n, long r, Rng& rng) {
    require(n >= 0 && r >= 0, "sample_broder_perm: need n, r >= 0");
    require(n <= kBroderMaxN, "sample_broder_perm: n exceeds the enumeration guard");
    return delete_red_permutation(uniform_red_separated_permutation(n, r, rng), n);
}

inline IncompletePartition sample_broder_part(long n, long r, Rng& rng) {
    require(n >= 0 && r >= 0, "sample_broder_part: need n, r >= 0");
    require(n <= kBroderMaxN, "sample_broder_part: n exceeds the enumeration guard");
    return delete_red_partition(uniform_red_separated_partition(n, r, rng), n);
}

}  // namespace rstir
