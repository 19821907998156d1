#pragma once

#include "rstir/combinatorics.hpp"
#include "rstir/numbers.hpp"
#include "rstir/numbers_float.hpp"
#include "rstir/pmf.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace rstir {

namespace detail {

inline std::string vec_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "]";
}

inline std::string num_str(long n) { return std::to_string(n); }

inline void require_nonneg(const Rational& x, const char* name) {
    require(x.sign() >= 0, std::string(name) + " must be nonnegative");
}

inline Rational sum(const std::vector<Rational>& v) {
    Rational s(0);
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace detail

// Laws are equal when they agree on every point of positive mass.
template <class Point>
bool same_law(const Pmf<Point, Rational>& a, const Pmf<Point, Rational>& b) {
    std::map<Point, Rational> ma, mb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a.probs[i].is_zero()) ma[a.support[i]] = a.probs[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b.probs[i].is_zero()) mb[b.support[i]] = b.probs[i];
    return ma == mb;
}

// ---------------------------------------------------------------- Stirling laws

inline FinitePmf r_stir1_pmf(long n, const Rational& tau, const Rational& r) {
    require(n >= 0, "r_stir1: n must be nonnegative");
    detail::require_nonneg(tau, "tau");
    detail::require_nonneg(r, "r");
    require((tau + r).sign() > 0, "r_stir1: tau + r must be positive");
    const Rational norm = rising_factorial(tau + r, n);
    std::vector<Rational> p;
    Rational tk(1);
    for (long k = 0; k <= n; ++k) {
        p.push_back(r_stirling1(n, k, r) * tk / norm);
        tk *= tau;
    }
    return make_range_pmf("r_stir1", {{"n", detail::num_str(n)}, {"tau", tau.str()}, {"r", r.str()}}, 0, p);
}

inline FinitePmf stir1_pmf(long n, const Rational& theta) {
    require(theta.sign() > 0, "stir1: theta must be positive");
    auto p = r_stir1_pmf(n, theta, Rational(0));
    p.family = "stir1";
    p.params = {{"n", detail::num_str(n)}, {"theta", theta.str()}};
    return p;
}

inline FinitePmf binomial_pmf(long n, const Rational& p) {
    require(n >= 0 && p.sign() >= 0 && p <= Rational(1), "binomial: invalid parameters");
    std::vector<Rational> v;
    for (long k = 0; k <= n; ++k) v.push_back(binomial(n, k) * pow(p, k) * pow(Rational(1) - p, n - k));
    return make_range_pmf("binomial", {{"n", detail::num_str(n)}, {"p", p.str()}}, 0, v);
}

// Dirichlet-multinomial with the zero-weight convention
inline VectorPmf mdir_pmf(long n, const std::vector<Rational>& alphas) {
    require(n >= 0, "mdir: n must be nonnegative");
    require(!alphas.empty(), "mdir: need at least one weight");
    for (const auto& a : alphas) detail::require_nonneg(a, "alpha");
    const Rational theta = detail::sum(alphas);
    require(theta.sign() > 0, "mdir: weights must not all be zero");
    const Rational lead = factorial(n) / rising_factorial(theta, n);
    std::map<std::vector<long>, Rational> m;
    for_each_composition(n, static_cast<long>(alphas.size()), 0, [&](const std::vector<long>& k) {
        Rational w = lead;
        for (std::size_t i = 0; i < k.size(); ++i) w *= rising_factorial(alphas[i], k[i]) / factorial(k[i]);
        m[k] = w;
    });
    return make_pmf("mdir", {{"n", detail::num_str(n)}, {"alphas", detail::vec_str(alphas)}}, m);
}

inline FinitePmf beta_binomial_pmf(long n, const Rational& a, const Rational& b) {
    require(n >= 0, "beta_binomial: n must be nonnegative");
    detail::require_nonneg(a, "a");
    detail::require_nonneg(b, "b");
    require((a + b).sign() > 0, "beta_binomial: a + b must be positive");
    const Rational norm = rising_factorial(a + b, n);
    std::vector<Rational> v;
    for (long m = 0; m <= n; ++m)
        v.push_back(binomial(n, m) * rising_factorial(a, m) * rising_factorial(b, n - m) / norm);
    return make_range_pmf("beta_binomial", {{"n", detail::num_str(n)}, {"a", a.str()}, {"b", b.str()}}, 0, v);
}

// Bin(Stir1(n, tau+r), tau/(tau+r))
inline FinitePmf r_stir1_pmf_binomial_mixture(long n, const Rational& tau, const Rational& r) {
    require((tau + r).sign() > 0, "r_stir1: tau + r must be positive");
    const Rational th = tau + r;
    auto outer = stir1_pmf(n, th);
    std::vector<Rational> v(static_cast<std::size_t>(n + 1), Rational(0));
    for (std::size_t i = 0; i < outer.size(); ++i) {
        auto inner = binomial_pmf(outer.support[i], tau / th);
        for (std::size_t j = 0; j < inner.size(); ++j) v[inner.support[j]] += outer.probs[i] * inner.probs[j];
    }
    return make_range_pmf("r_stir1", {{"n", detail::num_str(n)}, {"tau", tau.str()}, {"r", r.str()}}, 0, v);
}

// Stir1(Bin(n, Beta(tau, r)), tau)
inline FinitePmf r_stir1_pmf_beta_mixture(long n, const Rational& tau, const Rational& r) {
    auto outer = beta_binomial_pmf(n, tau, r);
    std::vector<Rational> v(static_cast<std::size_t>(n + 1), Rational(0));
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const long m = outer.support[i];
        if (outer.probs[i].is_zero()) continue;
        if (m == 0) {
            v[0] += outer.probs[i];
            continue;
        }
        auto inner = stir1_pmf(m, tau);
        for (std::size_t j = 0; j < inner.size(); ++j) v[inner.support[j]] += outer.probs[i] * inner.probs[j];
    }
    return make_range_pmf("r_stir1", {{"n", detail::num_str(n)}, {"tau", tau.str()}, {"r", r.str()}}, 0, v);
}

inline FinitePmf r_stir_sibuya_pmf(long n, long N, const Rational& r) {
    require(n >= 0, "r_stir_sibuya: n must be nonnegative");
    require(N >= 1, "r_stir_sibuya: N must be a positive integer");
    detail::require_nonneg(r, "r");
    const Rational norm = pow(Rational(N) + r, n);
    std::vector<Rational> v;
    for (long k = 0; k <= std::min(n, N); ++k)
        v.push_back(r_stirling2(n, k, r) * falling_factorial(Rational(N), k) / norm);
    return make_range_pmf("r_stir_sibuya", {{"n", detail::num_str(n)}, {"N", detail::num_str(N)}, {"r", r.str()}},
                          0, v);
}

inline FinitePmf stir_sibuya_pmf(long n, long N) {
    auto p = r_stir_sibuya_pmf(n, N, Rational(0));
    p.family = "stir_sibuya";
    p.params = {{"n", detail::num_str(n)}, {"N", detail::num_str(N)}};
    return p;
}

inline FinitePmf r_stir2_pmf(long n, const Rational& theta, const Rational& r) {
    require(n >= 1, "r_stir2: n must be positive");
    require(theta.sign() > 0, "r_stir2: theta must be positive");
    detail::require_nonneg(r, "r");
    const Rational norm = r_touchard(n, r, theta);
    std::vector<Rational> v;
    Rational tk(1);
    for (long k = 0; k <= n; ++k) {
        v.push_back(r_stirling2(n, k, r) * tk / norm);
        tk *= theta;
    }
    return make_range_pmf("r_stir2", {{"n", detail::num_str(n)}, {"theta", theta.str()}, {"r", r.str()}}, 0, v);
}

inline FinitePmf stir2_pmf(long n, const Rational& theta) {
    auto p = r_stir2_pmf(n, theta, Rational(0));
    p.family = "stir2";
    p.params = {{"n", detail::num_str(n)}, {"theta", theta.str()}};
    return p;
}

// ------------------------------------------------------ multinomial Stirling law

namespace detail {
inline void require_prob_vector(const std::vector<Rational>& p) {
    require(!p.empty(), "probability vector must be nonempty");
    for (const auto& x : p) require(x.sign() >= 0, "probability vector has a negative entry");
    require(sum(p) == Rational(1), "probability vector must sum to 1");
}
}  // namespace detail

inline VectorPmf mult_stir1_pmf(long n, const Rational& theta, const std::vector<Rational>& p) {
    require(n >= 1, "mult_stir1: n must be positive");
    require(theta.sign() > 0, "mult_stir1: theta must be positive");
    detail::require_prob_vector(p);
    const Rational norm = rising_factorial(theta, n);
    std::map<std::vector<long>, Rational> m;
    for_each_bounded_vector(n, static_cast<long>(p.size()), [&](const std::vector<long>& k) {
        Rational w = multinomial_stirling1(n, k) / norm;
        if (w.is_zero()) return;
        for (std::size_t j = 0; j < k.size(); ++j) w *= pow(theta * p[j], k[j]);
        m[k] = w;
    });
    return make_pmf("mult_stir1", {{"n", detail::num_str(n)}, {"theta", theta.str()}, {"p", detail::vec_str(p)}}, m);
}

// Mult(Stir1(n, theta), p)
inline VectorPmf mult_stir1_pmf_mixture(long n, const Rational& theta, const std::vector<Rational>& p) {
    detail::require_prob_vector(p);
    auto outer = stir1_pmf(n, theta);
    std::map<std::vector<long>, Rational> m;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const long K = outer.support[i];
        if (outer.probs[i].is_zero()) continue;
        for_each_composition(K, static_cast<long>(p.size()), 0, [&](const std::vector<long>& k) {
            Rational w = outer.probs[i] * multinomial_coefficient(k);
            for (std::size_t j = 0; j < k.size(); ++j) w *= pow(p[j], k[j]);
            if (!w.is_zero()) m[k] += w;
        });
    }
    return make_pmf("mult_stir1", {{"n", detail::num_str(n)}, {"theta", theta.str()}, {"p", detail::vec_str(p)}}, m);
}

// ---------------------------------------------------------------- compositions

namespace detail {
inline ParamList nkr(long n, long k, const Rational& r) {
    return {{"n", num_str(n)}, {"k", num_str(k)}, {"r", r.str()}};
}
inline void check_nkr(long n, long k, const Rational& r) {
    require(k >= 1 && k <= n, "composition: need 1 <= k <= n");
    require_nonneg(r, "r");
}
// C(n+r-1, k+r-1) read as C(n+r-1, n-k)
inline Rational composition_norm(long n, long k, const Rational& r) {
    return gen_binomial(Rational(n - 1) + r, n - k);
}
}  // namespace detail

inline VectorPmf composition_joint_pmf(long n, long k, const Rational& r) {
    detail::check_nkr(n, k, r);
    const Rational norm = detail::composition_norm(n, k, r);
    std::map<std::vector<long>, Rational> m;
    for (long b0 = 0; b0 <= n - k; ++b0) {
        const Rational w = gen_binomial(Rational(b0 - 1) + r, b0) / norm;
        if (w.is_zero()) continue;
        for_each_composition(n - b0, k, 1, [&](const std::vector<long>& b) {
            std::vector<long> key{b0};
            key.insert(key.end(), b.begin(), b.end());
            m[key] = w;
        });
    }
    return make_pmf("composition_joint", detail::nkr(n, k, r), m);
}

inline FinitePmf composition_marginal_b0(long n, long k, const Rational& r) {
    detail::check_nkr(n, k, r);
    const Rational norm = detail::composition_norm(n, k, r);
    std::vector<Rational> v;
    for (long x = 0; x <= n - k; ++x)
        v.push_back(binomial(n - x - 1, k - 1) * gen_binomial(Rational(x - 1) + r, x) / norm);
    return make_range_pmf("composition_marginal_b0", detail::nkr(n, k, r), 0, v);
}

inline FinitePmf composition_marginal_bj(long n, long k, const Rational& r) {
    detail::check_nkr(n, k, r);
    const Rational norm = detail::composition_norm(n, k, r);
    std::vector<Rational> v;
    for (long x = 1; x <= n - k + 1; ++x)
        v.push_back(gen_binomial(Rational(n - x - 1) + r, n - x - k + 1) / norm);
    return make_range_pmf("composition_marginal_bj", detail::nkr(n, k, r), 1, v);
}

// Joint law of (b_i, b_j) for two distinct white blocks.
inline VectorPmf composition_bivariate(long n, long k, const Rational& r) {
    detail::check_nkr(n, k, r);
    require(k >= 2, "composition_bivariate: need k >= 2");
    const Rational norm = detail::composition_norm(n, k, r);
    std::map<std::vector<long>, Rational> m;
    for (long x = 1; x <= n - k + 1; ++x)
        for (long y = 1; x + y <= n - k + 2; ++y)
            m[{x, y}] = gen_binomial(Rational(n - x - y - 1) + r, n - x - y - k + 2) / norm;
    return make_pmf("composition_bivariate", detail::nkr(n, k, r), m);
}

// ------------------------------------------------------------------ Lah law

namespace detail {
inline void check_lah(long n, long k, const Rational& r, const Rational& s) {
    require(n >= 0 && k >= 0 && k <= n, "lah: need 0 <= k <= n");
    require_nonneg(r, "r");
    require_nonneg(s, "s");
    require(k > 0 || r.sign() > 0 || s.sign() > 0, "lah: inadmissible quadruple (k = r = s = 0)");
}
inline ParamList nkrs(long n, long k, const Rational& r, const Rational& s) {
    return {{"n", num_str(n)}, {"k", num_str(k)}, {"r", r.str()}, {"s", s.str()}};
}
}  // namespace detail

inline FinitePmf lah_pmf(long n, long k, const Rational& r, const Rational& s) {
    detail::check_lah(n, k, r, s);
    const Rational norm = r_lah(n, k, (r + s) / Rational(2));
    std::vector<Rational> v;
    for (long j = k; j <= n; ++j) v.push_back(r_stirling1(n, j, r) * r_stirling2(j, k, s) / norm);
    return make_range_pmf("lah", detail::nkrs(n, k, r, s), k, v);
}

// Trivariate recursion from p_{0,0} = p_{c,c} = point masses.
inline FinitePmf lah_pmf_recursive(long n, long k, const Rational& r, const Rational& s) {
    detail::check_lah(n, k, r, s);
    const bool row0 = (r + s).sign() > 0;
    // table[m][c] holds p_{m,c}(j) for j = 0..m
    std::vector<std::vector<std::vector<Rational>>> t(static_cast<std::size_t>(n + 1));
    for (long m = 0; m <= n; ++m) {
        t[m].resize(static_cast<std::size_t>(std::min(m, k) + 1));
        for (long c = 0; c <= std::min(m, k); ++c) {
            std::vector<Rational> cur(static_cast<std::size_t>(m + 1), Rational(0));
            if (c == m) {
                cur[m] = Rational(1);
            } else if (c == 0 && !row0) {
                // inadmissible row, never weighted
            } else {
                const Rational den = Rational(m) * (Rational(m - 1) + r + s);
                const Rational a = (Rational(m - 1) + r) * Rational(m - c) / den;
                const Rational b = (Rational(c) + s) * Rational(m - c) / den;
                const Rational g = Rational(c) * (Rational(c - 1) + r + s) / den;
                const auto& prev = t[m - 1][c];
                for (long j = 0; j < m; ++j) {
                    cur[j] += a * prev[j];
                    cur[j + 1] += b * prev[j];
                }
                if (c >= 1 && !g.is_zero()) {
                    const auto& left = t[m - 1][c - 1];
                    for (long j = 0; j < m; ++j) cur[j + 1] += g * left[j];
                }
            }
            t[m][c] = std::move(cur);
        }
    }
    const auto& row = t[n][k];
    std::vector<Rational> v(row.begin() + k, row.end());
    return make_range_pmf("lah", detail::nkrs(n, k, r, s), k, v);
}

// Polynomials G_{n,k}(t) = sum_j [n j]_r {j k}_s t^j for all n <= nmax, k <= n, by
// coefficient extraction (n!/k!) [x^n] ((1-x)^{-t} - 1)^k (1-x)^{-(s t + r)}.
inline std::vector<std::vector<RPolynomial>> lah_gen_polynomial_table(long nmax, const Rational& r, const Rational& s) {
    require(nmax >= 0, "lah_gen_polynomial: nmax must be nonnegative");
    const auto ord = static_cast<std::size_t>(nmax);
    Series<RPolynomial> a(ord), b(ord);
    RPolynomial rise_t(Rational(1)), rise_st(Rational(1));
    const RPolynomial t_poly{Rational(0), Rational(1)};
    const RPolynomial st_r{r, s};
    for (std::size_t m = 0; m <= ord; ++m) {
        const Rational inv_mf = Rational(1) / factorial(static_cast<long>(m));
        if (m >= 1) a[m] = RPolynomial(inv_mf) * rise_t;
        b[m] = RPolynomial(inv_mf) * rise_st;
        rise_t = rise_t * (t_poly + RPolynomial(Rational(static_cast<long>(m))));
        rise_st = rise_st * (st_r + RPolynomial(Rational(static_cast<long>(m))));
    }
    std::vector<std::vector<RPolynomial>> out(ord + 1);
    Series<RPolynomial> ak = b;  // a^k * b
    for (std::size_t k = 0; k <= ord; ++k) {
        for (std::size_t n = k; n <= ord; ++n) {
            out[n].resize(n + 1);
            out[n][k] = RPolynomial(factorial(static_cast<long>(n)) / factorial(static_cast<long>(k))) * ak[n];
        }
        if (k < ord) ak = ak * a;
    }
    return out;
}

inline RPolynomial lah_gen_polynomial(long n, long k, const Rational& r, const Rational& s) {
    detail::check_lah(n, k, r, s);
    return lah_gen_polynomial_table(n, r, s)[n][k];
}

inline Rational lah_gen_poly(long n, long k, const Rational& r, const Rational& s, const Rational& t) {
    return lah_gen_polynomial(n, k, r, s)(t);
}

inline FinitePmf lah_pmf_from_polynomial(long n, long k, const Rational& r, const Rational& s,
                                         const RPolynomial& g) {
    detail::check_lah(n, k, r, s);
    const Rational norm = g(Rational(1));
    std::vector<Rational> v;
    for (long j = k; j <= n; ++j) v.push_back(g[static_cast<std::size_t>(j)] / norm);
    return make_range_pmf("lah", detail::nkrs(n, k, r, s), k, v);
}

inline FinitePmf lah_pmf_genpoly(long n, long k, const Rational& r, const Rational& s) {
    return lah_pmf_from_polynomial(n, k, r, s, lah_gen_polynomial(n, k, r, s));
}

inline Rational lah_mean(long n, long k, const Rational& r, const Rational& s) { return mean(lah_pmf(n, k, r, s)); }

// nk(H_n - H_{k-1})/(n-k+1), the r = s = 0 closed form
inline Rational lah_mean_standard(long n, long k) {
    require(k >= 1 && k <= n, "lah_mean_standard: need 1 <= k <= n");
    return Rational(n) * Rational(k) * (harmonic(n) - harmonic(k - 1)) / Rational(n - k + 1);
}

// --------------------------------------------------------------- Hoppe trees

inline FinitePmf hoppe_leaves_pmf(long n, const Rational& theta) {
    require(n >= 1, "hoppe_leaves: n must be positive");
    require(theta.sign() > 0, "hoppe_leaves: theta must be positive");
    const Rational norm = rising_factorial(theta, n);
    std::vector<Rational> v;
    for (long k = 1; k <= n; ++k) v.push_back(gen_eulerian(n - k, k, Rational(0), theta) / norm);
    return make_range_pmf("hoppe_leaves", {{"n", detail::num_str(n)}, {"theta", theta.str()}}, 1, v);
}

// j is a 1-based color index
inline FinitePmf multihoppe_leaves_pmf(long n, const std::vector<Rational>& thetas, long j) {
    require(n >= 1, "multihoppe_leaves: n must be positive");
    require(j >= 1 && j <= static_cast<long>(thetas.size()), "multihoppe_leaves: color index out of range");
    for (const auto& t : thetas) detail::require_nonneg(t, "theta_j");
    const Rational theta = detail::sum(thetas);
    require(theta.sign() > 0, "multihoppe_leaves: weights must not all be zero");
    const Rational tj = thetas[static_cast<std::size_t>(j - 1)];
    const Rational norm = rising_factorial(theta, n);
    std::vector<Rational> v;
    for (long k = 0; k <= n; ++k) {
        Rational acc(0);
        for (long m = k; m <= n; ++m)
            acc += binomial(n, m) * rising_factorial(theta - tj, n - m) * gen_eulerian(m - k, k, Rational(0), tj);
        v.push_back(acc / norm);
    }
    return make_range_pmf("multihoppe_leaves",
                          {{"n", detail::num_str(n)}, {"thetas", detail::vec_str(thetas)}, {"j", detail::num_str(j)}},
                          0, v);
}

inline FinitePmf subtree_leaves_pmf(long n, long ell, const Rational& theta) {
    require(ell >= 1 && ell <= n, "subtree_leaves: need 1 <= ell <= n");
    require(theta.sign() > 0, "subtree_leaves: theta must be positive");
    const long rest = n - ell;
    const Rational w = Rational(ell - 1) + theta;
    const Rational norm = rising_factorial(w + Rational(1), rest);
    std::vector<Rational> v{w / (Rational(n - 1) + theta)};
    for (long k = 1; k <= rest; ++k) {
        Rational acc(0);
        for (long m = k; m <= rest; ++m) acc += binomial(rest, m) * rising_factorial(w, rest - m) * eulerian(m, k - 1);
        v.push_back(acc / norm);
    }
    return make_range_pmf("subtree_leaves",
                          {{"n", detail::num_str(n)}, {"ell", detail::num_str(ell)}, {"theta", theta.str()}}, 0, v);
}

// E[number of nodes of component j at depth k]
inline Rational expected_profile(long n, const std::vector<Rational>& thetas, long j, long k) {
    require(k >= 1 && k <= n, "expected_profile: need 1 <= k <= n");
    require(j >= 1 && j <= static_cast<long>(thetas.size()), "expected_profile: color index out of range");
    const Rational theta = detail::sum(thetas);
    require(theta.sign() > 0, "expected_profile: weights must not all be zero");
    return thetas[static_cast<std::size_t>(j - 1)] * r_stirling1(n, k, theta) / rising_factorial(theta, n);
}

// ----------------------------------------------------------------- type laws
// A type is the vector (b0, c_1, ..., c_n): red-set size followed by the number
// of white cycles (blocks) of each size.

namespace detail {

template <class F>
VectorPmf type_law(std::string family, ParamList ps, long n, F weight) {
    std::map<std::vector<long>, Rational> m;
    for (long b0 = 0; b0 <= n; ++b0) {
        const long rest = n - b0;
        // cycle types of rest: enumerate counts c_j by descending part size
        std::vector<long> c(static_cast<std::size_t>(n + 1), 0);
        auto rec = [&](auto&& self, long left, long maxpart) -> void {
            if (left == 0) {
                std::vector<long> key{b0};
                key.insert(key.end(), c.begin() + 1, c.end());
                const Rational w = weight(b0, c);
                if (!w.is_zero()) m[key] = w;
                return;
            }
            for (long j = std::min(left, maxpart); j >= 1; --j) {
                ++c[j];
                self(self, left - j, j);
                --c[j];
            }
        };
        rec(rec, rest, rest);
    }
    return make_pmf(std::move(family), std::move(ps), m);
}

// n! / (b0! prod_j (size_weight(j))^{c_j} c_j!)
inline Rational type_count(long n, long b0, const std::vector<long>& c, bool blocks) {
    Rational den = factorial(b0);
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const Rational sj = blocks ? factorial(static_cast<long>(j)) : Rational(static_cast<long>(j));
        den *= pow(sj, c[j]) * factorial(c[j]);
    }
    return factorial(n) / den;
}

inline long total_parts(const std::vector<long>& c) {
    long k = 0;
    for (std::size_t j = 1; j < c.size(); ++j) k += c[j];
    return k;
}

}  // namespace detail

inline VectorPmf r_ewens_type_pmf(long n, const Rational& tau, const Rational& r) {
    require(tau.sign() >= 0 && r.sign() >= 0 && (tau + r).sign() > 0, "r_ewens_type: need tau, r >= 0, tau + r > 0");
    const Rational norm = rising_factorial(tau + r, n);
    return detail::type_law("r_ewens_type", {{"n", detail::num_str(n)}, {"tau", tau.str()}, {"r", r.str()}}, n,
                            [&](long b0, const std::vector<long>& c) {
                                return detail::type_count(n, b0, c, false) * pow(tau, detail::total_parts(c)) *
                                       rising_factorial(r, b0) / norm;
                            });
}

inline VectorPmf urn_partition_type_pmf(long n, long N, const Rational& r) {
    require(N >= 1 && r.sign() >= 0, "urn_partition_type: need N >= 1, r >= 0");
    const Rational norm = pow(Rational(N) + r, n);
    return detail::type_law("urn_partition_type", {{"n", detail::num_str(n)}, {"N", detail::num_str(N)}, {"r", r.str()}},
                            n, [&](long b0, const std::vector<long>& c) {
                                return detail::type_count(n, b0, c, true) *
                                       falling_factorial(Rational(N), detail::total_parts(c)) * pow(r, b0) / norm;
                            });
}

inline VectorPmf gibbs_partition_type_pmf(long n, const Rational& theta, const Rational& r) {
    require(theta.sign() > 0 && r.sign() >= 0, "gibbs_partition_type: need theta > 0, r >= 0");
    const Rational norm = r_touchard(n, r, theta);
    return detail::type_law("gibbs_partition_type",
                            {{"n", detail::num_str(n)}, {"theta", theta.str()}, {"r", r.str()}}, n,
                            [&](long b0, const std::vector<long>& c) {
                                return detail::type_count(n, b0, c, true) * pow(theta, detail::total_parts(c)) *
                                       pow(r, b0) / norm;
                            });
}

// ------------------------------------------------------------ limit laws (float)

inline constexpr double kTailCut = 1e-16;

inline FloatPmf neg_binomial_pmf(double r, double alpha) {
    require(r >= 0 && alpha > 0 && alpha <= 1, "neg_binomial: need r >= 0, 0 < alpha <= 1");
    ParamList ps{{"r", std::to_string(r)}, {"alpha", std::to_string(alpha)}};
    if (r == 0 || alpha == 1) return make_range_pmf("neg_binomial", ps, 0, std::vector<double>{1.0});
    std::vector<double> v;
    double cum = 0;
    const double la = std::log(alpha), lq = std::log1p(-alpha);
    for (long b = 0; cum < 1 - kTailCut && b < 100000000; ++b) {
        double lp = std::lgamma(b + r) - std::lgamma(r) - std::lgamma(b + 1.0) + b * lq + r * la;
        v.push_back(std::exp(lp));
        cum += v.back();
    }
    return make_range_pmf("neg_binomial", ps, 0, v);
}

inline FloatPmf geometric_pmf(double alpha) {
    require(alpha > 0 && alpha <= 1, "geometric: need 0 < alpha <= 1");
    auto nb = neg_binomial_pmf(1.0, alpha);
    FloatPmf g = make_range_pmf("geometric", {{"alpha", std::to_string(alpha)}}, 1, nb.probs);
    return g;
}

inline FloatPmf poisson_truncated_pmf(double lambda) {
    require(lambda >= 0, "poisson: lambda must be nonnegative");
    ParamList ps{{"lambda", std::to_string(lambda)}};
    if (lambda == 0) return make_range_pmf("poisson_truncated", ps, 0, std::vector<double>{1.0});
    std::vector<double> v;
    double cum = 0;
    for (long m = 0; cum < 1 - kTailCut || static_cast<double>(m) < lambda; ++m) {
        v.push_back(std::exp(-lambda + m * std::log(lambda) - std::lgamma(m + 1.0)));
        cum += v.back();
    }
    return make_range_pmf("poisson_truncated", ps, 0, v);
}

// ------------------------------------------------------------ float mirrors

namespace detail {
inline FloatPmf normalize_logs(std::string fam, ParamList ps, long lo, const std::vector<double>& logs) {
    const double z = lf::log_sum(logs);
    std::vector<double> v;
    for (double l : logs) v.push_back(l == lf::kNegInf ? 0.0 : std::exp(l - z));
    return make_range_pmf(std::move(fam), std::move(ps), lo, v);
}
}  // namespace detail

inline FloatPmf r_stir1_pmf_float(long n, double tau, double r) {
    require(n >= 0 && tau >= 0 && r >= 0 && tau + r > 0, "r_stir1: invalid parameters");
    auto row = lf::log_r_stirling1_row(n, r);
    const double lt = lf::safe_log(tau);
    for (long k = 0; k <= n; ++k)
        if (k > 0) row[k] = (lt == lf::kNegInf) ? lf::kNegInf : row[k] + k * lt;
    return detail::normalize_logs("r_stir1", {{"n", std::to_string(n)}, {"tau", std::to_string(tau)}, {"r", std::to_string(r)}},
                                  0, row);
}

inline FloatPmf stir1_pmf_float(long n, double theta) {
    require(theta > 0, "stir1: theta must be positive");
    auto p = r_stir1_pmf_float(n, theta, 0.0);
    p.family = "stir1";
    return p;
}

inline FloatPmf r_stir2_pmf_float(long n, double theta, double r) {
    require(n >= 1 && theta > 0 && r >= 0, "r_stir2: invalid parameters");
    auto row = lf::log_r_stirling2_row(n, r);
    for (long k = 1; k <= n; ++k) row[k] += k * std::log(theta);
    return detail::normalize_logs("r_stir2", {{"n", std::to_string(n)}, {"theta", std::to_string(theta)}, {"r", std::to_string(r)}},
                                  0, row);
}

inline FloatPmf r_stir_sibuya_pmf_float(long n, long N, double r) {
    require(n >= 0 && N >= 1 && r >= 0, "r_stir_sibuya: invalid parameters");
    auto row = lf::log_r_stirling2_row(n, r);
    row.resize(static_cast<std::size_t>(std::min(n, N) + 1));
    for (long k = 0; k < static_cast<long>(row.size()); ++k)
        row[k] += std::lgamma(N + 1.0) - std::lgamma(static_cast<double>(N - k) + 1.0);
    return detail::normalize_logs("r_stir_sibuya", {{"n", std::to_string(n)}, {"N", std::to_string(N)}, {"r", std::to_string(r)}},
                                  0, row);
}

inline FloatPmf lah_pmf_float(long n, long k, double r, double s) {
    require(n >= 0 && k >= 0 && k <= n && r >= 0 && s >= 0 && (k > 0 || r > 0 || s > 0),
            "lah: inadmissible quadruple");
    auto a = lf::log_r_stirling1_row(n, r);
    auto b = lf::log_r_stirling2_column(n, k, s);
    std::vector<double> l;
    for (long j = k; j <= n; ++j) l.push_back(a[j] + b[j]);
    return detail::normalize_logs("lah", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", std::to_string(r)}, {"s", std::to_string(s)}},
                                  k, l);
}

inline FloatPmf hoppe_leaves_pmf_float(long n, double theta) {
    require(n >= 1 && theta > 0, "hoppe_leaves: invalid parameters");
    auto row = lf::log_gen_eulerian_row(n, 0.0, theta);
    std::vector<double> l(row.begin() + 1, row.end());
    return detail::normalize_logs("hoppe_leaves", {{"n", std::to_string(n)}, {"theta", std::to_string(theta)}}, 1, l);
}

inline FloatPmf composition_marginal_b0_float(long n, long k, double r) {
    require(k >= 1 && k <= n && r >= 0, "composition: need 1 <= k <= n, r >= 0");
    std::vector<double> l;
    for (long x = 0; x <= n - k; ++x) {
        double lb = (r == 0) ? (x == 0 ? 0.0 : lf::kNegInf)
                             : std::lgamma(x + r) - std::lgamma(r) - lf::log_factorial(x);
        double lc = lf::log_factorial(n - x - 1) - lf::log_factorial(k - 1) - lf::log_factorial(n - x - k);
        l.push_back(lb + lc);
    }
    return detail::normalize_logs("composition_marginal_b0", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", std::to_string(r)}},
                                  0, l);
}

inline FloatPmf composition_marginal_bj_float(long n, long k, double r) {
    require(k >= 1 && k <= n && r >= 0, "composition: need 1 <= k <= n, r >= 0");
    std::vector<double> l;
    // C(n-x+r-1, n-x-k+1) = Gamma(n-x+r)/(Gamma(k+r-1) (n-x-k+1)!) ; the Gamma(k+r-1) factor cancels
    for (long x = 1; x <= n - k + 1; ++x) {
        const long m = n - x - k + 1;
        double top = static_cast<double>(n - x) + r;
        if (k + r - 1 <= 0) l.push_back(m == 0 ? 0.0 : lf::kNegInf);
        else l.push_back(std::lgamma(top) - lf::log_factorial(m));
    }
    return detail::normalize_logs("composition_marginal_bj", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", std::to_string(r)}},
                                  1, l);
}

inline FloatPmf beta_binomial_pmf_float(long n, double a, double b) {
    require(n >= 0 && a >= 0 && b >= 0 && a + b > 0, "beta_binomial: invalid parameters");
    std::vector<double> l;
    for (long m = 0; m <= n; ++m)
        l.push_back(lf::log_factorial(n) - lf::log_factorial(m) - lf::log_factorial(n - m) + lf::log_rising(a, m) +
                    lf::log_rising(b, n - m));
    return detail::normalize_logs("beta_binomial", {{"n", std::to_string(n)}, {"a", std::to_string(a)}, {"b", std::to_string(b)}},
                                  0, l);
}

// E Lah(n,k,r,s) in floating point for large n, via the composition representation:
// E[H^{(r,s)}_{b0}] + k E[H_{b1}] with b an (r+s)-composition.
inline double lah_mean_float(long n, long k, double r, double s) {
    require(n >= 0 && k >= 0 && k <= n && r >= 0 && s >= 0 && (k > 0 || r > 0 || s > 0),
            "lah_mean: inadmissible quadruple");
    if (k == 0) return lf::harmonic_rs(n, r, s);
    double e0 = 0;
    if (s > 0) {
        auto b0 = composition_marginal_b0_float(n, k, r + s);
        double h = 0;
        for (std::size_t i = 0; i < b0.size(); ++i) {
            if (i > 0) h += s / (r + s + static_cast<double>(i) - 1);
            e0 += b0.probs[i] * h;
        }
    }
    auto b1 = composition_marginal_bj_float(n, k, r + s);
    double e1 = 0, h = 0;
    for (std::size_t i = 0; i < b1.size(); ++i) {
        h += 1.0 / static_cast<double>(b1.support[i]);
        e1 += b1.probs[i] * h;
    }
    return e0 + static_cast<double>(k) * e1;
}

}  // namespace rstir
