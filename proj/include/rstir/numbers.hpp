#pragma once

#include "rstir/polynomial.hpp"
#include "rstir/rational.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstir {

inline constexpr long kExactRowLimit = 512;

inline Rational rising_factorial(const Rational& x, long n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative length");
    Rational p(1);
    for (long i = 0; i < n; ++i) p *= x + Rational(i);
    return p;
}

inline Rational falling_factorial(const Rational& x, long n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
    Rational p(1);
    for (long i = 0; i < n; ++i) p *= x - Rational(i);
    return p;
}

// C(x, m) for rational x: falling(x, m) / m!
inline Rational gen_binomial(const Rational& x, long m) {
    if (m < 0) throw std::invalid_argument("gen_binomial: negative lower index");
    return falling_factorial(x, m) / factorial(m);
}

enum class Family { stirling1, stirling2, lah, eulerian, gen_eulerian };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::stirling1: return "stirling1";
        case Family::stirling2: return "stirling2";
        case Family::lah: return "lah";
        case Family::eulerian: return "eulerian";
        case Family::gen_eulerian: return "gen_eulerian";
    }
    return "?";
}

// Dense (n,k) table of one number family at fixed parameters, filled row by row.
// gen_eulerian is stored as T[n][k] = A(n-k, k | alpha, beta).
class TriangleCache {
public:
    TriangleCache(Family f, std::vector<Rational> params) : family_(f), params_(std::move(params)) {
        std::size_t need = (f == Family::gen_eulerian) ? 2 : (f == Family::eulerian ? 0 : 1);
        if (params_.size() != need)
            throw std::invalid_argument("TriangleCache: wrong parameter count for " + family_name(f));
        rows_.push_back({Rational(1)});
    }

    Family family() const { return family_; }
    const std::vector<Rational>& params() const { return params_; }
    long rows() const { return static_cast<long>(rows_.size()); }

    Rational at(long n, long k) {
        if (n < 0 || k < 0 || k > n) return Rational(0);
        if (n > kExactRowLimit)
            throw std::length_error("exact triangle row " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(kExactRowLimit));
        while (rows() <= n) extend();
        return rows_[n][k];
    }

    const std::vector<Rational>& row(long n) {
        at(n, 0);
        return rows_[n];
    }

private:
    void extend() {
        const long n = rows();
        const auto& prev = rows_.back();
        auto p = [&](long k) { return (k < 0 || k >= n) ? Rational(0) : prev[k]; };
        std::vector<Rational> cur(n + 1);
        for (long k = 0; k <= n; ++k) {
            switch (family_) {
                case Family::stirling1:
                    cur[k] = (Rational(n - 1) + params_[0]) * p(k) + p(k - 1);
                    break;
                case Family::stirling2:
                    cur[k] = p(k - 1) + (Rational(k) + params_[0]) * p(k);
                    break;
                case Family::lah:
                    cur[k] = p(k - 1) + (Rational(n - 1 + k) + params_[0] + params_[0]) * p(k);
                    break;
                case Family::eulerian:
                    cur[k] = Rational(n - k) * p(k - 1) + Rational(k + 1) * p(k);
                    break;
                case Family::gen_eulerian:
                    cur[k] = (Rational(n - k) + params_[1]) * p(k - 1) + (Rational(k) + params_[0]) * p(k);
                    break;
            }
        }
        rows_.push_back(std::move(cur));
    }

    Family family_;
    std::vector<Rational> params_;
    std::vector<std::vector<Rational>> rows_;
};

namespace detail {

inline TriangleCache& triangle(Family f, const std::vector<Rational>& params) {
    thread_local std::map<std::string, TriangleCache> cache;
    std::string key = family_name(f);
    for (const auto& p : params) key += "|" + p.str();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, TriangleCache(f, params)).first;
    return it->second;
}

}  // namespace detail

inline Rational r_stirling1(long n, long k, const Rational& r) {
    if (n < 0) throw std::invalid_argument("r_stirling1: n < 0");
    return detail::triangle(Family::stirling1, {r}).at(n, k);
}

inline Rational r_stirling2(long n, long k, const Rational& r) {
    if (n < 0) throw std::invalid_argument("r_stirling2: n < 0");
    return detail::triangle(Family::stirling2, {r}).at(n, k);
}

inline Rational stirling1(long n, long k) { return r_stirling1(n, k, Rational(0)); }
inline Rational stirling2(long n, long k) { return r_stirling2(n, k, Rational(0)); }

// Closed form: C(n+2r-1, n-k) n!/k!
inline Rational r_lah(long n, long k, const Rational& r) {
    if (n < 0) throw std::invalid_argument("r_lah: n < 0");
    if (k < 0 || k > n) return Rational(0);
    if (n > kExactRowLimit) throw std::length_error("r_lah: n exceeds exact limit");
    return gen_binomial(Rational(n - 1) + r + r, n - k) * factorial(n) / factorial(k);
}

// Row recurrence L(n,k) = L(n-1,k-1) + (n-1+k+2r) L(n-1,k)
inline Rational r_lah_recursive(long n, long k, const Rational& r) {
    return detail::triangle(Family::lah, {r}).at(n, k);
}

// sum_j [n j]_r {j k}_s ; equals L(n,k)_{(r+s)/2}
inline Rational r_stirling_product_sum(long n, long k, const Rational& r, const Rational& s) {
    Rational acc(0);
    for (long j = k; j <= n; ++j) acc += r_stirling1(n, j, r) * r_stirling2(j, k, s);
    return acc;
}

inline Rational eulerian(long n, long k) {
    if (n < 0) throw std::invalid_argument("eulerian: n < 0");
    return detail::triangle(Family::eulerian, {}).at(n, k);
}

inline Rational gen_eulerian(long r_idx, long s_idx, const Rational& alpha, const Rational& beta) {
    if (r_idx < 0 || s_idx < 0) return Rational(0);
    return detail::triangle(Family::gen_eulerian, {alpha, beta}).at(r_idx + s_idx, s_idx);
}

inline Rational multinomial_coefficient(const std::vector<long>& ks) {
    long total = 0;
    Rational den(1);
    for (long k : ks) {
        if (k < 0) return Rational(0);
        total += k;
        den *= factorial(k);
    }
    return factorial(total) / den;
}

inline Rational multinomial_stirling1(long n, const std::vector<long>& ks) {
    long total = std::accumulate(ks.begin(), ks.end(), 0L);
    if (total > n) return Rational(0);
    return stirling1(n, total) * multinomial_coefficient(ks);
}

inline Rational multinomial_stirling2(long n, const std::vector<long>& ks) {
    long total = std::accumulate(ks.begin(), ks.end(), 0L);
    if (total > n) return Rational(0);
    return stirling2(n, total) * multinomial_coefficient(ks);
}

inline Rational r_touchard(long n, const Rational& r, const Rational& z) {
    if (n < 0) throw std::invalid_argument("r_touchard: n < 0");
    Rational acc(0), zk(1);
    for (long k = 0; k <= n; ++k) {
        acc += r_stirling2(n, k, r) * zk;
        zk *= z;
    }
    return acc;
}

inline Rational r_bell(long n, const Rational& r) { return r_touchard(n, r, Rational(1)); }

inline Rational harmonic(long n) {
    Rational h(0);
    for (long m = 1; m <= n; ++m) h += Rational(1, m);
    return h;
}

inline Rational harmonic2(long n) {
    Rational h(0);
    for (long m = 1; m <= n; ++m) h += Rational(1, m * m);
    return h;
}

// H_n^{(r,s)} = sum_{m=1}^n s/(r+s+m-1)
inline Rational harmonic_rs(long n, const Rational& r, const Rational& s) {
    Rational h(0);
    if (n <= 0 || s.is_zero()) return h;
    if ((r + s).sign() <= 0) throw std::invalid_argument("harmonic_rs: r+s must be positive when s > 0");
    for (long m = 1; m <= n; ++m) h += s / (r + s + Rational(m - 1));
    return h;
}

// n! [x^n] of the EGF of column k, for n = 0..order (zero below k).
inline std::vector<Rational> egf_coefficient_check(Family f, long k, const Rational& r, long order) {
    if (order < k) throw std::invalid_argument("egf_coefficient_check: order < k");
    if (k < 0) throw std::invalid_argument("egf_coefficient_check: k < 0");
    const auto ord = static_cast<std::size_t>(order);
    RSeries s(ord);
    if (f == Family::stirling1) {
        s = series::log_inv_one_minus(ord).pow(static_cast<unsigned>(k)) * series::inv_one_minus_pow(r, ord);
    } else if (f == Family::stirling2) {
        s = series::exp_minus_one(ord).pow(static_cast<unsigned>(k)) * series::exp_scaled(r, ord);
    } else {
        throw std::invalid_argument("egf_coefficient_check: family must be stirling1 or stirling2");
    }
    std::vector<Rational> out;
    const Rational kf = factorial(k);
    for (long n = 0; n <= order; ++n) out.push_back(s[static_cast<std::size_t>(n)] * factorial(n) / kf);
    return out;
}

// Oracle routes, independent of the row recurrences.

// {n k}_r = (1/k!) sum_j (-1)^{k-j} C(k,j) (r+j)^n
inline Rational r_stirling2_finite_difference(long n, long k, const Rational& r) {
    if (k < 0 || k > n) return Rational(0);
    Rational acc(0);
    for (long j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * pow(r + Rational(j), n);
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return acc / factorial(k);
}

// [x^k] prod_{i<n} (x+r+i)
inline Rational r_stirling1_expansion(long n, long k, const Rational& r) {
    if (k < 0 || k > n) return Rational(0);
    return rising_poly(r, n)[static_cast<std::size_t>(k)];
}

// Symbolic in r.

// [n k]_r = sum_j [n j] C(j,k) r^{j-k}
inline RPolynomial r_stirling1_poly(long n, long k) {
    std::vector<Rational> c;
    for (long j = k; j <= n; ++j) c.push_back(stirling1(n, j) * binomial(j, k));
    return RPolynomial(std::move(c));
}

// [n k]_r = sum_j C(n,j) [j k] r^{(n-j) rising}
inline RPolynomial r_stirling1_poly_alt(long n, long k) {
    RPolynomial acc;
    for (long j = k; j <= n; ++j)
        acc += RPolynomial(binomial(n, j) * stirling1(j, k)) * rising_poly(Rational(0), n - j);
    return acc;
}

// {n k}_r = sum_j C(n,j) {j k} r^{n-j}
inline RPolynomial r_stirling2_poly(long n, long k) {
    RPolynomial acc;
    for (long j = k; j <= n; ++j)
        acc += RPolynomial::monomial(static_cast<std::size_t>(n - j), binomial(n, j) * stirling2(j, k));
    return acc;
}

// {n k}_r = sum_j {n j} C(j,k) r^{(j-k) falling}
inline RPolynomial r_stirling2_poly_alt(long n, long k) {
    RPolynomial acc;
    for (long j = k; j <= n; ++j)
        acc += RPolynomial(stirling2(n, j) * binomial(j, k)) * falling_poly(Rational(0), j - k);
    return acc;
}

}  // namespace rstir
