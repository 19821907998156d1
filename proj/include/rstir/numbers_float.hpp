#pragma once

// Log-space floating point counterparts of the exact triangles. All terms in
// the recurrences are nonnegative for nonnegative parameters, so log-add-exp is
// stable. Cost is O(n^2) time and O(n) memory per row.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rstir::lf {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

inline double log_sum(const std::vector<double>& v) {
    double m = kNegInf;
    for (double x : v) m = std::max(m, x);
    if (m == kNegInf) return m;
    double s = 0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

inline double safe_log(double x) { return x > 0 ? std::log(x) : kNegInf; }

inline double log_rising(double x, long n) {
    if (n == 0) return 0.0;
    if (x <= 0) return kNegInf;
    return std::lgamma(x + static_cast<double>(n)) - std::lgamma(x);
}

inline double log_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log C(x, m) for x >= m-1 style upper index; falling factorial x..x-m+1 must be >= 0
inline double log_gen_binomial(double x, long m) {
    if (m == 0) return 0.0;
    double lo = x - static_cast<double>(m) + 1.0;
    if (lo <= 0) {
        // a zero factor appears only when x is an integer in [0, m-1]
        if (lo > -1.0 + 1e-12 && std::abs(x - std::round(x)) < 1e-12) return kNegInf;
        throw std::domain_error("log_gen_binomial: negative factors");
    }
    return std::lgamma(x + 1.0) - std::lgamma(lo) - log_factorial(m);
}

// log [n j]_r for j = 0..n
inline std::vector<double> log_r_stirling1_row(long n, double r) {
    std::vector<double> row{0.0};
    for (long m = 1; m <= n; ++m) {
        std::vector<double> cur(static_cast<std::size_t>(m + 1), kNegInf);
        const double lc = safe_log(static_cast<double>(m - 1) + r);
        for (long j = 0; j <= m; ++j) {
            double a = (j < m && lc != kNegInf) ? row[j] + lc : kNegInf;
            double b = j > 0 ? row[j - 1] : kNegInf;
            cur[j] = log_add(a, b);
        }
        row.swap(cur);
    }
    return row;
}

// log {j k}_s for j = 0..n at fixed column k
inline std::vector<double> log_r_stirling2_column(long n, long k, double s) {
    std::vector<double> out(static_cast<std::size_t>(n + 1), kNegInf);
    std::vector<double> row{0.0};
    if (k == 0) out[0] = 0.0;
    for (long j = 1; j <= n; ++j) {
        const long width = std::min(j, k);
        std::vector<double> cur(static_cast<std::size_t>(width + 1), kNegInf);
        for (long c = 0; c <= width; ++c) {
            double a = c > 0 && c - 1 < static_cast<long>(row.size()) ? row[c - 1] : kNegInf;
            double lw = safe_log(static_cast<double>(c) + s);
            double b = (c < static_cast<long>(row.size()) && lw != kNegInf) ? row[c] + lw : kNegInf;
            cur[c] = log_add(a, b);
        }
        row.swap(cur);
        if (j >= k) out[j] = row[k];
    }
    return out;
}

// log {n k}_r for k = 0..n
inline std::vector<double> log_r_stirling2_row(long n, double r) {
    std::vector<double> row{0.0};
    for (long m = 1; m <= n; ++m) {
        std::vector<double> cur(static_cast<std::size_t>(m + 1), kNegInf);
        for (long k = 0; k <= m; ++k) {
            double a = k > 0 ? row[k - 1] : kNegInf;
            double lw = safe_log(static_cast<double>(k) + r);
            double b = (k < m && lw != kNegInf) ? row[k] + lw : kNegInf;
            cur[k] = log_add(a, b);
        }
        row.swap(cur);
    }
    return row;
}

// log A(n-k, k | alpha, beta) for k = 0..n
inline std::vector<double> log_gen_eulerian_row(long n, double alpha, double beta) {
    std::vector<double> row{0.0};
    for (long m = 1; m <= n; ++m) {
        std::vector<double> cur(static_cast<std::size_t>(m + 1), kNegInf);
        for (long k = 0; k <= m; ++k) {
            double la = safe_log(static_cast<double>(m - k) + beta);
            double lb = safe_log(static_cast<double>(k) + alpha);
            double a = (k > 0 && la != kNegInf) ? row[k - 1] + la : kNegInf;
            double b = (k < m && lb != kNegInf) ? row[k] + lb : kNegInf;
            cur[k] = log_add(a, b);
        }
        row.swap(cur);
    }
    return row;
}

inline double harmonic(long n) {
    double h = 0;
    for (long m = n; m >= 1; --m) h += 1.0 / static_cast<double>(m);
    return h;
}

inline double harmonic_rs(long n, double r, double s) {
    double h = 0;
    if (s == 0) return 0;
    for (long m = n; m >= 1; --m) h += s / (r + s + static_cast<double>(m - 1));
    return h;
}

}  // namespace rstir::lf
