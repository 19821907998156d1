#pragma once

#include "rstir/config.hpp"
#include "rstir/distributions.hpp"
#include "rstir/parallel.hpp"
#include "rstir/samplers.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace rstir {

struct SampleBatch {
    std::string sampler;
    ParamList params;
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    std::vector<long> values;

    long size() const { return static_cast<long>(values.size()); }

    std::map<long, double> empirical() const {
        require(!values.empty(), "SampleBatch: empty batch");
        std::map<long, double> m;
        const double w = 1.0 / static_cast<double>(values.size());
        for (long v : values) m[v] += w;
        return m;
    }
};

struct GofReport {
    std::string test;
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
    long sample_size = 0;
    ParamList params;
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    std::string note;
};

inline GofReport make_report(std::string test, double stat, double thr, long size, ParamList ps = {},
                             std::string note = {}) {
    GofReport g;
    g.test = std::move(test);
    g.statistic = stat;
    g.threshold = thr;
    g.pass = stat <= thr;  // NaN fails
    g.sample_size = size;
    g.params = std::move(ps);
    g.note = std::move(note);
    return g;
}

// two-sided band check reported as a distance outside [lo, hi]
inline GofReport make_band_report(std::string test, double value, double lo, double hi, long size, ParamList ps = {}) {
    const double outside = value < lo ? lo - value : value > hi ? value - hi : 0.0;
    std::ostringstream os;
    os << "value " << value << " band [" << lo << ", " << hi << "]";
    auto g = make_report(std::move(test), outside, 0.0, size, std::move(ps), os.str());
    if (std::isnan(value)) g.pass = false;
    return g;
}

// --------------------------------------------------------------- distances

template <class Point>
std::map<Point, double> empirical_law(const std::vector<Point>& xs) {
    require(!xs.empty(), "empirical_law: empty sample");
    std::map<Point, double> m;
    const double w = 1.0 / static_cast<double>(xs.size());
    for (const auto& x : xs) m[x] += w;
    return m;
}

template <class Point>
double tv_distance(const std::map<Point, double>& a, const std::map<Point, double>& b) {
    double s = 0;
    for (const auto& [x, p] : a) {
        auto it = b.find(x);
        s += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [x, q] : b)
        if (!a.count(x)) s += std::abs(q);
    return 0.5 * s;
}

template <class Point, class Prob>
std::map<Point, double> law_of(const Pmf<Point, Prob>& p) {
    std::map<Point, double> m;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double v;
        if constexpr (std::is_same_v<Prob, Rational>) v = p.probs[i].to_double();
        else v = p.probs[i];
        if (v != 0) m[p.support[i]] = v;
    }
    return m;
}

template <class Prob>
double tv_distance(const SampleBatch& batch, const Pmf<long, Prob>& exact) {
    return tv_distance(batch.empirical(), law_of(exact));
}

// ------------------------------------------------------------- chi-square

// Cells with expected count below min_expected are pooled into one cell
// together with any observation outside the support.
template <class Point>
GofReport chi_square_gof(const std::vector<Point>& xs, const std::map<Point, double>& exact, double min_expected,
                         double alpha, std::string name = "chi_square") {
    const double N = static_cast<double>(xs.size());
    require(N > 0, "chi_square_gof: empty sample");
    std::map<Point, long> counts;
    for (const auto& x : xs) ++counts[x];
    double stat = 0, pooled_e = 0;
    long pooled_o = 0, cells = 0;
    for (const auto& [x, p] : exact) {
        const double e = p * N;
        auto it = counts.find(x);
        const long o = it == counts.end() ? 0 : it->second;
        if (e < min_expected) {
            pooled_e += e;
            pooled_o += o;
        } else {
            stat += (o - e) * (o - e) / e;
            ++cells;
        }
    }
    for (const auto& [x, o] : counts)
        if (!exact.count(x)) pooled_o += o;
    if (pooled_o > 0 || pooled_e > 0) {
        if (pooled_e <= 0) stat = std::numeric_limits<double>::infinity();
        else stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
        ++cells;
    }
    const long df = std::max(1L, cells - 1);
    boost::math::chi_squared dist(static_cast<double>(df));
    const double thr = boost::math::quantile(boost::math::complement(dist, alpha));
    return make_report(std::move(name), stat, thr, static_cast<long>(N), {{"df", std::to_string(df)}});
}

// ---------------------------------------------------------------------- KS

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double ks_statistic(std::vector<double> x, const std::function<double(double)>& cdf) {
    require(!x.empty(), "ks: empty sample");
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double F = cdf(x[i]);
        d = std::max({d, F - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - F});
    }
    return d;
}

inline GofReport ks_vs_normal(const std::vector<double>& standardized, double sigma = 1.0, double threshold = 0.03,
                              std::string name = "ks_vs_normal") {
    const double d = ks_statistic(standardized, [sigma](double v) { return normal_cdf(v / sigma); });
    return make_report(std::move(name), d, threshold, static_cast<long>(standardized.size()),
                       {{"sigma", std::to_string(sigma)}});
}

struct Moments {
    double mean = 0, var = 0;
    long n = 0;
    double se() const { return std::sqrt(var / static_cast<double>(n)); }
};

inline Moments moments(const std::vector<double>& x) {
    Moments m;
    m.n = static_cast<long>(x.size());
    for (double v : x) m.mean += v;
    m.mean /= static_cast<double>(m.n);
    for (double v : x) m.var += (v - m.mean) * (v - m.mean);
    m.var /= static_cast<double>(m.n > 1 ? m.n - 1 : 1);
    return m;
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    const auto ma = moments(a), mb = moments(b);
    double c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += (a[i] - ma.mean) * (b[i] - mb.mean);
    c /= static_cast<double>(a.size() > 1 ? a.size() - 1 : 1);
    return c / std::sqrt(ma.var * mb.var);
}

// |mean - target| / SE against se_mult
inline GofReport mean_within_se(std::string name, const std::vector<double>& x, double target, double se_mult,
                                ParamList ps = {}) {
    const auto m = moments(x);
    const double se = m.se();
    std::ostringstream os;
    os << "mean " << m.mean << " target " << target << " se " << se;
    const double z = se > 0 ? std::abs(m.mean - target) / se : (m.mean == target ? 0.0 : INFINITY);
    return make_report(std::move(name), z, se_mult, m.n, std::move(ps), os.str());
}

// -------------------------------------------------------------- CLT checks

namespace stats_detail {

inline ParamList lah_params(long n, long k, double r, double s) {
    return {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", std::to_string(r)}, {"s", std::to_string(s)}};
}

// Lah draws by the composition route plus a U(-1/2, 1/2) jitter from the same stream.
inline std::vector<double> jittered_lah(long n, long k, const Rational& r, const Rational& s, long replicas,
                                        std::uint64_t seed, std::uint64_t stream, unsigned threads) {
    return run_replicas<double>(replicas, seed, stream, threads, [&](Rng& rng) {
        const long x = lah_sample_composition(n, k, r, s, rng);
        return static_cast<double>(x) + rng.uniform() - 0.5;
    });
}

inline void tag(std::vector<GofReport>& rs, std::uint64_t seed, std::uint64_t stream) {
    for (auto& g : rs) {
        g.seed = seed;
        g.stream_base = stream;
    }
}

}  // namespace stats_detail

inline double central_sigma2(double a) {
    require(a > 0 && a < 1, "central regime: need 0 < alpha < 1");
    const double l = std::log(a), q = 1 - a;
    return -(a / q + a * (a + 1) * l / (q * q) + a * a * l * l / (q * q * q));
}

// Constant k: scale sqrt((k+s) log n). The centering uses the exact mean; the
// asymptotic centering (k+s) log n is reported as a diagnostic together with
// the O(1) shift between the two.
inline std::vector<GofReport> clt_constant_k(long n, long k, const Rational& r, const Rational& s, long replicas,
                                             std::uint64_t seed, std::uint64_t stream, unsigned threads,
                                             double ks_tol) {
    require(k > 0 || s.sign() > 0, "clt_constant_k: need max{k, s} > 0");
    const double rd = r.to_double(), sd = s.to_double();
    const double ln = std::log(static_cast<double>(n));
    const double scale = std::sqrt((static_cast<double>(k) + sd) * ln);
    const double mu = lah_mean_float(n, k, rd, sd);
    const double mu_asym = (static_cast<double>(k) + sd) * ln;
    auto x = stats_detail::jittered_lah(n, k, r, s, replicas, seed, stream, threads);
    std::vector<double> z(x.size()), za(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = (x[i] - mu) / scale;
        za[i] = (x[i] - mu_asym) / scale;
    }
    const auto ps = stats_detail::lah_params(n, k, rd, sd);
    std::vector<GofReport> out;
    out.push_back(ks_vs_normal(z, 1.0, ks_tol, "clt_constant_k"));
    out.back().params = ps;
    auto diag = ks_vs_normal(za, 1.0, INFINITY, "clt_constant_k_asymptotic_centering");
    diag.params = ps;
    diag.note = "diagnostic only";
    out.push_back(diag);
    // shift E - (k+s) log n must settle to a constant: compare n and 2n
    const double shift1 = mu - mu_asym;
    const double shift2 = lah_mean_float(2 * n, k, rd, sd) - (static_cast<double>(k) + sd) * std::log(2.0 * n);
    std::ostringstream os;
    os << "shift(n) " << shift1 << " shift(2n) " << shift2;
    out.push_back(make_report("clt_constant_k_mean_shift", std::abs(shift2 - shift1), 0.05, 0, ps, os.str()));
    const auto m = moments(x);
    out.push_back(make_report("clt_constant_k_variance_ratio", m.var / (scale * scale), INFINITY, m.n, ps,
                              "diagnostic only"));
    stats_detail::tag(out, seed, stream);
    return out;
}

inline long intermediate_k(long n, double gamma) {
    require(gamma > 0 && gamma < 1, "clt_intermediate: need 0 < gamma < 1");
    return static_cast<long>(std::floor(std::pow(static_cast<double>(n), gamma) + 1e-9));
}

inline std::vector<GofReport> clt_intermediate(long n, double gamma, const Rational& r, const Rational& s,
                                               long replicas, std::uint64_t seed, std::uint64_t stream,
                                               unsigned threads, double ks_tol, double vlo, double vhi) {
    const long k = intermediate_k(n, gamma);
    const double rd = r.to_double(), sd = s.to_double();
    const double v = static_cast<double>(k) * std::log(static_cast<double>(n) / static_cast<double>(k));
    const double mu = lah_mean_float(n, k, rd, sd);
    auto x = stats_detail::jittered_lah(n, k, r, s, replicas, seed, stream, threads);
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - mu) / std::sqrt(v);
    auto ps = stats_detail::lah_params(n, k, rd, sd);
    ps.push_back({"gamma", std::to_string(gamma)});
    std::vector<GofReport> out;
    out.push_back(ks_vs_normal(z, 1.0, ks_tol, "clt_intermediate"));
    out.back().params = ps;
    out.push_back(make_band_report("clt_intermediate_variance_ratio", moments(x).var / v, vlo, vhi,
                                   static_cast<long>(x.size()), ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

// Central regime: scale sqrt(n), centered at the r = s = 0 mean.
inline std::vector<GofReport> clt_central(long n, double alpha, const Rational& r, const Rational& s, long replicas,
                                          std::uint64_t seed, std::uint64_t stream, unsigned threads, double ks_tol) {
    const double s2 = central_sigma2(alpha);
    const long k = static_cast<long>(std::floor(alpha * static_cast<double>(n)));
    require(k >= 1 && k < n, "clt_central: k out of range");
    const double rd = r.to_double(), sd = s.to_double();
    const double mu = static_cast<double>(n) * static_cast<double>(k) *
                      (lf::harmonic(n) - lf::harmonic(k - 1)) / static_cast<double>(n - k + 1);
    auto x = stats_detail::jittered_lah(n, k, r, s, replicas, seed, stream, threads);
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - mu) / std::sqrt(static_cast<double>(n));
    auto ps = stats_detail::lah_params(n, k, rd, sd);
    ps.push_back({"alpha", std::to_string(alpha)});
    ps.push_back({"sigma2", std::to_string(s2)});
    std::vector<GofReport> out;
    out.push_back(ks_vs_normal(z, std::sqrt(s2), ks_tol, "clt_central"));
    out.back().params = ps;
    out.push_back(make_report("clt_central_sigma2_positive", -s2, 0.0, 0, ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

// number of white blocks of size m
inline long block_count(const IncompleteComposition& c, long m) {
    long t = 0;
    for (std::size_t j = 1; j < c.b.size(); ++j)
        if (c.b[j] == m) ++t;
    return t;
}

inline std::vector<GofReport> clt_large_k(long n, long m, const Rational& r, const Rational& s, long replicas,
                                          long rho_replicas, std::uint64_t seed, std::uint64_t stream,
                                          unsigned threads, double ks_tol, const VerifyConfig& cfg) {
    const long k = n - m;
    require(m >= 1 && k >= 1, "clt_large_k: need 1 <= n-k < n");
    const double rd = r.to_double(), sd = s.to_double();
    const double mu = lah_mean_float(n, k, rd, sd);
    auto x = stats_detail::jittered_lah(n, k, r, s, replicas, seed, stream, threads);
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - mu) / std::sqrt(static_cast<double>(m));
    const auto ps = stats_detail::lah_params(n, k, rd, sd);
    std::vector<GofReport> out;
    out.push_back(ks_vs_normal(z, 0.5, ks_tol, "clt_large_k"));
    out.back().params = ps;
    out.push_back(make_band_report("clt_large_k_variance_ratio", moments(x).var / static_cast<double>(m),
                                   cfg.large_k_var_lo, cfg.large_k_var_hi, static_cast<long>(x.size()), ps));
    auto rho = run_replicas<double>(rho_replicas, seed, stream + 0x10000000ULL, threads, [&](Rng& rng) {
        auto c = r_composition_dirichlet(n, k, r + s, rng);
        return static_cast<double>(block_count(c, 2)) / static_cast<double>(m);
    });
    out.push_back(make_band_report("clt_large_k_rho2_ratio", moments(rho).mean, cfg.rho_lo, cfg.rho_hi,
                                   rho_replicas, ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

// --------------------------------------------------- composition limits

inline std::vector<GofReport> composition_limit_proportional(long n, long k, const Rational& r, long draws,
                                                             std::uint64_t seed, std::uint64_t stream,
                                                             unsigned threads, double tol) {
    auto xs = run_replicas<std::vector<long>>(draws, seed, stream, threads, [&](Rng& rng) {
        auto c = r_composition_dirichlet(n, k, r, rng);
        return std::vector<long>{c.b[0], c.b[1]};
    });
    std::vector<long> b0, b1;
    for (auto& v : xs) {
        b0.push_back(v[0]);
        b1.push_back(v[1]);
    }
    const double alpha = static_cast<double>(k) / static_cast<double>(n);
    ParamList ps{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", r.str()}};
    std::vector<GofReport> out;
    out.push_back(make_report("composition_b0_vs_negbin", tv_distance(empirical_law(b0), law_of(neg_binomial_pmf(r.to_double(), alpha))), tol, draws, ps));
    out.push_back(make_report("composition_b1_vs_geometric", tv_distance(empirical_law(b1), law_of(geometric_pmf(alpha))), tol, draws, ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

inline std::vector<GofReport> composition_limit_sublinear(long n, long k, const Rational& r, long draws,
                                                          std::uint64_t seed, std::uint64_t stream, unsigned threads,
                                                          double ks_tol) {
    const double f = static_cast<double>(k) / static_cast<double>(n);
    auto xs = run_replicas<std::vector<double>>(draws, seed, stream, threads, [&](Rng& rng) {
        auto c = r_composition_dirichlet(n, k, r, rng);
        const double u0 = rng.uniform() - 0.5, u1 = rng.uniform() - 0.5;
        return std::vector<double>{(static_cast<double>(c.b[0]) + u0) * f, (static_cast<double>(c.b[1]) + u1) * f};
    });
    std::vector<double> g0, g1;
    for (auto& v : xs) {
        g0.push_back(v[0]);
        g1.push_back(v[1]);
    }
    const double rd = r.to_double();
    ParamList ps{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", r.str()}};
    std::vector<GofReport> out;
    out.push_back(make_report("composition_b0_vs_gamma",
                              ks_statistic(g0, [rd](double v) { return v <= 0 ? 0.0 : boost::math::gamma_p(rd, v); }),
                              ks_tol, draws, ps));
    out.push_back(make_report("composition_b1_vs_exponential",
                              ks_statistic(g1, [](double v) { return v <= 0 ? 0.0 : -std::expm1(-v); }), ks_tol, draws,
                              ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

inline std::vector<GofReport> composition_limit_fixed_k(long n, long k, const Rational& r, long draws,
                                                        std::uint64_t seed, std::uint64_t stream, unsigned threads,
                                                        double se_mult) {
    auto x = run_replicas<double>(draws, seed, stream, threads, [&](Rng& rng) {
        return static_cast<double>(r_composition_dirichlet(n, k, r, rng).b[0]) / static_cast<double>(n);
    });
    const double rd = r.to_double();
    std::vector<GofReport> out{mean_within_se("composition_fixed_k_b0_fraction", x, rd / (rd + static_cast<double>(k)),
                                              se_mult, {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", r.str()}})};
    stats_detail::tag(out, seed, stream);
    return out;
}

// ------------------------------------------------ cycle counts and Stam

inline std::vector<GofReport> poisson_cycle_counts(long n, const std::vector<Rational>& thetas, long kmax,
                                                   long replicas, std::uint64_t seed, std::uint64_t stream,
                                                   unsigned threads, double se_mult, double corr_tol) {
    const int d = static_cast<int>(thetas.size());
    auto xs = run_replicas<std::vector<double>>(replicas, seed, stream, threads, [&](Rng& rng) {
        auto p = crp_colored(n, thetas, rng);
        std::vector<double> v;
        for (int j = 1; j <= d; ++j)
            for (long len = 1; len <= kmax; ++len) v.push_back(static_cast<double>(p.count(j, len)));
        return v;
    });
    std::vector<std::vector<double>> cols(xs.empty() ? 0 : xs[0].size());
    for (auto& v : xs)
        for (std::size_t c = 0; c < v.size(); ++c) cols[c].push_back(v[c]);
    std::vector<GofReport> out;
    for (int j = 1; j <= d; ++j)
        for (long len = 1; len <= kmax; ++len) {
            const auto& col = cols[static_cast<std::size_t>((j - 1) * kmax + len - 1)];
            out.push_back(mean_within_se("poisson_cycles_mean_color" + std::to_string(j) + "_len" + std::to_string(len),
                                         col, thetas[static_cast<std::size_t>(j - 1)].to_double() / static_cast<double>(len),
                                         se_mult, {{"n", std::to_string(n)}}));
        }
    double worst = 0;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = a + 1; b < cols.size(); ++b) worst = std::max(worst, std::abs(correlation(cols[a], cols[b])));
    out.push_back(make_report("poisson_cycles_max_abs_correlation", worst, corr_tol, replicas, {{"n", std::to_string(n)}}));
    stats_detail::tag(out, seed, stream);
    return out;
}

inline std::vector<GofReport> stam_checks(long n, const Rational& theta, const Rational& r, long replicas,
                                          std::uint64_t seed, std::uint64_t stream, unsigned threads, double se_mult,
                                          double corr_tol, double tv_tol) {
    detail::stam_table(n, theta, r);  // build once before fanning out; tables are per thread
    auto xs = run_replicas<std::vector<long>>(replicas, seed, stream, threads, [&](Rng& rng) {
        auto g = gibbs_r_partition(n, theta, r, rng);
        return std::vector<long>{g.empty_urns, g.partition.num_blocks()};
    });
    std::vector<double> e, b;
    std::vector<long> ei, bi;
    for (auto& v : xs) {
        e.push_back(static_cast<double>(v[0]));
        b.push_back(static_cast<double>(v[1]));
        ei.push_back(v[0]);
        bi.push_back(v[1]);
    }
    ParamList ps{{"n", std::to_string(n)}, {"theta", theta.str()}, {"r", r.str()}};
    std::vector<GofReport> out;
    out.push_back(mean_within_se("stam_empty_urn_mean", e, theta.to_double(), se_mult, ps));
    out.push_back(make_report("stam_empty_vs_blocks_abs_correlation", std::abs(correlation(e, b)), corr_tol, replicas, ps));
    out.push_back(make_report("stam_empty_urn_vs_poisson_tv",
                              tv_distance(empirical_law(ei), law_of(poisson_truncated_pmf(theta.to_double()))), tv_tol,
                              replicas, ps));
    out.push_back(make_report("stam_blocks_vs_r_stir2_tv", tv_distance(empirical_law(bi), law_of(r_stir2_pmf(n, theta, r))),
                              tv_tol, replicas, ps));
    stats_detail::tag(out, seed, stream);
    return out;
}

// ----------------------------------------------- profile and leaves

inline std::vector<GofReport> profile_checks(long n, const std::vector<Rational>& thetas, long depths, long replicas,
                                             std::uint64_t seed, std::uint64_t stream, unsigned threads,
                                             double se_mult) {
    auto xs = run_replicas<std::vector<double>>(replicas, seed, stream, threads, [&](Rng& rng) {
        auto f = hoppe_forest(n, thetas, rng);
        auto lc = f.level_counts(1);
        std::vector<double> v;
        for (long k = 1; k <= depths; ++k) v.push_back(static_cast<double>(lc[k]));
        return v;
    });
    std::vector<GofReport> out;
    for (long k = 1; k <= depths; ++k) {
        std::vector<double> col;
        for (auto& v : xs) col.push_back(v[static_cast<std::size_t>(k - 1)]);
        out.push_back(mean_within_se("profile_depth" + std::to_string(k), col,
                                     expected_profile(n, thetas, 1, k).to_double(), se_mult,
                                     {{"n", std::to_string(n)}, {"thetas", detail::vec_str(thetas)}}));
    }
    stats_detail::tag(out, seed, stream);
    return out;
}

inline std::vector<GofReport> leaves_checks(long n, const std::vector<Rational>& thetas, long replicas,
                                            std::uint64_t seed, std::uint64_t stream, unsigned threads, double tol) {
    auto xs = run_replicas<long>(replicas, seed, stream, threads,
                                 [&](Rng& rng) { return hoppe_forest(n, thetas, rng).leaves()[0]; });
    const auto exact = thetas.size() == 1 ? hoppe_leaves_pmf(n, thetas[0]) : multihoppe_leaves_pmf(n, thetas, 1);
    std::vector<GofReport> out{make_report("leaves_component1_tv", tv_distance(empirical_law(xs), law_of(exact)), tol,
                                           replicas, {{"n", std::to_string(n)}, {"thetas", detail::vec_str(thetas)}})};
    stats_detail::tag(out, seed, stream);
    return out;
}

}  // namespace rstir
