#pragma once

// Verification suites. Every check carries the acceptance criterion it backs
// (0 for supporting checks) so the acceptance runner can group them.
//   exact : identities, triangle oracles, Lah routes, mixtures    (1, 2, 4, 6)
//   oracle: brute-force enumeration vs closed forms                (3, 8)
//   mc    : sampler fidelity against exact laws                    (5, 6, 8)
//   clt   : limit theorems                                         (7)

#include "rstir/config.hpp"
#include "rstir/json_io.hpp"
#include "rstir/oracles.hpp"
#include "rstir/parallel.hpp"
#include "rstir/samplers.hpp"
#include "rstir/stats.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace rstir {

struct CheckResult {
    int criterion = 0;
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double statistic = 0;
    double threshold = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    double seconds = 0;  // wall time; kept out of the JSON so output stays reproducible
};

inline Json to_json(const CheckResult& c) {
    Json j;
    j["criterion"] = c.criterion;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["statistic"] = c.statistic;
    j["threshold"] = c.threshold;
    j["seed"] = c.seed;
    j["stream_base"] = c.stream_base;
    j["detail"] = c.detail;
    return j;
}

inline std::string csv_summary(const std::vector<CheckResult>& rs) {
    std::ostringstream os;
    os << "criterion,suite,name,pass,statistic,threshold,seed,stream_base\n";
    for (const auto& c : rs)
        os << c.criterion << ',' << c.suite << ',' << c.name << ',' << (c.pass ? "pass" : "FAIL") << ','
           << c.statistic << ',' << c.threshold << ',' << c.seed << ',' << c.stream_base << '\n';
    return os.str();
}

inline std::vector<Rational> parse_grid(std::initializer_list<const char*> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.push_back(Rational::parse(x));
    return v;
}

// stream bases come from the check name so they survive filtering
inline std::uint64_t stream_for(const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h & ~0xFFFFFFFFULL;
}

class Checker {
public:
    Checker(std::string suite, std::string filter, VerifyConfig cfg)
        : suite_(std::move(suite)), filter_(std::move(filter)), cfg_(cfg) {}

    bool wants(const std::string& name) const { return filter_.empty() || name.find(filter_) != std::string::npos; }
    const VerifyConfig& cfg() const { return cfg_; }

    // Runs body if selected; body returns pass and may fill detail. Exceptions fail the check.
    void exact(int criterion, const std::string& name, const std::function<bool(std::string&)>& body) {
        if (!wants(name)) return;
        CheckResult c{criterion, suite_, name, false, {}, 0, 0, 0, 0};
        const auto t0 = Clock::now();
        try {
            c.pass = body(c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.seconds = since(t0);
        results_.push_back(std::move(c));
    }

    // Runs a Monte Carlo body that produces reports; each report becomes a check.
    void mc(int criterion, const std::string& name,
            const std::function<std::vector<GofReport>(std::uint64_t seed, std::uint64_t stream)>& body) {
        if (!wants(name)) return;
        const std::uint64_t stream = stream_for(name);
        const auto t0 = Clock::now();
        const std::size_t first = results_.size();
        try {
            for (auto& g : body(cfg_.seed, stream)) {
                if (g.seed == 0 && g.stream_base == 0) g.seed = cfg_.seed, g.stream_base = stream;
                // diagnostics are reported but do not count toward a criterion
                const int crit = g.note == "diagnostic only" ? 0 : criterion;
                CheckResult c{crit, suite_, name + "/" + g.test, g.pass, {}, g.statistic, g.threshold, g.seed,
                              g.stream_base};
                c.detail = dump(to_json(g));
                results_.push_back(std::move(c));
            }
        } catch (const std::exception& e) {
            results_.push_back({criterion, suite_, name, false, std::string("exception: ") + e.what(), 0, 0, cfg_.seed,
                                stream});
        }
        // the whole body's time is charged to its first report
        if (results_.size() > first) results_[first].seconds = since(t0);
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    using Clock = std::chrono::steady_clock;
    static double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

    std::string suite_;
    std::string filter_;
    VerifyConfig cfg_;
    std::vector<CheckResult> results_;
};

namespace verify_detail {

inline const std::vector<Rational>& r_grid() {
    static const auto g = parse_grid({"0", "1/2", "1", "2", "7/3"});
    return g;
}

inline const std::vector<Rational>& prob_grid() {
    static const auto g = parse_grid({"0", "1/2", "1", "2"});
    return g;
}

inline RPolynomial power(const RPolynomial& p, long e) {
    RPolynomial out(Rational(1));
    for (long i = 0; i < e; ++i) out *= p;
    return out;
}

inline std::string nkrs(long n, long k, const Rational& r, const Rational& s) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + r.str() + " s=" + s.str();
}

template <class P>
bool fail(std::string& d, const std::string& what, const P&) {
    d = what;
    return false;
}

}  // namespace verify_detail

// ====================================================================== exact

inline std::vector<CheckResult> exact_suite(const VerifyConfig& cfg, const std::string& filter = {}) {
    using namespace verify_detail;
    Checker ck("exact", filter, cfg);
    const long N = 12;

    ck.exact(1, "rising_factorial_expansion", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n) {
                std::vector<Rational> c;
                for (long k = 0; k <= n; ++k) c.push_back(r_stirling1(n, k, r));
                if (RPolynomial(c) != rising_poly(r, n)) return d = "n=" + std::to_string(n) + " r=" + r.str(), false;
            }
        return true;
    });

    ck.exact(1, "falling_factorial_expansion", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n) {
                RPolynomial acc;
                for (long k = 0; k <= n; ++k) acc += RPolynomial(r_stirling2(n, k, r)) * falling_poly(Rational(0), k);
                if (acc != power(RPolynomial{r, Rational(1)}, n)) return d = "n=" + std::to_string(n) + " r=" + r.str(), false;
            }
        return true;
    });

    ck.exact(1, "stirling1_as_polynomial_in_r", [&](std::string& d) {
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= n; ++k) {
                const auto p = r_stirling1_poly(n, k);
                if (p != r_stirling1_poly_alt(n, k)) return d = "poly n=" + std::to_string(n) + " k=" + std::to_string(k), false;
                for (const auto& r : r_grid())
                    if (p(r) != r_stirling1(n, k, r)) return d = "eval n=" + std::to_string(n) + " r=" + r.str(), false;
            }
        return true;
    });

    ck.exact(1, "stirling2_as_polynomial_in_r", [&](std::string& d) {
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= n; ++k) {
                const auto p = r_stirling2_poly(n, k);
                if (p != r_stirling2_poly_alt(n, k)) return d = "poly n=" + std::to_string(n) + " k=" + std::to_string(k), false;
                for (const auto& r : r_grid())
                    if (p(r) != r_stirling2(n, k, r)) return d = "eval n=" + std::to_string(n) + " r=" + r.str(), false;
            }
        return true;
    });

    ck.exact(1, "lah_rising_falling_expansion", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n) {
                RPolynomial acc;
                for (long k = 0; k <= n; ++k) acc += RPolynomial(r_lah(n, k, r)) * falling_poly(-r, k);
                if (acc != rising_poly(r, n)) return d = "n=" + std::to_string(n) + " r=" + r.str(), false;
            }
        return true;
    });

    ck.exact(1, "lah_closed_form_equals_stirling_product", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n)
                for (long k = 0; k <= n; ++k) {
                    const auto L = r_lah(n, k, r);
                    if (L != r_stirling_product_sum(n, k, r, r) || L != r_lah_recursive(n, k, r))
                        return d = nkrs(n, k, r, r), false;
                }
        return true;
    });

    ck.exact(1, "lah_mixed_parameter_product", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (const auto& s : r_grid())
                for (long n = 0; n <= N; ++n)
                    for (long k = 0; k <= n; ++k)
                        if (r_lah(n, k, (r + s) / Rational(2)) != r_stirling_product_sum(n, k, r, s))
                            return d = nkrs(n, k, r, s), false;
        return true;
    });

    ck.exact(1, "composition_binomial_identity", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long m = 0; m <= N; ++m)
                for (long l = 0; l <= m; ++l) {
                    Rational lhs(0);
                    for (long b0 = 0; b0 <= m - l; ++b0)
                        lhs += gen_binomial(Rational(b0) + r - Rational(1), b0) * binomial(m - b0, l);
                    if (lhs != gen_binomial(Rational(m) + r, m - l))
                        return d = "m=" + std::to_string(m) + " l=" + std::to_string(l) + " r=" + r.str(), false;
                }
        return true;
    });

    // Literal statement: integer r, s <= 3, n <= 10, m < (n+r)/(k+s) (all m <= 12 when k+s = 0).
    auto orth_sum = [](long n, long k, long r, long s, long m) {
        Rational acc(0);
        for (long j = k; j <= n; ++j)
            acc += r_stirling1(n, j, Rational(r)) * r_stirling2(j, k, Rational(s)) * pow(Rational(-m), j);
        return acc;
    };
    auto orth_grid = [&](bool need_sm_ge_r, std::string& d) {
        long total = 0, bad = 0, bad_outside = 0;
        std::string first;
        for (long r = 0; r <= 3; ++r)
            for (long s = 0; s <= 3; ++s)
                for (long n = 1; n <= 10; ++n)
                    for (long k = 0; k <= n; ++k)
                        for (long m = 0; k + s > 0 ? m * (k + s) < n + r : m <= 12; ++m) {
                            if (need_sm_ge_r && s * m < r) continue;
                            ++total;
                            if (orth_sum(n, k, r, s, m).is_zero()) continue;
                            ++bad;
                            if (s * m >= r) ++bad_outside;
                            if (first.empty())
                                first = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                        " s=" + std::to_string(s) + " m=" + std::to_string(m) + " sum=" +
                                        orth_sum(n, k, r, s, m).str();
                        }
        d = std::to_string(bad) + " of " + std::to_string(total) + " sums nonzero";
        if (bad) d += "; first " + first + "; nonzero with s*m >= r: " + std::to_string(bad_outside);
        return bad == 0;
    };
    ck.exact(1, "orthogonality_as_stated", [&](std::string& d) { return orth_grid(false, d); });
    ck.exact(0, "orthogonality_when_s_m_at_least_r", [&](std::string& d) { return orth_grid(true, d); });

    // ---- criterion 2: recurrences vs independent oracles
    ck.exact(2, "stirling2_vs_finite_difference", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n)
                for (long k = 0; k <= n; ++k)
                    if (r_stirling2(n, k, r) != r_stirling2_finite_difference(n, k, r)) return d = nkrs(n, k, r, r), false;
        return true;
    });
    ck.exact(2, "stirling1_vs_product_expansion", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 0; n <= N; ++n)
                for (long k = 0; k <= n; ++k)
                    if (r_stirling1(n, k, r) != r_stirling1_expansion(n, k, r)) return d = nkrs(n, k, r, r), false;
        return true;
    });
    ck.exact(2, "generalized_eulerian_at_one_one", [&](std::string& d) {
        for (long a = 0; a <= N; ++a)
            for (long b = 0; a + b <= N; ++b)
                if (gen_eulerian(a, b, Rational(1), Rational(1)) != eulerian(a + b + 1, b))
                    return d = "r=" + std::to_string(a) + " s=" + std::to_string(b), false;
        return true;
    });
    ck.exact(0, "egf_coefficients", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long k = 0; k <= 6; ++k) {
                auto c1 = egf_coefficient_check(Family::stirling1, k, r, N);
                auto c2 = egf_coefficient_check(Family::stirling2, k, r, N);
                for (long n = 0; n <= N; ++n)
                    if (c1[n] != r_stirling1(n, k, r) || c2[n] != r_stirling2(n, k, r))
                        return d = nkrs(n, k, r, r), false;
            }
        return true;
    });
    ck.exact(0, "multinomial_stirling_reductions", [&](std::string& d) {
        // one color reduces to the plain numbers; the color generating functions
        // at x = (1/2, 2, 3) give (sum x)^{n rising} and the Touchard polynomial at sum x
        const std::vector<Rational> x = parse_grid({"1/2", "2", "3"});
        for (long n = 0; n <= 8; ++n) {
            for (long k = 0; k <= n; ++k)
                if (multinomial_stirling1(n, {k}) != stirling1(n, k) || multinomial_stirling2(n, {k}) != stirling2(n, k))
                    return d = "single color n=" + std::to_string(n), false;
            for (std::size_t dd = 1; dd <= 3; ++dd) {
                Rational g1(0), g2(0), xs(0);
                for (std::size_t j = 0; j < dd; ++j) xs += x[j];
                for_each_bounded_vector(n, static_cast<long>(dd), [&](const std::vector<long>& ks) {
                    Rational mono(1);
                    for (std::size_t j = 0; j < dd; ++j) mono *= pow(x[j], ks[j]);
                    g1 += multinomial_stirling1(n, ks) * mono;
                    g2 += multinomial_stirling2(n, ks) * mono;
                });
                if (g1 != rising_factorial(xs, n) || g2 != r_touchard(n, Rational(0), xs))
                    return d = "generating function n=" + std::to_string(n) + " d=" + std::to_string(dd), false;
            }
        }
        return true;
    });
    ck.exact(0, "r_dobinski_truncation", [&](std::string& d) {
        for (long n : {1L, 3L, 6L})
            for (const auto& r : parse_grid({"0", "1", "5/2"}))
                for (const auto& th : parse_grid({"1/2", "1", "2"})) {
                    const double target = std::exp(th.to_double()) * r_touchard(n, r, th).to_double();
                    double partial = 0;
                    for (long M = 0; M <= 60; ++M) {
                        const double rm = r.to_double() + static_cast<double>(M);
                        partial += std::pow(rm, static_cast<double>(n)) * std::pow(th.to_double(), static_cast<double>(M)) /
                                   std::tgamma(static_cast<double>(M) + 1.0);
                        const double next = std::pow(rm + 1, static_cast<double>(n)) *
                                            std::pow(th.to_double(), static_cast<double>(M + 1)) /
                                            std::tgamma(static_cast<double>(M) + 2.0);
                        // remainder bound from the next term and the geometric tail
                        const double rho = th.to_double() * std::pow((rm + 2) / (rm + 1), static_cast<double>(n)) /
                                           static_cast<double>(M + 2);
                        if (rho < 1) {
                            const double bound = next / (1 - rho) + 1e-12 * target;
                            if (std::abs(target - partial) > bound)
                                return d = "n=" + std::to_string(n) + " r=" + r.str() + " theta=" + th.str(), false;
                        }
                    }
                    if (std::abs(target - partial) > 1e-9 * target) return d = "no convergence", false;
                }
        return true;
    });
    ck.exact(0, "harmonic_bracket", [&](std::string& d) {
        // s log((r+s+n)/(r+s)) <= H_n^{(r,s)} <= s/(r+s) + s log((r+s+n-1)/(r+s))
        for (double r : {0.0, 0.5, 1.0, 2.0})
            for (double s : {0.5, 1.0, 3.0})
                for (long n = 1; n <= 2000; n *= 3) {
                    const double h = harmonic_rs(n, Rational::parse(std::to_string(static_cast<int>(r * 2)) + "/2"),
                                                 Rational::parse(std::to_string(static_cast<int>(s * 2)) + "/2"))
                                         .to_double();
                    const double lo = s * std::log((r + s + static_cast<double>(n)) / (r + s));
                    const double hi = s / (r + s) + s * std::log((r + s + static_cast<double>(n) - 1) / (r + s));
                    if (h < lo - 1e-12 || h > hi + 1e-12) return d = "n=" + std::to_string(n), false;
                }
        return true;
    });

    // ---- criterion 4: Lah pmf routes
    ck.exact(4, "lah_three_routes", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (const auto& s : r_grid())
                for (long n = 0; n <= 15; ++n)
                    for (long k = 0; k <= n; ++k) {
                        if (k == 0 && r.is_zero() && s.is_zero()) continue;
                        const auto a = lah_pmf(n, k, r, s);
                        a.validate();
                        if (!same_law(a, lah_pmf_recursive(n, k, r, s))) return d = "recursion " + nkrs(n, k, r, s), false;
                        if (!same_law(a, lah_pmf_genpoly(n, k, r, s))) return d = "polynomial " + nkrs(n, k, r, s), false;
                    }
        return true;
    });
    ck.exact(4, "lah_mean_closed_form", [&](std::string& d) {
        for (long n = 1; n <= 15; ++n)
            for (long k = 1; k <= n; ++k)
                if (lah_mean(n, k, Rational(0), Rational(0)) != lah_mean_standard(n, k))
                    return d = "n=" + std::to_string(n) + " k=" + std::to_string(k), false;
        return true;
    });
    ck.exact(0, "lah_mean_float_matches_exact", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (const auto& s : r_grid())
                for (long n = 1; n <= 40; n += 13)
                    for (long k = 0; k <= n; k += 4) {
                        if (k == 0 && r.is_zero() && s.is_zero()) continue;
                        const double e = lah_mean(n, k, r, s).to_double();
                        if (std::abs(lah_mean_float(n, k, r.to_double(), s.to_double()) - e) > 1e-10 * std::max(1.0, e))
                            return d = nkrs(n, k, r, s), false;
                    }
        return true;
    });
    ck.exact(0, "float_mirrors_match_exact", [&](std::string& d) {
        auto close = [](const FinitePmf& e, const FloatPmf& f) {
            auto le = law_of(e);
            auto lf_ = law_of(f);
            for (const auto& [x, p] : le) {
                auto it = lf_.find(x);
                const double q = it == lf_.end() ? 0.0 : it->second;
                if (std::abs(p - q) > 1e-10 * std::max(p, 1e-300) && std::abs(p - q) > 1e-300) return false;
            }
            return true;
        };
        for (long n : {1L, 7L, 30L, 120L}) {
            for (const auto& r : prob_grid())
                for (const auto& t : parse_grid({"1/2", "1", "3"})) {
                    if (!close(r_stir1_pmf(n, t, r), r_stir1_pmf_float(n, t.to_double(), r.to_double())))
                        return d = "r_stir1 n=" + std::to_string(n), false;
                    if (!close(r_stir2_pmf(n, t, r), r_stir2_pmf_float(n, t.to_double(), r.to_double())))
                        return d = "r_stir2 n=" + std::to_string(n), false;
                }
            if (!close(hoppe_leaves_pmf(n, Rational(2)), hoppe_leaves_pmf_float(n, 2.0))) return d = "leaves", false;
            if (!close(r_stir_sibuya_pmf(n, 5, Rational(1, 2)), r_stir_sibuya_pmf_float(n, 5, 0.5))) return d = "sibuya", false;
            const long k = std::max(1L, n / 3);
            if (!close(lah_pmf(n, k, Rational(1, 2), Rational(2)), lah_pmf_float(n, k, 0.5, 2.0))) return d = "lah", false;
            if (!close(composition_marginal_b0(n, k, Rational(2)), composition_marginal_b0_float(n, k, 2.0)))
                return d = "b0", false;
            if (!close(composition_marginal_bj(n, k, Rational(2)), composition_marginal_bj_float(n, k, 2.0)))
                return d = "bj", false;
        }
        return true;
    });

    // ---- criterion 6: mixture representations
    ck.exact(6, "r_stirling1_three_routes", [&](std::string& d) {
        for (const auto& t : prob_grid())
            for (const auto& r : prob_grid()) {
                if ((t + r).is_zero()) continue;
                for (long n = 0; n <= 15; ++n) {
                    const auto a = r_stir1_pmf(n, t, r);
                    if (!same_law(a, r_stir1_pmf_binomial_mixture(n, t, r)))
                        return d = "binomial mixture " + nkrs(n, 0, r, t), false;
                    if (!same_law(a, r_stir1_pmf_beta_mixture(n, t, r))) return d = "beta mixture " + nkrs(n, 0, r, t), false;
                }
            }
        return true;
    });
    ck.exact(6, "multinomial_stirling_coherence", [&](std::string& d) {
        const std::vector<std::vector<Rational>> ps = {parse_grid({"1"}), parse_grid({"1/2", "1/2"}),
                                                       parse_grid({"1/3", "2/3"}), parse_grid({"1", "0"}),
                                                       parse_grid({"1/6", "1/3", "1/2"}), parse_grid({"1/4", "0", "3/4"})};
        for (const auto& th : parse_grid({"1/2", "1", "3"}))
            for (const auto& p : ps)
                for (long n = 1; n <= 10; ++n) {
                    const auto m = mult_stir1_pmf(n, th, p);
                    m.validate();
                    if (!same_law(m, mult_stir1_pmf_mixture(n, th, p))) return d = "mixture n=" + std::to_string(n), false;
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        const Rational tj = th * p[j];
                        if (!same_law(marginal(m, j), r_stir1_pmf(n, tj, th - tj)))
                            return d = "marginal n=" + std::to_string(n), false;
                    }
                    if (p.size() >= 2) {
                        std::vector<Rational> q(p.begin(), p.end() - 1);
                        q[0] += p.back();
                        if (!same_law(aggregate(m, 0, p.size() - 1), mult_stir1_pmf(n, th, q)))
                            return d = "aggregation n=" + std::to_string(n), false;
                    }
                    if (p.size() == 1 && n >= 1 && !same_law(marginal(m, 0), stir1_pmf(n, th)))
                        return d = "one color", false;
                }
        return true;
    });

    // ---- supporting distribution invariants
    ck.exact(0, "composition_covariances_nonpositive", [&](std::string& d) {
        for (const auto& r : prob_grid())
            for (long n = 1; n <= 9; ++n)
                for (long k = 1; k <= n; ++k) {
                    const auto j = composition_joint_pmf(n, k, r);
                    std::vector<Rational> mu(static_cast<std::size_t>(k + 1), Rational(0));
                    for (std::size_t t = 0; t < j.size(); ++t)
                        for (long a = 0; a <= k; ++a) mu[a] += j.probs[t] * Rational(j.support[t][a]);
                    for (long a = 0; a <= k; ++a)
                        for (long b = a + 1; b <= k; ++b) {
                            Rational c(0);
                            for (std::size_t t = 0; t < j.size(); ++t)
                                c += j.probs[t] * (Rational(j.support[t][a]) - mu[a]) * (Rational(j.support[t][b]) - mu[b]);
                            if (c.sign() > 0) return d = nkrs(n, k, r, r), false;
                        }
                }
        return true;
    });
    ck.exact(0, "composition_means", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 1; n <= 12; ++n)
                for (long k = 1; k <= n; ++k) {
                    if (mean(composition_marginal_b0(n, k, r)) != r * Rational(n - k) / (Rational(k) + r) ||
                        mean(composition_marginal_bj(n, k, r)) != (Rational(n) + r) / (Rational(k) + r))
                        return d = nkrs(n, k, r, r), false;
                }
        return true;
    });
    ck.exact(0, "all_pmfs_sum_to_one", [&](std::string& d) {
        for (long n = 1; n <= 10; ++n)
            for (const auto& r : prob_grid()) {
                r_stir2_pmf(n, Rational(3, 2), r).validate();
                r_stir_sibuya_pmf(n, 3, r).validate();
                hoppe_leaves_pmf(n, Rational(1) + r).validate();
                multihoppe_leaves_pmf(n, {Rational(1), r}, 1).validate();
                for (long l = 1; l <= n; ++l) subtree_leaves_pmf(n, l, Rational(1) + r).validate();
                mdir_pmf(n, {Rational(1), r, Rational(1, 2)}).validate();
                beta_binomial_pmf(n, Rational(1), Rational(1) + r).validate();
                for (long k = 1; k <= n; ++k) {
                    composition_joint_pmf(n, k, r).validate();
                    if (k >= 2) composition_bivariate(n, k, r).validate();
                }
            }
        d = "ok";
        return true;
    });
    ck.exact(0, "expected_profile_sums_to_component_mean", [&](std::string& d) {
        const std::vector<Rational> th = parse_grid({"1/2", "2", "1"});
        const Rational t = th[0] + th[1] + th[2];
        for (long n = 1; n <= 30; ++n)
            for (long j = 1; j <= 3; ++j) {
                Rational acc(0);
                for (long k = 1; k <= n; ++k) acc += expected_profile(n, th, j, k);
                if (acc != Rational(n) * th[j - 1] / t) return d = "n=" + std::to_string(n), false;
            }
        return true;
    });
    return ck.take();
}

// ===================================================================== oracle

inline std::vector<CheckResult> oracle_suite(const VerifyConfig& cfg, const std::string& filter = {}) {
    using namespace verify_detail;
    Checker ck("oracle", filter, cfg);
    const std::vector<std::vector<Rational>> color_grid = {parse_grid({"1"}), parse_grid({"2"}), parse_grid({"1", "1"}),
                                                           parse_grid({"1/2", "2"}), parse_grid({"1", "0"}),
                                                           parse_grid({"1", "1/2", "2"})};

    ck.exact(3, "colored_permutations_vs_multinomial_stirling", [&](std::string& d) {
        for (const auto& th : color_grid)
            for (long n = 1; n <= (th.size() == 3 ? 6 : 7); ++n) {
                const auto rep = enumerate_colored_permutations(n, th);
                Rational t(0);
                for (const auto& x : th) t += x;
                std::vector<Rational> p;
                for (const auto& x : th) p.push_back(x / t);
                if (rep.total() != Rational(1) || !same_law(rep.to_vector_pmf(), mult_stir1_pmf(n, t, p)))
                    return d = "n=" + std::to_string(n) + " thetas=" + detail::vec_str(th), false;
                if (rep.total_weight != rising_factorial(t, n)) return d = "normalizer n=" + std::to_string(n), false;
            }
        return true;
    });
    ck.exact(3, "crp_and_feller_path_laws", [&](std::string& d) {
        for (const auto& th : color_grid)
            for (long n = 0; n <= (th.size() == 3 ? 4 : 5); ++n)
                for (bool feller : {false, true}) {
                    const auto law = colored_permutation_path_law(n, th, feller);
                    Rational tot(0);
                    for (const auto& [p, w] : law) {
                        p.validate();
                        tot += w;
                        if (w != multinomial_ewens_prob(p, th))
                            return d = std::string(feller ? "feller" : "crp") + " n=" + std::to_string(n), false;
                    }
                    if (tot != Rational(1)) return d = "mass", false;
                }
        return true;
    });
    ck.exact(3, "incomplete_permutations", [&](std::string& d) {
        for (const auto& t : prob_grid())
            for (const auto& r : prob_grid()) {
                if ((t + r).is_zero()) continue;
                for (long n = 1; n <= 6; ++n) {
                    const auto rep = enumerate_incomplete_permutations(n, t, r);
                    if (rep.total_weight != rising_factorial(t + r, n)) return d = "normalizer " + nkrs(n, 0, r, t), false;
                    if (!same_law(rep.to_pmf(0), r_stir1_pmf(n, t, r))) return d = "cycles " + nkrs(n, 0, r, t), false;
                    const auto types = enumerate_incomplete_permutations(n, t, r, inc_perm_type_stat);
                    if (!same_law(types.to_vector_pmf(), r_ewens_type_pmf(n, t, r))) return d = "types " + nkrs(n, 0, r, t), false;
                }
            }
        // object count sum_b C(n,b) b! when every object has positive weight
        const auto rep = enumerate_incomplete_permutations(6, Rational(1), Rational(1));
        long expect = 0;
        for (long b = 0; b <= 6; ++b) expect += binomial(6, b).to_int64() * factorial(b).to_int64();
        if (rep.object_count != expect) return d = "object count", false;
        return true;
    });
    ck.exact(3, "cycle_type_sums_give_r_stirling", [&](std::string& d) {
        // [n k]_r and {n k}_r as sums over (b0, cycle/block type) with k white parts
        for (const auto& r : r_grid())
            for (long n = 0; n <= 7; ++n) {
                std::vector<Rational> s1(static_cast<std::size_t>(n + 1), Rational(0)), s2 = s1;
                detail::type_law("t", {}, n, [&](long b0, const std::vector<long>& c) {
                    const long k = detail::total_parts(c);
                    s1[k] += detail::type_count(n, b0, c, false) * rising_factorial(r, b0);
                    s2[k] += detail::type_count(n, b0, c, true) * pow(r, b0);
                    return Rational(1);
                });
                for (long k = 0; k <= n; ++k)
                    if (s1[k] != r_stirling1(n, k, r) || s2[k] != r_stirling2(n, k, r)) return d = nkrs(n, k, r, r), false;
            }
        return true;
    });
    ck.exact(3, "urn_partitions", [&](std::string& d) {
        for (const auto& r : prob_grid())
            for (long N = 1; N <= 4; ++N)
                for (long n = 1; n <= 7; ++n) {
                    const auto rep = enumerate_incomplete_partitions_urn(n, N, r);
                    if (!same_law(rep.to_pmf(0), r_stir_sibuya_pmf(n, N, r))) return d = "blocks n=" + std::to_string(n), false;
                    const auto types = enumerate_incomplete_partitions_urn(n, N, r, inc_part_type_stat);
                    if (!same_law(types.to_vector_pmf(), urn_partition_type_pmf(n, N, r))) return d = "types", false;
                    if (n <= 5 && !r.is_zero()) {
                        // ball-placement enumeration agrees object by object via the type law
                        const auto balls = enumerate_urn_placements(n, N, r, inc_part_type_stat);
                        if (!same_law(balls.to_vector_pmf(), types.to_vector_pmf()))
                            return d = "placements n=" + std::to_string(n) + " N=" + std::to_string(N), false;
                        if (balls.total_weight != pow(Rational(N) + r, n)) return d = "placement mass", false;
                    }
                }
        return true;
    });
    ck.exact(3, "gibbs_partitions", [&](std::string& d) {
        for (const auto& r : prob_grid())
            for (const auto& th : parse_grid({"1/2", "1", "2"}))
                for (long n = 1; n <= 7; ++n) {
                    const auto rep = enumerate_incomplete_partitions_gibbs(n, th, r);
                    if (rep.total_weight != r_touchard(n, r, th)) return d = "normalizer " + nkrs(n, 0, r, th), false;
                    if (!same_law(rep.to_pmf(0), r_stir2_pmf(n, th, r))) return d = "blocks", false;
                    const auto types = enumerate_incomplete_partitions_gibbs(n, th, r, inc_part_type_stat);
                    if (!same_law(types.to_vector_pmf(), gibbs_partition_type_pmf(n, th, r))) return d = "types", false;
                }
        // all incomplete partitions of [n] counted: r-Bell with r = 1
        for (long n = 1; n <= 9; ++n)
            if (Rational(enumerate_incomplete_partitions_gibbs(n, Rational(1), Rational(1)).object_count) !=
                r_bell(n, Rational(1)))
                return d = "count n=" + std::to_string(n), false;
        return true;
    });
    ck.exact(3, "incomplete_compositions", [&](std::string& d) {
        for (const auto& r : r_grid())
            for (long n = 1; n <= 12; ++n)
                for (long k = 1; k <= n; ++k) {
                    const auto rep = enumerate_incomplete_compositions(n, k, r);
                    const auto joint = rep.to_vector_pmf();
                    if (rep.object_count != binomial(n, k).to_int64() || count_incomplete_compositions(n, k) != rep.object_count)
                        return d = "count " + nkrs(n, k, r, r), false;
                    if (rep.total_weight != gen_binomial(Rational(n - 1) + r, n - k)) return d = "normalizer", false;
                    if (!same_law(joint, composition_joint_pmf(n, k, r))) return d = "joint " + nkrs(n, k, r, r), false;
                    if (!same_law(marginal(joint, 0), composition_marginal_b0(n, k, r))) return d = "b0", false;
                    for (long j = 1; j <= k; ++j)
                        if (!same_law(marginal(joint, static_cast<std::size_t>(j)), composition_marginal_bj(n, k, r)))
                            return d = "bj " + nkrs(n, k, r, r), false;
                    if (k >= 2) {
                        std::map<std::vector<long>, Rational> bi;
                        for (std::size_t t = 0; t < joint.size(); ++t) bi[{joint.support[t][1], joint.support[t][2]}] += joint.probs[t];
                        if (!same_law(make_pmf("b", {}, bi), composition_bivariate(n, k, r))) return d = "bivariate", false;
                    }
                    // given b0 the white parts are uniform over compositions of n - b0
                    std::map<long, std::vector<Rational>> by_b0;
                    for (std::size_t t = 0; t < joint.size(); ++t) by_b0[joint.support[t][0]].push_back(joint.probs[t]);
                    for (const auto& [b0, ps] : by_b0)
                        for (const auto& p : ps)
                            if (p != ps.front()) return d = "conditional uniformity", false;
                }
        return true;
    });
    ck.exact(3, "hoppe_forest_laws", [&](std::string& d) {
        for (const auto& th : color_grid)
            for (long n = 1; n <= 5; ++n) {
                const long dd = static_cast<long>(th.size());
                Rational t(0);
                for (const auto& x : th) t += x;
                std::vector<Rational> p;
                for (const auto& x : th) p.push_back(x / t);
                auto sizes = enumerate_attachment_histories(n, th, [](const HoppeForest& f) { return f.component_sizes(); });
                if (!same_law(sizes.to_vector_pmf(), mdir_pmf(n, th))) return d = "sizes n=" + std::to_string(n), false;
                auto deg = enumerate_attachment_histories(n, th, [](const HoppeForest& f) { return f.root_degrees(); });
                if (!same_law(deg.to_vector_pmf(), mult_stir1_pmf(n, t, p))) return d = "root degrees", false;
                for (long j = 1; j <= dd; ++j) {
                    auto lv = enumerate_attachment_histories(
                        n, th, [j](const HoppeForest& f) { return std::vector<long>{f.leaves()[j - 1]}; });
                    if (!same_law(lv.to_pmf(0), multihoppe_leaves_pmf(n, th, j)))
                        return d = "leaves n=" + std::to_string(n) + " j=" + std::to_string(j), false;
                }
                if (dd == 1) {
                    auto lv = enumerate_attachment_histories(n, th, [](const HoppeForest& f) { return std::vector<long>{f.leaves()[0]}; });
                    if (!same_law(lv.to_pmf(0), hoppe_leaves_pmf(n, th[0]))) return d = "hoppe leaves", false;
                    for (long l = 1; l <= n; ++l) {
                        auto st = enumerate_attachment_histories(
                            n, th, [l](const HoppeForest& f) { return std::vector<long>{f.subtree_leaves(l)}; });
                        if (!same_law(st.to_pmf(0), subtree_leaves_pmf(n, l, th[0])))
                            return d = "subtree leaves n=" + std::to_string(n) + " l=" + std::to_string(l), false;
                    }
                }
            }
        return true;
    });
    ck.exact(3, "r_hoppe_tree_law", [&](std::string& d) {
        for (const auto& tau : prob_grid())
            for (const auto& r : prob_grid()) {
                if ((tau + r).is_zero()) continue;
                for (long n = 1; n <= 4; ++n) {
                    std::map<std::vector<long>, Rational> law;
                    for_each_attachment_history(n, {tau, r}, [&](const HoppeForest& f, const Rational& w) {
                        auto c = f.components();
                        std::vector<long> key;
                        for (long l = 1; l <= n; ++l) key.push_back(c[l] == 1 ? f.parent[l] : -99);
                        law[key] += w;
                    });
                    for (const auto& [key, w] : law) {
                        long b = 0, deg0 = 0;
                        for (long v : key) {
                            if (v != -99) ++b;
                            if (v == -1) ++deg0;
                        }
                        if (w != rising_factorial(r, n - b) * pow(tau, deg0) / rising_factorial(tau + r, n))
                            return d = nkrs(n, 0, r, tau), false;
                    }
                }
            }
        return true;
    });
    ck.exact(3, "lah_by_history_enumeration", [&](std::string& d) {
        const auto g = parse_grid({"0", "1/2", "1", "2"});
        for (const auto& r : g)
            for (const auto& s : g)
                for (long n = 0; n <= 6; ++n)
                    for (long k = 0; k <= n; ++k) {
                        if (k == 0 && r.is_zero() && s.is_zero()) continue;
                        if (!same_law(lah_distribution_by_enumeration(n, k, r, s).to_pmf(0), lah_pmf(n, k, r, s)))
                            return d = nkrs(n, k, r, s), false;
                    }
        return true;
    });
    ck.exact(3, "deletion_map_fibers", [&](std::string& d) {
        for (long r = 0; r <= 3; ++r)
            for (long n = 0; n <= 6; ++n) {
                const Rational R(r);
                const auto pf = broder_permutation_fibers(n, r);
                if (Rational(pf.domain_size) != rising_factorial(R + Rational(1), n)) return d = "perm count", false;
                const auto qf = broder_partition_fibers(n, r);
                if (Rational(qf.domain_size) != r_bell(n, R)) return d = "partition count", false;
                if (n > 5) continue;
                std::map<long, Rational> cyc, blk;
                for (const auto& [ip, cnt] : pf.perm_fibers) {
                    if (Rational(cnt) != rising_factorial(R, static_cast<long>(ip.red.size())))
                        return d = "perm fiber n=" + std::to_string(n) + " r=" + std::to_string(r), false;
                    cyc[ip.num_cycles()] += Rational(cnt) / Rational(pf.domain_size);
                }
                for (const auto& [ip, cnt] : qf.part_fibers) {
                    if (Rational(cnt) != pow(R, static_cast<long>(ip.red.size())))
                        return d = "partition fiber n=" + std::to_string(n) + " r=" + std::to_string(r), false;
                    blk[ip.num_blocks()] += Rational(cnt) / Rational(qf.domain_size);
                }
                if (n >= 1) {
                    if (!same_law(make_pmf("c", {}, cyc), r_stir1_pmf(n, Rational(1), R))) return d = "perm pushforward", false;
                    if (!same_law(make_pmf("b", {}, blk), r_stir2_pmf(n, Rational(1), R))) return d = "partition pushforward", false;
                }
                // every incomplete object is hit when r > 0
                if (r > 0) {
                    auto all = enumerate_incomplete_permutations(n, Rational(1), R);
                    if (static_cast<long>(pf.perm_fibers.size()) != all.object_count) return d = "perm surjectivity", false;
                    auto allp = enumerate_incomplete_partitions_gibbs(n, Rational(1), R);
                    if (static_cast<long>(qf.part_fibers.size()) != allp.object_count) return d = "partition surjectivity", false;
                }
            }
        return true;
    });
    ck.exact(3, "broder_permutation_sampler_is_uniform", [&](std::string& d) {
        // every choice sequence yields a distinct red-separated permutation
        for (long r = 0; r <= 3; ++r)
            for (long n = 0; n <= 5; ++n) {
                std::vector<long> radix;
                for (long l = 1; l <= n; ++l) radix.push_back(r + l);
                std::map<ColoredPermutation, long> seen;
                long paths = 0;
                oracle_detail::for_each_choice_sequence(radix, [&](const std::vector<long>& c) {
                    auto p = red_separated_from_choices(n, r, c);
                    p.canonicalize();
                    ++seen[p];
                    ++paths;
                });
                if (static_cast<long>(seen.size()) != paths) return d = "collision", false;
                if (Rational(paths) != rising_factorial(Rational(r + 1), n)) return d = "path count", false;
                const auto pf = broder_permutation_fibers(n, r);
                if (pf.domain_size != paths) return d = "domain", false;
            }
        return true;
    });

    // ---- criterion 8, exact part
    ck.exact(8, "expected_profile_by_histories", [&](std::string& d) {
        for (const auto& th : color_grid)
            for (long n = 1; n <= 4; ++n)
                for (long j = 1; j <= static_cast<long>(th.size()); ++j) {
                    auto e = expected_by_histories(n, th, [j](const HoppeForest& f) { return f.level_counts(static_cast<int>(j)); });
                    for (long k = 1; k <= n; ++k)
                        if (e[k] != expected_profile(n, th, j, k)) return d = "n=" + std::to_string(n), false;
                }
        return true;
    });
    return ck.take();
}

// ========================================================================= mc

namespace verify_detail {

template <class Point, class Prob, class F>
std::vector<GofReport> fidelity(const std::string& sampler, const Pmf<Point, Prob>& exact, long draws, std::uint64_t seed,
                                std::uint64_t stream, const VerifyConfig& cfg, F f) {
    auto xs = run_replicas<Point>(draws, seed, stream, cfg.threads, f);
    const auto law = law_of(exact);
    std::vector<GofReport> out;
    out.push_back(make_report("tv", tv_distance(empirical_law(xs), law), cfg.tv_tol, draws, exact.params));
    out.push_back(chi_square_gof(xs, law, cfg.chi_min_expected, cfg.chi_alpha, "chi_square"));
    for (auto& g : out) g.note = sampler;
    return out;
}

template <class Point, class F, class G>
GofReport pair_tv(long draws, std::uint64_t seed, std::uint64_t stream, const VerifyConfig& cfg, double tol, F f, G g,
                  std::string name) {
    auto a = run_replicas<Point>(draws, seed, stream, cfg.threads, f);
    auto b = run_replicas<Point>(draws, seed, stream + 0x80000000ULL, cfg.threads, g);
    return make_report(std::move(name), tv_distance(empirical_law(a), empirical_law(b)), tol, draws);
}

}  // namespace verify_detail

inline std::vector<CheckResult> mc_suite(const VerifyConfig& cfg, const std::string& filter = {}) {
    using namespace verify_detail;
    Checker ck("mc", filter, cfg);
    const long D = cfg.scaled(cfg.mc_draws);
    const auto P = [](const char* s) { return Rational::parse(s); };

    auto cycle_counts_of = [](const ColoredPermutation& p) { return p.cycle_counts(); };

    ck.mc(5, "feller_colored_cycle_counts", [&](auto seed, auto stream) {
        const std::vector<Rational> th{P("1"), P("1")};
        return fidelity("feller_colored", mult_stir1_pmf(6, P("2"), {P("1/2"), P("1/2")}), D, seed, stream, cfg,
                        [&](Rng& g) { return cycle_counts_of(feller_colored(6, th, g)); });
    });
    ck.mc(5, "crp_colored_cycle_counts", [&](auto seed, auto stream) {
        const std::vector<Rational> th{P("1"), P("2")};
        return fidelity("crp_colored", mult_stir1_pmf(6, P("3"), {P("1/3"), P("2/3")}), D, seed, stream, cfg,
                        [&](Rng& g) { return cycle_counts_of(crp_colored(6, th, g)); });
    });
    ck.mc(5, "crp_tables_one_color", [&](auto seed, auto stream) {
        return fidelity("crp_colored", stir1_pmf(30, P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return static_cast<long>(crp_colored(30, {P("1")}, g).cycles.size()); });
    });
    ck.mc(5, "feller_cycles_one_color", [&](auto seed, auto stream) {
        return fidelity("feller_colored", stir1_pmf(30, P("5/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return static_cast<long>(feller_colored(30, {P("5/2")}, g).cycles.size()); });
    });
    ck.mc(5, "r_ewens_cycles", [&](auto seed, auto stream) {
        return fidelity("r_ewens", r_stir1_pmf(30, P("1"), P("2")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_ewens(30, P("1"), P("2"), g).num_cycles(); });
    });
    ck.mc(5, "r_ewens_red_set_size", [&](auto seed, auto stream) {
        // |B0| ~ BetaBin(n, r, tau)
        return fidelity("r_ewens", beta_binomial_pmf(12, P("3/2"), P("1/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return static_cast<long>(r_ewens(12, P("1/2"), P("3/2"), g).red.size()); });
    });
    ck.mc(5, "hoppe_forest_component_size", [&](auto seed, auto stream) {
        return fidelity("hoppe_forest", beta_binomial_pmf(20, P("1"), P("5/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return hoppe_forest(20, {P("1"), P("2"), P("1/2")}, g).component_sizes()[0]; });
    });
    ck.mc(5, "hoppe_forest_root_degrees", [&](auto seed, auto stream) {
        return fidelity("hoppe_forest", mult_stir1_pmf(8, P("3"), {P("1/3"), P("2/3")}), D, seed, stream, cfg,
                        [&](Rng& g) { return hoppe_forest(8, {P("1"), P("2")}, g).root_degrees(); });
    });
    ck.mc(5, "hoppe_tree_leaves", [&](auto seed, auto stream) {
        return fidelity("hoppe_forest", hoppe_leaves_pmf(25, P("2")), D, seed, stream, cfg,
                        [&](Rng& g) { return hoppe_forest(25, {P("2")}, g).leaves()[0]; });
    });
    ck.mc(5, "multihoppe_leaves", [&](auto seed, auto stream) {
        return fidelity("hoppe_forest", multihoppe_leaves_pmf(15, {P("1"), P("1")}, 1), D, seed, stream, cfg,
                        [&](Rng& g) { return hoppe_forest(15, {P("1"), P("1")}, g).leaves()[0]; });
    });
    ck.mc(5, "subtree_leaves", [&](auto seed, auto stream) {
        return fidelity("hoppe_forest", subtree_leaves_pmf(20, 3, P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return hoppe_forest(20, {P("1")}, g).subtree_leaves(3); });
    });
    ck.mc(5, "r_hoppe_tree_root_degree", [&](auto seed, auto stream) {
        return fidelity("r_hoppe_tree", r_stir1_pmf(20, P("1"), P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_hoppe_tree(20, P("1"), P("1"), g).root_degree; });
    });
    ck.mc(5, "urn_partition_blocks", [&](auto seed, auto stream) {
        return fidelity("urn_incomplete_partition", r_stir_sibuya_pmf(12, 4, P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return urn_incomplete_partition(12, 4, P("1"), g).num_blocks(); });
    });
    ck.mc(5, "urn_partition_types", [&](auto seed, auto stream) {
        return fidelity("urn_incomplete_partition", urn_partition_type_pmf(3, 2, P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return inc_part_type_stat(urn_incomplete_partition(3, 2, P("1"), g)); });
    });
    ck.mc(5, "gibbs_partition_blocks", [&](auto seed, auto stream) {
        return fidelity("gibbs_r_partition", r_stir2_pmf(12, P("2"), P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return gibbs_r_partition(12, P("2"), P("1"), g).partition.num_blocks(); });
    });
    ck.mc(5, "gibbs_partition_types", [&](auto seed, auto stream) {
        return fidelity("gibbs_r_partition", gibbs_partition_type_pmf(4, P("1"), P("1/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return inc_part_type_stat(gibbs_r_partition(4, P("1"), P("1/2"), g).partition); });
    });
    ck.mc(5, "gibbs_uniform_when_theta_one", [&](auto seed, auto stream) {
        // theta = 1, r = 0: uniform over the 52 set partitions of [5]
        std::map<std::vector<long>, Rational> u;
        const auto rep = enumerate_incomplete_partitions_gibbs(5, P("1"), P("0"), [](const IncompletePartition& p) {
            std::vector<long> rgs(static_cast<std::size_t>(p.n), 0);
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                for (long v : p.blocks[b]) rgs[v - 1] = static_cast<long>(b);
            return rgs;
        });
        return fidelity("gibbs_r_partition", rep.to_vector_pmf(), D, seed, stream, cfg, [&](Rng& g) {
            auto p = gibbs_r_partition(5, P("1"), P("0"), g).partition;
            std::vector<long> rgs(5, 0);
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                for (long v : p.blocks[b]) rgs[v - 1] = static_cast<long>(b);
            return rgs;
        });
    });
    ck.mc(5, "composition_dirichlet_joint", [&](auto seed, auto stream) {
        return fidelity("r_composition_dirichlet", composition_joint_pmf(4, 2, P("1")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_composition_dirichlet(4, 2, P("1"), g).b; });
    });
    ck.mc(5, "composition_polya_joint", [&](auto seed, auto stream) {
        return fidelity("r_composition_polya", composition_joint_pmf(5, 2, P("1/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_composition_polya(5, 2, P("1/2"), g).b; });
    });
    ck.mc(5, "composition_dirichlet_b0", [&](auto seed, auto stream) {
        return fidelity("r_composition_dirichlet", composition_marginal_b0(30, 5, P("1/2")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_composition_dirichlet(30, 5, P("1/2"), g).b[0]; });
    });
    ck.mc(5, "composition_polya_b1", [&](auto seed, auto stream) {
        return fidelity("r_composition_polya", composition_marginal_bj(30, 5, P("2")), D, seed, stream, cfg,
                        [&](Rng& g) { return r_composition_polya(30, 5, P("2"), g).b[1]; });
    });
    ck.mc(5, "composition_dirichlet_vs_polya", [&](auto seed, auto stream) {
        std::vector<GofReport> out;
        for (int coord : {0, 1, 3}) {
            auto g = pair_tv<long>(
                D, seed, stream + static_cast<std::uint64_t>(coord) * 0x100000000ULL, cfg, cfg.tv_tol,
                [&](Rng& r) { return r_composition_dirichlet(10, 3, P("2"), r).b[coord]; },
                [&](Rng& r) { return r_composition_polya(10, 3, P("2"), r).b[coord]; }, "tv_b" + std::to_string(coord));
            out.push_back(g);
        }
        out.push_back(pair_tv<std::vector<long>>(
            D, seed, stream + 0x400000000ULL, cfg, cfg.tv_tol, [&](Rng& r) { return r_composition_dirichlet(5, 2, P("2"), r).b; },
            [&](Rng& r) { return r_composition_polya(5, 2, P("2"), r).b; }, "tv_joint_n5_k2"));
        return out;
    });
    ck.mc(5, "nested_composition_stream", [&](auto seed, auto stream) {
        auto out = fidelity("nested_composition_stream", composition_joint_pmf(5, 2, P("2")), D, seed, stream, cfg,
                            [&](Rng& g) { return nested_composition_stream(5, P("2"), g)[1].b; });
        auto more = fidelity("nested_composition_stream", composition_marginal_b0(12, 4, P("1")), D, seed,
                             stream + 0x100000000ULL, cfg, [&](Rng& g) { return nested_composition_stream(12, P("1"), g)[3].b[0]; });
        out.insert(out.end(), more.begin(), more.end());
        return out;
    });

    // Lah samplers: each route against the exact pmf, and pairwise
    struct LahCase {
        long n, k;
        const char* r;
        const char* s;
    };
    const std::vector<LahCase> lah_cases = {{6, 2, "1", "0"},       {10, 3, "0", "0"},  {10, 3, "1", "0"},
                                            {10, 3, "1/2", "1/2"}, {10, 3, "2", "1"},  {25, 5, "0", "0"},
                                            {25, 5, "1", "0"},     {25, 5, "1/2", "1/2"}, {25, 5, "2", "1"},
                                            {12, 0, "1", "2"},     {8, 8, "1", "1"}};
    for (const auto& c : lah_cases) {
        const std::string tag = "lah_n" + std::to_string(c.n) + "_k" + std::to_string(c.k) + "_r" + c.r + "_s" + c.s;
        const Rational r = P(c.r), s = P(c.s);
        const long n = c.n, k = c.k;
        ck.mc(5, tag, [&, r, s, n, k](auto seed, auto stream) {
            const auto exact = lah_pmf(n, k, r, s);
            std::vector<GofReport> out;
            using Fn = std::function<long(Rng&)>;
            const std::vector<std::pair<std::string, Fn>> routes = {
                {"composition", [&](Rng& g) { return lah_sample_composition(n, k, r, s, g); }},
                {"subtree", [&](Rng& g) { return lah_sample_subtree(n, k, r, s, g); }},
                {"direct", [&](Rng& g) { return lah_sample_direct(n, k, r, s, g); }}};
            std::vector<std::vector<long>> draws;
            for (std::size_t i = 0; i < routes.size(); ++i) {
                draws.push_back(run_replicas<long>(D, seed, stream + i * 0x100000000ULL, cfg.threads, routes[i].second));
                auto g = make_report(routes[i].first + "_tv", tv_distance(empirical_law(draws.back()), law_of(exact)),
                                     cfg.tv_tol, D, exact.params);
                out.push_back(g);
                auto chi = chi_square_gof(draws.back(), law_of(exact), cfg.chi_min_expected, cfg.chi_alpha,
                                          routes[i].first + "_chi_square");
                out.push_back(chi);
            }
            for (std::size_t i = 0; i < routes.size(); ++i)
                for (std::size_t j = i + 1; j < routes.size(); ++j)
                    out.push_back(make_report(routes[i].first + "_vs_" + routes[j].first + "_tv",
                                              tv_distance(empirical_law(draws[i]), empirical_law(draws[j])), cfg.lah_pair_tol,
                                              D, exact.params));
            return out;
        });
    }

    ck.mc(5, "broder_permutation", [&](auto seed, auto stream) {
        auto out = fidelity("sample_broder_perm", r_stir1_pmf(6, P("1"), P("2")), D, seed, stream, cfg,
                            [&](Rng& g) { return sample_broder_perm(6, 2, g).num_cycles(); });
        auto more = fidelity("sample_broder_perm", r_ewens_type_pmf(4, P("1"), P("1")), D, seed, stream + 0x100000000ULL, cfg,
                             [&](Rng& g) { return inc_perm_type_stat(sample_broder_perm(4, 1, g)); });
        out.insert(out.end(), more.begin(), more.end());
        return out;
    });
    ck.mc(5, "broder_partition", [&](auto seed, auto stream) {
        auto out = fidelity("sample_broder_part", r_stir2_pmf(6, P("1"), P("2")), D, seed, stream, cfg,
                            [&](Rng& g) { return sample_broder_part(6, 2, g).num_blocks(); });
        auto more = fidelity("sample_broder_part", gibbs_partition_type_pmf(4, P("1"), P("1")), D, seed,
                             stream + 0x100000000ULL, cfg,
                             [&](Rng& g) { return inc_part_type_stat(sample_broder_part(4, 1, g)); });
        out.insert(out.end(), more.begin(), more.end());
        return out;
    });
    ck.mc(5, "inverse_cdf_stam_mixing_variable", [&](auto seed, auto stream) {
        // M ~ P[M = m] proportional to (r+m)^n theta^m / m!, compared on its mass above 1e-12
        const long n = 4;
        const Rational th = P("3/2"), r = P("1");
        std::map<long, Rational> w;
        Rational tot(0);
        for (long m = 0; m <= 80; ++m) {
            w[m] = pow(r + Rational(m), n) * pow(th, m) / factorial(m);
            tot += w[m];
        }
        for (auto& [m, p] : w) p /= tot;
        const auto exact = make_pmf("stam_m", {}, w);
        return fidelity("gibbs_r_partition", exact, D, seed, stream, cfg,
                        [&](Rng& g) { return gibbs_r_partition(n, th, r, g).urns; });
    });

    // criterion 6, statistically: the two mixture constructions sampled directly
    ck.mc(6, "r_stirling1_mixtures_sampled", [&](auto seed, auto stream) {
        const long n = 15;
        const Rational tau = P("1"), r = P("3/2");
        auto out = fidelity("binomial_of_stir1", r_stir1_pmf(n, tau, r), D, seed, stream, cfg, [&](Rng& g) {
            const long K = static_cast<long>(crp_colored(n, {tau + r}, g).cycles.size());
            long x = 0;
            for (long i = 0; i < K; ++i) x += g.bernoulli((tau / (tau + r)).to_double()) ? 1 : 0;
            return x;
        });
        auto more = fidelity("stir1_of_betabinomial", r_stir1_pmf(n, tau, r), D, seed, stream + 0x100000000ULL, cfg,
                             [&](Rng& g) {
                                 const double p = g.beta(tau.to_double(), r.to_double());
                                 long m = 0;
                                 for (long i = 0; i < n; ++i) m += g.bernoulli(p) ? 1 : 0;
                                 return static_cast<long>(crp_colored(m, {tau}, g).cycles.size());
                             });
        out.insert(out.end(), more.begin(), more.end());
        return out;
    });

    // criterion 8, Monte Carlo part
    for (const char* th : {"1", "2"}) {
        const Rational t = P(th);
        ck.mc(8, std::string("expected_profile_theta") + th, [&, t](auto seed, auto stream) {
            return profile_checks(cfg.profile_n, {t}, cfg.profile_depths, cfg.scaled(cfg.clt_replicas), seed, stream,
                                  cfg.threads, cfg.se_mult);
        });
    }
    ck.mc(0, "multihoppe_leaves_two_colors", [&](auto seed, auto stream) {
        return leaves_checks(15, {P("1"), P("2")}, D, seed, stream, cfg.threads, 0.02);
    });
    return ck.take();
}

// ======================================================================== clt

inline std::vector<CheckResult> clt_suite(const VerifyConfig& cfg, const std::string& filter = {}) {
    Checker ck("clt", filter, cfg);
    const long R = cfg.scaled(cfg.clt_replicas);
    const auto P = [](const char* s) { return Rational::parse(s); };

    ck.mc(7, "clt_constant_k_k1_r1_s0", [&](auto seed, auto stream) {
        return clt_constant_k(cfg.n_constant_k, 1, P("1"), P("0"), R, seed, stream, cfg.threads, cfg.ks_tol);
    });
    ck.mc(7, "clt_constant_k_k0_r1_s1", [&](auto seed, auto stream) {
        return clt_constant_k(cfg.n_constant_k, 0, P("1"), P("1"), R, seed, stream, cfg.threads, cfg.ks_tol);
    });
    for (const char* r : {"0", "2"}) {
        // r-invariance of the constant-k limit: supporting diagnostics
        ck.mc(0, std::string("clt_constant_k_k1_s0_r") + r, [&, r](auto seed, auto stream) {
            return clt_constant_k(cfg.n_constant_k, 1, P(r), P("0"), R, seed, stream, cfg.threads, cfg.ks_tol);
        });
    }
    ck.mc(7, "clt_intermediate", [&](auto seed, auto stream) {
        return clt_intermediate(cfg.n_intermediate, cfg.gamma_intermediate, P("1/2"), P("1/2"), R, seed, stream,
                                cfg.threads, cfg.ks_tol, cfg.var_ratio_lo, cfg.var_ratio_hi);
    });
    ck.mc(7, "clt_central", [&](auto seed, auto stream) {
        return clt_central(cfg.n_central, 0.5, P("1"), P("2"), R, seed, stream, cfg.threads, cfg.ks_tol);
    });
    ck.exact(0, "central_sigma2_positive", [&](std::string& d) {
        for (double a : {0.2, 0.5, 0.8}) {
            d += std::to_string(central_sigma2(a)) + " ";
            if (!(central_sigma2(a) > 0)) return false;
        }
        return true;
    });
    ck.mc(7, "clt_large_k", [&](auto seed, auto stream) {
        return clt_large_k(cfg.n_large_k, cfg.m_large_k, P("1/2"), P("1/2"), R, cfg.scaled(cfg.rho_replicas), seed,
                           stream, cfg.threads, cfg.ks_tol_large_k, cfg);
    });
    ck.mc(7, "composition_proportional", [&](auto seed, auto stream) {
        return composition_limit_proportional(cfg.comp_n, cfg.comp_n / 2, P("1"), cfg.scaled(cfg.comp_draws), seed,
                                              stream, cfg.threads, cfg.comp_tv_tol);
    });
    ck.mc(7, "composition_sublinear", [&](auto seed, auto stream) {
        return composition_limit_sublinear(cfg.sublinear_n, cfg.sublinear_k, P("2"), R, seed, stream, cfg.threads,
                                           cfg.ks_tol);
    });
    ck.mc(7, "composition_fixed_k", [&](auto seed, auto stream) {
        return composition_limit_fixed_k(cfg.comp_n, 3, P("2"), R, seed, stream, cfg.threads, cfg.se_mult);
    });
    ck.mc(7, "poisson_cycle_counts", [&](auto seed, auto stream) {
        return poisson_cycle_counts(cfg.poisson_n, {P("1"), P("2")}, 3, R, seed, stream, cfg.threads, cfg.se_mult,
                                    cfg.corr_tol);
    });
    ck.mc(7, "stam_empty_urns", [&](auto seed, auto stream) {
        return stam_checks(10, P("2"), P("1"), R, seed, stream, cfg.threads, cfg.se_mult, cfg.corr_tol, 0.02);
    });
    return ck.take();
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& cfg,
                                          const std::string& filter = {}) {
    if (suite == "exact") return exact_suite(cfg, filter);
    if (suite == "oracle") return oracle_suite(cfg, filter);
    if (suite == "mc") return mc_suite(cfg, filter);
    if (suite == "clt") return clt_suite(cfg, filter);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace rstir
