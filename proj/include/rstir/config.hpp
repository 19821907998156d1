#pragma once

// Thresholds and sample sizes for the Monte Carlo and limit-theorem checks.
// Bump kConfigVersion whenever any value changes.

#include <cstdint>

namespace rstir {

inline constexpr int kConfigVersion = 1;

struct VerifyConfig {
    std::uint64_t seed = 20240611;
    unsigned threads = 0;  // 0: hardware concurrency

    // sampler fidelity
    long mc_draws = 100000;
    double tv_tol = 0.01;
    double lah_pair_tol = 0.02;
    double chi_alpha = 1e-6;
    double chi_min_expected = 5.0;

    // limit theorems
    long clt_replicas = 10000;
    double ks_tol = 0.03;
    double ks_tol_large_k = 0.05;
    double var_ratio_lo = 0.8, var_ratio_hi = 1.2;
    double large_k_var_lo = 0.2, large_k_var_hi = 0.3;
    long rho_replicas = 1000;
    double rho_lo = 0.9, rho_hi = 1.1;

    long n_constant_k = 2000;
    long n_intermediate = 5000;
    double gamma_intermediate = 0.5;
    long n_central = 4000;
    long n_large_k = 10000;
    long m_large_k = 100;

    long comp_n = 5000;
    long comp_draws = 20000;
    double comp_tv_tol = 0.02;
    long sublinear_n = 20000;
    long sublinear_k = 100;

    long poisson_n = 2000;
    double corr_tol = 0.05;
    double se_mult = 3.0;

    long profile_n = 100;
    long profile_depths = 5;

    // scale every sample size by this factor (smoke runs)
    double scale = 1.0;

    long scaled(long v) const {
        const long s = static_cast<long>(static_cast<double>(v) * scale);
        return s < 10 ? 10 : s;
    }
};

}  // namespace rstir
