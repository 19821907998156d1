#pragma once

// Philox4x32-10 counter-based generator. Key = 64-bit seed, counter words
// (block_lo, block_hi, stream_lo, stream_hi). Each block yields four 32-bit
// words consumed as two 64-bit outputs: w0 | w1 << 32, then w2 | w3 << 32.
//
// Draw-order contract for the variates below:
//   uniform()      one u64, top 53 bits
//   uniform_pos()  one u64, (top 53 bits + 1/2) / 2^53, never 0 or 1
//   below(m)       Lemire multiply-shift with rejection, >= 1 u64
//   exponential()  one uniform_pos()
//   normal()       two uniform_pos(), Box-Muller cosine branch
//   gamma(a)       a == 0: none; a == 1: exponential(); a > 1: Marsaglia-Tsang
//                  (normal then uniform per attempt); a < 1: gamma(a+1) then uniform_pos()

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rstir {

class Rng {
public:
    using Block = std::array<std::uint32_t, 4>;

    Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t draws() const { return block_ * 2 + (have_second_ ? 1 : 0); }

    static Block philox(Block ctr, std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
        constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += W0;
                key[1] += W1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

    std::uint64_t next_u64() {
        if (have_second_) {
            have_second_ = false;
            ++block_;
            return second_;
        }
        const Block out = philox({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                                  static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                                 {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        second_ = static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32);
        have_second_ = true;
        return static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
    }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("Rng::below: empty range");
        unsigned __int128 prod = static_cast<unsigned __int128>(next_u64()) * m;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < m) {
            const std::uint64_t threshold = (0 - m) % m;
            while (low < threshold) {
                prod = static_cast<unsigned __int128>(next_u64()) * m;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential() { return -std::log(uniform_pos()); }

    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform_pos();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double gamma(double a) {
        if (a < 0) throw std::invalid_argument("Rng::gamma: negative shape");
        if (a == 0) return 0.0;
        if (a == 1) return exponential();
        if (a < 1) {
            const double g = gamma(a + 1.0);
            return g * std::pow(uniform_pos(), 1.0 / a);
        }
        const double d = a - 1.0 / 3.0, c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            const double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0) continue;
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Beta(0, b) is degenerate at 0 and Beta(a, 0) at 1.
    double beta(double a, double b) {
        if (a == 0 && b == 0) throw std::invalid_argument("Rng::beta: both shapes zero");
        const double x = gamma(a), y = gamma(b);
        if (b == 0) return 1.0;
        if (a == 0) return 0.0;
        return x / (x + y);
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::uint64_t second_ = 0;
    bool have_second_ = false;
};

}  // namespace rstir
