#pragma once

#include "rstir/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace rstir {

using ParamList = std::vector<std::pair<std::string, std::string>>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Finite pmf with sorted distinct support. Prob = Rational (exact) or double (float).
template <class Point, class Prob>
struct Pmf {
    std::string family;
    ParamList params;
    std::vector<Point> support;
    std::vector<Prob> probs;

    static constexpr bool exact = std::is_same_v<Prob, Rational>;

    std::size_t size() const { return support.size(); }

    Prob prob(const Point& x) const {
        auto it = std::lower_bound(support.begin(), support.end(), x);
        if (it == support.end() || !(*it == x)) return Prob(0);
        return probs[static_cast<std::size_t>(it - support.begin())];
    }

    Prob total() const {
        Prob t(0);
        for (const auto& p : probs) t += p;
        return t;
    }

    void validate() const {
        require(support.size() == probs.size(), "pmf: support/probs length mismatch");
        for (std::size_t i = 1; i < support.size(); ++i)
            require(support[i - 1] < support[i], "pmf: support not strictly sorted");
        for (const auto& p : probs) require(!(p < Prob(0)), "pmf: negative probability");
        if constexpr (exact) {
            require(total() == Rational(1), "pmf: exact mass is " + total().str());
        } else {
            require(std::abs(total() - 1.0) <= 1e-12, "pmf: float mass off by more than 1e-12");
        }
    }

    friend bool operator==(const Pmf& a, const Pmf& b) {
        return a.support == b.support && a.probs == b.probs;
    }
};

using FinitePmf = Pmf<long, Rational>;
using FloatPmf = Pmf<long, double>;
using VectorPmf = Pmf<std::vector<long>, Rational>;

template <class Point, class Prob>
Pmf<Point, Prob> make_pmf(std::string family, ParamList params, const std::map<Point, Prob>& m,
                          bool keep_zeros = false) {
    Pmf<Point, Prob> out;
    out.family = std::move(family);
    out.params = std::move(params);
    for (const auto& [x, p] : m) {
        if (!keep_zeros && p == Prob(0)) continue;
        out.support.push_back(x);
        out.probs.push_back(p);
    }
    return out;
}

// Dense univariate pmf on lo..lo+probs.size()-1.
template <class Prob>
Pmf<long, Prob> make_range_pmf(std::string family, ParamList params, long lo, std::vector<Prob> probs) {
    Pmf<long, Prob> out;
    out.family = std::move(family);
    out.params = std::move(params);
    for (std::size_t i = 0; i < probs.size(); ++i) out.support.push_back(lo + static_cast<long>(i));
    out.probs = std::move(probs);
    return out;
}

template <class Prob>
Prob mean(const Pmf<long, Prob>& p) {
    Prob m(0);
    for (std::size_t i = 0; i < p.size(); ++i) m += Prob(p.support[i]) * p.probs[i];
    return m;
}

template <class Prob>
Prob variance(const Pmf<long, Prob>& p) {
    Prob m = mean(p), v(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Prob d = Prob(p.support[i]) - m;
        v += d * d * p.probs[i];
    }
    return v;
}

inline FloatPmf to_float(const FinitePmf& p) {
    FloatPmf f;
    f.family = p.family;
    f.params = p.params;
    f.support = p.support;
    for (const auto& q : p.probs) f.probs.push_back(q.to_double());
    return f;
}

inline FinitePmf marginal(const VectorPmf& p, std::size_t idx) {
    std::map<long, Rational> m;
    for (std::size_t i = 0; i < p.size(); ++i) m[p.support[i].at(idx)] += p.probs[i];
    return make_pmf(p.family + "_marginal", p.params, m);
}

// Merge coordinate j into coordinate i and drop j.
inline VectorPmf aggregate(const VectorPmf& p, std::size_t i, std::size_t j) {
    require(i != j, "aggregate: identical coordinates");
    std::map<std::vector<long>, Rational> m;
    for (std::size_t t = 0; t < p.size(); ++t) {
        auto v = p.support[t];
        v.at(i) += v.at(j);
        v.erase(v.begin() + static_cast<long>(j));
        m[v] += p.probs[t];
    }
    return make_pmf(p.family + "_aggregated", p.params, m);
}

// Pmf of a scalar statistic pushed through f.
template <class Point, class F>
FinitePmf pushforward(const Pmf<Point, Rational>& p, F f, std::string family) {
    std::map<long, Rational> m;
    for (std::size_t t = 0; t < p.size(); ++t) m[f(p.support[t])] += p.probs[t];
    return make_pmf(std::move(family), p.params, m);
}

}  // namespace rstir
