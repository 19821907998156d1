#pragma once

#include "rstir/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rstir {

// Dense univariate polynomial; index = power. Trailing zeros are trimmed.
template <class C>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const C& c) : a_{c} { trim(); }
    Polynomial(std::initializer_list<C> cs) : a_(cs) { trim(); }
    explicit Polynomial(std::vector<C> cs) : a_(std::move(cs)) { trim(); }

    static Polynomial monomial(std::size_t deg, const C& c = C(1)) {
        std::vector<C> v(deg + 1, C(0));
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(a_.size()) - 1; }
    bool is_zero() const { return a_.empty(); }
    const std::vector<C>& coeffs() const { return a_; }

    C operator[](std::size_t i) const { return i < a_.size() ? a_[i] : C(0); }

    template <class X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = a_.rbegin(); it != a_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.a_.size() > a_.size()) a_.resize(o.a_.size(), C(0));
        for (std::size_t i = 0; i < o.a_.size(); ++i) a_[i] += o.a_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.a_.size() > a_.size()) a_.resize(o.a_.size(), C(0));
        for (std::size_t i = 0; i < o.a_.size(); ++i) a_[i] -= o.a_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<C> r(a.a_.size() + b.a_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.a_.size(); ++i) {
            if (a.a_[i] == C(0)) continue;
            for (std::size_t j = 0; j < b.a_.size(); ++j) r[i + j] += a.a_[i] * b.a_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const C& c, const Polynomial& p) { return Polynomial(c) * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.a_ == b.a_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!a_.empty() && a_.back() == C(0)) a_.pop_back();
    }
    std::vector<C> a_;
};

using RPolynomial = Polynomial<Rational>;

inline std::string to_string(const RPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + p.coeffs()[i].str() + ")";
        if (i > 0) out += "*x^" + std::to_string(i);
    }
    return out;
}

// x^{n, rising} and x^{n, falling} as polynomials in x, shifted by c: (x+c)(x+c+1)...
inline RPolynomial rising_poly(const Rational& c, long n) {
    RPolynomial p(Rational(1));
    for (long i = 0; i < n; ++i) p *= RPolynomial{c + Rational(i), Rational(1)};
    return p;
}

inline RPolynomial falling_poly(const Rational& c, long n) {
    RPolynomial p(Rational(1));
    for (long i = 0; i < n; ++i) p *= RPolynomial{c - Rational(i), Rational(1)};
    return p;
}

// Truncated formal power series: coefficients of x^0..x^order.
template <class C>
class Series {
public:
    explicit Series(std::size_t order) : c_(order + 1, C(0)) {}
    Series(std::size_t order, std::vector<C> cs) : c_(std::move(cs)) { c_.resize(order + 1, C(0)); }

    std::size_t order() const { return c_.size() - 1; }
    C& operator[](std::size_t i) { return c_[i]; }
    const C& operator[](std::size_t i) const { return c_[i]; }

    friend Series operator+(Series a, const Series& b) {
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend Series operator-(Series a, const Series& b) {
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == C(0)) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    Series pow(unsigned k) const {
        Series acc(order());
        acc[0] = C(1);
        Series base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

private:
    std::vector<C> c_;
};

using RSeries = Series<Rational>;

namespace series {

// log(1/(1-x)) = sum_{m>=1} x^m/m
inline RSeries log_inv_one_minus(std::size_t order) {
    RSeries s(order);
    for (std::size_t m = 1; m <= order; ++m) s[m] = Rational(1, static_cast<long long>(m));
    return s;
}

// e^{a x}
inline RSeries exp_scaled(const Rational& a, std::size_t order) {
    RSeries s(order);
    Rational term(1);
    for (std::size_t m = 0; m <= order; ++m) {
        s[m] = term;
        term = term * a / Rational(static_cast<long long>(m + 1));
    }
    return s;
}

inline RSeries exp_minus_one(std::size_t order) {
    RSeries s = exp_scaled(Rational(1), order);
    s[0] = Rational(0);
    return s;
}

// (1-x)^{-a} = sum_m a^{m rising}/m! x^m
inline RSeries inv_one_minus_pow(const Rational& a, std::size_t order) {
    RSeries s(order);
    Rational term(1);
    for (std::size_t m = 0; m <= order; ++m) {
        s[m] = term;
        term = term * (a + Rational(static_cast<long long>(m))) / Rational(static_cast<long long>(m + 1));
    }
    return s;
}

}  // namespace series

}  // namespace rstir
