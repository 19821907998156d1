#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rstir {

// Exact rational in lowest terms. Thin value wrapper over mpq_class so that
// expression templates never leak into user code.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(mpz_from_i64(v)) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(unsigned long long v) : q_(mpz_from_u64(v)) {}
    Rational(long long num, long long den) : q_(mpz_from_i64(num), mpz_from_i64(den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q" or an integer literal, nothing else.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto bad = [&] { return std::invalid_argument("not a rational literal: '" + s + "'"); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        auto is_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i >= t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        if (!is_int(num)) throw bad();
        if (num[0] == '+') num.erase(0, 1);
        mpz_class p(num);
        if (slash == std::string::npos) return Rational(p);
        std::string den = s.substr(slash + 1);
        if (!is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
        mpz_class q(den);
        if (q == 0) throw bad();
        return Rational(mpq_class(p, q));
    }

    const mpq_class& get() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    double to_double() const { return q_.get_d(); }
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    long long to_int64() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw std::domain_error("Rational is not a machine integer: " + str());
        return q_.get_num().get_si();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

private:
    static mpz_class mpz_from_i64(long long v) {
        mpz_class z;
        if (v >= 0) z = mpz_from_u64(static_cast<unsigned long long>(v));
        else z = -mpz_from_u64(0ULL - static_cast<unsigned long long>(v));
        return z;
    }
    static mpz_class mpz_from_u64(unsigned long long v) {
        mpz_class z(static_cast<unsigned long>(v >> 32));
        z <<= 32;
        z += static_cast<unsigned long>(v & 0xffffffffULL);
        return z;
    }

    mpq_class q_;
};

inline Rational pow(const Rational& x, long long e) {
    if (e < 0) return Rational(1) / pow(x, -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.get().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

inline Rational binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

}  // namespace rstir

template <>
struct std::hash<rstir::Rational> {
    std::size_t operator()(const rstir::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
