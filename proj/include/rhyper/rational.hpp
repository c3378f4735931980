#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rhyper {

// Exact rational arithmetic over int64 with __int128 intermediates.
// All identities checked by this project are algebraic over Q, so every
// comparison against zero is exact. Coefficients stay tiny in practice;
// overflow throws instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.num_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        __int128 n = (__int128)a.num_ * b.den_;
        __int128 d = (__int128)a.den_ * b.num_;
        return from128(n, d);
    }

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    // "p/q" or "p"; used by every JSON coefficient field.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto pos = s.find('/');
        try {
            if (pos == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }

private:
    struct unchecked {};
    Rational(long long n, long long d, unchecked) : num_(n), den_(d) {}

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        return Rational((long long)n, (long long)d, unchecked{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

}  // namespace rhyper
