/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Thin reduced-fraction type on top of boost::multiprecision::cpp_int.
 * Invariants: always in lowest terms, denominator > 0, zero is 0/1.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qshuffle {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }

    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_.sign(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        // both canonical
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.canonicalize();
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.canonicalize();
        return r;
    }

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    /// Renders as "n/d" (denominator always included, matching the JSON schema).
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    /// Parses "n" or "n/d".
    static Rational parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, pos)), Int(s.substr(pos + 1)));
    }

    static Rational factorial(int n) {
        Int f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return Rational(f);
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::string>{}(num_.str());
        return h ^ (std::hash<std::string>{}(den_.str()) + 0x9e3779b97f4a7c15ULL + (h << 6));
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;  // > 0
};

}  // namespace qshuffle
