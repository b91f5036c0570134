#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace insdel {

// Exact rational over int64, always normalized with den > 0. Used wherever a
// threshold comparison must not go through floating point (certification,
// budgets, list-recovery thresholds).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }
    // floor(k * this), exact
    long long floor_times(long long k) const {
        __int128 p = static_cast<__int128>(num) * k;
        __int128 q = p / den;
        if (p % den != 0 && p < 0) --q;
        return static_cast<long long>(q);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::invalid_argument("rational: division by zero");
        return a * Rational(b.den, b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Accepts "3", "-3", "a/b" and plain decimals such as "0.25".
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("rational: empty string");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len > 15) throw std::invalid_argument("rational: too many decimal digits");
        long long d = 1;
        for (size_t i = 0; i < frac_len; ++i) d *= 10;
        return Rational(std::stoll(digits), d);
    }
};

} // namespace insdel
