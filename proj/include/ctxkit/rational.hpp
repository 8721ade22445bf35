// Exact rational and Gaussian-rational scalars for ray arithmetic.
// Magnitudes here stay tiny (paper ray entries are small integers), but all
// products run through 128-bit intermediates so reduction can never overflow.
#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ctxkit/common.hpp"

namespace ctxkit {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1; // always positive

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw DomainError("rational overflow");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d == 0 ? 1 : d);
        if (r.num == 0) r.den = 1;
        return r;
    }

    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw DomainError("rational division by zero");
        return from_i128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// a + b*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    cplx to_complex() const { return {re.to_double(), im.to_double()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

} // namespace ctxkit
