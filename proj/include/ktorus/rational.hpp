#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "ktorus/errors.hpp"

namespace ktorus {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
/// Closed under +, -, *, / (nonzero divisor); conjugation negates im.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw InputError("GaussRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
    GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
    GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }

    bool operator==(const GaussRational& b) const { return re == b.re && im == b.im; }
};

std::string to_string(const Rational& r);

/// Renders in the expression grammar: "0", "3/4", "-i", "2*i", "(1/2-3*i)".
std::string to_string(const GaussRational& c);

}  // namespace ktorus
