#pragma once

#include <ostream>
#include <string>

#include "geoforge/rational.hpp"

namespace geoforge {

/// Complex number with rational real and imaginary parts. Exact field
/// arithmetic; equality is component-wise on canonical rationals.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw ArithmeticError("gaussian rational division by zero");
        const Rational n = b.norm_sq();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// "re+im*i" (or "re-im*i"), both parts in rational text form.
    std::string str() const {
        std::string s = re.str();
        if (im.sign() >= 0) {
            s += '+';
            s += im.str();
        } else {
            s += '-';
            s += (-im).str();
        }
        s += "*i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline Rational norm_sq(const GaussianRational& z) { return z.norm_sq(); }

/// re(a)re(b) + im(a)im(b); equals (a*conj(b) + conj(a)*b)/2.
inline Rational inner_product(const GaussianRational& a, const GaussianRational& b) {
    return a.re * b.re + a.im * b.im;
}

/// Exact point on the unit circle: t -> ((1-t^2) + 2t*i) / (1+t^2).
/// Reaches every unimodular gaussian rational except -1.
inline GaussianRational unimodular_from_parameter(const Rational& t) {
    const Rational t2 = t * t;
    const Rational den = Rational(1) + t2;
    return {(Rational(1) - t2) / den, (Rational(2) * t) / den};
}

}  // namespace geoforge
