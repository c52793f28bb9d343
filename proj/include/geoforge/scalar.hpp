#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <string_view>

#include "geoforge/gaussian.hpp"
#include "geoforge/rational.hpp"

namespace geoforge {

/// Backend glue for the geometry kernel. Two scalar types are supported:
/// Rational (exact) and double (tolerance-based). The associated Complex type
/// carries the circumcenter-frame coordinate computations.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    using Complex = GaussianRational;
    static constexpr bool exact = true;

    static Rational from_int(long long v) { return Rational(v); }
    static Rational abs(const Rational& x) { return x.abs(); }
    static Complex make_complex(const Rational& re, const Rational& im) { return {re, im}; }
    static const Rational& real(const Complex& z) { return z.re; }
    static const Rational& imag(const Complex& z) { return z.im; }
    static Complex conj(const Complex& z) { return z.conj(); }
    static Rational norm_sq(const Complex& z) { return z.norm_sq(); }
    static double to_double(const Rational& x) { return x.to_double(); }
    static std::string str(const Rational& x) { return x.str(); }

    /// Accepts "[-]int" and "[-]int/int". Decimal-point literals are a
    /// different backend's syntax and are rejected.
    static Rational parse(std::string_view text) {
        if (text.find('.') != std::string_view::npos)
            throw ArithmeticError("decimal literal not valid on the exact backend: " +
                                  std::string(text));
        return Rational::parse(text);
    }
};

template <>
struct ScalarTraits<double> {
    using Complex = std::complex<double>;
    static constexpr bool exact = false;

    static double from_int(long long v) { return static_cast<double>(v); }
    static double abs(double x) { return std::fabs(x); }
    static Complex make_complex(double re, double im) { return {re, im}; }
    static double real(const Complex& z) { return z.real(); }
    static double imag(const Complex& z) { return z.imag(); }
    static Complex conj(const Complex& z) { return std::conj(z); }
    static double norm_sq(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
    static double to_double(double x) { return x; }

    static std::string str(double x) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), x);
        return std::string(buf, res.ptr);
    }

    /// Accepts integer and decimal literals. Fraction syntax ("1/2") belongs
    /// to the exact backend and is rejected.
    static double parse(std::string_view text) {
        if (text.find('/') != std::string_view::npos)
            throw ArithmeticError("fraction literal not valid on the float backend: " +
                                  std::string(text));
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
            throw ArithmeticError("malformed numeric literal: " + std::string(text));
        return value;
    }
};

/// |x| <= tol * scale. With tol == 0 (the exact backend's setting) this is an
/// exact zero test; the float backend passes its relative epsilon and a
/// magnitude scale derived from the expression being tested.
template <class S>
bool approx_zero(const S& x, const S& scale, const S& tol) {
    return ScalarTraits<S>::abs(x) <= tol * scale;
}

/// |a - b| <= tol * max(|a|, |b|); exact equality when tol == 0.
template <class S>
bool approx_eq(const S& a, const S& b, const S& tol) {
    const S da = ScalarTraits<S>::abs(a);
    const S db = ScalarTraits<S>::abs(b);
    return approx_zero(a - b, da < db ? db : da, tol);
}

}  // namespace geoforge
