#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "geoforge/errors.hpp"

namespace geoforge {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: den > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. Equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                // NOLINT: implicit by design
    Rational(long long v) : num_(v), den_(1) {}          // NOLINT
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw ArithmeticError("rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArithmeticError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        if (num_ == 0) return 0.0;
        // Scale the quotient into a ~64-bit integer first so huge numerators
        // or denominators cannot overflow the intermediate doubles.
        const BigInt mag = num_ < 0 ? BigInt(-num_) : num_;
        const long bits_num = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
        const long bits_den = static_cast<long>(boost::multiprecision::msb(den_)) + 1;
        const long t = 64 - (bits_num - bits_den);
        BigInt scaled = t >= 0 ? BigInt(num_ << t) : BigInt(num_ >> -t);
        scaled /= den_;
        return std::ldexp(scaled.convert_to<double>(), static_cast<int>(-t));
    }

    /// "num/den", with "/den" omitted for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "[-]digits[/digits]". Throws ArithmeticError on malformed input.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text, true), 1);
        return Rational(parse_int(text.substr(0, slash), true),
                        parse_int(text.substr(slash + 1), false));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static Rational raw(BigInt num, BigInt den) {
        Rational r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    static BigInt parse_int(std::string_view text, bool allow_sign) {
        if (text.empty()) throw ArithmeticError("empty integer literal");
        std::size_t i = allow_sign && text[0] == '-' ? 1 : 0;
        if (i == text.size()) throw ArithmeticError("malformed integer literal");
        for (; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw ArithmeticError("malformed integer literal: " + std::string(text));
        return BigInt(std::string(text));
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace geoforge
