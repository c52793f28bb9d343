#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "geoforge/errors.hpp"
#include "geoforge/scalar.hpp"

namespace geoforge {

template <class S>
struct Point {
    S x{};
    S y{};

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

template <class S>
std::string str(const Point<S>& p) {
    return "(" + ScalarTraits<S>::str(p.x) + ", " + ScalarTraits<S>::str(p.y) + ")";
}

namespace detail {

// Scale (a, b, c) to coprime integers and make the leading nonzero
// coefficient positive, so equal loci compare equal structurally.
inline void canonicalize_coeffs(Rational& a, Rational& b, Rational& c) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    const BigInt l = lcm(a.den(), lcm(b.den(), c.den()));
    BigInt na = a.num() * (l / a.den());
    BigInt nb = b.num() * (l / b.den());
    BigInt nc = c.num() * (l / c.den());
    const BigInt g = gcd(gcd(abs(na), abs(nb)), abs(nc));
    na /= g;
    nb /= g;
    nc /= g;
    if (na != 0 ? na < 0 : nb < 0) {
        na = -na;
        nb = -nb;
        nc = -nc;
    }
    a = Rational(na);
    b = Rational(nb);
    c = Rational(nc);
}

inline void canonicalize_coeffs(double& a, double& b, double& c) {
    const double m = std::max(std::fabs(a), std::fabs(b));
    a /= m;
    b /= m;
    c /= m;
    if (a != 0.0 ? a < 0.0 : b < 0.0) {
        a = -a;
        b = -b;
        c = -c;
    }
}

}  // namespace detail

/// The locus a*x + b*y = c, stored canonically (exact backend: coprime
/// integer coefficients, leading nonzero one positive).
template <class S>
struct Line {
    S a{};
    S b{};
    S c{};

    Line(S a_, S b_, S c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (a == S{} && b == S{}) throw DegenerateInputError("line with zero normal vector");
        detail::canonicalize_coeffs(a, b, c);
    }

    /// Signed residual a*x + b*y - c; zero iff the point lies on the line.
    S residual(const Point<S>& p) const { return a * p.x + b * p.y - c; }

    friend bool operator==(const Line& l, const Line& m) {
        return l.a == m.a && l.b == m.b && l.c == m.c;
    }
};

template <class S>
std::string str(const Line<S>& l) {
    return ScalarTraits<S>::str(l.a) + "*x + " + ScalarTraits<S>::str(l.b) +
           "*y = " + ScalarTraits<S>::str(l.c);
}

template <class S>
S dist_sq(const Point<S>& p, const Point<S>& q) {
    const S dx = p.x - q.x;
    const S dy = p.y - q.y;
    return dx * dx + dy * dy;
}

template <class S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q) {
    const S two = ScalarTraits<S>::from_int(2);
    return {(p.x + q.x) / two, (p.y + q.y) / two};
}

/// Twice the signed area of p, q, r. The collinearity test compares it
/// against the magnitude of its two products.
template <class S>
S orient2(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
    return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
}

template <class S>
bool collinear(const Point<S>& p, const Point<S>& q, const Point<S>& r, const S& tol = S{}) {
    using T = ScalarTraits<S>;
    const S m1 = (q.x - p.x) * (r.y - p.y);
    const S m2 = (r.x - p.x) * (q.y - p.y);
    return approx_zero(m1 - m2, T::abs(m1) + T::abs(m2), tol);
}

/// Ordered, orientation-bearing vertex triple; vertices must be pairwise
/// distinct and non-collinear.
template <class S>
class Triangle {
public:
    Triangle(Point<S> p1, Point<S> p2, Point<S> p3, const S& tol = S{})
        : p1_(std::move(p1)), p2_(std::move(p2)), p3_(std::move(p3)) {
        if (p1_ == p2_ || p2_ == p3_ || p1_ == p3_)
            throw DegenerateInputError("triangle with coincident vertices");
        if (collinear(p1_, p2_, p3_, tol))
            throw DegenerateInputError("triangle with collinear vertices");
    }

    const Point<S>& p1() const { return p1_; }
    const Point<S>& p2() const { return p2_; }
    const Point<S>& p3() const { return p3_; }

    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.p1_ == b.p1_ && a.p2_ == b.p2_ && a.p3_ == b.p3_;
    }

private:
    Point<S> p1_, p2_, p3_;
};

/// Shoelace signed area of a raw point triple; zero for collinear points.
template <class S>
S area_signed(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
    return orient2(p, q, r) / ScalarTraits<S>::from_int(2);
}

template <class S>
S area_signed(const Triangle<S>& t) {
    return area_signed(t.p1(), t.p2(), t.p3());
}

template <class S>
Line<S> line_through(const Point<S>& p, const Point<S>& q) {
    if (p == q) throw DegenerateInputError("line through coincident points " + str(p));
    const S a = q.y - p.y;
    const S b = p.x - q.x;
    return Line<S>(a, b, a * p.x + b * p.y);
}

/// The perpendicular to l through p: normal vector rotated a quarter turn.
template <class S>
Line<S> perpendicular_through(const Point<S>& p, const Line<S>& l) {
    const S a = -l.b;
    const S b = l.a;
    return Line<S>(a, b, a * p.x + b * p.y);
}

template <class S>
Line<S> perpendicular_bisector(const Point<S>& p, const Point<S>& q) {
    if (p == q) throw DegenerateInputError("perpendicular bisector of coincident points " + str(p));
    return perpendicular_through(midpoint(p, q), line_through(p, q));
}

template <class S>
Point<S> intersect(const Line<S>& l1, const Line<S>& l2, const S& tol = S{}) {
    using T = ScalarTraits<S>;
    const S m1 = l1.a * l2.b;
    const S m2 = l2.a * l1.b;
    const S det = m1 - m2;
    if (approx_zero(det, T::abs(m1) + T::abs(m2), tol)) {
        // Parallel; identical lines share the cross-consistency of c as well.
        const S u1 = l1.a * l2.c;
        const S u2 = l2.a * l1.c;
        const S v1 = l1.b * l2.c;
        const S v2 = l2.b * l1.c;
        if (approx_zero(u1 - u2, T::abs(u1) + T::abs(u2), tol) &&
            approx_zero(v1 - v2, T::abs(v1) + T::abs(v2), tol))
            throw AmbiguousIntersectionError("intersection of identical lines " + str(l1));
        throw NoIntersectionError("parallel lines " + str(l1) + " and " + str(l2));
    }
    return {(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

template <class S>
Point<S> foot_of_perpendicular(const Point<S>& p, const Line<S>& l, const S& tol = S{}) {
    return intersect(l, perpendicular_through(p, l), tol);
}

template <class S>
Point<S> reflect_across(const Point<S>& p, const Line<S>& l, const S& tol = S{}) {
    const Point<S> f = foot_of_perpendicular(p, l, tol);
    const S two = ScalarTraits<S>::from_int(2);
    return {two * f.x - p.x, two * f.y - p.y};
}

template <class S>
Point<S> circumcenter(const Triangle<S>& t, const S& tol = S{}) {
    // The bisectors of two sides are never parallel for a valid triangle.
    return intersect(perpendicular_bisector(t.p1(), t.p2()),
                     perpendicular_bisector(t.p2(), t.p3()), tol);
}

/// True iff the 4x4 determinant with rows (x^2+y^2, x, y, 1) vanishes.
/// Coincident input points make it vanish; callers needing genericity
/// pre-check distinctness.
template <class S>
bool concyclic(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3, const Point<S>& p4,
               const S& tol = S{}) {
    using T = ScalarTraits<S>;
    S a[3], b[3], c[3];
    const Point<S>* ps[3] = {&p1, &p2, &p3};
    const S z4 = p4.x * p4.x + p4.y * p4.y;
    for (int i = 0; i < 3; ++i) {
        a[i] = ps[i]->x - p4.x;
        b[i] = ps[i]->y - p4.y;
        c[i] = ps[i]->x * ps[i]->x + ps[i]->y * ps[i]->y - z4;
    }
    const S m1 = a[0] * b[1] * c[2];
    const S m2 = a[0] * c[1] * b[2];
    const S m3 = b[0] * a[1] * c[2];
    const S m4 = b[0] * c[1] * a[2];
    const S m5 = c[0] * a[1] * b[2];
    const S m6 = c[0] * b[1] * a[2];
    const S det = m1 - m2 - m3 + m4 + m5 - m6;
    const S scale = T::abs(m1) + T::abs(m2) + T::abs(m3) + T::abs(m4) + T::abs(m5) + T::abs(m6);
    return approx_zero(det, scale, tol);
}

/// Squared similarity ratio of t2 to t1 under the positional correspondence
/// (p1<->p1, ...), or nullopt when the side ratios disagree.
template <class S>
std::optional<S> similar_sss(const Triangle<S>& t1, const Triangle<S>& t2, const S& tol = S{}) {
    const S r1 = dist_sq(t2.p1(), t2.p2()) / dist_sq(t1.p1(), t1.p2());
    const S r2 = dist_sq(t2.p2(), t2.p3()) / dist_sq(t1.p2(), t1.p3());
    const S r3 = dist_sq(t2.p3(), t2.p1()) / dist_sq(t1.p3(), t1.p1());
    if (approx_eq(r1, r2, tol) && approx_eq(r2, r3, tol)) return r1;
    return std::nullopt;
}

enum class Similarity { direct, opposite, none };

namespace detail {

template <class S>
bool complex_approx_eq(const typename ScalarTraits<S>::Complex& z,
                       const typename ScalarTraits<S>::Complex& w, const S& tol) {
    using T = ScalarTraits<S>;
    const S sr = T::abs(T::real(z)) + T::abs(T::real(w));
    const S si = T::abs(T::imag(z)) + T::abs(T::imag(w));
    const S scale = std::max(sr, si);
    return approx_zero(T::real(z) - T::real(w), scale, tol) &&
           approx_zero(T::imag(z) - T::imag(w), scale, tol);
}

}  // namespace detail

/// Orientation-sensitive similarity test via the complex affine ratio
/// (p2-p1)/(p3-p1), compared cross-multiplied.
template <class S>
Similarity directly_similar(const Triangle<S>& t1, const Triangle<S>& t2, const S& tol = S{}) {
    using T = ScalarTraits<S>;
    using C = typename T::Complex;
    const auto vec = [](const Point<S>& from, const Point<S>& to) {
        return ScalarTraits<S>::make_complex(to.x - from.x, to.y - from.y);
    };
    const C u1 = vec(t1.p1(), t1.p2());
    const C v1 = vec(t1.p1(), t1.p3());
    const C u2 = vec(t2.p1(), t2.p2());
    const C v2 = vec(t2.p1(), t2.p3());
    if (detail::complex_approx_eq<S>(u1 * v2, u2 * v1, tol)) return Similarity::direct;
    if (detail::complex_approx_eq<S>(u1 * T::conj(v2), T::conj(u2) * v1, tol))
        return Similarity::opposite;
    return Similarity::none;
}

}  // namespace geoforge
