#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoforge/geometry.hpp"

using geoforge::BigInt;
using geoforge::Line;
using geoforge::Point;
using geoforge::Rational;
using geoforge::Triangle;

namespace {
using P = Point<Rational>;
const Rational kHalf(BigInt(1), BigInt(2));
}  // namespace

TEST_CASE("line through two points in canonical form") {
    const Line<Rational> l = geoforge::line_through(P{0, 0}, P{2, 1});
    CHECK(l.a == Rational(1));
    CHECK(l.b == Rational(-2));
    CHECK(l.c == Rational(0));
    CHECK(l.residual(P{4, 2}) == Rational(0));
    CHECK(l.residual(P{0, 1}) != Rational(0));

    const Line<Rational> vertical = geoforge::line_through(P{3, -1}, P{3, 5});
    CHECK(vertical.a == Rational(1));
    CHECK(vertical.b == Rational(0));
    CHECK(vertical.c == Rational(3));

    const Line<Rational> horizontal = geoforge::line_through(P{-1, 2}, P{4, 2});
    CHECK(horizontal.a == Rational(0));
    CHECK(horizontal.b == Rational(1));
    CHECK(horizontal.c == Rational(2));

    CHECK(geoforge::line_through(P{0, 0}, P{2, 1}) == geoforge::line_through(P{2, 1}, P{-2, -1}));
    CHECK_THROWS_AS(geoforge::line_through(P{1, 1}, P{1, 1}), geoforge::DegenerateInputError);
}

TEST_CASE("perpendiculars and bisectors") {
    const Line<Rational> base = geoforge::line_through(P{0, 0}, P{4, 0});
    const Line<Rational> perp = geoforge::perpendicular_through(P{1, 5}, base);
    CHECK(perp.residual(P{1, 5}) == Rational(0));
    CHECK(perp.a * base.a + perp.b * base.b == Rational(0));

    const Line<Rational> bis = geoforge::perpendicular_bisector(P{0, 0}, P{2, 2});
    CHECK(bis.residual(P{1, 1}) == Rational(0));
    CHECK(geoforge::dist_sq(geoforge::intersect(bis, base), P{0, 0}) ==
          geoforge::dist_sq(geoforge::intersect(bis, base), P{2, 2}));
    CHECK_THROWS_AS(geoforge::perpendicular_bisector(P{1, 1}, P{1, 1}),
                    geoforge::DegenerateInputError);
}

TEST_CASE("intersection of lines") {
    const Line<Rational> l1 = geoforge::line_through(P{0, 0}, P{1, 1});
    const Line<Rational> l2 = geoforge::line_through(P{0, 2}, P{2, 0});
    CHECK(geoforge::intersect(l1, l2) == P{1, 1});

    const Line<Rational> l3 = geoforge::line_through(P{0, 1}, P{1, 2});
    CHECK_THROWS_AS(geoforge::intersect(l1, l3), geoforge::NoIntersectionError);
    CHECK_THROWS_AS(geoforge::intersect(l1, geoforge::line_through(P{2, 2}, P{3, 3})),
                    geoforge::AmbiguousIntersectionError);
}

TEST_CASE("midpoint and squared distance") {
    CHECK(geoforge::midpoint(P{0, 0}, P{1, 1}) == P{kHalf, kHalf});
    CHECK(geoforge::dist_sq(P{0, 0}, P{1, 1}) == Rational(2));
    CHECK(geoforge::dist_sq(P{kHalf, 0}, P{2, 0}) == Rational(BigInt(9), BigInt(4)));
    CHECK(geoforge::dist_sq(P{0, kHalf}, P{Rational(BigInt(3), BigInt(2)), 0}) ==
          Rational(BigInt(5), BigInt(2)));
}

TEST_CASE("orientation, collinearity, signed area") {
    CHECK(geoforge::orient2(P{0, 0}, P{1, 0}, P{0, 1}) > Rational(0));
    CHECK(geoforge::orient2(P{0, 0}, P{0, 1}, P{1, 0}) < Rational(0));
    CHECK(geoforge::collinear(P{0, 0}, P{1, 1}, P{5, 5}));
    CHECK_FALSE(geoforge::collinear(P{0, 0}, P{1, 1}, P{5, 6}));
    CHECK(geoforge::area_signed(P{0, 0}, P{2, 0}, P{0, 1}) == Rational(1));
    CHECK(geoforge::area_signed(P{0, 0}, P{0, 1}, P{2, 0}) == Rational(-1));
    CHECK(geoforge::area_signed(P{0, 0}, P{1, 1}, P{3, 3}) == Rational(0));
    CHECK(geoforge::area_signed(Triangle<Rational>(P{1, 0}, P{0, 1}, P{-1, 0})) == Rational(1));
}

TEST_CASE("triangle rejects degenerate vertex triples") {
    CHECK_THROWS_AS(Triangle<Rational>(P{0, 0}, P{0, 0}, P{1, 1}),
                    geoforge::DegenerateInputError);
    CHECK_THROWS_AS(Triangle<Rational>(P{0, 0}, P{1, 1}, P{2, 2}),
                    geoforge::DegenerateInputError);
}

TEST_CASE("foot of perpendicular and reflection") {
    const Line<Rational> diag = geoforge::line_through(P{0, 0}, P{1, 1});
    CHECK(geoforge::foot_of_perpendicular(P{1, 0}, diag) == P{kHalf, kHalf});
    CHECK(geoforge::reflect_across(P{1, 0}, diag) == P{0, 1});
    CHECK(geoforge::reflect_across(P{3, 7}, diag) == P{7, 3});

    const Line<Rational> vert = geoforge::line_through(P{1, 0}, P{1, 1});
    CHECK(geoforge::reflect_across(P{0, 0}, vert) == P{2, 0});
    CHECK(geoforge::reflect_across(P{1, 5}, vert) == P{1, 5});
    CHECK(geoforge::foot_of_perpendicular(P{0, 3}, vert) == P{1, 3});
}

TEST_CASE("circumcenter is equidistant from the vertices") {
    const Triangle<Rational> t(P{0, 0}, P{2, 0}, P{1, 3});
    const P o = geoforge::circumcenter(t);
    CHECK(o == P{1, Rational(BigInt(4), BigInt(3))});
    CHECK(geoforge::dist_sq(o, t.p1()) == geoforge::dist_sq(o, t.p2()));
    CHECK(geoforge::dist_sq(o, t.p1()) == geoforge::dist_sq(o, t.p3()));

    const Triangle<Rational> iso(P{0, 0}, P{2, 0}, P{1, 2});
    CHECK(geoforge::circumcenter(iso) == P{1, Rational(BigInt(3), BigInt(4))});

    const Triangle<Rational> right(P{0, 0}, P{4, 0}, P{0, 3});
    CHECK(geoforge::circumcenter(right) == P{2, Rational(BigInt(3), BigInt(2))});
}

TEST_CASE("concyclicity determinant") {
    const P p1{1, 0}, p2{0, 1}, p3{-1, 0}, p4{0, -1};
    CHECK(geoforge::concyclic(p1, p2, p3, p4));
    CHECK_FALSE(geoforge::concyclic(p1, p2, p3, P{2, 0}));

    CHECK(geoforge::concyclic(p2, p1, p4, p3));
    CHECK(geoforge::concyclic(p4, p3, p2, p1));
    CHECK(geoforge::concyclic(p3, p1, p2, p4));

    CHECK(geoforge::concyclic(p1, p1, p2, p3));

    const P q1{0, 0}, q2{4, 0}, q3{0, 4};
    CHECK(geoforge::concyclic(q1, q2, q3, P{4, 4}));
}

TEST_CASE("positional similarity with squared ratio") {
    const Triangle<Rational> abc(P{1, 0}, P{0, 1}, P{-1, 0});
    const Triangle<Rational> def(P{0, 0}, P{-kHalf, kHalf}, P{0, 1});
    const auto k_sq = geoforge::similar_sss(abc, def);
    REQUIRE(k_sq.has_value());
    CHECK(*k_sq == Rational(BigInt(1), BigInt(4)));

    CHECK(geoforge::similar_sss(abc, abc) == Rational(1));

    const Triangle<Rational> other(P{0, 0}, P{3, 0}, P{0, 1});
    CHECK_FALSE(geoforge::similar_sss(abc, other).has_value());

    const Triangle<Rational> swapped(P{-kHalf, kHalf}, P{0, 0}, P{0, 1});
    CHECK_FALSE(geoforge::similar_sss(abc, swapped).has_value());
}

TEST_CASE("similarity orientation classification") {
    using geoforge::Similarity;
    const Triangle<Rational> base(P{0, 0}, P{2, 0}, P{0, 2});
    const Triangle<Rational> scaled(P{1, 1}, P{5, 1}, P{1, 5});
    const Triangle<Rational> mirrored(P{0, 0}, P{2, 0}, P{0, -2});
    const Triangle<Rational> unrelated(P{0, 0}, P{3, 0}, P{0, 1});
    CHECK(geoforge::directly_similar(base, scaled) == Similarity::direct);
    CHECK(geoforge::directly_similar(base, mirrored) == Similarity::opposite);
    CHECK(geoforge::directly_similar(base, unrelated) == Similarity::none);
}

TEST_CASE("float backend agrees with exact on a worked construction") {
    using PF = Point<double>;
    const Triangle<double> tf(PF{1, 0}, PF{0, 1}, PF{-1, 0});
    const double tol = 1e-9;
    const PF of = geoforge::circumcenter(tf, tol);
    CHECK(std::fabs(of.x) <= tol);
    CHECK(std::fabs(of.y) <= tol);

    const Line<double> diag = geoforge::line_through(PF{0, 0}, PF{1, 1});
    const PF r = geoforge::reflect_across(PF{1, 0}, diag, tol);
    CHECK(r.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.y == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(geoforge::concyclic(PF{1, 0}, PF{0, 1}, PF{-1, 0}, PF{0, -1}, tol));
    CHECK_FALSE(geoforge::concyclic(PF{1, 0}, PF{0, 1}, PF{-1, 0}, PF{0, -1.001}, tol));
}
