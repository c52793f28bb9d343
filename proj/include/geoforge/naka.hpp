#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geoforge/forms.hpp"
#include "geoforge/geometry.hpp"

namespace geoforge {

/// The triangle DEF: each point is the intersection of one side's
/// perpendicular bisector with the altitude dropped from the vertex the
/// cyclic pattern assigns to that side.
template <class S>
struct NakaPoints {
    Point<S> d, e, f;
};

/// The extended triangle D'E'F': perpendicular bisectors intersected with
/// perpendiculars erected at the vertices. Each primed point is the
/// reflection of its unprimed counterpart across the matching side.
template <class S>
struct ExtendedPoints {
    Point<S> d_prime, e_prime, f_prime;
};

/// Circumcenter O, its reflection O' across BC, the auxiliary points of the
/// elementary proof. s, m, n can be unconstructible for special triangles;
/// each failure is recorded in notes with the offending objects named.
template <class S>
struct AuxPoints {
    Point<S> o, o_prime, g;
    std::optional<Point<S>> s, m, n;
    std::vector<std::string> notes;
};

enum class Verdict { pass, fail, not_evaluable };

/// Vertex coordinates relative to the circumcenter, as complex numbers.
/// The closed forms below are invariant under scaling about the circumcenter,
/// so no normalization to unit circumradius is needed; everything stays in
/// the scalar field of the backend.
template <class S>
struct CircumFrame {
    Point<S> center;
    typename ScalarTraits<S>::Complex alpha, beta, gamma;
    S r_sq;
};

template <class S>
CircumFrame<S> circumcenter_frame(const Triangle<S>& t, const S& tol = S{}) {
    using T = ScalarTraits<S>;
    const Point<S> o = circumcenter(t, tol);
    CircumFrame<S> f{o,
                     T::make_complex(t.p1().x - o.x, t.p1().y - o.y),
                     T::make_complex(t.p2().x - o.x, t.p2().y - o.y),
                     T::make_complex(t.p3().x - o.x, t.p3().y - o.y),
                     S{}};
    f.r_sq = T::norm_sq(f.alpha);
    return f;
}

namespace detail {

template <class S>
Point<S> from_frame(const CircumFrame<S>& f, const typename ScalarTraits<S>::Complex& z) {
    using T = ScalarTraits<S>;
    return {f.center.x + T::real(z), f.center.y + T::imag(z)};
}

}  // namespace detail

/// D, E, F by straightedge construction: bisector of AB with the
/// perpendicular from B to AC, and cyclically. The two lines of each pair are
/// parallel only for collinear input, which Triangle excludes.
template <class S>
NakaPoints<S> naka_def_constructive(const Triangle<S>& t, const S& tol = S{}) {
    const Point<S>&a = t.p1(), &b = t.p2(), &c = t.p3();
    return {
        intersect(perpendicular_bisector(a, b), perpendicular_through(b, line_through(a, c)), tol),
        intersect(perpendicular_bisector(b, c), perpendicular_through(c, line_through(a, b)), tol),
        intersect(perpendicular_bisector(c, a), perpendicular_through(a, line_through(b, c)), tol)};
}

/// Same points from the closed forms in the circumcenter frame:
/// D = (b^2 - ac)/(b - c), E = (c^2 - ab)/(c - a), F = (a^2 - bc)/(a - b).
template <class S>
NakaPoints<S> naka_def_closed_form(const CircumFrame<S>& f) {
    const auto &a = f.alpha, &b = f.beta, &c = f.gamma;
    return {detail::from_frame(f, (b * b - a * c) / (b - c)),
            detail::from_frame(f, (c * c - a * b) / (c - a)),
            detail::from_frame(f, (a * a - b * c) / (a - b))};
}

template <class S>
NakaPoints<S> naka_def_closed_form(const Triangle<S>& t, const S& tol = S{}) {
    return naka_def_closed_form(circumcenter_frame(t, tol));
}

/// D' = b(a - c)/(b - c), E' = c(b - a)/(c - a), F' = a(c - b)/(a - b).
template <class S>
ExtendedPoints<S> extended_points_closed_form(const CircumFrame<S>& f) {
    const auto &a = f.alpha, &b = f.beta, &c = f.gamma;
    return {detail::from_frame(f, b * (a - c) / (b - c)),
            detail::from_frame(f, c * (b - a) / (c - a)),
            detail::from_frame(f, a * (c - b) / (a - b))};
}

template <class S>
ExtendedPoints<S> extended_points_closed_form(const Triangle<S>& t, const S& tol = S{}) {
    return extended_points_closed_form(circumcenter_frame(t, tol));
}

/// D' from the bisector of AB and the perpendicular to CA at A, and
/// cyclically: E' perpendicular to AB at B, F' perpendicular to BC at C.
template <class S>
ExtendedPoints<S> extended_points_constructive(const Triangle<S>& t, const S& tol = S{}) {
    const Point<S>&a = t.p1(), &b = t.p2(), &c = t.p3();
    return {
        intersect(perpendicular_bisector(a, b), perpendicular_through(a, line_through(c, a)), tol),
        intersect(perpendicular_bisector(b, c), perpendicular_through(b, line_through(a, b)), tol),
        intersect(perpendicular_bisector(c, a), perpendicular_through(c, line_through(b, c)), tol)};
}

enum class RatioKind { def, ext };

/// Squared similarity ratio to the original triangle via the complex forms.
/// DEF: r^2 |sigma|^2 / |Pi|^2 (the sigma/Pi quotient has net degree -1, so
/// the circumradius enters); D'E'F': |N|^2 / |Pi|^2, degree balanced.
template <class S>
S similarity_ratio_sq_complex(const CircumFrame<S>& f, RatioKind which) {
    using T = ScalarTraits<S>;
    const S pi_nsq = T::norm_sq(cyclic_pi(f.alpha, f.beta, f.gamma));
    if (which == RatioKind::def) {
        const S sig_nsq = T::norm_sq(cyclic_sigma(f.alpha, f.beta, f.gamma));
        return f.r_sq * sig_nsq / pi_nsq;
    }
    return T::norm_sq(cyclic_ext_numerator(f.alpha, f.beta, f.gamma)) / pi_nsq;
}

template <class S>
S similarity_ratio_sq_complex(const Triangle<S>& t, RatioKind which, const S& tol = S{}) {
    return similarity_ratio_sq_complex(circumcenter_frame(t, tol), which);
}

/// Squared DEF ratio from side lengths and area: ((a^2+b^2+c^2)/(8S))^2 - 3/4.
template <class S>
S similarity_ratio_sq_metric(const Triangle<S>& t) {
    using T = ScalarTraits<S>;
    const S sum_sq = dist_sq(t.p2(), t.p3()) + dist_sq(t.p3(), t.p1()) + dist_sq(t.p1(), t.p2());
    const S area8 = T::from_int(8) * T::abs(area_signed(t));
    const S q = sum_sq / area8;
    return q * q - T::from_int(3) / T::from_int(4);
}

/// sigma = 0 exactly characterizes equilateral triangles. No rational
/// triangle is equilateral, so this is reachable only on the float backend,
/// where |sigma| is compared against tol * max squared vertex distance from
/// the circumcenter.
template <class S>
bool is_equilateral_sigma(const CircumFrame<S>& f, const S& tol = S{}) {
    using T = ScalarTraits<S>;
    const S sig_nsq = T::norm_sq(cyclic_sigma(f.alpha, f.beta, f.gamma));
    S scale = T::norm_sq(f.beta);
    if (scale < f.r_sq) scale = f.r_sq;
    const S g_nsq = T::norm_sq(f.gamma);
    if (scale < g_nsq) scale = g_nsq;
    return sig_nsq <= tol * tol * scale * scale;
}

template <class S>
bool is_equilateral_sigma(const Triangle<S>& t, const S& tol = S{}) {
    return is_equilateral_sigma(circumcenter_frame(t, tol), tol);
}

template <class S>
AuxPoints<S> aux_points(const Triangle<S>& t, const NakaPoints<S>& naka, const S& tol = S{}) {
    const Point<S>&a = t.p1(), &b = t.p2(), &c = t.p3();
    const Line<S> bc = line_through(b, c);
    AuxPoints<S> aux{circumcenter(t, tol),
                     {},
                     intersect(perpendicular_through(c, line_through(a, b)),
                               perpendicular_bisector(c, a), tol),
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     {}};
    aux.o_prime = reflect_across(aux.o, bc, tol);

    if (aux.o_prime == naka.d) {
        aux.notes.push_back("S: O' = D, line O'D undefined");
    } else {
        try {
            aux.s = intersect(line_through(c, naka.f), line_through(aux.o_prime, naka.d), tol);
        } catch (const NoIntersectionError&) {
            aux.notes.push_back("S: line CF parallel to line O'D");
        } catch (const AmbiguousIntersectionError&) {
            aux.notes.push_back("S: line CF identical to line O'D");
        }
    }

    if (aux.o == aux.g) {
        aux.notes.push_back("M: O = G, line OG undefined");
    } else {
        aux.m = intersect(line_through(aux.o, aux.g), line_through(c, a), tol);
    }

    if (aux.o == aux.o_prime) {
        aux.notes.push_back("N: O = O', line OO' undefined");
    } else {
        aux.n = intersect(line_through(aux.o, aux.o_prime), bc, tol);
    }
    return aux;
}

template <class S>
AuxPoints<S> aux_points(const Triangle<S>& t, const S& tol = S{}) {
    return aux_points(t, naka_def_closed_form(t, tol), tol);
}

namespace detail {

template <class S>
Verdict triangle_similarity_verdict(const Point<S>& a1, const Point<S>& a2, const Point<S>& a3,
                                    const Point<S>& b1, const Point<S>& b2, const Point<S>& b3,
                                    bool require_congruent, const S& tol) {
    try {
        const Triangle<S> t1(a1, a2, a3, tol);
        const Triangle<S> t2(b1, b2, b3, tol);
        const auto k_sq = similar_sss(t1, t2, tol);
        if (!k_sq) return Verdict::fail;
        if (require_congruent && !approx_eq(*k_sq, ScalarTraits<S>::from_int(1), tol))
            return Verdict::fail;
        return Verdict::pass;
    } catch (const DegenerateInputError&) {
        return Verdict::not_evaluable;
    }
}

}  // namespace detail

/// The six claims of the elementary proof, checked with exact predicates:
/// {B,D,O,O'}, {O,G,C,O'}, {S,E,C,O'} concyclic; O'EC ~ ABC; DBO' congruent
/// to GO'C; ECF ~ EO'D. A verdict is not_evaluable when its auxiliary
/// construction failed or a proposition triangle is degenerate.
template <class S>
std::array<Verdict, 6> proposition_suite(const Triangle<S>& t, const NakaPoints<S>& naka,
                                         const AuxPoints<S>& aux, const S& tol = S{}) {
    const Point<S>&b = t.p2(), &c = t.p3();
    std::array<Verdict, 6> v{};
    v[0] = concyclic(b, naka.d, aux.o, aux.o_prime, tol) ? Verdict::pass : Verdict::fail;
    v[1] = concyclic(aux.o, aux.g, c, aux.o_prime, tol) ? Verdict::pass : Verdict::fail;
    v[2] = detail::triangle_similarity_verdict(t.p1(), b, c, aux.o_prime, naka.e, c, false, tol);
    v[3] = aux.s ? (concyclic(*aux.s, naka.e, c, aux.o_prime, tol) ? Verdict::pass : Verdict::fail)
                 : Verdict::not_evaluable;
    v[4] = detail::triangle_similarity_verdict(naka.d, b, aux.o_prime, aux.g, aux.o_prime, c, true,
                                               tol);
    v[5] = detail::triangle_similarity_verdict(naka.e, c, naka.f, naka.e, aux.o_prime, naka.d,
                                               false, tol);
    return v;
}

template <class S>
std::array<Verdict, 6> proposition_suite(const Triangle<S>& t, const S& tol = S{}) {
    const NakaPoints<S> naka = naka_def_closed_form(t, tol);
    return proposition_suite(t, naka, aux_points(t, naka, tol), tol);
}

namespace detail {

template <class S>
S triple_area_abs(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
    return ScalarTraits<S>::abs(area_signed(p, q, r));
}

}  // namespace detail

/// (|ABC|, |DEF|, |D'E'F'|); the third equals the sum of the first two.
template <class S>
std::array<S, 3> area_additivity(const Triangle<S>& t, const S& tol = S{}) {
    const CircumFrame<S> f = circumcenter_frame(t, tol);
    const NakaPoints<S> naka = naka_def_closed_form(f);
    const ExtendedPoints<S> ext = extended_points_closed_form(f);
    return {ScalarTraits<S>::abs(area_signed(t)),
            detail::triple_area_abs(naka.d, naka.e, naka.f),
            detail::triple_area_abs(ext.d_prime, ext.e_prime, ext.f_prime)};
}

template <class S>
struct EnumerationResult {
    /// All intersections of the three perpendicular bisectors with the nine
    /// vertex perpendiculars (each vertex crossed with each side), deduplicated.
    std::vector<Point<S>> candidates;
    /// Every 3-subset of candidates whose squared side multiset matches
    /// D'E'F', in sorted vertex order.
    std::vector<Triangle<S>> congruent;
};

/// Brute-force search for triangles congruent to D'E'F' among the bisector
/// against vertex-perpendicular intersections. D'E'F' itself is always found.
template <class S>
EnumerationResult<S> enumerate_congruent_extended(const Triangle<S>& t, const S& tol = S{}) {
    const CircumFrame<S> frame = circumcenter_frame(t, tol);
    if (is_equilateral_sigma(frame, tol))
        throw DegenerateInputError("congruent-triangle enumeration needs a non-equilateral input");

    const Point<S> vs[3] = {t.p1(), t.p2(), t.p3()};
    std::vector<Line<S>> bisectors;
    std::vector<Line<S>> vertex_perps;
    for (int i = 0; i < 3; ++i) {
        const Line<S> side = line_through(vs[i], vs[(i + 1) % 3]);
        bisectors.push_back(perpendicular_bisector(vs[i], vs[(i + 1) % 3]));
        for (const auto& v : vs) vertex_perps.push_back(perpendicular_through(v, side));
    }

    EnumerationResult<S> result;
    for (const auto& bis : bisectors) {
        for (const auto& perp : vertex_perps) {
            try {
                result.candidates.push_back(intersect(bis, perp, tol));
            } catch (const NoIntersectionError&) {
            } catch (const AmbiguousIntersectionError&) {
            }
        }
    }
    std::sort(result.candidates.begin(), result.candidates.end());
    result.candidates.erase(std::unique(result.candidates.begin(), result.candidates.end()),
                            result.candidates.end());

    const ExtendedPoints<S> ext = extended_points_closed_form(frame);
    std::array<S, 3> target{dist_sq(ext.d_prime, ext.e_prime), dist_sq(ext.e_prime, ext.f_prime),
                            dist_sq(ext.f_prime, ext.d_prime)};
    std::sort(target.begin(), target.end());

    const auto& pts = result.candidates;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const S dij = dist_sq(pts[i], pts[j]);
            if (!approx_eq(dij, target[0], tol) && !approx_eq(dij, target[1], tol) &&
                !approx_eq(dij, target[2], tol))
                continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                std::array<S, 3> sides{dij, dist_sq(pts[j], pts[k]), dist_sq(pts[k], pts[i])};
                std::sort(sides.begin(), sides.end());
                if (approx_eq(sides[0], target[0], tol) && approx_eq(sides[1], target[1], tol) &&
                    approx_eq(sides[2], target[2], tol)) {
                    try {
                        result.congruent.emplace_back(pts[i], pts[j], pts[k], tol);
                    } catch (const DegenerateInputError&) {
                        // A flat triple cannot match a genuine triangle's side
                        // multiset exactly; only float roundoff lands here.
                    }
                }
            }
        }
    }
    return result;
}

template <class S>
struct NakaReport {
    Triangle<S> input;
    NakaPoints<S> naka;
    ExtendedPoints<S> extended;
    AuxPoints<S> aux;
    S ratio_sq_def;
    S ratio_sq_ext;
    std::array<S, 3> areas;
    std::array<Verdict, 6> props;
    typename ScalarTraits<S>::Complex sigma;
};

template <class S>
NakaReport<S> compute_report(const Triangle<S>& t, const S& tol = S{}) {
    const CircumFrame<S> frame = circumcenter_frame(t, tol);
    const NakaPoints<S> naka = naka_def_closed_form(frame);
    const ExtendedPoints<S> ext = extended_points_closed_form(frame);
    const AuxPoints<S> aux = aux_points(t, naka, tol);
    return NakaReport<S>{t,
                         naka,
                         ext,
                         aux,
                         similarity_ratio_sq_complex(frame, RatioKind::def),
                         similarity_ratio_sq_complex(frame, RatioKind::ext),
                         {ScalarTraits<S>::abs(area_signed(t)),
                          detail::triple_area_abs(naka.d, naka.e, naka.f),
                          detail::triple_area_abs(ext.d_prime, ext.e_prime, ext.f_prime)},
                         proposition_suite(t, naka, aux, tol),
                         cyclic_sigma(frame.alpha, frame.beta, frame.gamma)};
}

}  // namespace geoforge
