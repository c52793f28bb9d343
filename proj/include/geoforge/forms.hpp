#pragma once

namespace geoforge {

// The three cyclic polynomials driving the similarity ratios, usable with any
// complex number type.

/// a^2 + b^2 + c^2 - ab - bc - ca; vanishes exactly for equilateral triples.
template <class C>
C cyclic_sigma(const C& a, const C& b, const C& c) {
    return a * a + b * b + c * c - a * b - b * c - c * a;
}

/// (a - b)(b - c)(c - a).
template <class C>
C cyclic_pi(const C& a, const C& b, const C& c) {
    return (a - b) * (b - c) * (c - a);
}

/// a^2 b + b^2 c + c^2 a - 3abc; cyclic but not symmetric.
template <class C>
C cyclic_ext_numerator(const C& a, const C& b, const C& c) {
    const C abc = a * b * c;
    return a * a * b + b * b * c + c * c * a - (abc + abc + abc);
}

}  // namespace geoforge
