#pragma once

#include "geoforge/forms.hpp"
#include "geoforge/gaussian.hpp"
#include "geoforge/naka.hpp"

namespace geoforge {

/// Three distinct exact points on the unit circle; the setting in which the
/// similarity-ratio identities are stated and fuzzed.
struct UnimodularTriple {
    GaussianRational alpha, beta, gamma;

    UnimodularTriple(GaussianRational a, GaussianRational b, GaussianRational c)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
        const Rational one(1);
        if (alpha.norm_sq() != one || beta.norm_sq() != one || gamma.norm_sq() != one)
            throw DegenerateInputError("unimodular triple component off the unit circle");
        if (alpha == beta || beta == gamma || alpha == gamma)
            throw DegenerateInputError("unimodular triple with repeated components");
    }

    static UnimodularTriple from_parameters(const Rational& t1, const Rational& t2,
                                            const Rational& t3) {
        return {unimodular_from_parameter(t1), unimodular_from_parameter(t2),
                unimodular_from_parameter(t3)};
    }
};

inline GaussianRational sigma(const UnimodularTriple& tr) {
    return cyclic_sigma(tr.alpha, tr.beta, tr.gamma);
}

inline GaussianRational pi_product(const UnimodularTriple& tr) {
    return cyclic_pi(tr.alpha, tr.beta, tr.gamma);
}

inline GaussianRational ext_numerator(const UnimodularTriple& tr) {
    return cyclic_ext_numerator(tr.alpha, tr.beta, tr.gamma);
}

/// |N|^2 = |Pi|^2 + |sigma|^2 on the unit circle, checked exactly.
inline bool check_norm_identity(const UnimodularTriple& tr) {
    return ext_numerator(tr).norm_sq() == pi_product(tr).norm_sq() + sigma(tr).norm_sq();
}

/// The complex-form and metric-form squared DEF ratios agree.
template <class S>
bool check_ratio_consistency(const Triangle<S>& t, const S& tol = S{}) {
    return approx_eq(similarity_ratio_sq_complex(t, RatioKind::def, tol),
                     similarity_ratio_sq_metric(t), tol);
}

/// How N/Pi behaves under the six permutations of the triple: one value on
/// the cyclic orbit, one on the transposition orbit, with |N/Pi|^2 shared by
/// all six.
struct PermutationReport {
    GaussianRational even_value;
    GaussianRational odd_value;
    bool cyclic_invariant;
    bool transpositions_agree;
    bool norm_sq_invariant;
};

inline PermutationReport permutation_behavior(const UnimodularTriple& tr) {
    const auto value = [](const GaussianRational& a, const GaussianRational& b,
                          const GaussianRational& c) {
        return cyclic_ext_numerator(a, b, c) / cyclic_pi(a, b, c);
    };
    const GaussianRational &a = tr.alpha, &b = tr.beta, &c = tr.gamma;
    const GaussianRational even[3] = {value(a, b, c), value(b, c, a), value(c, a, b)};
    const GaussianRational odd[3] = {value(b, a, c), value(a, c, b), value(c, b, a)};

    PermutationReport rep{even[0], odd[0], true, true, true};
    for (int i = 1; i < 3; ++i) {
        rep.cyclic_invariant = rep.cyclic_invariant && even[i] == even[0];
        rep.transpositions_agree = rep.transpositions_agree && odd[i] == odd[0];
    }
    const Rational nsq = even[0].norm_sq();
    for (int i = 0; i < 3; ++i)
        rep.norm_sq_invariant = rep.norm_sq_invariant && even[i].norm_sq() == nsq &&
                                odd[i].norm_sq() == nsq;
    return rep;
}

}  // namespace geoforge
