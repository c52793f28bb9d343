#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geoforge/identities.hpp"
#include "geoforge/sampling.hpp"

using geoforge::BigInt;
using geoforge::GaussianRational;
using geoforge::Rational;
using geoforge::UnimodularTriple;

namespace {
const GaussianRational kOne{1, 0};
const GaussianRational kI{0, 1};
const GaussianRational kMinusOne{-1, 0};
const GaussianRational kMinusI{0, -1};
}  // namespace

TEST_CASE("unimodular triple validation") {
    CHECK_THROWS_AS(UnimodularTriple(kOne, kI, GaussianRational{1, 1}),
                    geoforge::DegenerateInputError);
    CHECK_THROWS_AS(UnimodularTriple(kOne, kOne, kI), geoforge::DegenerateInputError);
    const UnimodularTriple ok(kOne, kI, kMinusOne);
    CHECK(ok.alpha == kOne);

    const UnimodularTriple from_params = UnimodularTriple::from_parameters(
        Rational(0), Rational(1), Rational(BigInt(1), BigInt(2)));
    CHECK(from_params.alpha == kOne);
    CHECK(from_params.beta == kI);
    CHECK(from_params.gamma ==
          GaussianRational{Rational(BigInt(3), BigInt(5)), Rational(BigInt(4), BigInt(5))});
}

TEST_CASE("anchor triple (1, i, -1): 20 = 16 + 4") {
    const UnimodularTriple tr(kOne, kI, kMinusOne);
    CHECK(geoforge::sigma(tr) == GaussianRational{2, 0});
    CHECK(geoforge::ext_numerator(tr) == GaussianRational{2, 4});
    CHECK(geoforge::pi_product(tr) == GaussianRational{-4, 0});
    CHECK(geoforge::ext_numerator(tr).norm_sq() == Rational(20));
    CHECK(geoforge::pi_product(tr).norm_sq() == Rational(16));
    CHECK(geoforge::sigma(tr).norm_sq() == Rational(4));
    CHECK(geoforge::check_norm_identity(tr));
}

TEST_CASE("anchor triple (1, i, -i)") {
    const UnimodularTriple tr(kOne, kI, kMinusI);
    CHECK(geoforge::sigma(tr) == GaussianRational{-2, 0});
    CHECK(geoforge::ext_numerator(tr) == GaussianRational{-4, 2});
    CHECK(geoforge::pi_product(tr) == GaussianRational{0, -4});
    CHECK(geoforge::ext_numerator(tr).norm_sq() == Rational(20));
    CHECK(geoforge::pi_product(tr).norm_sq() == Rational(16));
    CHECK(geoforge::sigma(tr).norm_sq() == Rational(4));
    CHECK(geoforge::check_norm_identity(tr));
}

TEST_CASE("permutation behavior of N over Pi") {
    const UnimodularTriple tr(kOne, kI, kMinusOne);
    const auto report = geoforge::permutation_behavior(tr);
    CHECK(report.cyclic_invariant);
    CHECK(report.transpositions_agree);
    CHECK(report.norm_sq_invariant);
    CHECK(report.even_value ==
          GaussianRational{Rational(BigInt(-1), BigInt(2)), Rational(-1)});
    CHECK(report.odd_value == report.even_value.conj());
    CHECK(report.even_value.norm_sq() == Rational(BigInt(5), BigInt(4)));
}

TEST_CASE("the ext numerator is cyclic but not symmetric") {
    const UnimodularTriple tr(kOne, kI, kMinusOne);
    const GaussianRational n = geoforge::ext_numerator(tr);
    CHECK(geoforge::cyclic_ext_numerator(tr.beta, tr.gamma, tr.alpha) == n);
    CHECK(geoforge::cyclic_ext_numerator(tr.gamma, tr.alpha, tr.beta) == n);
    CHECK(geoforge::cyclic_ext_numerator(tr.beta, tr.alpha, tr.gamma) != n);
}

TEST_CASE("norm identity and permutation laws on random triples") {
    geoforge::SampleRng rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto tr = geoforge::sample_unimodular_triple(rng);
        CHECK(geoforge::check_norm_identity(tr));
        CHECK_FALSE(geoforge::sigma(tr).is_zero());
        const auto report = geoforge::permutation_behavior(tr);
        CHECK(report.cyclic_invariant);
        CHECK(report.transpositions_agree);
        CHECK(report.norm_sq_invariant);
        CHECK(report.odd_value == report.even_value.conj());
        CHECK(report.even_value + report.odd_value == GaussianRational{-1, 0});
    }
}

TEST_CASE("metric and complex ratio formulas agree on triangles") {
    geoforge::SampleRng rng(5);
    for (int i = 0; i < 50; ++i)
        CHECK(geoforge::check_ratio_consistency(geoforge::sample_triangle(rng)));
}

TEST_CASE("norm identity generalizes off the unit circle through the ratio link") {
    geoforge::SampleRng rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto t = geoforge::sample_triangle(rng);
        const auto frame = geoforge::circumcenter_frame(t);
        const auto sig = geoforge::cyclic_sigma(frame.alpha, frame.beta, frame.gamma);
        const auto pi = geoforge::cyclic_pi(frame.alpha, frame.beta, frame.gamma);
        const auto num = geoforge::cyclic_ext_numerator(frame.alpha, frame.beta, frame.gamma);
        CHECK(num.norm_sq() == pi.norm_sq() + frame.r_sq * sig.norm_sq());
    }
}
