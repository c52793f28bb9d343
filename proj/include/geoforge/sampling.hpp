#pragma once

#include <cstdint>
#include <random>

#include "geoforge/geometry.hpp"
#include "geoforge/identities.hpp"

namespace geoforge {

/// Seeded generator with a hand-rolled bounded draw. mt19937_64's output
/// sequence is fixed by the standard and uniform_int_distribution's mapping
/// is not, so doing the range reduction here keeps samples identical across
/// standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw from [lo, hi], both ends inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t reject_above = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t r = gen_();
        while (r >= reject_above) r = gen_();
        return lo + static_cast<std::int64_t>(r % range);
    }

private:
    std::mt19937_64 gen_;
};

/// Random integer-coordinate triangle with coordinates in [lo, hi];
/// coincident and collinear draws are rejected and redrawn.
inline Triangle<Rational> sample_triangle(SampleRng& rng, int lo = -100, int hi = 100) {
    for (;;) {
        Point<Rational> p[3];
        for (auto& v : p)
            v = Point<Rational>{Rational(BigInt(rng.next_int(lo, hi))),
                                Rational(BigInt(rng.next_int(lo, hi)))};
        if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) continue;
        if (orient2(p[0], p[1], p[2]).is_zero()) continue;
        return {p[0], p[1], p[2]};
    }
}

/// Random rational parameter p/q with |p| <= max_abs and 1 <= q <= max_abs.
inline Rational sample_parameter(SampleRng& rng, int max_abs = 10000) {
    return {BigInt(rng.next_int(-max_abs, max_abs)), BigInt(rng.next_int(1, max_abs))};
}

/// Three distinct unit-circle points from independent rational parameters.
inline UnimodularTriple sample_unimodular_triple(SampleRng& rng, int max_abs = 10000) {
    for (;;) {
        const GaussianRational a = unimodular_from_parameter(sample_parameter(rng, max_abs));
        const GaussianRational b = unimodular_from_parameter(sample_parameter(rng, max_abs));
        const GaussianRational c = unimodular_from_parameter(sample_parameter(rng, max_abs));
        if (a == b || b == c || a == c) continue;
        return {a, b, c};
    }
}

}  // namespace geoforge
