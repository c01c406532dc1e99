#pragma once

#include <cstdint>
#include <random>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"

namespace diskscale {

/// Uniform random instance on the rational grid {0, 1/(10·box), ..., box}²:
/// each coordinate is a/(10·box) with a drawn from [0, 10·box²]. The grid
/// keeps every pairwise distance² an exact rational bounded away from the
/// unit-disk threshold 4, so float and exact adjacency agree.
inline Instance gen_random(int n, long long k, const Rational& r_min, const Rational& r_max,
                           int box, std::uint64_t seed) {
    if (n < 0 || box <= 0) throw InputError("gen_random: need n >= 0 and box > 0");
    if (k < 0) throw InputError("gen_random: need k >= 0");
    if (r_min > r_max) throw InputError("gen_random: r_min must not exceed r_max");
    std::mt19937_64 rng(seed);
    const std::uint64_t steps = static_cast<std::uint64_t>(10) * box * box + 1;
    const Rational denom(10 * box);
    Instance inst;
    inst.r_min = r_min;
    inst.r_max = r_max;
    inst.k = k;
    inst.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational x(static_cast<long long>(rng() % steps));
        Rational y(static_cast<long long>(rng() % steps));
        inst.points.push_back({x / denom, y / denom, i});
    }
    return inst;
}

} // namespace diskscale
