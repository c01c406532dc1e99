#pragma once

#include <vector>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"

namespace diskscale {

/// A δ-heavy disk: δ exactly co-located copies. Co-location makes the copies
/// pairwise adjacent at any radii, so they scale all-or-nothing in any
/// cluster-style argument.
struct HeavySpec {
    Rational x;
    Rational y;
    long long multiplicity = 1;
};

/// Emits the three heavy groups of a heavy P3: collinear centers at spacing
/// ξ with 1 < ξ ≤ 2, so consecutive groups are adjacent at radius 1 and the
/// two end groups (distance 2ξ > 2) are not. Ids are assigned in emission
/// order: all left copies, all middle copies, all right copies.
inline std::vector<Point> make_heavy_p3(const HeavySpec& left, const HeavySpec& mid,
                                        const HeavySpec& right, const Rational& xi) {
    if (!(1 < xi && xi <= 2))
        throw InputError("heavy P3 spacing must satisfy 1 < xi <= 2, got " +
                         rational_to_string(xi));
    Point l{left.x, left.y, 0}, m{mid.x, mid.y, 0}, r{right.x, right.y, 0};
    Rational xi2 = xi * xi;
    if (dist2(l, m) != xi2 || dist2(m, r) != xi2 || dist2(l, r) != 4 * xi2)
        throw InputError("heavy P3 groups must be collinear at spacing xi");
    if (left.multiplicity < 1 || mid.multiplicity < 1 || right.multiplicity < 1)
        throw InputError("heavy multiplicities must be at least 1");

    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(left.multiplicity + mid.multiplicity +
                                         right.multiplicity));
    auto emit = [&](const HeavySpec& g) {
        for (long long c = 0; c < g.multiplicity; ++c)
            out.push_back({g.x, g.y, static_cast<int>(out.size())});
    };
    emit(left);
    emit(mid);
    emit(right);
    return out;
}

} // namespace diskscale
