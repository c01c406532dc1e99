#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "diskscale/embedding.hpp"
#include "diskscale/errors.hpp"
#include "diskscale/rational.hpp"

namespace diskscale::detail {

/// Smallest positive integer g such that len·g is an integer multiple of
/// modulus (both arbitrary positive rationals).
inline BigInt gamma_unit_for(const Rational& len, const Rational& modulus) {
    BigInt need = numerator(modulus) * denominator(len);
    BigInt have = numerator(len) * denominator(modulus);
    return need / gcd(need, have);
}

/// Drawing scale for a chain gadget: the smallest γ that (a) makes every
/// route segment an exact multiple of `modulus` and (b) stretches the
/// closest non-touching segment pair beyond `separation`, so disks on
/// unrelated segments can never interact.
inline BigInt choose_gamma(const EmbeddedGraph& g, const Rational& modulus,
                           const Rational& separation) {
    BigInt gamma0 = 1;
    for (const auto& seg : edge_segments(g))
        gamma0 = lcm(gamma0, gamma_unit_for(seg_length(seg), modulus));
    auto minsep2 = min_route_separation2(g);
    if (!minsep2) return gamma0;
    if (*minsep2 == 0)
        throw InputError("embedding has touching non-adjacent route segments");
    // smallest multiple m·γ₀ with (m·γ₀)²·minsep² > separation²
    Rational ratio = separation * separation / (Rational(gamma0 * gamma0) * *minsep2);
    BigInt m(static_cast<long long>(std::ceil(std::sqrt(std::max(0.0, to_double(ratio))))));
    if (m < 1) m = 1;
    while (Rational(m * m) <= ratio) ++m;
    while (m > 1 && Rational((m - 1) * (m - 1)) > ratio) --m;
    return gamma0 * m;
}

/// Point on a polyline at a given arc length from its start. Gap schedules
/// are built to land bend points exactly, so positions stay exact rationals.
inline std::pair<Rational, Rational>
point_at_arclength(const std::vector<std::pair<Rational, Rational>>& route,
                   const Rational& arc) {
    Rational remaining = arc;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        Rational dx = route[i + 1].first - route[i].first;
        Rational dy = route[i + 1].second - route[i].second;
        Rational len = abs(dx) + abs(dy); // axis-parallel
        if (remaining <= len) {
            Rational t = remaining / len;
            return {route[i].first + t * dx, route[i].second + t * dy};
        }
        remaining -= len;
    }
    throw InputError("arc length beyond route end");
}

/// Walks a route, dropping one point after each gap (the route start itself
/// is not emitted). The gap schedule always sums to the route length, so the
/// final point coincides with the far vertex; callers treat it accordingly.
inline std::vector<std::pair<Rational, Rational>>
chain_positions(const std::vector<std::pair<Rational, Rational>>& route,
                const std::vector<Rational>& gaps) {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(gaps.size());
    Rational cum = 0;
    for (const auto& g : gaps) {
        cum += g;
        out.push_back(point_at_arclength(route, cum));
    }
    return out;
}

} // namespace diskscale::detail
