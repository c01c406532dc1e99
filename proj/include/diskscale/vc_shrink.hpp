#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diskscale/artifact.hpp"
#include "diskscale/chain_layout.hpp"
#include "diskscale/embedding.hpp"
#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/rational.hpp"

namespace diskscale {

namespace detail {

/// Gap schedule for one edge chain of the shrink gadget. Every segment is
/// tiled by gaps of 2α−1; the last segment squeezes one extra gap into the
/// same length by compressing 3β+1 gaps to 2α−μ, where μ is chosen so that
/// (3β+1)(2α−μ) = 3β(2α−1) exactly. The schedule therefore has
/// 3β·Σλ_s + 1 gaps and ends precisely on the far vertex.
inline std::vector<Rational> vc_edge_gaps(long long alpha, long long beta,
                                          const Rational& mu,
                                          const std::vector<long long>& lambdas) {
    Rational normal(2 * alpha - 1);
    Rational compressed = Rational(2 * alpha) - mu;
    std::vector<Rational> gaps;
    auto rep = [&](long long n, const Rational& g) {
        for (long long i = 0; i < n; ++i) gaps.push_back(g);
    };
    for (std::size_t s = 0; s + 1 < lambdas.size(); ++s) rep(3 * beta * lambdas[s], normal);
    long long lam = lambdas.back();
    if (lam < 3) throw InputError("terminal chain segment too short");
    rep(3 * beta + 1, normal);
    rep(3 * beta + 1, compressed);
    rep(3 * beta * (lam - 2) - 1, normal);
    return gaps;
}

inline void require_grid_embedding(const EmbeddedGraph& g) {
    auto integral = [](const Rational& q) {
        return boost::multiprecision::denominator(q) == 1;
    };
    for (const auto& v : g.vertices)
        if (!integral(v.x) || !integral(v.y))
            throw InputError("chain gadgets require an integer grid embedding");
    for (const auto& e : g.edges)
        for (const auto& [x, y] : e.route)
            if (!integral(x) || !integral(y))
                throw InputError("chain gadgets require an integer grid embedding");
}

inline long long to_longlong(const BigInt& v, const char* what) {
    if (v > BigInt(1'000'000'000'000LL))
        throw InputError(std::string(what) + " overflows the generator's size limits");
    return v.template convert_to<long long>();
}

struct ChainRole {
    int u = -1, v = -1;
    long long pos = -1;
};

/// Parses "vertex 3" / "blocker 3" / "twin 3" / "chain 0-2 pos 17" roles.
inline bool parse_chain_role(const std::string& role, std::string& kind, int& vertex,
                             ChainRole& chain) {
    std::istringstream in(role);
    in >> kind;
    if (kind == "vertex" || kind == "blocker" || kind == "twin") {
        in >> vertex;
        return !in.fail();
    }
    if (kind == "chain") {
        char dash = 0;
        std::string pos_word;
        in >> chain.u >> dash >> chain.v >> pos_word >> chain.pos;
        return !in.fail() && dash == '-' && pos_word == "pos";
    }
    return false;
}

} // namespace detail

/// Builds the shrink-gadget instance that encodes "does this cubic planar
/// graph have a vertex cover of size κ?" as Cluster-Scaling with budget
/// k = η²·(#chain triples) + κ and radii window [r_min, r_max] ⊂ (0, 1).
///
/// Every edge route becomes a chain of heavy disk groups at gap 2α−1 (scale
/// α divided out at the end, so gaps land in (1.5, 2]): consecutive groups
/// intersect at radius 1, non-consecutive never. Triple middles are θ-heavy
/// with θ = k+1 and can never be scaled, so breaking the chain into
/// cluster-sized runs costs one η²-group per triple plus, at one end, the
/// (light) vertex disk — whose choice of end is exactly the vertex cover.
/// A θ-heavy blocker beside each vertex forces the incident chains of an
/// unshrunk vertex to cut at their first group instead.
inline ReductionArtifact gen_vc_shrink(const EmbeddedGraph& g, const Rational& r_min,
                                       long long kappa,
                                       std::optional<Rational> r_max_opt = {}) {
    validate_embedding(g);
    detail::require_grid_embedding(g);
    if (!(0 < r_min && r_min < 1))
        throw InputError("vc-shrink needs 0 < r_min < 1");
    Rational r_max = r_max_opt.value_or(r_min);
    if (r_max < r_min || !(r_max < 1))
        throw InputError("vc-shrink needs r_min <= r_max < 1");
    const long long eta = static_cast<long long>(g.vertices.size());
    if (kappa < 1 || kappa > eta) throw InputError("cover size must be in [1, #vertices]");

    // Derived constants; see the class comment for their roles.
    Rational varsigma = (1 - r_min) / 1000;
    long long alpha = detail::to_longlong(ceil_rational(2 / (1 - r_min - varsigma)), "alpha");
    long long beta = 2 * detail::to_longlong(ceil_rational(Rational(2 * alpha - 2, 3)), "beta");
    Rational mu(2 * alpha + 3 * beta, 3 * beta + 1);
    Rational modulus(9 * beta * (2 * alpha - 1));
    BigInt gamma = detail::choose_gamma(g, modulus, Rational(4 * alpha));

    // λ per segment and the chain-triple total q_e per edge.
    std::vector<std::vector<long long>> lambdas(g.edges.size());
    long long total_triples = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& route = g.edges[e].route;
        for (std::size_t i = 0; i + 1 < route.size(); ++i) {
            Rational len = abs(route[i + 1].first - route[i].first) +
                           abs(route[i + 1].second - route[i].second);
            Rational lam_q = len * Rational(gamma) / (modulus / 3);
            if (boost::multiprecision::denominator(lam_q) != 1)
                throw InputError("segment length is not a multiple of the chain modulus");
            long long lam = detail::to_longlong(boost::multiprecision::numerator(lam_q),
                                                "lambda");
            lambdas[e].push_back(lam);
            total_triples += beta * lam;
        }
    }

    const long long k_fix = eta * eta * total_triples;
    const long long k = k_fix + kappa;
    const long long theta = k + 1;
    const long long eta2 = eta * eta;

    ReductionArtifact art;
    art.instance.r_min = r_min;
    art.instance.r_max = r_max;
    art.instance.k = k;
    art.parameters["alpha"] = alpha;
    art.parameters["beta"] = beta;
    art.parameters["mu"] = mu;
    art.parameters["gamma"] = Rational(gamma);
    art.parameters["eta"] = eta;
    art.parameters["kappa"] = kappa;
    art.parameters["k_fix"] = k_fix;
    art.parameters["theta"] = theta;

    BigInt total_points = BigInt(eta) * (1 + theta) +
                          BigInt(total_triples) * (theta + 2 * eta2);
    if (total_points > 80'000'000) throw InputError("gadget instance would be too large");
    art.instance.points.reserve(total_points.template convert_to<std::size_t>());

    auto emit = [&](const Rational& x, const Rational& y, long long copies,
                    const std::string& role) {
        for (long long c = 0; c < copies; ++c) {
            int id = static_cast<int>(art.instance.points.size());
            art.instance.points.push_back({x / alpha, y / alpha, id});
        }
        art.add_role(role, copies);
    };

    for (const auto& v : g.vertices) {
        Rational x = v.x * Rational(gamma), y = v.y * Rational(gamma);
        emit(x, y, 1, "vertex " + std::to_string(v.id));
        auto [dx, dy] = free_dir_step(v.free);
        emit(x + Rational(dx * (2 * alpha - 1)), y + Rational(dy * (2 * alpha - 1)), theta,
             "blocker " + std::to_string(v.id));
    }

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        std::vector<std::pair<Rational, Rational>> route;
        route.reserve(edge.route.size());
        for (const auto& [x, y] : edge.route)
            route.emplace_back(x * Rational(gamma), y * Rational(gamma));
        auto gaps = detail::vc_edge_gaps(alpha, beta, mu, lambdas[e]);
        auto points = detail::chain_positions(route, gaps);
        if (points.back() != route.back())
            throw InputError("chain schedule does not land on the far vertex");
        std::string prefix =
            "chain " + std::to_string(edge.u) + "-" + std::to_string(edge.v) + " pos ";
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            long long pos = static_cast<long long>(i) + 1;
            emit(points[i].first, points[i].second, pos % 3 == 2 ? theta : eta2,
                 prefix + std::to_string(pos));
        }
    }
    art.check_roles_cover_points();
    return art;
}

/// Radius assignment that witnesses a vertex cover: shrink the cover's
/// vertex disks plus, per edge, the η²-groups on the residue determined by
/// the covered endpoint (positions ≡ 0 mod 3 counted from a covered stored
/// u, ≡ 1 mod 3 when only the stored v is covered). For an actual cover
/// this scales exactly k_fix + |cover| disks and yields a cluster graph;
/// for a non-cover some chain keeps three consecutive unshrunk groups.
inline RadiusAssignment build_vc_forward_solution(const ReductionArtifact& art,
                                                  const std::vector<int>& cover) {
    std::set<int> in_cover(cover.begin(), cover.end());
    const double shrunk = to_double(art.instance.r_min);
    RadiusAssignment out = all_unit_radii(art.instance.points.size());
    std::set<int> seen_vertices;
    for (const auto& run : art.provenance) {
        std::string kind;
        int vertex = -1;
        detail::ChainRole chain;
        if (!detail::parse_chain_role(run.role, kind, vertex, chain))
            throw InputError("unrecognized provenance role: " + run.role);
        bool shrink = false;
        if (kind == "vertex") {
            seen_vertices.insert(vertex);
            shrink = in_cover.count(vertex) > 0;
        } else if (kind == "chain") {
            // Anchor at the covered endpoint, preferring the stored u; an
            // uncovered edge (only possible for non-covers) falls back to u.
            bool anchor_u = in_cover.count(chain.u) > 0 || in_cover.count(chain.v) == 0;
            shrink = chain.pos % 3 == (anchor_u ? 0 : 1);
        }
        if (shrink)
            for (long long i = run.begin; i < run.begin + run.count; ++i)
                out.radii[static_cast<std::size_t>(i)] = shrunk;
    }
    for (int v : in_cover)
        if (!seen_vertices.count(v))
            throw InputError("cover names unknown vertex " + std::to_string(v));
    return out;
}

} // namespace diskscale
