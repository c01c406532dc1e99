#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diskscale/artifact.hpp"
#include "diskscale/chain_layout.hpp"
#include "diskscale/embedding.hpp"
#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/rational.hpp"
#include "diskscale/vc_shrink.hpp" // role parsing + grid checks shared by chain gadgets

namespace diskscale {

namespace detail {

/// Gap schedule for one edge chain of the enlarge gadget. Each segment
/// carries λ_s triples at intra-gap α/2 preceded by inter-gaps β; the last
/// segment compresses the μ gaps following triples 1..μ to β − β/μ, which
/// frees exactly β of length so the chain's final disk sits β before the
/// far vertex (the closing β gap is the schedule's last entry).
inline std::vector<Rational> is_edge_gaps(const Rational& alpha, const Rational& beta,
                                          long long mu,
                                          const std::vector<long long>& lambdas) {
    std::vector<Rational> gaps;
    Rational half = alpha / 2;
    Rational compressed = beta - beta / mu;
    auto triple = [&](const Rational& lead) {
        gaps.push_back(lead);
        gaps.push_back(half);
        gaps.push_back(half);
    };
    for (std::size_t s = 0; s < lambdas.size(); ++s) {
        bool terminal = s + 1 == lambdas.size();
        for (long long i = 1; i <= lambdas[s]; ++i)
            triple(terminal && i >= 2 && i <= mu + 1 ? compressed : beta);
    }
    gaps.push_back(beta);
    return gaps;
}

} // namespace detail

/// Builds the enlarge-gadget instance that encodes "does this cubic planar
/// graph have an independent set of size κ?" as Cluster-Scaling with only
/// growing allowed: either r_min > 1 (strict variant, target radius
/// ρ = r_min) or r_min = 1 with r_max > 1 (target ρ = min(r_max, 3/2)).
///
/// Edge chains consist of triples spaced so that each triple is an induced
/// P3 at radius 1 (ends α apart, α ≤ 5/2) whose middle is θ-heavy; fixing a
/// triple means enlarging its first or third group to ρ. Inter-triple gaps
/// sit at β = 2ρ, so two enlarged groups facing each other across a gap
/// become tangent and recreate a P3 — fix choices must not flip from third
/// to first along a chain, and a chain may start (end) with a first-fix
/// only if its start (end) vertex disk is not enlarged. The per-vertex
/// blocker P3 (vertex disk, θ-heavy disk at α/2, coincident twin pair at α)
/// charges every vertex: 1 for enlarging the vertex disk (independent-set
/// members) or 2 for enlarging both twins, giving k = k_fix + 2η − κ.
inline ReductionArtifact gen_is_enlarge(const EmbeddedGraph& g, const Rational& r_min,
                                        long long kappa,
                                        std::optional<Rational> r_max_opt = {}) {
    validate_embedding(g);
    detail::require_grid_embedding(g);
    const long long eta = static_cast<long long>(g.vertices.size());
    if (kappa < 1 || kappa > eta)
        throw InputError("independent-set size must be in [1, #vertices]");

    Rational rho, r_max;
    if (r_min > 1) {
        rho = r_min;
        r_max = r_max_opt.value_or(r_min);
        if (r_max < r_min) throw InputError("is-enlarge needs r_max >= r_min");
    } else if (r_min == 1) {
        if (!r_max_opt || !(*r_max_opt > 1))
            throw InputError("is-enlarge with r_min = 1 needs r_max > 1");
        r_max = *r_max_opt;
        rho = std::min(r_max, Rational(3, 2));
    } else {
        throw InputError("is-enlarge needs r_min >= 1");
    }

    Rational alpha = std::min(rho, Rational(3, 2)) + 1;
    Rational beta = 2 * rho;
    long long mu =
        detail::to_longlong(floor_rational(beta / std::min(alpha, Rational(rho - 1))), "mu") + 1;
    Rational modulus = 2 * (mu + 1) * (alpha + beta);
    BigInt gamma = detail::choose_gamma(g, modulus, 2 * (alpha + beta));

    std::vector<std::vector<long long>> lambdas(g.edges.size());
    long long total_triples = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& route = g.edges[e].route;
        for (std::size_t i = 0; i + 1 < route.size(); ++i) {
            Rational len = abs(route[i + 1].first - route[i].first) +
                           abs(route[i + 1].second - route[i].second);
            Rational lam_q = len * Rational(gamma) / (alpha + beta);
            if (boost::multiprecision::denominator(lam_q) != 1)
                throw InputError("segment length is not a multiple of the chain modulus");
            long long lam = detail::to_longlong(boost::multiprecision::numerator(lam_q),
                                                "lambda");
            lambdas[e].push_back(lam);
            total_triples += lam;
        }
    }

    const long long eta2 = eta * eta;
    const long long k_fix = eta2 * total_triples;
    const long long k = k_fix + 2 * eta - kappa;
    const long long theta = k + 1;

    ReductionArtifact art;
    art.instance.r_min = r_min;
    art.instance.r_max = r_max;
    art.instance.k = k;
    art.parameters["alpha"] = alpha;
    art.parameters["beta"] = beta;
    art.parameters["mu"] = mu;
    art.parameters["gamma"] = Rational(gamma);
    art.parameters["rho"] = rho;
    art.parameters["eta"] = eta;
    art.parameters["kappa"] = kappa;
    art.parameters["k_fix"] = k_fix;
    art.parameters["theta"] = theta;

    BigInt total_points =
        BigInt(eta) * (3 + theta) + BigInt(total_triples) * (theta + 2 * eta2);
    if (total_points > 80'000'000) throw InputError("gadget instance would be too large");
    art.instance.points.reserve(total_points.template convert_to<std::size_t>());

    auto emit = [&](const Rational& x, const Rational& y, long long copies,
                    const std::string& role) {
        for (long long c = 0; c < copies; ++c) {
            int id = static_cast<int>(art.instance.points.size());
            art.instance.points.push_back({x, y, id});
        }
        art.add_role(role, copies);
    };

    for (const auto& v : g.vertices) {
        Rational x = v.x * Rational(gamma), y = v.y * Rational(gamma);
        auto [dx, dy] = free_dir_step(v.free);
        emit(x, y, 1, "vertex " + std::to_string(v.id));
        emit(x + dx * alpha / 2, y + dy * alpha / 2, theta,
             "blocker " + std::to_string(v.id));
        emit(x + dx * alpha, y + dy * alpha, 2, "twin " + std::to_string(v.id));
    }

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        std::vector<std::pair<Rational, Rational>> route;
        route.reserve(edge.route.size());
        for (const auto& [x, y] : edge.route)
            route.emplace_back(x * Rational(gamma), y * Rational(gamma));
        auto gaps = detail::is_edge_gaps(alpha, beta, mu, lambdas[e]);
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

/// Radius assignment that witnesses an independent set: enlarge the set's
/// vertex disks, both twin copies of every other vertex, and per edge the
/// η²-groups on the triple end facing the edge's non-member endpoint
/// (positions ≡ 1 mod 3 when anchored at the stored u, ≡ 0 mod 3 when only
/// the stored v is outside the set). For a genuine independent set this
/// scales exactly k_fix + 2η − κ disks and yields a cluster graph; for a
/// dependent set some tangency at gap 2ρ recreates an induced P3.
inline RadiusAssignment build_is_forward_solution(const ReductionArtifact& art,
                                                  const std::vector<int>& members) {
    std::set<int> in_set(members.begin(), members.end());
    auto rho_it = art.parameters.find("rho");
    if (rho_it == art.parameters.end())
        throw InputError("artifact lacks the enlarge radius parameter");
    const double enlarged = to_double(rho_it->second);
    RadiusAssignment out = all_unit_radii(art.instance.points.size());
    std::set<int> seen_vertices;
    for (const auto& run : art.provenance) {
        std::string kind;
        int vertex = -1;
        detail::ChainRole chain;
        if (!detail::parse_chain_role(run.role, kind, vertex, chain))
            throw InputError("unrecognized provenance role: " + run.role);
        bool grow = false;
        if (kind == "vertex") {
            seen_vertices.insert(vertex);
            grow = in_set.count(vertex) > 0;
        } else if (kind == "twin") {
            grow = in_set.count(vertex) == 0;
        } else if (kind == "chain") {
            // Anchor at an endpoint outside the set, preferring the stored
            // u; a doubly-inside edge (not an independent set) falls back
            // to u and the verifier will surface the resulting P3.
            bool anchor_u = in_set.count(chain.u) == 0 || in_set.count(chain.v) > 0;
            grow = chain.pos % 3 == (anchor_u ? 1 : 0);
        }
        if (grow)
            for (long long i = run.begin; i < run.begin + run.count; ++i)
                out.radii[static_cast<std::size_t>(i)] = enlarged;
    }
    for (int v : in_set)
        if (!seen_vertices.count(v))
            throw InputError("independent set names unknown vertex " + std::to_string(v));
    return out;
}

} // namespace diskscale
