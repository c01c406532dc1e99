#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "diskscale/artifact.hpp"
#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"
#include "diskscale/rational.hpp"

namespace diskscale {

/// κ×κ Grid Tiling: cell (i,j) holds tuples over [1,η]²; a solution picks
/// one tuple per cell subject to an order relation between first
/// coordinates of horizontally adjacent picks and second coordinates of
/// vertically adjacent picks.
struct GridTilingInstance {
    int kappa = 0;
    int eta = 0;
    /// cells[i-1][j-1] lists cell (i,j); i indexes columns, j rows.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> cells;
};

enum class GtOrder { LessEq, Less, Greater };

inline void validate_gt(const GridTilingInstance& inst) {
    if (inst.kappa < 1) throw InputError("grid tiling needs kappa >= 1");
    if (inst.eta < 1) throw InputError("grid tiling needs eta >= 1");
    if (static_cast<int>(inst.cells.size()) != inst.kappa)
        throw InputError("grid tiling cell table must be kappa x kappa");
    for (const auto& col : inst.cells) {
        if (static_cast<int>(col.size()) != inst.kappa)
            throw InputError("grid tiling cell table must be kappa x kappa");
        for (const auto& cell : col)
            for (auto [a, b] : cell)
                if (a < 1 || a > inst.eta || b < 1 || b > inst.eta)
                    throw InputError("grid tiling tuple entry outside [1, eta]");
    }
}

/// Brute-force tiling solver (reference semantics for the transforms):
/// first coordinates are compared along growing i, second along growing j.
inline bool gt_solvable(const GridTilingInstance& inst, GtOrder order) {
    validate_gt(inst);
    auto ok = [order](int lo, int hi) {
        switch (order) {
        case GtOrder::LessEq: return lo <= hi;
        case GtOrder::Less: return lo < hi;
        case GtOrder::Greater: return lo > hi;
        }
        return false;
    };
    const int kk = inst.kappa;
    std::vector<std::pair<int, int>> chosen(static_cast<std::size_t>(kk) * kk);
    // cell order: row-major so left and upper neighbours are already fixed
    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == kk * kk) return true;
        int i = idx % kk, j = idx / kk; // 0-based column, row
        for (const auto& t : inst.cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            if (i > 0 && !ok(chosen[static_cast<std::size_t>(idx - 1)].first, t.first))
                continue;
            if (j > 0 && !ok(chosen[static_cast<std::size_t>(idx - kk)].second, t.second))
                continue;
            chosen[static_cast<std::size_t>(idx)] = t;
            if (self(self, idx + 1)) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

/// ≤-tiling → <-tiling: embed the cell coordinates into the tuple values,
/// (a,b) in cell (i,j) ↦ (aη² + i, bη² + j) over the alphabet [1, η³ + κ].
/// Ties a = a′ between columns i and i+1 become strict via i < i+1, and
/// a < a′ stays strict because the η² stride dominates the index shift.
inline GridTilingInstance gt_le_to_lt(const GridTilingInstance& inst) {
    validate_gt(inst);
    GridTilingInstance out;
    out.kappa = inst.kappa;
    out.eta = inst.eta * inst.eta * inst.eta + inst.kappa;
    out.cells.resize(inst.cells.size());
    int stride = inst.eta * inst.eta;
    for (int i = 1; i <= inst.kappa; ++i) {
        out.cells[i - 1].resize(inst.cells[i - 1].size());
        for (int j = 1; j <= inst.kappa; ++j)
            for (auto [a, b] : inst.cells[i - 1][j - 1])
                out.cells[i - 1][j - 1].push_back({a * stride + i, b * stride + j});
    }
    return out;
}

/// <-tiling → >-tiling by value reversal: (a,b) ↦ (η+1−a, η+1−b).
/// An involution; applying it twice returns the original instance.
inline GridTilingInstance gt_lt_to_gt(const GridTilingInstance& inst) {
    validate_gt(inst);
    GridTilingInstance out;
    out.kappa = inst.kappa;
    out.eta = inst.eta;
    out.cells.resize(inst.cells.size());
    for (std::size_t i = 0; i < inst.cells.size(); ++i) {
        out.cells[i].resize(inst.cells[i].size());
        for (std::size_t j = 0; j < inst.cells[i].size(); ++j)
            for (auto [a, b] : inst.cells[i][j])
                out.cells[i][j].push_back({inst.eta + 1 - a, inst.eta + 1 - b});
    }
    return out;
}

/// >-solvable instance with the unique solution s_{i,j} = (η+1−i, η+1−j);
/// needs κ ≤ η so the planted values stay in range.
inline GridTilingInstance gt_planted_instance(int eta, int kappa) {
    if (kappa > eta) throw InputError("planted tiling needs kappa <= eta");
    GridTilingInstance inst;
    inst.eta = eta;
    inst.kappa = kappa;
    inst.cells.assign(static_cast<std::size_t>(kappa),
                      std::vector<std::vector<std::pair<int, int>>>(
                          static_cast<std::size_t>(kappa)));
    for (int i = 1; i <= kappa; ++i)
        for (int j = 1; j <= kappa; ++j)
            inst.cells[i - 1][j - 1].push_back({eta + 1 - i, eta + 1 - j});
    return inst;
}

/// Builds the Connected-Scaling instance for a >-semantics Grid Tiling:
/// one unit disk per tuple inside each cell, η candidate separator disks
/// between adjacent cells, and four boundary dummies per grid row/column,
/// with k = κ² + 4κ and radii window [1, r_max].
///
/// On the ×10 integer grid no two unit disks intersect. Scaling one tile
/// disk per cell plus every dummy to r_max connects everything — selected
/// disks of adjacent cells touch exactly when the > relation holds, each
/// separator reaches a selected neighbour (q < a to the left, q > a′ to
/// the right), cell mates hang off their selected disk, and the dummies
/// tie the boundary separators in. A violated > relation leaves the
/// between-cell separators with q ∈ [a, a′] isolated.
///
/// The cell pitch is 2η + 2γ with γ = η² by default; `gamma_override`
/// exists for negative controls (the r_max formula stays η²-based, so a
/// smaller γ breaks the calibrated distance inequalities).
inline ReductionArtifact
gen_gridtiling_connected(const GridTilingInstance& inst,
                         std::optional<long long> gamma_override = {}) {
    validate_gt(inst);
    if (inst.eta < 2) throw InputError("the geometric tiling gadget needs eta >= 2");
    const long long eta = inst.eta, kappa = inst.kappa;
    const long long gamma = gamma_override.value_or(eta * eta);
    if (gamma < 1) throw InputError("cell pitch parameter gamma must be positive");
    const long long D = 2 * eta + 2 * gamma;

    // Smallest 10⁻⁶-grid radius whose doubled reach covers the worst
    // intended contact: (2·r_max)² ≥ 100·[(2η²+2η−1)² + (η−1)²].
    BigInt N = 25 * (BigInt(2 * eta * eta + 2 * eta - 1) * (2 * eta * eta + 2 * eta - 1) +
                     BigInt(eta - 1) * (eta - 1));
    for (int i = 0; i < 12; ++i) N *= 10;
    BigInt m = boost::multiprecision::sqrt(N);
    if (m * m < N) ++m;

    ReductionArtifact art;
    art.instance.r_min = 1;
    art.instance.r_max = Rational(m, BigInt(1'000'000));
    art.instance.k = kappa * kappa + 4 * kappa;
    art.parameters["eta"] = eta;
    art.parameters["kappa"] = kappa;
    art.parameters["gamma"] = gamma;
    art.parameters["pitch"] = D;

    auto emit = [&](long long x10, long long y10, const std::string& role) {
        int id = static_cast<int>(art.instance.points.size());
        art.instance.points.push_back({Rational(x10), Rational(y10), id});
        art.add_role(role, 1);
    };
    auto mid_y = [&](long long j) { return 10 * j * D + 5 * (eta + 1); };

    for (long long i = 1; i <= kappa; ++i)
        for (long long j = 1; j <= kappa; ++j)
            for (auto [a, b] : inst.cells[static_cast<std::size_t>(i - 1)]
                                         [static_cast<std::size_t>(j - 1)])
                emit(10 * (i * D + a), 10 * (j * D + b),
                     "tile " + std::to_string(i) + " " + std::to_string(j) + " " +
                         std::to_string(a) + " " + std::to_string(b));
    for (long long i = 1; i < kappa; ++i)
        for (long long j = 1; j <= kappa; ++j)
            for (long long q = 1; q <= eta; ++q)
                emit(10 * (i * D + eta + gamma + q), mid_y(j),
                     "hsep " + std::to_string(i) + " " + std::to_string(j) + " " +
                         std::to_string(q));
    for (long long i = 1; i <= kappa; ++i)
        for (long long j = 1; j < kappa; ++j)
            for (long long q = 1; q <= eta; ++q)
                emit(mid_y(i), 10 * (j * D + eta + gamma + q),
                     "vsep " + std::to_string(i) + " " + std::to_string(j) + " " +
                         std::to_string(q));
    for (long long j = 1; j <= kappa; ++j)
        emit(20 * eta, mid_y(j), "dummy left " + std::to_string(j));
    for (long long j = 1; j <= kappa; ++j)
        emit(10 * (kappa * D + eta + 2 * eta * eta), mid_y(j),
             "dummy right " + std::to_string(j));
    for (long long i = 1; i <= kappa; ++i)
        emit(mid_y(i), 20 * eta, "dummy top " + std::to_string(i));
    for (long long i = 1; i <= kappa; ++i)
        emit(mid_y(i), 10 * (kappa * D + eta + 2 * eta * eta),
             "dummy bottom " + std::to_string(i));

    art.check_roles_cover_points();
    return art;
}

/// Scales the picked tile disk of every cell plus all dummies to r_max.
/// pick[i-1][j-1] must name a tuple present in cell (i,j).
inline RadiusAssignment
build_gt_forward_solution(const ReductionArtifact& art,
                          const std::vector<std::vector<std::pair<int, int>>>& pick) {
    const double grown = to_double(art.instance.r_max);
    RadiusAssignment out = all_unit_radii(art.instance.points.size());
    long long tiles_scaled = 0;
    for (const auto& run : art.provenance) {
        std::istringstream in(run.role);
        std::string kind;
        in >> kind;
        bool grow = false;
        if (kind == "tile") {
            long long i, j, a, b;
            in >> i >> j >> a >> b;
            if (in.fail() || i < 1 || i > static_cast<long long>(pick.size()) || j < 1 ||
                j > static_cast<long long>(pick[static_cast<std::size_t>(i - 1)].size()))
                throw InputError("selection grid does not match the artifact");
            auto want = pick[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            grow = want.first == a && want.second == b;
            tiles_scaled += grow ? run.count : 0;
        } else if (kind == "dummy") {
            grow = true;
        }
        if (grow)
            for (long long id = run.begin; id < run.begin + run.count; ++id)
                out.radii[static_cast<std::size_t>(id)] = grown;
    }
    long long cells = 0;
    for (const auto& col : pick) cells += static_cast<long long>(col.size());
    if (tiles_scaled != cells)
        throw InputError("a selected tuple is missing from its cell");
    return out;
}

struct GtCheckReport {
    long long pairs_checked = 0;
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Exact-rational audit of every distance inequality the connectivity
/// argument leans on: separator↔tile iff-comparisons against r_max+1,
/// in-cell reachability, adjacent-cell contact iff the > relation holds,
/// non-adjacent-cell isolation, and the dummy calibration (beyond r_max+1
/// of every non-dummy, within 2·r_max of its own boundary cell, beyond
/// 2·r_max of other dummies and other cells' tiles).
inline GtCheckReport check_gt_distance_properties(const GridTilingInstance& inst,
                                                  const ReductionArtifact& art) {
    validate_gt(inst);
    struct TileRef {
        int a, b;
        std::size_t id;
    };
    std::map<std::pair<int, int>, std::vector<TileRef>> tiles;
    std::map<std::tuple<int, int, int>, std::size_t> hsep, vsep;
    std::vector<std::pair<std::pair<int, int>, std::size_t>> dummies; // own cell, id

    const long long kappa = inst.kappa;
    for (const auto& run : art.provenance) {
        std::istringstream in(run.role);
        std::string kind;
        in >> kind;
        if (kind == "tile") {
            int i, j, a, b;
            in >> i >> j >> a >> b;
            tiles[{i, j}].push_back({a, b, static_cast<std::size_t>(run.begin)});
        } else if (kind == "hsep" || kind == "vsep") {
            int i, j, q;
            in >> i >> j >> q;
            (kind == "hsep" ? hsep : vsep)[{i, j, q}] = static_cast<std::size_t>(run.begin);
        } else if (kind == "dummy") {
            std::string side;
            int t;
            in >> side >> t;
            std::pair<int, int> cell;
            if (side == "left") cell = {1, t};
            else if (side == "right") cell = {static_cast<int>(kappa), t};
            else if (side == "top") cell = {t, 1};
            else cell = {t, static_cast<int>(kappa)};
            dummies.push_back({cell, static_cast<std::size_t>(run.begin)});
        }
    }

    const auto& pts = art.instance.points;
    const Rational reach1 = (art.instance.r_max + 1) * (art.instance.r_max + 1);
    const Rational reach2 = (2 * art.instance.r_max) * (2 * art.instance.r_max);
    GtCheckReport rep;
    auto d2 = [&](std::size_t p, std::size_t q) { return dist2(pts[p], pts[q]); };
    auto expect = [&](bool claim, const std::string& what) {
        ++rep.pairs_checked;
        if (!claim) rep.violations.push_back(what);
    };
    auto tile_name = [](std::pair<int, int> cell, const TileRef& t) {
        return "tile (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
               "):(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
    };

    // (a) separator ↔ tile contact matches the coordinate comparisons
    for (const auto& [key, id] : hsep) {
        auto [i, j, q] = key;
        for (const auto& t : tiles[{i, j}])
            expect((d2(id, t.id) <= reach1) == (q < t.a),
                   "hsep q=" + std::to_string(q) + " vs left " + tile_name({i, j}, t));
        for (const auto& t : tiles[{i + 1, j}])
            expect((d2(id, t.id) <= reach1) == (q > t.a),
                   "hsep q=" + std::to_string(q) + " vs right " + tile_name({i + 1, j}, t));
    }
    for (const auto& [key, id] : vsep) {
        auto [i, j, q] = key;
        for (const auto& t : tiles[{i, j}])
            expect((d2(id, t.id) <= reach1) == (q < t.b),
                   "vsep q=" + std::to_string(q) + " vs lower " + tile_name({i, j}, t));
        for (const auto& t : tiles[{i, j + 1}])
            expect((d2(id, t.id) <= reach1) == (q > t.b),
                   "vsep q=" + std::to_string(q) + " vs upper " + tile_name({i, j + 1}, t));
    }
    // (b) any scaled tile disk reaches every mate in its cell
    for (const auto& [cell, list] : tiles)
        for (std::size_t x = 0; x < list.size(); ++x)
            for (std::size_t y = x + 1; y < list.size(); ++y)
                expect(d2(list[x].id, list[y].id) <= reach1,
                       "cell mates out of reach in (" + std::to_string(cell.first) + "," +
                           std::to_string(cell.second) + ")");
    // (c)/(d) cross-cell tile pairs
    for (const auto& [ca, la] : tiles)
        for (const auto& [cb, lb] : tiles) {
            if (!(ca < cb)) continue;
            int di = cb.first - ca.first, dj = cb.second - ca.second;
            bool horiz = dj == 0 && di == 1, vert = di == 0 && dj == 1;
            for (const auto& ta : la)
                for (const auto& tb : lb) {
                    bool touch = d2(ta.id, tb.id) <= reach2;
                    if (horiz)
                        expect(touch == (ta.a > tb.a), "adjacent-cell contact vs order: " +
                                                           tile_name(ca, ta) + " / " +
                                                           tile_name(cb, tb));
                    else if (vert)
                        expect(touch == (ta.b > tb.b), "adjacent-cell contact vs order: " +
                                                           tile_name(ca, ta) + " / " +
                                                           tile_name(cb, tb));
                    else
                        expect(!touch, "non-adjacent cells touch: " + tile_name(ca, ta) +
                                           " / " + tile_name(cb, tb));
                }
        }
    // (e) dummy calibration
    std::set<std::size_t> dummy_ids;
    for (const auto& [cell, id] : dummies) dummy_ids.insert(id);
    for (const auto& [cell, id] : dummies) {
        for (std::size_t p = 0; p < pts.size(); ++p)
            if (!dummy_ids.count(p))
                expect(d2(id, p) > reach1,
                       "dummy within unit reach of point " + std::to_string(p));
        for (const auto& [tc, list] : tiles)
            for (const auto& t : list) {
                if (tc == cell)
                    expect(d2(id, t.id) <= reach2, "dummy cannot reach its own cell (" +
                                                       std::to_string(tc.first) + "," +
                                                       std::to_string(tc.second) + ")");
                else
                    expect(d2(id, t.id) > reach2,
                           "dummy reaches foreign " + tile_name(tc, t));
            }
        for (const auto& [cell2, id2] : dummies)
            if (id < id2)
                expect(d2(id, id2) > reach2, "two dummies within scaled reach");
    }
    return rep;
}

} // namespace diskscale
