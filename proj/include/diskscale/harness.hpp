#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diskscale/oracle.hpp"
#include "diskscale/random_gen.hpp"
#include "diskscale/solve.hpp"
#include "diskscale/verify.hpp"

namespace diskscale {

/// Seeded random-instance sweep comparing a solver against a reference
/// (the exhaustive oracle by default). Trial t draws n ∈ [3, max_n],
/// k ∈ [0, max_k], and cycles through the class and radius-window lists,
/// so every combination appears at a fixed trial index.
struct CompareOptions {
    long long trials = 200;
    int max_n = 8;
    long long max_k = 2;
    std::vector<GraphClass> classes{GraphClass::Cluster, GraphClass::Complete,
                                    GraphClass::Connected, GraphClass::Edgeless};
    std::vector<std::pair<Rational, Rational>> windows{{Rational(1, 2), Rational(1)},
                                                       {Rational(1), Rational(1)},
                                                       {Rational(1), Rational(2)},
                                                       {Rational(1, 2), Rational(5, 2)}};
    int box = 6;
    std::uint64_t seed = 1;
    Algo algo = Algo::Xp;          ///< solver under test
    Algo reference = Algo::Oracle; ///< what to compare against
    OracleBudget budget{};
    bool inject_fault = false; ///< flips trial 0's answer; proves mismatches surface
};

struct CompareReport {
    long long trials = 0;
    long long yes = 0;
    long long no = 0;
    long long mismatches = 0;
    std::vector<std::string> failures; ///< first few descriptions

    [[nodiscard]] bool ok() const { return mismatches == 0; }
};

inline CompareReport run_oracle_compare(const CompareOptions& opt) {
    CompareReport rep;
    auto note = [&](const std::string& what) {
        ++rep.mismatches;
        if (rep.failures.size() < 10) rep.failures.push_back(what);
    };
    for (long long t = 0; t < opt.trials; ++t) {
        int n = 3 + static_cast<int>(t % std::max(1, opt.max_n - 2));
        long long k = t % (opt.max_k + 1);
        GraphClass cls = opt.classes[static_cast<std::size_t>(t) % opt.classes.size()];
        const auto& window =
            opt.windows[static_cast<std::size_t>(t / opt.classes.size()) % opt.windows.size()];
        Instance inst = gen_random(n, k, window.first, window.second, opt.box,
                                   opt.seed + static_cast<std::uint64_t>(t));
        const char* cls_name = cls == GraphClass::Cluster    ? "cluster"
                               : cls == GraphClass::Complete ? "complete"
                               : cls == GraphClass::Connected ? "connected"
                                                              : "edgeless";
        std::string label = "trial " + std::to_string(t) + " (n=" + std::to_string(n) +
                            " k=" + std::to_string(k) + " class=" + cls_name + ")";
        ++rep.trials;

        SolveOutcome got = solve(inst, cls, opt.algo);
        if (opt.inject_fault && t == 0) {
            got.yes = !got.yes;
            got.witness.reset();
        }
        SolveOutcome want = opt.reference == Algo::Oracle
                                ? brute_force_solve(inst, cls, opt.budget)
                                : solve(inst, cls, opt.reference);
        (got.yes ? rep.yes : rep.no) += 1;

        if (got.yes != want.yes) {
            note(label + ": answers differ (" + std::string(got.yes ? "yes" : "no") + " vs " +
                 (want.yes ? "yes" : "no") + ")");
            continue;
        }
        for (const auto* side : {&got, &want}) {
            if (!side->witness) continue;
            auto check = verify_solution(inst, *side->witness, cls);
            if (!check)
                note(label + ": witness from " + side->stats.algorithm +
                     " rejected: " + check.message);
        }
    }
    return rep;
}

/// One bench measurement row; millis is the median over the repeats.
struct BenchRow {
    int n = 0;
    long long k = 0;
    std::string algo;
    long long branches = 0;
    long long lp_calls = 0;
    double millis = 0;
};

/// Seeded micro-benchmark for one solver family. Sizes index the point
/// count; the box grows with √n so density stays roughly constant.
inline std::vector<BenchRow> run_bench(Algo algo, GraphClass cls, long long k,
                                       const std::vector<int>& sizes, int repeats,
                                       std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (int n : sizes) {
        int box = std::max(6, static_cast<int>(2.0 * std::sqrt(double(n))) + 1);
        Rational r_min(1, 2), r_max(2);
        Instance inst = gen_random(n, k, r_min, r_max, box, seed + static_cast<std::uint64_t>(n));
        std::vector<double> times;
        SolveOutcome last;
        for (int r = 0; r < std::max(1, repeats); ++r) {
            last = solve(inst, cls, algo);
            times.push_back(last.stats.wall_ms);
        }
        std::sort(times.begin(), times.end());
        rows.push_back({n, k, last.stats.algorithm, last.stats.branches,
                        last.stats.lp_calls, times[times.size() / 2]});
    }
    return rows;
}

inline std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "n,k,algo,branches,lp_calls,millis\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.algo + "," +
               std::to_string(r.branches) + "," + std::to_string(r.lp_calls) + "," +
               std::to_string(r.millis) + "\n";
    return out;
}

} // namespace diskscale
