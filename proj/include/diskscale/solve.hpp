#pragma once

#include <string>

#include "diskscale/oracle.hpp"
#include "diskscale/solver_cluster.hpp"
#include "diskscale/solver_complete.hpp"
#include "diskscale/solver_core.hpp"
#include "diskscale/solver_xp.hpp"

namespace diskscale {

inline const char* algo_name(Algo a) {
    switch (a) {
    case Algo::Auto: return "auto";
    case Algo::Xp: return "xp";
    case Algo::ClusterFpt: return "cluster-fpt";
    case Algo::Complete: return "complete";
    case Algo::Oracle: return "oracle";
    }
    return "?";
}

/// Dispatcher. `Auto` routes Complete to the polynomial solver, Cluster to
/// the FPT solver, and everything else to the XP framework; explicit
/// specialized algorithms reject targets they were not built for.
inline SolveOutcome solve(const Instance& inst, GraphClass cls, Algo algo = Algo::Auto,
                          const Deadline& deadline = Deadline::none(),
                          const OracleBudget& oracle_budget = {}) {
    bool routed = false;
    if (algo == Algo::Auto) {
        routed = true;
        algo = cls == GraphClass::Complete  ? Algo::Complete
               : cls == GraphClass::Cluster ? Algo::ClusterFpt
                                            : Algo::Xp;
    }

    SolveOutcome out;
    switch (algo) {
    case Algo::Xp:
        out = solve_xp(inst, cls, deadline);
        break;
    case Algo::ClusterFpt:
        if (cls != GraphClass::Cluster)
            throw InputError("the cluster-fpt algorithm only solves the cluster target");
        out = solve_cluster_fpt(inst, deadline);
        break;
    case Algo::Complete:
        if (cls != GraphClass::Complete)
            throw InputError("the complete algorithm only solves the complete target");
        out = solve_complete(inst);
        break;
    case Algo::Oracle:
        out = brute_force_solve(inst, cls, oracle_budget);
        break;
    case Algo::Auto:
        break; // unreachable
    }
    if (routed) out.stats.algorithm = "auto:" + out.stats.algorithm;
    return out;
}

} // namespace diskscale
