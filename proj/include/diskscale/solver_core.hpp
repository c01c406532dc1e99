#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"

namespace diskscale {

/// Cooperative deadline: solvers poll it at branch boundaries and abort via
/// TimeoutError, so a run never stops mid-update with a torn result.
class Deadline {
public:
    static Deadline none() { return Deadline{}; }

    static Deadline after_ms(long long ms) {
        Deadline d;
        d.enabled_ = true;
        d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return d;
    }

    void check() const {
        if (enabled_ && std::chrono::steady_clock::now() > at_)
            throw TimeoutError("deadline exceeded");
    }

private:
    bool enabled_ = false;
    std::chrono::steady_clock::time_point at_{};
};

struct SolveStats {
    long long branches = 0;
    long long lp_calls = 0;
    double wall_ms = 0.0;
    std::string algorithm;
};

struct SolveOutcome {
    bool yes = false;
    std::optional<RadiusAssignment> witness; ///< present iff yes
    SolveStats stats;
};

enum class Algo { Auto, Xp, ClusterFpt, Complete, Oracle };

/// Wall-clock scope guard for filling SolveStats::wall_ms.
class WallTimer {
public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace diskscale
