#pragma once

#include <map>
#include <string>
#include <vector>

#include "diskscale/errors.hpp"
#include "diskscale/geometry.hpp"

namespace diskscale {

/// Run-length role record: points [begin, begin+count) share one role.
/// Gadget instances are huge but consist of long blocks of identically-rolled
/// disks, so runs keep provenance compact and diffable.
struct ProvenanceRun {
    long long begin = 0;
    long long count = 0;
    std::string role;
};

/// A generated reduction instance plus everything needed to audit it: the
/// role of every emitted disk and the derived construction parameters.
struct ReductionArtifact {
    Instance instance;
    std::vector<ProvenanceRun> provenance; ///< exact partition of point ids
    std::map<std::string, Rational> parameters;

    /// Appends `count` points starting at the current end of the role map.
    void add_role(const std::string& role, long long count) {
        long long begin =
            provenance.empty() ? 0 : provenance.back().begin + provenance.back().count;
        if (!provenance.empty() && provenance.back().role == role)
            provenance.back().count += count;
        else
            provenance.push_back({begin, count, role});
    }

    [[nodiscard]] std::string role_of(long long id) const {
        for (const auto& run : provenance)
            if (id >= run.begin && id < run.begin + run.count) return run.role;
        return "";
    }

    /// Every point must carry exactly one role (runs tile 0..n-1).
    void check_roles_cover_points() const {
        long long next = 0;
        for (const auto& run : provenance) {
            if (run.begin != next || run.count <= 0)
                throw InputError("provenance runs do not tile the id space at " +
                                 std::to_string(next));
            next += run.count;
        }
        if (next != static_cast<long long>(instance.points.size()))
            throw InputError("provenance covers " + std::to_string(next) + " of " +
                             std::to_string(instance.points.size()) + " points");
    }
};

} // namespace diskscale
