#pragma once

// Derived capacity bounds: wind-farm generation limits from area density and
// the North-Sea style cable caps keyed on endpoint kinds, plus the linearly
// declining emission-cap trajectory.

#include <algorithm>
#include <vector>

#include "expanse/instance.hpp"

namespace expanse {

struct BoundTable {
    std::vector<double> generator_cap;    // per generator, MW, kInf when unbounded
    std::vector<double> arc_cap;          // per arc, MW, kInf when unbounded
    std::vector<double> farm_generation;  // per node, MW; meaningful for farms only
};

/// cap_i = start - (i-1) * (start-end) / (n-1); endpoints exact.
inline std::vector<double> co2_cap_trajectory(double start, double end, int n_periods) {
    if (n_periods < 2) throw DomainError("co2 cap trajectory needs at least 2 periods");
    if (!(start >= end) || end < 0) throw DomainError("co2 cap trajectory needs start >= end >= 0");
    std::vector<double> caps(static_cast<size_t>(n_periods));
    const double step = (start - end) / (n_periods - 1);
    for (int i = 0; i < n_periods; ++i) caps[static_cast<size_t>(i)] = start - step * i;
    caps.front() = start;
    caps.back() = end;
    return caps;
}

namespace detail {

inline double max_initial(const std::vector<double>& residuals) {
    double m = 0.0;
    for (double v : residuals) m = std::max(m, v);
    return m;
}

/// Default cable cap by endpoint kinds, in MW.
inline double default_arc_cap(const Instance& inst, const TransmissionArc& arc) {
    const NodeKind ka = inst.nodes[static_cast<size_t>(arc.node_a)].kind;
    const NodeKind kb = inst.nodes[static_cast<size_t>(arc.node_b)].kind;
    const bool farm_a = ka == NodeKind::offshore_farm;
    const bool farm_b = kb == NodeKind::offshore_farm;
    const bool hub_a = ka == NodeKind::hub;
    const bool hub_b = kb == NodeKind::hub;
    if (farm_a && farm_b) return 1000.0;
    if ((farm_a && hub_b) || (farm_b && hub_a)) return 10000.0;
    if (farm_a || farm_b) return 5000.0;            // farm to its home country
    if (hub_a || hub_b) return 20000.0;             // hub to shore (or hub to hub)
    return kInf;                                    // onshore grid: explicit caps only
}

} // namespace detail

inline BoundTable derive_capacity_bounds(const Instance& inst) {
    BoundTable table;
    table.generator_cap.assign(inst.generators.size(), kInf);
    table.arc_cap.assign(inst.arcs.size(), kInf);
    table.farm_generation.assign(inst.nodes.size(), 0.0);

    for (size_t g = 0; g < inst.generators.size(); ++g) {
        const auto& gen = inst.generators[g];
        const auto& node = inst.nodes[static_cast<size_t>(gen.node)];
        double cap = kInf;
        if (gen.max_installed) {
            cap = *gen.max_installed;
        } else if (node.kind == NodeKind::offshore_farm) {
            if (!node.area_km2) throw BoundError(node.id, "farm has neither area_km2 nor max_installed");
            cap = *node.area_km2 * inst.options.density_mw_per_km2;
        }
        // existing capacity always stays buildable
        cap = std::max(cap, detail::max_initial(gen.initial_capacity));
        table.generator_cap[g] = cap;
    }

    for (size_t n = 0; n < inst.nodes.size(); ++n) {
        if (inst.nodes[n].kind != NodeKind::offshore_farm) continue;
        double total = 0.0;
        bool any_gen = false;
        for (size_t g = 0; g < inst.generators.size(); ++g) {
            if (inst.generators[g].node != static_cast<int>(n)) continue;
            any_gen = true;
            total += table.generator_cap[g];
        }
        if (!any_gen && inst.nodes[n].area_km2)
            total = *inst.nodes[n].area_km2 * inst.options.density_mw_per_km2;
        table.farm_generation[n] = total;
    }

    for (size_t a = 0; a < inst.arcs.size(); ++a) {
        const auto& arc = inst.arcs[a];
        double cap = arc.max_capacity ? *arc.max_capacity : detail::default_arc_cap(inst, arc);
        for (int end : {arc.node_a, arc.node_b}) {
            if (inst.nodes[static_cast<size_t>(end)].kind == NodeKind::offshore_farm)
                cap = std::min(cap, table.farm_generation[static_cast<size_t>(end)]);
        }
        cap = std::max(cap, detail::max_initial(arc.initial_capacity));
        table.arc_cap[a] = cap;
    }

    return table;
}

} // namespace expanse
