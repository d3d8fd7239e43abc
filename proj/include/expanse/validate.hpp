#pragma once

// Semantic admission checks. Violations are collected, not thrown: an empty
// report means the instance is admissible for model building.

#include <cmath>
#include <string>
#include <vector>

#include "expanse/instance.hpp"

namespace expanse {

struct Violation {
    std::string where;   // entity id or table name
    std::string what;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string to_string() const {
        std::string out;
        for (auto& v : violations) {
            out += v.where;
            out += ": ";
            out += v.what;
            out += '\n';
        }
        return out;
    }
};

inline ValidationReport validate_instance(const Instance& inst) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& where, const std::string& what) {
        rep.violations.push_back({where, what});
    };
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);

    if (inst.horizon.n_periods < 1) flag("horizon", "n_periods must be >= 1");
    if (inst.horizon.period_length_years < 1) flag("horizon", "period_length_years must be >= 1");
    if (inst.horizon.discount_rate < 0 || inst.horizon.discount_rate >= 1)
        flag("horizon", "discount_rate must be in [0, 1)");

    for (auto& s : inst.seasons.seasons) {
        if (s.hours < 1) flag("season " + s.name, "hours_per_sample must be >= 1");
        if (!(s.scale > 0)) flag("season " + s.name, "scale_factor must be > 0");
    }
    {
        double cov = inst.seasons.year_coverage();
        if (cov < 8400.0 || cov > 8800.0)
            flag("seasons", "scale-weighted hours cover " + std::to_string(cov) +
                                " h, outside one representative year [8400, 8800]");
    }

    for (auto& n : inst.nodes) {
        bool offshore = n.kind != NodeKind::onshore;
        if (offshore && !n.demand_profile.empty())
            flag(n.id, "offshore_farm and hub nodes cannot carry a power demand profile");
        if (n.area_km2 && !(*n.area_km2 > 0)) flag(n.id, "area_km2 must be > 0 when present");
        if (n.home_country >= 0 && n.kind != NodeKind::offshore_farm)
            flag(n.id, "home_country is only meaningful for offshore_farm nodes");
        if (!n.hydrogen_demand.empty() && n.hydrogen_demand.size() != P)
            flag(n.id, "hydrogen_demand must list one value per period");
        for (double d : n.hydrogen_demand) {
            if (d < 0) flag(n.id, "hydrogen_demand must be >= 0");
            if (d > 0 && !n.hydrogen_capable)
                flag(n.id, "hydrogen_demand at a node that is not hydrogen_capable");
        }
    }

    double max_variable_cost = 0.0;
    for (auto& g : inst.generators) {
        if (g.capex.size() != P || g.variable_cost.size() != P || g.initial_capacity.size() != P)
            flag(g.id, "per-period fields must list one value per period");
        if (g.lifetime_periods < 1) flag(g.id, "lifetime_periods must be >= 1");
        if (g.cls != GenClass::dispatchable && g.emission_factor != 0)
            flag(g.id, "emission_factor must be 0 for intermittent and hydrogen_fueled classes");
        for (size_t i = 1; i < g.initial_capacity.size(); ++i)
            if (g.initial_capacity[i] > g.initial_capacity[i - 1] + 1e-9)
                flag(g.id, "initial_capacity residual must be non-increasing across periods");
        if (g.cls == GenClass::intermittent && g.profile.empty())
            flag(g.id, "intermittent generator needs an availability profile");
        if (g.cls == GenClass::hydrogen_fueled) {
            if (!(g.fuel_efficiency > 0) || g.fuel_efficiency > 1)
                flag(g.id, "fuel_efficiency must be in (0, 1]");
            if (!inst.nodes[static_cast<size_t>(g.node)].hydrogen_capable)
                flag(g.id, "hydrogen_fueled generator must sit at a hydrogen_capable node");
        }
        for (double c : g.variable_cost) max_variable_cost = std::max(max_variable_cost, c);
    }

    for (size_t a = 0; a < inst.arcs.size(); ++a) {
        const auto& arc = inst.arcs[a];
        std::string id = "arc " + inst.nodes[static_cast<size_t>(arc.node_a)].id + "-" +
                         inst.nodes[static_cast<size_t>(arc.node_b)].id;
        if (arc.node_a == arc.node_b) flag(id, "arc endpoints must differ");
        if (arc.loss_factor < 0 || arc.loss_factor >= 1)
            flag(id, "loss_factor must be in [0, 1)");
        if (arc.capex.size() != P || arc.initial_capacity.size() != P)
            flag(id, "per-period fields must list one value per period");
        if (arc.max_capacity) {
            double m = 0;
            for (double v : arc.initial_capacity) m = std::max(m, v);
            if (*arc.max_capacity < m - 1e-9)
                flag(id, "max_capacity is below the initial capacity residual");
        }
    }

    {
        const auto& h = inst.hydrogen;
        if (!h.electrolyzer_capex.empty()) {
            if (h.electrolyzer_capex.size() != P || h.electrolyzer_consumption.size() != P)
                flag("hydrogen", "electrolyzer per-period fields must list one value per period");
            for (double c : h.electrolyzer_capex)
                if (c < 0) flag("hydrogen", "electrolyzer_capex must be >= 0");
            for (double c : h.electrolyzer_consumption)
                if (!(c > 0)) flag("hydrogen", "electrolyzer_consumption must be > 0");
        }
        if (!(h.lhv > 0)) flag("hydrogen", "lhv must be > 0");
        if (h.storage_levelized_cost < 0) flag("hydrogen", "storage_levelized_cost must be >= 0");
        for (auto& p : h.pipelines) {
            std::string id = "pipeline " + inst.nodes[static_cast<size_t>(p.node_a)].id + "-" +
                             inst.nodes[static_cast<size_t>(p.node_b)].id;
            if (p.node_a == p.node_b) flag(id, "pipeline endpoints must differ");
            if (p.capex.size() != P) flag(id, "per-period fields must list one value per period");
            for (double c : p.capex)
                if (c < 0) flag(id, "capex must be >= 0");
            if (p.compressor_load < 0) flag(id, "compressor_load must be >= 0");
            for (int end : {p.node_a, p.node_b})
                if (!inst.nodes[static_cast<size_t>(end)].hydrogen_capable)
                    flag(id, "pipeline endpoint " + inst.nodes[static_cast<size_t>(end)].id +
                                 " is not hydrogen_capable");
        }
    }

    {
        const auto& pol = inst.policies;
        if (pol.co2_cap.size() != P) flag("policies", "co2_cap must list one value per period");
        for (size_t i = 1; i < pol.co2_cap.size(); ++i)
            if (pol.co2_cap[i] > pol.co2_cap[i - 1] + 1e-9)
                flag("policies", "co2_cap must be non-increasing across periods");
        if (!inst.generators.empty() && !(pol.shedding_cost > max_variable_cost))
            flag("policies", "shedding_cost must exceed every generator variable cost");
        bool hub_exists = !inst.hub_nodes().empty();
        bool conv_data = !pol.hub_converter_capex.empty();
        if (conv_data && pol.hub_converter_capex.size() != P)
            flag("policies", "hub_converter_capex must list one value per period");
        if (conv_data && !hub_exists)
            flag("policies", "hub converter cost given but the instance has no hub node");
        if (hub_exists && !conv_data)
            flag("policies", "hub node present but no hub converter cost data");
    }

    {
        const auto& lib = inst.profiles;
        size_t expect = lib.slice_labels.size() * kHoursPerSlice;
        for (int p = 0; p < lib.n_profiles(); ++p) {
            if (lib.series[static_cast<size_t>(p)].size() != expect)
                flag("profile " + lib.ids[static_cast<size_t>(p)],
                     "series length must be slices x 8760 hours with no missing hours");
            for (double v : lib.series[static_cast<size_t>(p)])
                if (std::isnan(v)) {
                    flag("profile " + lib.ids[static_cast<size_t>(p)], "series contains NaN");
                    break;
                }
        }
        // availability semantics for profiles used by intermittent generators
        for (auto& g : inst.generators) {
            if (g.cls != GenClass::intermittent || g.profile.empty()) continue;
            int p = lib.find(g.profile);
            if (p < 0) continue;   // dangling refs are loader errors, not report entries
            for (double v : lib.series[static_cast<size_t>(p)]) {
                if (v < 0 || v > 1) {
                    flag("profile " + g.profile, "availability values must lie in [0, 1]");
                    break;
                }
            }
        }
    }

    return rep;
}

} // namespace expanse
