#pragma once

// Desk-scale North Sea style system: five onshore markets, three offshore
// wind farms in hybrid configuration, one energy hub, two five-year periods.
// Sized to solve in minutes with the embedded simplex while still showing
// the hub/hydrogen interplay: farms are cheap but landlocked behind thin
// onshore corridors, the hub pools them toward the demand centers, and
// electrolyzers monetize what would otherwise be curtailed.

#include <cmath>

#include "expanse/instance.hpp"

namespace expanse::demo {

namespace detail {

constexpr double kPi = 3.14159265358979323846;

inline double day_of(int h) { return (h / 24) % 365; }
inline double hour_of_day(int h) { return h % 24; }

/// 1 in mid-January, -1 in mid-July.
inline double winterness(int h) { return std::cos(2.0 * kPi * (day_of(h) - 15.0) / 365.0); }

inline double clamp01(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

inline double demand_shape(int h, double phase) {
    const double hod = hour_of_day(h);
    const double diurnal = 0.14 * std::cos(2.0 * kPi * (hod - 18.0) / 24.0);
    const double weekly = 0.04 * std::cos(2.0 * kPi * (day_of(h) - phase) / 7.0);
    return 1.0 + 0.16 * winterness(h) + diurnal + weekly;
}

inline double solar_shape(int h) {
    const double hod = hour_of_day(h);
    const double sun = hod >= 6 && hod <= 18 ? std::sin(kPi * (hod - 6.0) / 12.0) : 0.0;
    const double seasonal = 0.62 - 0.38 * winterness(h);
    return clamp01(sun * seasonal, 0.0, 1.0);
}

inline double wind_shape(int h, double mean, double phase) {
    const double mix = (std::sin(h / 11.3 + phase) + std::sin(h / 52.9 + 2.0 * phase) +
                        std::sin(h / 227.0 + 0.7 * phase + 1.0)) /
                       3.0;
    return clamp01(mean + 0.30 * mix + 0.10 * winterness(h), 0.02, 0.98);
}

} // namespace detail

inline Instance desk() {
    Instance inst;
    inst.name = "desk";
    inst.horizon = {2, 5, 0.05, 2020};
    inst.seasons.seasons = {{"winterhalf", 168, 26.0, false},
                            {"summerhalf", 168, 26.0, false},
                            {"peak_load", 24, 1.0, true},
                            {"peak_net", 24, 1.0, true}};
    inst.options.default_scenarios = 3;
    inst.options.default_seed = 7;
    inst.policies.shedding_cost = 22000.0;
    inst.policies.co2_cap = {2.2e7, 5.0e6};
    inst.hydrogen.lhv = 0.0333;

    using detail::demand_shape;
    using detail::solar_shape;
    using detail::wind_shape;

    add_profile(inst, "d_on1", [](int h) { return 5200.0 * demand_shape(h, 0.0); });
    add_profile(inst, "d_on2", [](int h) { return 2600.0 * demand_shape(h, 1.7); });
    add_profile(inst, "d_on3", [](int h) { return 2400.0 * demand_shape(h, 3.1); });
    add_profile(inst, "d_on4", [](int h) { return 700.0 * demand_shape(h, 4.9); });
    add_profile(inst, "d_on5", [](int h) { return 3000.0 * demand_shape(h, 5.8); });
    add_profile(inst, "cf_solar", [](int h) { return solar_shape(h); });
    add_profile(inst, "cf_wind_on", [](int h) { return wind_shape(h, 0.30, 0.4); });
    add_profile(inst, "cf_wind_f1", [](int h) { return wind_shape(h, 0.52, 1.3); });
    add_profile(inst, "cf_wind_f2", [](int h) { return wind_shape(h, 0.54, 2.6); });
    add_profile(inst, "cf_wind_f3", [](int h) { return wind_shape(h, 0.50, 4.2); });

    const int on1 = add_node(inst, "on1", NodeKind::onshore, "d_on1", true);
    const int on2 = add_node(inst, "on2", NodeKind::onshore, "d_on2", true);
    const int on3 = add_node(inst, "on3", NodeKind::onshore, "d_on3");
    const int on4 = add_node(inst, "on4", NodeKind::onshore, "d_on4");
    const int on5 = add_node(inst, "on5", NodeKind::onshore, "d_on5", true);
    const int hub = add_node(inst, "hub", NodeKind::hub, "", true);
    const int f1 = add_node(inst, "f1", NodeKind::offshore_farm);
    const int f2 = add_node(inst, "f2", NodeKind::offshore_farm);
    const int f3 = add_node(inst, "f3", NodeKind::offshore_farm);
    inst.nodes[static_cast<size_t>(f1)].home_country = on1;
    inst.nodes[static_cast<size_t>(f1)].area_km2 = 500.0;   // 3000 MW at 6 MW/km2
    inst.nodes[static_cast<size_t>(f2)].home_country = on2;
    inst.nodes[static_cast<size_t>(f2)].area_km2 = 600.0;   // 3600 MW
    inst.nodes[static_cast<size_t>(f3)].home_country = on3;
    inst.nodes[static_cast<size_t>(f3)].area_km2 = 400.0;   // 2400 MW

    auto decay = [&](GeneratorTech& g, double p2_share) {
        g.initial_capacity[1] = g.initial_capacity[0] * p2_share;
    };
    auto gas = [&](const std::string& id, int node, double var) {
        int g = add_gen(inst, id, node,
                        {.cls = GenClass::dispatchable, .capex = 350000.0, .variable_cost = var,
                         .emission_factor = 0.35, .lifetime = 2});
        return g;
    };
    int g;
    g = gas("gas_on1", on1, 55.0);
    inst.generators[static_cast<size_t>(g)].initial_capacity = {5000.0, 2500.0};
    g = gas("gas_on2", on2, 60.0);
    inst.generators[static_cast<size_t>(g)].initial_capacity = {2500.0, 1200.0};
    g = gas("gas_on3", on3, 52.0);
    inst.generators[static_cast<size_t>(g)].initial_capacity = {2200.0, 1100.0};
    g = gas("gas_on5", on5, 58.0);
    inst.generators[static_cast<size_t>(g)].initial_capacity = {2800.0, 1400.0};

    g = add_gen(inst, "solar_on1", on1,
                {.cls = GenClass::intermittent, .capex = 160000.0, .initial = 800.0,
                 .profile = "cf_solar", .lifetime = 2});
    decay(inst.generators[static_cast<size_t>(g)], 0.5);
    g = add_gen(inst, "wind_on3", on3,
                {.cls = GenClass::intermittent, .capex = 280000.0, .initial = 600.0,
                 .profile = "cf_wind_on", .lifetime = 2});
    decay(inst.generators[static_cast<size_t>(g)], 0.5);

    add_gen(inst, "wind_f1", f1,
            {.cls = GenClass::intermittent, .capex = 220000.0, .profile = "cf_wind_f1", .lifetime = 2});
    add_gen(inst, "wind_f2", f2,
            {.cls = GenClass::intermittent, .capex = 220000.0, .profile = "cf_wind_f2", .lifetime = 2});
    add_gen(inst, "wind_f3", f3,
            {.cls = GenClass::intermittent, .capex = 230000.0, .profile = "cf_wind_f3", .lifetime = 2});

    add_gen(inst, "h2turbine_on1", on1,
            {.cls = GenClass::hydrogen_fueled, .capex = 330000.0, .variable_cost = 55.0,
             .fuel_efficiency = 0.58, .lifetime = 2});

    // farm home connections (defaults cap these at the farm bound)
    add_arc(inst, f1, on1, 180000.0);
    add_arc(inst, f2, on2, 180000.0);
    add_arc(inst, f3, on3, 180000.0);
    // hub spokes and shore links
    add_arc(inst, f1, hub, 160000.0);
    add_arc(inst, f2, hub, 160000.0);
    add_arc(inst, f3, hub, 160000.0);
    add_arc(inst, hub, on1, 190000.0);
    add_arc(inst, hub, on5, 190000.0);
    // thin onshore corridors
    add_arc(inst, on3, on4, 150000.0, 0.0, 800.0, 1500.0);
    add_arc(inst, on4, on5, 150000.0, 0.0, 500.0, 800.0);

    enable_electrolyzers(inst, 450000.0, 0.052, 0.4);
    inst.hydrogen.electrolyzer_capex = {450000.0, 380000.0};
    inst.hydrogen.electrolyzer_consumption = {0.052, 0.048};
    inst.hydrogen.electrolyzer_lifetime_periods = 2;

    add_pipe(inst, hub, on1, 150.0, 0.003);
    add_pipe(inst, on1, on2, 150.0, 0.003);

    inst.nodes[static_cast<size_t>(on1)].hydrogen_demand = {2.5e8, 4.0e8};
    inst.nodes[static_cast<size_t>(on2)].hydrogen_demand = {0.8e8, 1.5e8};
    inst.nodes[static_cast<size_t>(on5)].hydrogen_demand = {0.8e8, 1.5e8};

    enable_hub_converter(inst, 90000.0);
    inst.policies.hub_converter_capex = {90000.0, 75000.0};
    inst.policies.hub_converter_lifetime_periods = 2;

    return inst;
}

} // namespace expanse::demo
