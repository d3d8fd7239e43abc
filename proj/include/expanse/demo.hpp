#pragma once

// Bundled demo data: a family of tiny single-purpose instances with
// closed-form optima (the micro corpus) and a desk-scale North-Sea style
// system. `expanse demo` materializes all of them as instance directories.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "expanse/instance.hpp"

namespace expanse::demo {

// ---------------------------------------------------------------------------
// construction helpers
// ---------------------------------------------------------------------------

inline Instance base_instance(const std::string& name, int hours, double alpha, int n_periods = 1,
                              double discount_rate = 0.0, int period_years = 1) {
    Instance inst;
    inst.name = name;
    inst.horizon = {n_periods, period_years, discount_rate, 2020};
    inst.seasons.seasons.push_back({"s1", hours, alpha, false});
    inst.policies.shedding_cost = 22000.0;
    inst.policies.co2_cap.assign(static_cast<size_t>(n_periods), 1e6);   // slack at micro scale
    inst.options.default_scenarios = 1;
    inst.options.default_seed = 1;
    inst.hydrogen.lhv = 0.0333;
    return inst;
}

inline int add_const_profile(Instance& inst, const std::string& id, double value) {
    int p = inst.profiles.add(id);
    if (inst.profiles.slice_labels.empty()) inst.profiles.slice_labels = {"y1"};
    inst.profiles.series[static_cast<size_t>(p)].assign(kHoursPerSlice, value);
    return p;
}

inline int add_profile(Instance& inst, const std::string& id,
                       const std::function<double(int)>& fn) {
    int p = inst.profiles.add(id);
    if (inst.profiles.slice_labels.empty()) inst.profiles.slice_labels = {"y1"};
    auto& s = inst.profiles.series[static_cast<size_t>(p)];
    s.resize(kHoursPerSlice);
    for (int h = 0; h < kHoursPerSlice; ++h) s[static_cast<size_t>(h)] = fn(h);
    return p;
}

inline int add_node(Instance& inst, const std::string& id, NodeKind kind,
                    const std::string& demand_profile = "", bool hydrogen = false) {
    Node n;
    n.id = id;
    n.kind = kind;
    n.demand_profile = demand_profile;
    n.hydrogen_capable = hydrogen;
    inst.nodes.push_back(n);
    return static_cast<int>(inst.nodes.size()) - 1;
}

struct GenSpec {
    GenClass cls = GenClass::dispatchable;
    double capex = 0.0;
    double variable_cost = 0.0;
    double emission_factor = 0.0;
    double initial = 0.0;
    double max_installed = -1.0;   // <0: none
    std::string profile;
    double fuel_efficiency = 0.0;
    int lifetime = -1;             // <0: whole horizon
};

inline int add_gen(Instance& inst, const std::string& id, int node, const GenSpec& g) {
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);
    GeneratorTech t;
    t.id = id;
    t.node = node;
    t.cls = g.cls;
    t.capex.assign(P, g.capex);
    t.variable_cost.assign(P, g.variable_cost);
    t.emission_factor = g.emission_factor;
    t.lifetime_periods = g.lifetime < 0 ? inst.horizon.n_periods : g.lifetime;
    t.initial_capacity.assign(P, g.initial);
    if (g.max_installed >= 0) t.max_installed = g.max_installed;
    t.profile = g.profile;
    t.fuel_efficiency = g.fuel_efficiency;
    inst.generators.push_back(t);
    return static_cast<int>(inst.generators.size()) - 1;
}

inline int add_arc(Instance& inst, int a, int b, double capex, double loss = 0.0,
                   double initial = 0.0, double max_capacity = -1.0) {
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);
    TransmissionArc arc;
    arc.node_a = a;
    arc.node_b = b;
    arc.capex.assign(P, capex);
    arc.loss_factor = loss;
    arc.initial_capacity.assign(P, initial);
    if (max_capacity >= 0) arc.max_capacity = max_capacity;
    arc.lifetime_periods = inst.horizon.n_periods;
    inst.arcs.push_back(arc);
    return static_cast<int>(inst.arcs.size()) - 1;
}

inline void enable_electrolyzers(Instance& inst, double capex, double consumption,
                                 double storage_cost) {
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);
    inst.hydrogen.electrolyzer_capex.assign(P, capex);
    inst.hydrogen.electrolyzer_consumption.assign(P, consumption);
    inst.hydrogen.electrolyzer_lifetime_periods = inst.horizon.n_periods;
    inst.hydrogen.storage_levelized_cost = storage_cost;
}

inline int add_pipe(Instance& inst, int a, int b, double capex, double compressor = 0.0) {
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);
    Pipeline p;
    p.node_a = a;
    p.node_b = b;
    p.capex.assign(P, capex);
    p.lifetime_periods = inst.horizon.n_periods;
    p.compressor_load = compressor;
    inst.hydrogen.pipelines.push_back(p);
    return static_cast<int>(inst.hydrogen.pipelines.size()) - 1;
}

inline void set_h2_demand(Instance& inst, int node, double kg_per_year) {
    inst.nodes[static_cast<size_t>(node)].hydrogen_demand.assign(
        static_cast<size_t>(inst.horizon.n_periods), kg_per_year);
}

inline void enable_hub_converter(Instance& inst, double capex) {
    const size_t P = static_cast<size_t>(inst.horizon.n_periods);
    inst.policies.hub_converter_capex.assign(P, capex);
    inst.policies.hub_converter_lifetime_periods = inst.horizon.n_periods;
}

// ---------------------------------------------------------------------------
// micro corpus: each instance has a closed-form optimum derived in the tests
// ---------------------------------------------------------------------------

/// Constant 10 MW load, one unconstrained 50 EUR/MWh generator.
inline Instance micro_dispatch() {
    Instance inst = base_instance("micro_dispatch", 4, 2190.0);
    add_const_profile(inst, "load", 10.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .capex = 1000.0, .variable_cost = 50.0,
                             .emission_factor = 0.4, .initial = 20.0});
    return inst;
}

/// Load 10 MW against a 4 MW cap: 6 MW shed every hour.
inline Instance micro_shedding() {
    Instance inst = base_instance("micro_shedding", 4, 2190.0);
    add_const_profile(inst, "load", 10.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .capex = 1000.0, .variable_cost = 50.0,
                             .emission_factor = 0.4, .initial = 4.0, .max_installed = 4.0});
    return inst;
}

/// Annual hydrogen demand met at minimum electricity D * eta, spread evenly.
inline Instance micro_h2_demand() {
    Instance inst = base_instance("micro_h2_demand", 2, 4380.0);
    add_const_profile(inst, "load", 0.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load", true);
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .variable_cost = 50.0,
                             .emission_factor = 0.4, .initial = 1000.0});
    enable_electrolyzers(inst, 100.0, 0.05, 0.3);
    set_h2_demand(inst, n, 1000.0);
    return inst;
}

/// Single-hour variant of the hydrogen-demand instance, small enough for
/// exhaustive vertex enumeration.
inline Instance micro_h2_demand_1h() {
    Instance inst = micro_h2_demand();
    inst.name = "micro_h2_demand_1h";
    inst.seasons.seasons = {{"s1", 1, 8760.0, false}};
    return inst;
}

/// Emission cap zero with only a fossil generator: everything sheds.
inline Instance micro_co2_zero() {
    Instance inst = micro_dispatch();
    inst.name = "micro_co2_zero";
    inst.policies.co2_cap.assign(1, 0.0);
    return inst;
}

/// Emission cap sized for exactly half the annual energy.
inline Instance micro_co2_binding() {
    Instance inst = base_instance("micro_co2_binding", 1, 8760.0);
    add_const_profile(inst, "load", 10.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .variable_cost = 50.0,
                             .emission_factor = 0.4, .initial = 20.0});
    inst.policies.co2_cap.assign(1, 0.4 * 8760.0 * 5.0);   // allows 5 MW of the 10 MW load
    return inst;
}

/// Intermittent availability bound: xi = 0.5 on 10 MW installed.
inline Instance micro_intermittent() {
    Instance inst = base_instance("micro_intermittent", 1, 8760.0);
    add_const_profile(inst, "load", 8.0);
    add_const_profile(inst, "wind_cf", 0.5);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "wind", n, {.cls = GenClass::intermittent, .initial = 10.0,
                              .max_installed = 10.0, .profile = "wind_cf"});
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .variable_cost = 100.0,
                             .emission_factor = 0.4, .initial = 20.0});
    return inst;
}

/// Power reaches an unconnected node only as hydrogen burned on arrival.
inline Instance micro_h2p() {
    Instance inst = base_instance("micro_h2p", 1, 8760.0);
    add_const_profile(inst, "zero", 0.0);
    add_const_profile(inst, "load_b", 10.0);
    int a = add_node(inst, "a", NodeKind::onshore, "zero", true);
    int b = add_node(inst, "b", NodeKind::onshore, "load_b", true);
    add_gen(inst, "gas_a", a, {.cls = GenClass::dispatchable, .variable_cost = 5.0,
                               .emission_factor = 0.4, .initial = 1000.0});
    add_gen(inst, "h2turbine_b", b, {.cls = GenClass::hydrogen_fueled, .variable_cost = 2.0,
                                     .initial = 1000.0, .fuel_efficiency = 0.6});
    enable_electrolyzers(inst, 10.0, 0.05, 0.3);
    add_pipe(inst, a, b, 1.0, 0.0);
    return inst;
}

/// Compressor power, half at each pipeline endpoint.
inline Instance micro_compressor() {
    Instance inst = base_instance("micro_compressor", 1, 8760.0);
    add_const_profile(inst, "zero", 0.0);
    int a = add_node(inst, "a", NodeKind::onshore, "zero", true);
    int b = add_node(inst, "b", NodeKind::onshore, "zero", true);
    add_gen(inst, "gas_a", a, {.cls = GenClass::dispatchable, .variable_cost = 5.0,
                               .emission_factor = 0.4, .initial = 1000.0});
    add_gen(inst, "gas_b", b, {.cls = GenClass::dispatchable, .variable_cost = 80.0,
                               .emission_factor = 0.4, .initial = 1000.0});
    enable_electrolyzers(inst, 10.0, 0.05, 0.3);
    add_pipe(inst, a, b, 1.0, 0.003);
    set_h2_demand(inst, b, 1000.0);
    return inst;
}

/// Offshore hub as a pure transmission asset; converter sized by Eq-style rule.
inline Instance micro_hub() {
    Instance inst = base_instance("micro_hub", 1, 8760.0);
    add_const_profile(inst, "load", 10.0);
    add_const_profile(inst, "wind_cf", 1.0);
    int b = add_node(inst, "b", NodeKind::onshore, "load");
    int hub = add_node(inst, "hub", NodeKind::hub);
    int f = add_node(inst, "farm", NodeKind::offshore_farm);
    inst.nodes[static_cast<size_t>(f)].home_country = b;
    inst.nodes[static_cast<size_t>(f)].area_km2 = 10.0;   // 60 MW potential
    add_gen(inst, "wind_f", f, {.cls = GenClass::intermittent, .capex = 100.0, .profile = "wind_cf"});
    add_arc(inst, f, hub, 10.0);
    add_arc(inst, hub, b, 20.0);
    enable_hub_converter(inst, 5.0);
    return inst;
}

/// Hydrogen production priced only through the average storage charge.
inline Instance micro_storage_cost() {
    Instance inst = base_instance("micro_storage_cost", 1, 8760.0, 1, 0.05, 5);
    add_const_profile(inst, "zero", 0.0);
    int n = add_node(inst, "a", NodeKind::onshore, "zero", true);
    add_gen(inst, "free_gen", n, {.cls = GenClass::dispatchable, .variable_cost = 0.0,
                                  .emission_factor = 0.0, .initial = 1000.0});
    enable_electrolyzers(inst, 0.0, 0.05, 1.0);
    set_h2_demand(inst, n, 1300.0);
    return inst;
}

/// Two nodes with a lossy cable: receiving 9 MW means sending 10.
inline Instance micro_loss() {
    Instance inst = base_instance("micro_loss", 1, 8760.0);
    add_const_profile(inst, "zero", 0.0);
    add_const_profile(inst, "load_b", 9.0);
    int a = add_node(inst, "a", NodeKind::onshore, "zero");
    int b = add_node(inst, "b", NodeKind::onshore, "load_b");
    add_gen(inst, "gas_a", a, {.cls = GenClass::dispatchable, .variable_cost = 50.0,
                               .emission_factor = 0.4, .initial = 100.0});
    add_arc(inst, a, b, 0.0, 0.1, 100.0);
    return inst;
}

/// Investment against a capacity cap: build 4 MW, shed the rest.
inline Instance micro_invest_cap() {
    Instance inst = base_instance("micro_invest_cap", 1, 8760.0);
    add_const_profile(inst, "load", 10.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .capex = 100000.0,
                             .variable_cost = 50.0, .emission_factor = 0.4,
                             .max_installed = 4.0});
    return inst;
}

/// No demand anywhere: the all-zero operation is optimal.
inline Instance micro_zero_demand() {
    Instance inst = base_instance("micro_zero_demand", 2, 4380.0);
    add_const_profile(inst, "zero", 0.0);
    int n = add_node(inst, "a", NodeKind::onshore, "zero");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .capex = 10.0, .variable_cost = 50.0,
                             .emission_factor = 0.4, .initial = 5.0});
    return inst;
}

/// Rolling lifetime window: one investment lives exactly 4 of 5 periods.
inline Instance micro_lifetime() {
    Instance inst = base_instance("micro_lifetime", 1, 8760.0, 5, 0.0, 1);
    add_const_profile(inst, "load", 1.0);
    int n = add_node(inst, "a", NodeKind::onshore, "load");
    add_gen(inst, "gas", n, {.cls = GenClass::dispatchable, .capex = 1000.0, .variable_cost = 10.0,
                             .emission_factor = 0.0, .initial = 0.0, .lifetime = 4});
    return inst;
}

struct NamedInstance {
    std::string name;
    Instance inst;
    bool oracle_ok;   // small enough for exhaustive vertex enumeration
};

inline std::vector<NamedInstance> micro_corpus() {
    std::vector<NamedInstance> out;
    out.push_back({"micro_dispatch", micro_dispatch(), true});
    out.push_back({"micro_shedding", micro_shedding(), true});
    out.push_back({"micro_h2_demand", micro_h2_demand(), false});
    out.push_back({"micro_h2_demand_1h", micro_h2_demand_1h(), true});
    out.push_back({"micro_co2_zero", micro_co2_zero(), true});
    out.push_back({"micro_co2_binding", micro_co2_binding(), true});
    out.push_back({"micro_intermittent", micro_intermittent(), true});
    out.push_back({"micro_h2p", micro_h2p(), false});
    out.push_back({"micro_compressor", micro_compressor(), false});
    out.push_back({"micro_hub", micro_hub(), true});
    out.push_back({"micro_storage_cost", micro_storage_cost(), true});
    out.push_back({"micro_loss", micro_loss(), true});
    out.push_back({"micro_invest_cap", micro_invest_cap(), true});
    out.push_back({"micro_zero_demand", micro_zero_demand(), true});
    out.push_back({"micro_lifetime", micro_lifetime(), false});
    return out;
}

Instance desk();   // defined in demo_desk.hpp, included below

} // namespace expanse::demo

#include "expanse/demo_desk.hpp"
