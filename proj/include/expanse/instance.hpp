#pragma once

// Domain types for a multi-horizon power + green-hydrogen expansion instance.
// Everything here is immutable after loading and safe to share across threads.
//
// Units are fixed by the file format: money in EUR, electric energy in MWh,
// electric capacity in MW, hydrogen mass in kg, pipeline capacity in kg/h.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expanse/errors.hpp"

namespace expanse {

constexpr int kHoursPerSlice = 8760;

struct Horizon {
    int n_periods = 0;
    int period_length_years = 0;
    double discount_rate = 0.0;
    int start_year = 0;

    /// Strategic discount factor to the start of period i (1-based).
    double delta(int period_1based) const {
        return std::pow(1.0 + discount_rate,
                        -static_cast<double>(period_1based - 1) * period_length_years);
    }
    /// Operational discount factor: sum of within-period year discounts.
    double phi() const {
        double sum = 0.0;
        for (int j = 0; j < period_length_years; ++j) sum += std::pow(1.0 + discount_rate, -j);
        return sum;
    }
};

struct Season {
    std::string name;
    int hours = 0;        // sample length per scenario
    double scale = 1.0;   // annualization weight for operational sums
    bool peak = false;
};

struct SeasonSpec {
    std::vector<Season> seasons;   // regular seasons first, then peak seasons

    int n_regular() const {
        int n = 0;
        for (auto& s : seasons) n += s.peak ? 0 : 1;
        return n;
    }
    int total_hours() const {
        int n = 0;
        for (auto& s : seasons) n += s.hours;
        return n;
    }
    /// Scale-weighted hour count; admissible instances keep this near one year.
    double year_coverage() const {
        double c = 0.0;
        for (auto& s : seasons) c += s.scale * s.hours;
        return c;
    }
};

enum class NodeKind { onshore, offshore_farm, hub };

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::onshore: return "onshore";
        case NodeKind::offshore_farm: return "offshore_farm";
        case NodeKind::hub: return "hub";
    }
    return "?";
}

struct Node {
    std::string id;
    NodeKind kind = NodeKind::onshore;
    bool hydrogen_capable = false;
    int home_country = -1;              // node index, farms only
    std::optional<double> area_km2;     // farms only
    std::string demand_profile;         // empty = no power demand
    std::vector<double> hydrogen_demand;   // kg/yr per period (empty = all zero)

    double hydrogen_demand_in(int period_0based) const {
        if (hydrogen_demand.empty()) return 0.0;
        return hydrogen_demand[static_cast<size_t>(period_0based)];
    }
};

enum class GenClass { dispatchable, intermittent, hydrogen_fueled };

inline const char* to_string(GenClass c) {
    switch (c) {
        case GenClass::dispatchable: return "dispatchable";
        case GenClass::intermittent: return "intermittent";
        case GenClass::hydrogen_fueled: return "hydrogen_fueled";
    }
    return "?";
}

struct GeneratorTech {
    std::string id;
    int node = -1;
    GenClass cls = GenClass::dispatchable;
    std::vector<double> capex;              // EUR/MW per period, fixed O&M folded in
    std::vector<double> variable_cost;      // EUR/MWh per period
    double emission_factor = 0.0;           // tCO2/MWh
    int lifetime_periods = 1;
    std::vector<double> initial_capacity;   // residual MW per period
    std::optional<double> max_installed;    // MW
    std::string profile;                    // availability profile, intermittent only
    double fuel_efficiency = 0.0;           // MWh(el)/MWh(fuel), hydrogen_fueled only
};

struct TransmissionArc {
    int node_a = -1;
    int node_b = -1;                        // unordered pair
    std::vector<double> capex;              // EUR/MW per period
    double loss_factor = 0.0;               // fraction lost per transfer
    std::vector<double> initial_capacity;   // residual MW per period
    std::optional<double> max_capacity;     // MW; absent = derive from endpoint kinds
    int lifetime_periods = 1;

    bool touches(int n) const { return node_a == n || node_b == n; }
    int other(int n) const { return node_a == n ? node_b : node_a; }
};

struct Pipeline {
    int node_a = -1;
    int node_b = -1;
    std::vector<double> capex;       // EUR/(kg/h) per period
    int lifetime_periods = 1;
    double compressor_load = 0.0;    // MWh(el)/kg moved, split half per endpoint

    bool touches(int n) const { return node_a == n || node_b == n; }
};

struct HydrogenAssets {
    std::vector<double> electrolyzer_capex;         // EUR/MW(el) per period
    std::vector<double> electrolyzer_consumption;   // MWh(el)/kg per period
    int electrolyzer_lifetime_periods = 1;
    std::vector<Pipeline> pipelines;
    double storage_levelized_cost = 0.0;            // EUR/kg produced
    double lhv = 0.0333;                            // MWh/kg
};

struct SystemPolicies {
    std::vector<double> co2_cap;                  // tCO2/yr per period
    double shedding_cost = 0.0;                   // EUR/MWh
    std::vector<double> hub_converter_capex;      // EUR/MW per period (empty = no hub data)
    int hub_converter_lifetime_periods = 1;
};

struct ProfileLibrary {
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::string> slice_labels;           // shared across profiles
    std::vector<std::vector<double>> series;         // per profile, n_slices * 8760 values

    int n_profiles() const { return static_cast<int>(ids.size()); }
    int n_slices() const { return static_cast<int>(slice_labels.size()); }

    int find(const std::string& id) const {
        auto it = index.find(id);
        return it == index.end() ? -1 : it->second;
    }
    double value(int profile, int slice, int hour) const {
        return series[profile][static_cast<size_t>(slice) * kHoursPerSlice + hour];
    }
    int add(const std::string& id) {
        index[id] = n_profiles();
        ids.push_back(id);
        series.emplace_back();
        return n_profiles() - 1;
    }
};

/// Formulation switches and derived-bound constants carried by the manifest.
struct InstanceOptions {
    double density_mw_per_km2 = 6.0;
    bool cable_cap_linked = false;      // cap farm cables by built generation instead of its bound
    bool hub_sizing_per_period = false; // size the hub converter per-period instead of cumulatively
    int default_scenarios = 3;
    std::uint64_t default_seed = 1;
    std::vector<int> season_blocks;     // optional start hours of the regular-season calendar blocks
};

struct Instance {
    std::string name;
    Horizon horizon;
    SeasonSpec seasons;
    std::vector<Node> nodes;
    std::vector<GeneratorTech> generators;
    std::vector<TransmissionArc> arcs;
    HydrogenAssets hydrogen;
    SystemPolicies policies;
    ProfileLibrary profiles;
    InstanceOptions options;

    int node_index(const std::string& id) const {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id == id) return static_cast<int>(i);
        return -1;
    }

    std::vector<int> hydrogen_nodes() const {
        std::vector<int> out;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].hydrogen_capable) out.push_back(static_cast<int>(i));
        return out;
    }
    std::vector<int> hub_nodes() const {
        std::vector<int> out;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].kind == NodeKind::hub) out.push_back(static_cast<int>(i));
        return out;
    }

    bool has_hydrogen_demand() const {
        for (auto& n : nodes)
            for (double d : n.hydrogen_demand)
                if (d > 0) return true;
        return false;
    }
    bool has_hydrogen_fueled() const {
        for (auto& g : generators)
            if (g.cls == GenClass::hydrogen_fueled) return true;
        return false;
    }
    /// Hydrogen columns are emitted only when the module can do anything.
    bool hydrogen_active() const {
        return !hydrogen_nodes().empty() && (has_hydrogen_demand() || has_hydrogen_fueled());
    }

    /// Boundaries of the regular-season calendar blocks within one slice.
    /// Defaults to consecutive whole-week blocks starting January 1.
    std::vector<int> season_block_starts() const {
        if (!options.season_blocks.empty()) return options.season_blocks;
        int n = seasons.n_regular();
        if (n <= 0) return {};
        int weeks = (kHoursPerSlice / 168) / n;     // 4 seasons -> 13 weeks each
        int block = weeks > 0 ? weeks * 168 : kHoursPerSlice / n;
        std::vector<int> starts;
        for (int k = 0; k < n; ++k) starts.push_back(k * block);
        return starts;
    }
    int season_block_length() const {
        auto starts = season_block_starts();
        if (starts.size() >= 2) return starts[1] - starts[0];
        int n = seasons.n_regular();
        if (n == 1) return kHoursPerSlice;
        return 0;
    }
};

} // namespace expanse
