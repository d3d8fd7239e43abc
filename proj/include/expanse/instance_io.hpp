#pragma once

// Instance directory ingestion and the matching writer.
//
// A directory holds manifest.ini, nodes.csv, generators.csv, arcs.csv,
// hydrogen_demand.csv, pipelines.csv and profiles/<id>.csv. Per-period
// quantities use long-format rows (one row per entity and period); static
// fields are repeated and must agree across the rows of one entity.
// See docs/file-format.md for the column-by-column description.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "expanse/bounds.hpp"
#include "expanse/instance.hpp"
#include "expanse/text.hpp"

namespace expanse {

namespace fs = std::filesystem;

namespace detail {

inline NodeKind parse_node_kind(const CsvTable& t, size_t row, int col) {
    const std::string& s = t.cell(row, col);
    if (s == "onshore") return NodeKind::onshore;
    if (s == "offshore_farm") return NodeKind::offshore_farm;
    if (s == "hub") return NodeKind::hub;
    throw ParseError(t.file, t.file_row(row), t.header[static_cast<size_t>(col)],
                     "unknown node kind '" + s + "'");
}

inline GenClass parse_gen_class(const CsvTable& t, size_t row, int col) {
    const std::string& s = t.cell(row, col);
    if (s == "dispatchable") return GenClass::dispatchable;
    if (s == "intermittent") return GenClass::intermittent;
    if (s == "hydrogen_fueled") return GenClass::hydrogen_fueled;
    throw ParseError(t.file, t.file_row(row), t.header[static_cast<size_t>(col)],
                     "unknown generator class '" + s + "'");
}

inline bool parse_flag(const CsvTable& t, size_t row, int col) {
    const std::string& s = t.cell(row, col);
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false" || s.empty()) return false;
    throw ParseError(t.file, t.file_row(row), t.header[static_cast<size_t>(col)],
                     "expected 0/1, got '" + s + "'");
}

/// 1-based period column, validated against the horizon.
inline int parse_period(const CsvTable& t, size_t row, int col, int n_periods) {
    long long p = t.integer(row, col);
    if (p < 1 || p > n_periods)
        throw ParseError(t.file, t.file_row(row), t.header[static_cast<size_t>(col)],
                         "period " + std::to_string(p) + " outside 1.." + std::to_string(n_periods));
    return static_cast<int>(p - 1);
}

inline void parse_season_list(const std::string& raw, bool peak, SeasonSpec& spec,
                              const std::string& file) {
    if (raw.empty()) return;
    for (auto& part : split(raw, ',')) {
        auto bits = split(part, ':');
        if (bits.size() != 3)
            throw ParseError(file, 0, "seasons", "expected name:hours:scale, got '" + part + "'");
        Season s;
        s.name = bits[0];
        auto h = parse_int(bits[1]);
        auto a = parse_double(bits[2]);
        if (!h || !a) throw ParseError(file, 0, "seasons", "malformed season '" + part + "'");
        s.hours = static_cast<int>(*h);
        s.scale = *a;
        s.peak = peak;
        spec.seasons.push_back(s);
    }
}

/// Gathers long-format per-period rows; enforces exactly one row per period.
class PeriodRows {
public:
    PeriodRows(const CsvTable& t, int n_periods) : table_(t), n_periods_(n_periods) {}

    void add(const std::string& key, size_t row, int period) {
        auto& slots = rows_[key];
        if (slots.empty()) {
            order_.push_back(key);
            slots.assign(static_cast<size_t>(n_periods_), SIZE_MAX);
        }
        if (slots[static_cast<size_t>(period)] != SIZE_MAX)
            throw ParseError(table_.file, table_.file_row(row), "period",
                             "duplicate period " + std::to_string(period + 1) + " for '" + key + "'");
        slots[static_cast<size_t>(period)] = row;
    }

    const std::vector<std::string>& keys() const { return order_; }

    /// Row indices for one entity in period order; throws if a period is missing.
    const std::vector<size_t>& complete(const std::string& key) const {
        auto& slots = rows_.at(key);
        for (size_t i = 0; i < slots.size(); ++i)
            if (slots[i] == SIZE_MAX)
                throw ParseError(table_.file, 0, "period",
                                 "'" + key + "' is missing period " + std::to_string(i + 1));
        return slots;
    }

private:
    const CsvTable& table_;
    int n_periods_;
    std::map<std::string, std::vector<size_t>> rows_;
    std::vector<std::string> order_;   // first-appearance order
};

inline std::string arc_key(const std::string& a, const std::string& b) { return a + "\x1f" + b; }

} // namespace detail

// ---------------------------------------------------------------------------
// load_instance
// ---------------------------------------------------------------------------

inline Instance load_instance(const fs::path& root) {
    Instance inst;
    const fs::path manifest_path = root / "manifest.ini";
    if (!fs::exists(manifest_path)) throw IngestError(manifest_path.string());
    Manifest mf = read_manifest(manifest_path.string());

    inst.name = mf.get_or("name", root.filename().string());

    inst.horizon.n_periods = static_cast<int>(mf.integer_or("horizon.n_periods", 8));
    inst.horizon.period_length_years = static_cast<int>(mf.integer_or("horizon.period_length_years", 5));
    inst.horizon.discount_rate = mf.num_or("horizon.discount_rate", 0.05);
    inst.horizon.start_year = static_cast<int>(mf.integer_or("horizon.start_year", 2020));
    const int P = inst.horizon.n_periods;
    if (P < 1) throw ParseError(mf.file, 0, "horizon.n_periods", "must be >= 1");

    if (mf.has("seasons.regular") || mf.has("seasons.peak")) {
        detail::parse_season_list(mf.get_or("seasons.regular", ""), false, inst.seasons, mf.file);
        detail::parse_season_list(mf.get_or("seasons.peak", ""), true, inst.seasons, mf.file);
    } else {
        // Default operational year: four representative weeks plus two peak days.
        for (const char* n : {"winter", "spring", "summer", "autumn"})
            inst.seasons.seasons.push_back({n, 168, 13.0, false});
        inst.seasons.seasons.push_back({"peak_load", 24, 1.0, true});
        inst.seasons.seasons.push_back({"peak_net", 24, 1.0, true});
    }
    if (mf.has("seasons.blocks")) {
        for (auto& part : split(mf.get("seasons.blocks"), ',')) {
            auto v = parse_int(part);
            if (!v) throw ParseError(mf.file, 0, "seasons.blocks", "malformed hour '" + part + "'");
            inst.options.season_blocks.push_back(static_cast<int>(*v));
        }
    }

    inst.options.default_scenarios = static_cast<int>(mf.integer_or("sampling.scenarios", 3));
    inst.options.default_seed = static_cast<std::uint64_t>(mf.integer_or("sampling.seed", 1));

    inst.policies.shedding_cost = mf.num_or("policies.shedding_cost", 22000.0);
    inst.options.density_mw_per_km2 = mf.num_or("policies.density_mw_per_km2", 6.0);
    inst.options.cable_cap_linked = mf.get_or("policies.cable_cap_rule", "static") == "linked";
    inst.options.hub_sizing_per_period = mf.get_or("policies.hub_sizing", "cumulative") == "per_period";
    if (mf.has("policies.co2_cap")) {
        inst.policies.co2_cap = mf.num_list("policies.co2_cap", static_cast<size_t>(P));
    } else {
        double start = mf.num_or("policies.co2_cap_start", 1.11e9);
        double end = mf.num_or("policies.co2_cap_end", 2.2e7);
        inst.policies.co2_cap = P >= 2 ? co2_cap_trajectory(start, end, P)
                                       : std::vector<double>{start};
    }

    if (mf.has("hub.converter_capex")) {
        inst.policies.hub_converter_capex = mf.num_list("hub.converter_capex", static_cast<size_t>(P));
        inst.policies.hub_converter_lifetime_periods =
            static_cast<int>(mf.integer_or("hub.converter_lifetime_periods", P));
    }

    inst.hydrogen.lhv = mf.num_or("hydrogen.lhv", 0.0333);
    inst.hydrogen.storage_levelized_cost = mf.num_or("hydrogen.storage_levelized_cost", 0.0);
    const double default_compressor_load = mf.num_or("hydrogen.compressor_load", 0.003);
    if (mf.has("hydrogen.electrolyzer_capex")) {
        inst.hydrogen.electrolyzer_capex =
            mf.num_list("hydrogen.electrolyzer_capex", static_cast<size_t>(P));
        inst.hydrogen.electrolyzer_consumption =
            mf.num_list("hydrogen.electrolyzer_consumption", static_cast<size_t>(P));
        inst.hydrogen.electrolyzer_lifetime_periods =
            static_cast<int>(mf.integer_or("hydrogen.electrolyzer_lifetime_periods", P));
    }

    // --- nodes ---------------------------------------------------------
    CsvTable nodes = read_csv((root / "nodes.csv").string());
    {
        int c_id = nodes.require_column("id");
        int c_kind = nodes.require_column("kind");
        int c_hyd = nodes.require_column("hydrogen_capable");
        int c_home = nodes.require_column("home_country");
        int c_area = nodes.require_column("area_km2");
        int c_prof = nodes.require_column("demand_profile");
        for (size_t r = 0; r < nodes.rows.size(); ++r) {
            Node n;
            n.id = nodes.cell(r, c_id);
            if (n.id.empty()) throw ParseError(nodes.file, nodes.file_row(r), "id", "empty node id");
            if (inst.node_index(n.id) >= 0)
                throw ParseError(nodes.file, nodes.file_row(r), "id", "duplicate node id '" + n.id + "'");
            n.kind = detail::parse_node_kind(nodes, r, c_kind);
            n.hydrogen_capable = detail::parse_flag(nodes, r, c_hyd);
            if (!nodes.empty_cell(r, c_area)) n.area_km2 = nodes.num(r, c_area);
            n.demand_profile = nodes.cell(r, c_prof);
            inst.nodes.push_back(std::move(n));
        }
        // home-country links resolved after all nodes exist
        for (size_t r = 0; r < nodes.rows.size(); ++r) {
            if (nodes.empty_cell(r, c_home)) continue;
            const std::string& key = nodes.cell(r, c_home);
            int idx = inst.node_index(key);
            if (idx < 0) throw LinkError("node " + nodes.cell(r, c_id), key);
            inst.nodes[r].home_country = idx;
        }
    }
    auto link_node = [&inst](const CsvTable& t, size_t row, int col, const std::string& entity) {
        const std::string& key = t.cell(row, col);
        int idx = inst.node_index(key);
        if (idx < 0) throw LinkError(entity, key);
        return idx;
    };

    // --- generators ----------------------------------------------------
    CsvTable gens = read_csv((root / "generators.csv").string());
    {
        int c_id = gens.require_column("id");
        int c_node = gens.require_column("node");
        int c_cls = gens.require_column("class");
        int c_per = gens.require_column("period");
        int c_capex = gens.require_column("capex");
        int c_var = gens.require_column("variable_cost");
        int c_ef = gens.require_column("emission_factor");
        int c_life = gens.require_column("lifetime_periods");
        int c_init = gens.require_column("initial_capacity");
        int c_max = gens.require_column("max_installed");
        int c_prof = gens.require_column("profile");
        int c_eff = gens.require_column("fuel_efficiency");

        detail::PeriodRows byid(gens, P);
        for (size_t r = 0; r < gens.rows.size(); ++r)
            byid.add(gens.cell(r, c_id), r, detail::parse_period(gens, r, c_per, P));
        for (auto& id : byid.keys()) {
            const auto& slots = byid.complete(id);
            GeneratorTech g;
            g.id = id;
            size_t r0 = slots[0];
            g.node = link_node(gens, r0, c_node, "generator " + id);
            g.cls = detail::parse_gen_class(gens, r0, c_cls);
            g.emission_factor = gens.num(r0, c_ef);
            g.lifetime_periods = static_cast<int>(gens.integer(r0, c_life));
            if (!gens.empty_cell(r0, c_max)) g.max_installed = gens.num(r0, c_max);
            g.profile = gens.cell(r0, c_prof);
            if (!gens.empty_cell(r0, c_eff)) g.fuel_efficiency = gens.num(r0, c_eff);
            for (size_t r : slots) {
                g.capex.push_back(gens.num(r, c_capex));
                g.variable_cost.push_back(gens.num(r, c_var));
                g.initial_capacity.push_back(gens.num(r, c_init));
                if (gens.cell(r, c_node) != gens.cell(r0, c_node) ||
                    gens.cell(r, c_cls) != gens.cell(r0, c_cls))
                    throw ParseError(gens.file, gens.file_row(r), "node",
                                     "static fields differ across periods of '" + id + "'");
            }
            inst.generators.push_back(std::move(g));
        }
    }

    // --- arcs ------------------------------------------------------------
    CsvTable arcs = read_csv((root / "arcs.csv").string());
    {
        int c_a = arcs.require_column("node_a");
        int c_b = arcs.require_column("node_b");
        int c_per = arcs.require_column("period");
        int c_capex = arcs.require_column("capex");
        int c_loss = arcs.require_column("loss_factor");
        int c_init = arcs.require_column("initial_capacity");
        int c_max = arcs.require_column("max_capacity");
        int c_life = arcs.require_column("lifetime_periods");

        detail::PeriodRows bykey(arcs, P);
        for (size_t r = 0; r < arcs.rows.size(); ++r)
            bykey.add(detail::arc_key(arcs.cell(r, c_a), arcs.cell(r, c_b)), r,
                      detail::parse_period(arcs, r, c_per, P));
        for (auto& key : bykey.keys()) {
            const auto& slots = bykey.complete(key);
            TransmissionArc a;
            size_t r0 = slots[0];
            std::string ent = "arc " + arcs.cell(r0, c_a) + "-" + arcs.cell(r0, c_b);
            a.node_a = link_node(arcs, r0, c_a, ent);
            a.node_b = link_node(arcs, r0, c_b, ent);
            a.loss_factor = arcs.num(r0, c_loss);
            a.lifetime_periods = static_cast<int>(arcs.integer(r0, c_life));
            if (!arcs.empty_cell(r0, c_max)) a.max_capacity = arcs.num(r0, c_max);
            for (size_t r : slots) {
                a.capex.push_back(arcs.num(r, c_capex));
                a.initial_capacity.push_back(arcs.num(r, c_init));
            }
            inst.arcs.push_back(std::move(a));
        }
    }

    // --- hydrogen demand -------------------------------------------------
    CsvTable hdem = read_csv((root / "hydrogen_demand.csv").string());
    {
        int c_node = hdem.require_column("node");
        int c_per = hdem.require_column("period");
        int c_kg = hdem.require_column("kg_per_year");
        std::set<std::pair<int, int>> seen;
        for (size_t r = 0; r < hdem.rows.size(); ++r) {
            int n = link_node(hdem, r, c_node, "hydrogen_demand");
            int p = detail::parse_period(hdem, r, c_per, P);
            if (!seen.insert({n, p}).second)
                throw ParseError(hdem.file, hdem.file_row(r), "node",
                                 "duplicate hydrogen demand entry for '" + hdem.cell(r, c_node) + "'");
            auto& vec = inst.nodes[static_cast<size_t>(n)].hydrogen_demand;
            if (vec.empty()) vec.assign(static_cast<size_t>(P), 0.0);
            vec[static_cast<size_t>(p)] = hdem.num(r, c_kg);
        }
    }

    // --- pipelines ---------------------------------------------------------
    CsvTable pipes = read_csv((root / "pipelines.csv").string());
    {
        int c_a = pipes.require_column("node_a");
        int c_b = pipes.require_column("node_b");
        int c_per = pipes.require_column("period");
        int c_capex = pipes.require_column("capex");
        int c_life = pipes.require_column("lifetime_periods");
        int c_comp = pipes.require_column("compressor_load");

        detail::PeriodRows bykey(pipes, P);
        for (size_t r = 0; r < pipes.rows.size(); ++r)
            bykey.add(detail::arc_key(pipes.cell(r, c_a), pipes.cell(r, c_b)), r,
                      detail::parse_period(pipes, r, c_per, P));
        for (auto& key : bykey.keys()) {
            const auto& slots = bykey.complete(key);
            Pipeline p;
            size_t r0 = slots[0];
            std::string ent = "pipeline " + pipes.cell(r0, c_a) + "-" + pipes.cell(r0, c_b);
            p.node_a = link_node(pipes, r0, c_a, ent);
            p.node_b = link_node(pipes, r0, c_b, ent);
            p.lifetime_periods = static_cast<int>(pipes.integer(r0, c_life));
            p.compressor_load =
                pipes.empty_cell(r0, c_comp) ? default_compressor_load : pipes.num(r0, c_comp);
            for (size_t r : slots) p.capex.push_back(pipes.num(r, c_capex));
            inst.hydrogen.pipelines.push_back(std::move(p));
        }
    }

    // --- profiles ----------------------------------------------------------
    {
        std::vector<std::string> wanted;
        auto want = [&wanted](const std::string& id) {
            if (id.empty()) return;
            for (auto& w : wanted)
                if (w == id) return;
            wanted.push_back(id);
        };
        for (auto& n : inst.nodes) want(n.demand_profile);
        for (auto& g : inst.generators) want(g.profile);

        for (auto& id : wanted) {
            fs::path path = root / "profiles" / (id + ".csv");
            if (!fs::exists(path)) throw IngestError(path.string());
            CsvTable t = read_csv(path.string());
            int p = inst.profiles.add(id);
            if (inst.profiles.slice_labels.empty()) inst.profiles.slice_labels = t.header;
            auto& series = inst.profiles.series[static_cast<size_t>(p)];
            series.reserve(t.rows.size() * t.header.size());
            // stored slice-major so value(profile, slice, hour) is contiguous
            for (size_t col = 0; col < t.header.size(); ++col)
                for (size_t r = 0; r < t.rows.size(); ++r)
                    series.push_back(t.num(r, static_cast<int>(col)));
        }
    }

    return inst;
}

// ---------------------------------------------------------------------------
// write_instance
// ---------------------------------------------------------------------------

inline void write_instance(const Instance& inst, const fs::path& root) {
    std::error_code ec;
    fs::create_directories(root / "profiles", ec);
    if (ec) throw IoError((root / "profiles").string(), ec.message());

    {
        std::ofstream out(root / "manifest.ini");
        if (!out) throw IoError((root / "manifest.ini").string(), "cannot open");
        auto list = [](const std::vector<double>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += fmt_g17(v[i]);
            }
            return s;
        };
        out << "name = " << inst.name << "\n\n[horizon]\n";
        out << "n_periods = " << inst.horizon.n_periods << "\n";
        out << "period_length_years = " << inst.horizon.period_length_years << "\n";
        out << "discount_rate = " << fmt_g17(inst.horizon.discount_rate) << "\n";
        out << "start_year = " << inst.horizon.start_year << "\n";
        out << "\n[seasons]\n";
        std::string reg, peak;
        for (auto& s : inst.seasons.seasons) {
            std::string& dst = s.peak ? peak : reg;
            if (!dst.empty()) dst += ',';
            dst += s.name + ":" + std::to_string(s.hours) + ":" + fmt_g17(s.scale);
        }
        out << "regular = " << reg << "\n";
        out << "peak = " << peak << "\n";
        if (!inst.options.season_blocks.empty()) {
            out << "blocks = ";
            for (size_t i = 0; i < inst.options.season_blocks.size(); ++i)
                out << (i ? "," : "") << inst.options.season_blocks[i];
            out << "\n";
        }
        out << "\n[sampling]\n";
        out << "scenarios = " << inst.options.default_scenarios << "\n";
        out << "seed = " << inst.options.default_seed << "\n";
        out << "\n[policies]\n";
        out << "co2_cap = " << list(inst.policies.co2_cap) << "\n";
        out << "shedding_cost = " << fmt_g17(inst.policies.shedding_cost) << "\n";
        out << "density_mw_per_km2 = " << fmt_g17(inst.options.density_mw_per_km2) << "\n";
        out << "cable_cap_rule = " << (inst.options.cable_cap_linked ? "linked" : "static") << "\n";
        out << "hub_sizing = " << (inst.options.hub_sizing_per_period ? "per_period" : "cumulative")
            << "\n";
        if (!inst.policies.hub_converter_capex.empty()) {
            out << "\n[hub]\n";
            out << "converter_capex = " << list(inst.policies.hub_converter_capex) << "\n";
            out << "converter_lifetime_periods = " << inst.policies.hub_converter_lifetime_periods
                << "\n";
        }
        out << "\n[hydrogen]\n";
        out << "lhv = " << fmt_g17(inst.hydrogen.lhv) << "\n";
        out << "storage_levelized_cost = " << fmt_g17(inst.hydrogen.storage_levelized_cost) << "\n";
        if (!inst.hydrogen.electrolyzer_capex.empty()) {
            out << "electrolyzer_capex = " << list(inst.hydrogen.electrolyzer_capex) << "\n";
            out << "electrolyzer_consumption = " << list(inst.hydrogen.electrolyzer_consumption)
                << "\n";
            out << "electrolyzer_lifetime_periods = " << inst.hydrogen.electrolyzer_lifetime_periods
                << "\n";
        }
    }

    {
        CsvWriter w((root / "nodes.csv").string());
        w.row({"id", "kind", "hydrogen_capable", "home_country", "area_km2", "demand_profile"});
        for (auto& n : inst.nodes)
            w.row({n.id, to_string(n.kind), n.hydrogen_capable ? "1" : "0",
                   n.home_country >= 0 ? inst.nodes[static_cast<size_t>(n.home_country)].id : "",
                   n.area_km2 ? fmt_g17(*n.area_km2) : "", n.demand_profile});
    }
    {
        CsvWriter w((root / "generators.csv").string());
        w.row({"id", "node", "class", "period", "capex", "variable_cost", "emission_factor",
               "lifetime_periods", "initial_capacity", "max_installed", "profile",
               "fuel_efficiency"});
        for (auto& g : inst.generators)
            for (int p = 0; p < inst.horizon.n_periods; ++p)
                w.row({g.id, inst.nodes[static_cast<size_t>(g.node)].id, to_string(g.cls),
                       std::to_string(p + 1), fmt_g17(g.capex[static_cast<size_t>(p)]),
                       fmt_g17(g.variable_cost[static_cast<size_t>(p)]),
                       fmt_g17(g.emission_factor), std::to_string(g.lifetime_periods),
                       fmt_g17(g.initial_capacity[static_cast<size_t>(p)]),
                       g.max_installed ? fmt_g17(*g.max_installed) : "", g.profile,
                       g.fuel_efficiency > 0 ? fmt_g17(g.fuel_efficiency) : ""});
    }
    {
        CsvWriter w((root / "arcs.csv").string());
        w.row({"node_a", "node_b", "period", "capex", "loss_factor", "initial_capacity",
               "max_capacity", "lifetime_periods"});
        for (auto& a : inst.arcs)
            for (int p = 0; p < inst.horizon.n_periods; ++p)
                w.row({inst.nodes[static_cast<size_t>(a.node_a)].id,
                       inst.nodes[static_cast<size_t>(a.node_b)].id, std::to_string(p + 1),
                       fmt_g17(a.capex[static_cast<size_t>(p)]), fmt_g17(a.loss_factor),
                       fmt_g17(a.initial_capacity[static_cast<size_t>(p)]),
                       a.max_capacity ? fmt_g17(*a.max_capacity) : "",
                       std::to_string(a.lifetime_periods)});
    }
    {
        CsvWriter w((root / "hydrogen_demand.csv").string());
        w.row({"node", "period", "kg_per_year"});
        for (auto& n : inst.nodes) {
            if (n.hydrogen_demand.empty()) continue;
            for (int p = 0; p < inst.horizon.n_periods; ++p)
                w.row({n.id, std::to_string(p + 1),
                       fmt_g17(n.hydrogen_demand[static_cast<size_t>(p)])});
        }
    }
    {
        CsvWriter w((root / "pipelines.csv").string());
        w.row({"node_a", "node_b", "period", "capex", "lifetime_periods", "compressor_load"});
        for (auto& p : inst.hydrogen.pipelines)
            for (int i = 0; i < inst.horizon.n_periods; ++i)
                w.row({inst.nodes[static_cast<size_t>(p.node_a)].id,
                       inst.nodes[static_cast<size_t>(p.node_b)].id, std::to_string(i + 1),
                       fmt_g17(p.capex[static_cast<size_t>(i)]), std::to_string(p.lifetime_periods),
                       fmt_g17(p.compressor_load)});
    }
    for (int p = 0; p < inst.profiles.n_profiles(); ++p) {
        CsvWriter w((root / "profiles" / (inst.profiles.ids[static_cast<size_t>(p)] + ".csv")).string());
        w.row(inst.profiles.slice_labels);
        const int slices = inst.profiles.n_slices();
        for (int h = 0; h < kHoursPerSlice; ++h) {
            std::vector<std::string> row;
            row.reserve(static_cast<size_t>(slices));
            for (int s = 0; s < slices; ++s) row.push_back(fmt_g17(inst.profiles.value(p, s, h)));
            w.row(row);
        }
    }
}

} // namespace expanse
