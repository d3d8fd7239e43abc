#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "expanse/bounds.hpp"
#include "expanse/demo.hpp"
#include "expanse/instance_io.hpp"
#include "expanse/rng.hpp"
#include "expanse/validate.hpp"

using namespace expanse;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("expanse_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

bool same_instance(const Instance& a, const Instance& b) {
    if (a.nodes.size() != b.nodes.size() || a.generators.size() != b.generators.size() ||
        a.arcs.size() != b.arcs.size() ||
        a.hydrogen.pipelines.size() != b.hydrogen.pipelines.size())
        return false;
    if (a.horizon.n_periods != b.horizon.n_periods ||
        a.horizon.discount_rate != b.horizon.discount_rate)
        return false;
    for (size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].id != b.nodes[i].id || a.nodes[i].kind != b.nodes[i].kind) return false;
        if (a.nodes[i].hydrogen_demand != b.nodes[i].hydrogen_demand) return false;
        if (a.nodes[i].area_km2.has_value() != b.nodes[i].area_km2.has_value()) return false;
        if (a.nodes[i].area_km2 && *a.nodes[i].area_km2 != *b.nodes[i].area_km2) return false;
    }
    for (size_t i = 0; i < a.generators.size(); ++i) {
        const auto& x = a.generators[i];
        const auto& y = b.generators[i];
        if (x.id != y.id || x.cls != y.cls || x.capex != y.capex ||
            x.variable_cost != y.variable_cost || x.initial_capacity != y.initial_capacity ||
            x.emission_factor != y.emission_factor || x.fuel_efficiency != y.fuel_efficiency)
            return false;
    }
    for (size_t i = 0; i < a.arcs.size(); ++i)
        if (a.arcs[i].capex != b.arcs[i].capex || a.arcs[i].loss_factor != b.arcs[i].loss_factor)
            return false;
    if (a.policies.co2_cap != b.policies.co2_cap) return false;
    if (a.hydrogen.electrolyzer_capex != b.hydrogen.electrolyzer_capex) return false;
    if (a.profiles.ids != b.profiles.ids) return false;
    for (size_t p = 0; p < a.profiles.series.size(); ++p)
        if (a.profiles.series[p] != b.profiles.series[p]) return false;
    return true;
}

} // namespace

TEST_CASE("write/load round-trips the loaded representation") {
    for (auto& named : demo::micro_corpus()) {
        fs::path dir = temp_dir("rt_" + named.name);
        write_instance(named.inst, dir);
        Instance back = load_instance(dir);
        CHECK_MESSAGE(same_instance(named.inst, back), named.name);
        // and a second generation stays identical
        fs::path dir2 = temp_dir("rt2_" + named.name);
        write_instance(back, dir2);
        Instance back2 = load_instance(dir2);
        CHECK_MESSAGE(same_instance(back, back2), named.name);
    }
}

TEST_CASE("minimal one-node directory loads") {
    fs::path dir = temp_dir("minimal");
    write_instance(demo::micro_dispatch(), dir);
    Instance inst = load_instance(dir);
    CHECK(inst.nodes.size() == 1);
    CHECK(inst.generators.size() == 1);
    CHECK(inst.horizon.n_periods == 1);
}

TEST_CASE("missing table raises IngestError naming the file") {
    fs::path dir = temp_dir("missing");
    write_instance(demo::micro_dispatch(), dir);
    fs::remove(dir / "generators.csv");
    try {
        load_instance(dir);
        FAIL("expected IngestError");
    } catch (const IngestError& e) {
        CHECK(e.file.find("generators.csv") != std::string::npos);
    }
}

TEST_CASE("dangling home country raises LinkError with the key") {
    fs::path dir = temp_dir("dangling");
    Instance inst = demo::micro_hub();
    write_instance(inst, dir);
    // rewrite nodes.csv with a bogus home country
    {
        CsvTable t = read_csv((dir / "nodes.csv").string());
        std::ofstream out(dir / "nodes.csv");
        out << "id,kind,hydrogen_capable,home_country,area_km2,demand_profile\n";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            auto row = t.rows[r];
            if (row[0] == "farm") row[3] = "XX";
            for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
    }
    try {
        load_instance(dir);
        FAIL("expected LinkError");
    } catch (const LinkError& e) {
        CHECK(e.key == "XX");
        CHECK(e.entity.find("farm") != std::string::npos);
    }
}

TEST_CASE("malformed numbers raise ParseError with position") {
    fs::path dir = temp_dir("badnum");
    write_instance(demo::micro_dispatch(), dir);
    {
        CsvTable t = read_csv((dir / "generators.csv").string());
        std::ofstream out(dir / "generators.csv");
        for (size_t c = 0; c < t.header.size(); ++c) out << (c ? "," : "") << t.header[c];
        out << "\n";
        auto row = t.rows[0];
        row[static_cast<size_t>(t.column("capex"))] = "not_a_number";
        for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
    try {
        load_instance(dir);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == "capex");
        CHECK(e.row == 2);
    }
}

TEST_CASE("validate accepts the whole shipped corpus") {
    for (auto& named : demo::micro_corpus()) {
        ValidationReport rep = validate_instance(named.inst);
        CHECK_MESSAGE(rep.ok(), named.name, ": ", rep.to_string());
    }
    CHECK(validate_instance(demo::desk()).ok());
}

TEST_CASE("validate flags single-field mutations") {
    auto count_violations = [](const Instance& inst) {
        return validate_instance(inst).violations.size();
    };

    SUBCASE("loss factor above one names the arc") {
        Instance inst = demo::micro_loss();
        inst.arcs[0].loss_factor = 1.2;
        ValidationReport rep = validate_instance(inst);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations[0].where.find("a-b") != std::string::npos);
    }
    SUBCASE("season coverage far from one year") {
        Instance inst = demo::micro_dispatch();
        inst.seasons.seasons[0].scale = 1000.0;   // 4000 weighted hours
        ValidationReport rep = validate_instance(inst);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.violations[0].where == "seasons");
    }
    SUBCASE("emitting intermittent generator") {
        Instance inst = demo::micro_intermittent();
        inst.generators[0].emission_factor = 0.1;
        CHECK(count_violations(inst) == 1);
    }
    SUBCASE("increasing co2 cap") {
        Instance inst = demo::desk();
        inst.policies.co2_cap = {1e6, 2e6};
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("shedding cost below a variable cost") {
        Instance inst = demo::micro_dispatch();
        inst.policies.shedding_cost = 10.0;
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("pipeline endpoint without hydrogen capability") {
        Instance inst = demo::micro_compressor();
        inst.nodes[1].hydrogen_capable = false;
        inst.nodes[1].hydrogen_demand.clear();
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("hub without converter data") {
        Instance inst = demo::micro_hub();
        inst.policies.hub_converter_capex.clear();
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("demand profile on a farm node") {
        Instance inst = demo::micro_hub();
        inst.nodes[2].demand_profile = "load";
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("hydrogen demand at an incapable node") {
        Instance inst = demo::micro_dispatch();
        inst.nodes[0].hydrogen_demand = {5.0};
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("growing initial capacity residual") {
        Instance inst = demo::desk();
        inst.generators[0].initial_capacity = {1000.0, 2000.0};
        CHECK_FALSE(validate_instance(inst).ok());
    }
    SUBCASE("availability outside [0,1]") {
        Instance inst = demo::micro_intermittent();
        inst.profiles.series[1][100] = 1.4;
        CHECK_FALSE(validate_instance(inst).ok());
    }
}

TEST_CASE("derived bounds follow the endpoint-kind cap table") {
    Instance inst = demo::base_instance("bounds", 1, 8760.0);
    demo::add_const_profile(inst, "load", 10.0);
    int b = demo::add_node(inst, "b", NodeKind::onshore, "load");
    int c = demo::add_node(inst, "c", NodeKind::onshore, "load");
    int hub = demo::add_node(inst, "hub", NodeKind::hub);
    int f_small = demo::add_node(inst, "f_small", NodeKind::offshore_farm);
    int f_big = demo::add_node(inst, "f_big", NodeKind::offshore_farm);
    inst.nodes[static_cast<size_t>(f_small)].home_country = b;
    inst.nodes[static_cast<size_t>(f_small)].area_km2 = 500.0;
    inst.nodes[static_cast<size_t>(f_big)].home_country = c;
    inst.nodes[static_cast<size_t>(f_big)].area_km2 = 3000.0;   // 18 GW
    demo::add_gen(inst, "w_small", f_small, {.cls = GenClass::intermittent, .profile = "load"});
    demo::add_gen(inst, "w_big", f_big, {.cls = GenClass::intermittent, .profile = "load"});
    demo::enable_hub_converter(inst, 1.0);

    int a_ff = demo::add_arc(inst, f_small, f_big, 1.0);
    int a_home_small = demo::add_arc(inst, f_small, b, 1.0);
    int a_home_big = demo::add_arc(inst, f_big, c, 1.0);
    int a_fhub = demo::add_arc(inst, f_big, hub, 1.0);
    int a_hub_b = demo::add_arc(inst, hub, b, 1.0);
    int a_hub_c = demo::add_arc(inst, hub, c, 1.0, 0.0, 25000.0);
    int a_bc = demo::add_arc(inst, b, c, 1.0);

    BoundTable t = derive_capacity_bounds(inst);
    CHECK(t.generator_cap[0] == doctest::Approx(3000.0));       // 500 km2 x 6 MW/km2
    CHECK(t.farm_generation[static_cast<size_t>(f_small)] == doctest::Approx(3000.0));
    CHECK(t.arc_cap[static_cast<size_t>(a_ff)] == doctest::Approx(1000.0));        // farm-farm 1 GW
    CHECK(t.arc_cap[static_cast<size_t>(a_home_small)] == doctest::Approx(3000.0)); // min(5 GW, farm bound)
    CHECK(t.arc_cap[static_cast<size_t>(a_home_big)] == doctest::Approx(5000.0));   // 5 GW binding
    CHECK(t.arc_cap[static_cast<size_t>(a_fhub)] == doctest::Approx(10000.0));      // farm-hub 10 GW
    CHECK(t.arc_cap[static_cast<size_t>(a_hub_b)] == doctest::Approx(20000.0));     // hub-country 20 GW
    CHECK(t.arc_cap[static_cast<size_t>(a_hub_c)] == doctest::Approx(25000.0));     // raised to existing
    CHECK(t.arc_cap[static_cast<size_t>(a_bc)] == kInf);                            // onshore default free

    SUBCASE("farm without area or explicit max is a BoundError") {
        inst.nodes[static_cast<size_t>(f_small)].area_km2.reset();
        CHECK_THROWS_AS(derive_capacity_bounds(inst), BoundError);
    }
    SUBCASE("bounds are monotone in farm area") {
        Rng rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            Instance grown = inst;
            const double extra = static_cast<double>(rng.next_below(2000));
            grown.nodes[static_cast<size_t>(f_small)].area_km2 = 500.0 + extra;
            BoundTable bigger = derive_capacity_bounds(grown);
            for (size_t i = 0; i < t.generator_cap.size(); ++i)
                CHECK(bigger.generator_cap[i] >= t.generator_cap[i] - 1e-9);
            for (size_t i = 0; i < t.arc_cap.size(); ++i)
                CHECK(bigger.arc_cap[i] >= t.arc_cap[i] - 1e-9);
        }
    }
}

TEST_CASE("co2 cap trajectory") {
    auto caps = co2_cap_trajectory(1.11e9, 2.2e7, 8);
    CHECK(caps.front() == 1.11e9);
    CHECK(caps.back() == 2.2e7);
    // interior point, derived by hand: 1110e6 - (1110e6 - 22e6) / 7
    CHECK(caps[1] == doctest::Approx(1.11e9 - 1.088e9 / 7.0).epsilon(1e-12));
    CHECK(caps[1] == doctest::Approx(954571428.571428).epsilon(1e-9));

    auto flat = co2_cap_trajectory(100.0, 100.0, 3);
    CHECK(flat == std::vector<double>{100.0, 100.0, 100.0});

    CHECK_THROWS_AS(co2_cap_trajectory(10.0, 1.0, 1), DomainError);

    SUBCASE("affine: second differences vanish") {
        Rng rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            const double start = 1e6 + static_cast<double>(rng.next_below(1000000000));
            const double end = static_cast<double>(rng.next_below(1000000));
            const int n = 3 + static_cast<int>(rng.next_below(12));
            auto c = co2_cap_trajectory(start, end, n);
            for (size_t i = 2; i < c.size(); ++i) {
                const double dd = (c[i] - c[i - 1]) - (c[i - 1] - c[i - 2]);
                CHECK(std::abs(dd) <= 1e-9 * std::max(1.0, std::abs(start)));
            }
        }
    }
}
