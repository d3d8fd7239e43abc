#include <doctest.h>

#include <set>

#include "expanse/demo.hpp"
#include "expanse/scenario.hpp"

using namespace expanse;

namespace {

/// Instance with the default 4+2 season layout and a handful of profiles.
Instance seasonal_instance() {
    Instance inst;
    inst.name = "seasonal";
    inst.horizon = {1, 1, 0.0, 2020};
    for (const char* n : {"winter", "spring", "summer", "autumn"})
        inst.seasons.seasons.push_back({n, 168, 13.0, false});
    inst.seasons.seasons.push_back({"peak_load", 24, 1.0, true});
    inst.seasons.seasons.push_back({"peak_net", 24, 1.0, true});
    inst.policies.shedding_cost = 22000.0;
    inst.policies.co2_cap = {1e12};
    demo::add_profile(inst, "load", [](int h) { return 100.0 + (h % 37) + 0.01 * h; });
    demo::add_profile(inst, "load2", [](int h) { return 50.0 + (h % 11); });
    demo::add_profile(inst, "wind", [](int h) { return 0.5 + 0.4 * std::sin(h / 7.0); });
    int a = demo::add_node(inst, "a", NodeKind::onshore, "load");
    demo::add_node(inst, "b", NodeKind::onshore, "load2");
    (void)a;
    demo::add_gen(inst, "wind_a", 0,
                  {.cls = GenClass::intermittent, .initial = 10.0, .profile = "wind"});
    return inst;
}

/// Independent exhaustive window scan used as the peak-day oracle.
std::pair<int, int> naive_best_window(const ProfileLibrary& lib,
                                      const std::vector<std::pair<int, double>>& pos,
                                      const std::vector<std::pair<int, double>>& neg, int hours) {
    int best_slice = 0, best_start = 0;
    double best = -kInf;
    for (int slice = 0; slice < lib.n_slices(); ++slice)
        for (int start = 0; start + hours <= kHoursPerSlice; ++start) {
            double sum = 0.0;
            for (auto& [p, w] : pos)
                for (int h = 0; h < hours; ++h) sum += w * lib.value(p, slice, start + h);
            for (auto& [p, w] : neg)
                for (int h = 0; h < hours; ++h) sum -= w * lib.value(p, slice, start + h);
            if (best == -kInf || sum > best + 1e-9 * std::max(1.0, std::abs(best))) {
                best = sum;
                best_slice = slice;
                best_start = start;
            }
        }
    return {best_slice, best_start};
}

} // namespace

TEST_CASE("uniform probabilities and determinism") {
    Instance inst = seasonal_instance();
    ScenarioSet a = make_scenarios(inst, 3, 99);
    CHECK(a.probabilities == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
    double sum = 0;
    for (double p : a.probabilities) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-12);

    ScenarioSet b = make_scenarios(inst, 3, 99);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t w = 0; w < a.samples.size(); ++w)
        for (size_t s = 0; s < a.samples[w].size(); ++s) {
            CHECK(a.samples[w][s].slice == b.samples[w][s].slice);
            CHECK(a.samples[w][s].start_hour == b.samples[w][s].start_hour);
        }
    CHECK(a.resolved == b.resolved);
}

TEST_CASE("regular-season starts stay inside their calendar blocks") {
    Instance inst = seasonal_instance();
    // winter block is hours 0..2183; a 168 h window has 2017 feasible starts
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ScenarioSet set = make_scenarios(inst, 2, seed);
        for (int w = 0; w < 2; ++w) {
            const auto& winter = set.samples[static_cast<size_t>(w)][0];
            CHECK(winter.start_hour >= 0);
            CHECK(winter.start_hour <= 2016);
            const auto& spring = set.samples[static_cast<size_t>(w)][1];
            CHECK(spring.start_hour >= 2184);
            CHECK(spring.start_hour <= 2184 + 2016);
        }
    }
}

TEST_CASE("chronology and cross-profile alignment") {
    Instance inst = seasonal_instance();
    ScenarioSet set = make_scenarios(inst, 3, 4);
    for (int w = 0; w < set.n_scenarios; ++w)
        for (int s = 0; s < set.n_seasons; ++s) {
            const SeasonSample& sample = set.samples[static_cast<size_t>(w)][static_cast<size_t>(s)];
            const int hours = inst.seasons.seasons[static_cast<size_t>(s)].hours;
            for (int p = 0; p < inst.profiles.n_profiles(); ++p)
                for (int h = 0; h < hours; ++h)
                    CHECK(set.value(p, w, s, h) ==
                          inst.profiles.value(p, sample.slice, sample.start_hour + h));
        }
}

TEST_CASE("different seeds give different draws") {
    Instance inst = seasonal_instance();
    std::set<std::vector<int>> distinct;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ScenarioSet set = make_scenarios(inst, 2, seed);
        std::vector<int> key;
        for (auto& row : set.samples)
            for (auto& s : row) key.push_back(s.start_hour);
        distinct.insert(key);
    }
    CHECK(distinct.size() >= 95);
}

TEST_CASE("peak selection matches the exhaustive scan") {
    Instance inst = seasonal_instance();
    ScenarioSet set = make_scenarios(inst, 1, 5);
    const int pk1 = 4, pk2 = 5;   // season indices

    std::vector<std::pair<int, double>> load = {{0, 1.0}, {1, 1.0}};
    std::vector<std::pair<int, double>> wind = {{2, 10.0}};
    auto [s1, h1] = naive_best_window(inst.profiles, load, {}, 24);
    auto [s2, h2] = naive_best_window(inst.profiles, load, wind, 24);
    CHECK(set.samples[0][pk1].slice == s1);
    CHECK(set.samples[0][pk1].start_hour == h1);
    CHECK(set.samples[0][pk2].slice == s2);
    CHECK(set.samples[0][pk2].start_hour == h2);
    // identical across scenarios
    ScenarioSet multi = make_scenarios(inst, 3, 5);
    for (int w = 0; w < 3; ++w) {
        CHECK(multi.samples[static_cast<size_t>(w)][pk1].start_hour == h1);
        CHECK(multi.samples[static_cast<size_t>(w)][pk2].start_hour == h2);
    }
}

TEST_CASE("peak window centers on a symmetric load spike") {
    Instance inst;
    inst.horizon = {1, 1, 0.0, 2020};
    inst.seasons.seasons.push_back({"s1", 24, 365.0, false});
    inst.seasons.seasons.push_back({"peak_load", 24, 1.0, true});
    demo::add_profile(inst, "load", [](int h) {
        const double tri = 20.0 - std::abs(h - 4000);
        return 10.0 + (tri > 0 ? tri : 0.0);
    });
    demo::add_node(inst, "a", NodeKind::onshore, "load");
    ScenarioSet set = make_scenarios(inst, 1, 1);
    CHECK(set.samples[0][1].start_hour == 3988);
}

TEST_CASE("constant load ties break to the earliest window") {
    Instance inst;
    inst.horizon = {1, 1, 0.0, 2020};
    inst.seasons.seasons.push_back({"s1", 24, 365.0, false});
    inst.seasons.seasons.push_back({"peak_load", 24, 1.0, true});
    inst.seasons.seasons.push_back({"peak_net", 24, 1.0, true});
    demo::add_const_profile(inst, "load", 5.0);
    demo::add_node(inst, "a", NodeKind::onshore, "load");
    ScenarioSet set = make_scenarios(inst, 1, 1);
    CHECK(set.samples[0][1].start_hour == 0);
    // no intermittent capacity: net-load peak equals the load peak
    CHECK(set.samples[0][2].start_hour == set.samples[0][1].start_hour);
    CHECK(set.samples[0][2].slice == set.samples[0][1].slice);
}

TEST_CASE("sampling errors") {
    Instance inst = seasonal_instance();
    SUBCASE("window that cannot fit its block") {
        inst.seasons.seasons[0].hours = 3000;   // block is 2184 h
        CHECK_THROWS_AS(make_scenarios(inst, 1, 1), SampleError);
    }
    SUBCASE("empty profile library") {
        ProfileLibrary empty;
        SeasonSpec spec = inst.seasons;
        CHECK_THROWS_AS(sample_scenarios(empty, spec, {0, 2184, 4368, 6552}, 1, 1, {}), SampleError);
    }
    SUBCASE("peak selection without demand profiles") {
        PeakSeries none, net;
        CHECK_THROWS_AS(select_peak_days(inst.profiles, inst.seasons, none, net), SampleError);
    }
}

TEST_CASE("scenarios csv audit dump") {
    Instance inst = seasonal_instance();
    ScenarioSet set = make_scenarios(inst, 2, 3);
    const std::string path = "scenarios_test.csv";
    write_scenarios_csv(set, inst.seasons, inst.profiles, path);
    CsvTable t = read_csv(path);
    CHECK(t.header == std::vector<std::string>{"scenario", "season", "start_hour", "slice_label"});
    CHECK(t.rows.size() == 2 * 6);
    CHECK(t.cell(0, 1) == "winter");
}
