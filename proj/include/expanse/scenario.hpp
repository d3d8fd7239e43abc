#pragma once

// Chronological operational sampling. Each scenario draws one contiguous
// window per regular season from a uniformly chosen historical slice; the
// identical window indices are applied to every profile so temporal, spatial
// and cross-process correlation survive. Peak seasons use deterministic
// windows shared by all scenarios: the system-load maximum and the net-load
// maximum over an exhaustive window scan.

#include <string>
#include <vector>

#include "expanse/errors.hpp"
#include "expanse/instance.hpp"
#include "expanse/rng.hpp"
#include "expanse/text.hpp"

namespace expanse {

struct SeasonSample {
    int slice = 0;        // historical year-slice index
    int start_hour = 0;   // first hour of the window within the slice
};

struct ScenarioSet {
    int n_scenarios = 0;
    std::uint64_t seed = 0;
    std::vector<double> probabilities;                  // sums to 1
    std::vector<std::vector<SeasonSample>> samples;     // [scenario][season]
    // resolved[profile][scenario * n_seasons + season][hour]
    std::vector<std::vector<std::vector<double>>> resolved;
    int n_seasons = 0;

    double value(int profile, int scenario, int season, int hour) const {
        return resolved[static_cast<size_t>(profile)]
                       [static_cast<size_t>(scenario) * n_seasons + season]
                       [static_cast<size_t>(hour)];
    }
};

/// Weighted profile sum used for peak scans: load minus backed-off generation.
struct PeakSeries {
    std::vector<std::pair<int, double>> positive;   // (profile, weight): demands
    std::vector<std::pair<int, double>> negative;   // (profile, weight): intermittent at x-bar
};

namespace detail {

inline double window_sum(const ProfileLibrary& lib, const PeakSeries& series, int slice, int start,
                         int hours) {
    double total = 0.0;
    for (auto& [p, w] : series.positive)
        for (int h = 0; h < hours; ++h) total += w * lib.value(p, slice, start + h);
    for (auto& [p, w] : series.negative)
        for (int h = 0; h < hours; ++h) total -= w * lib.value(p, slice, start + h);
    return total;
}

/// Exhaustive scan over every in-slice window; ties break to the earliest
/// hour of the lowest slice.
inline SeasonSample best_window(const ProfileLibrary& lib, const PeakSeries& series, int hours) {
    SeasonSample best;
    double best_value = -kInf;
    for (int slice = 0; slice < lib.n_slices(); ++slice) {
        // incremental sliding sum; full rescan would be O(8760 * hours)
        double sum = window_sum(lib, series, slice, 0, hours);
        for (int start = 0; start + hours <= kHoursPerSlice; ++start) {
            if (best_value == -kInf ||
                sum > best_value + 1e-9 * std::max(1.0, std::abs(best_value))) {
                best_value = sum;
                best = {slice, start};
            }
            if (start + hours < kHoursPerSlice) {
                double leave = window_sum(lib, series, slice, start, 1);
                double enter = window_sum(lib, series, slice, start + hours, 1);
                sum += enter - leave;
            }
        }
    }
    return best;
}

} // namespace detail

/// Peak 1 maximizes total system load; Peak 2 maximizes net load (load minus
/// intermittent availability at initial capacities). Windows are shared by
/// all scenarios.
inline std::vector<SeasonSample> select_peak_days(const ProfileLibrary& profiles,
                                                  const SeasonSpec& spec, const PeakSeries& load,
                                                  const PeakSeries& net_load) {
    std::vector<SeasonSample> out;
    int peak_index = 0;
    for (auto& s : spec.seasons) {
        if (!s.peak) continue;
        if (load.positive.empty()) throw SampleError("no demand");
        const PeakSeries& series = peak_index == 0 ? load : net_load;
        out.push_back(detail::best_window(profiles, series, s.hours));
        ++peak_index;
    }
    return out;
}

/// Draws the regular-season windows for every scenario. Draw order is fixed:
/// scenario-major, seasons in listed order, slice before offset.
inline ScenarioSet sample_scenarios(const ProfileLibrary& profiles, const SeasonSpec& spec,
                                    const std::vector<int>& block_starts, int n_scenarios,
                                    std::uint64_t seed,
                                    const std::vector<SeasonSample>& peak_windows) {
    if (profiles.n_profiles() == 0) throw SampleError("no profiles");
    if (n_scenarios < 1) throw SampleError("scenario count must be >= 1");
    const int n_regular = spec.n_regular();
    if (static_cast<int>(block_starts.size()) != n_regular)
        throw SampleError("calendar blocks do not match the regular season count");

    ScenarioSet set;
    set.n_scenarios = n_scenarios;
    set.seed = seed;
    set.n_seasons = static_cast<int>(spec.seasons.size());
    set.probabilities.assign(static_cast<size_t>(n_scenarios), 1.0 / n_scenarios);

    Rng rng(seed);
    for (int w = 0; w < n_scenarios; ++w) {
        std::vector<SeasonSample> row;
        int regular_idx = 0, peak_idx = 0;
        for (auto& s : spec.seasons) {
            if (s.peak) {
                row.push_back(peak_windows.at(static_cast<size_t>(peak_idx++)));
                continue;
            }
            const int block_start = block_starts[static_cast<size_t>(regular_idx)];
            const int block_end = regular_idx + 1 < n_regular
                                      ? block_starts[static_cast<size_t>(regular_idx) + 1]
                                      : kHoursPerSlice;
            ++regular_idx;
            const int feasible = block_end - block_start - s.hours + 1;
            if (feasible < 1) throw SampleError(s.name);
            SeasonSample sample;
            sample.slice = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(profiles.n_slices())));
            sample.start_hour =
                block_start + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(feasible)));
            row.push_back(sample);
        }
        set.samples.push_back(std::move(row));
    }

    // resolve every profile against the shared windows
    set.resolved.resize(static_cast<size_t>(profiles.n_profiles()));
    for (int p = 0; p < profiles.n_profiles(); ++p) {
        auto& per_profile = set.resolved[static_cast<size_t>(p)];
        per_profile.resize(static_cast<size_t>(n_scenarios) * set.n_seasons);
        for (int w = 0; w < n_scenarios; ++w) {
            for (int s = 0; s < set.n_seasons; ++s) {
                const SeasonSample& sample = set.samples[static_cast<size_t>(w)][static_cast<size_t>(s)];
                const int hours = spec.seasons[static_cast<size_t>(s)].hours;
                auto& window = per_profile[static_cast<size_t>(w) * set.n_seasons + s];
                window.resize(static_cast<size_t>(hours));
                for (int h = 0; h < hours; ++h)
                    window[static_cast<size_t>(h)] = profiles.value(p, sample.slice, sample.start_hour + h);
            }
        }
    }
    return set;
}

/// Instance-level wrapper: assembles the peak scan series from the demand
/// profiles and the intermittent fleet at its first-period residuals.
inline ScenarioSet make_scenarios(const Instance& inst, int n_scenarios, std::uint64_t seed) {
    PeakSeries load, net;
    for (auto& n : inst.nodes) {
        if (n.demand_profile.empty()) continue;
        int p = inst.profiles.find(n.demand_profile);
        if (p < 0) throw SampleError("unresolved demand profile " + n.demand_profile);
        load.positive.push_back({p, 1.0});
        net.positive.push_back({p, 1.0});
    }
    for (auto& g : inst.generators) {
        if (g.cls != GenClass::intermittent || g.profile.empty()) continue;
        int p = inst.profiles.find(g.profile);
        if (p < 0) throw SampleError("unresolved availability profile " + g.profile);
        double x0 = g.initial_capacity.empty() ? 0.0 : g.initial_capacity.front();
        if (x0 > 0) net.negative.push_back({p, x0});
    }
    std::vector<SeasonSample> peaks;
    bool has_peaks = false;
    for (auto& s : inst.seasons.seasons) has_peaks = has_peaks || s.peak;
    if (has_peaks) peaks = select_peak_days(inst.profiles, inst.seasons, load, net);
    return sample_scenarios(inst.profiles, inst.seasons, inst.season_block_starts(), n_scenarios,
                            seed, peaks);
}

/// Audit dump: one row per (scenario, season) with the drawn window.
inline void write_scenarios_csv(const ScenarioSet& set, const SeasonSpec& spec,
                                const ProfileLibrary& profiles, const std::string& path) {
    CsvWriter w(path);
    w.row({"scenario", "season", "start_hour", "slice_label"});
    for (int sc = 0; sc < set.n_scenarios; ++sc)
        for (size_t s = 0; s < spec.seasons.size(); ++s) {
            const SeasonSample& sample = set.samples[static_cast<size_t>(sc)][s];
            w.row({std::to_string(sc), spec.seasons[s].name, std::to_string(sample.start_hour),
                   profiles.slice_labels.empty()
                       ? std::to_string(sample.slice)
                       : profiles.slice_labels[static_cast<size_t>(sample.slice)]});
        }
}

} // namespace expanse
