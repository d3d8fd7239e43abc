#pragma once

// Assembles the complete sparse LP from an admissible instance and a
// scenario set: investment and operational columns, the power and hydrogen
// constraint families, emission caps, hub converter sizing, and the
// discounted objective. Column and row ordering is deterministic and
// documented in docs/model.md.

#include <algorithm>
#include <vector>

#include "expanse/bounds.hpp"
#include "expanse/instance.hpp"
#include "expanse/lp.hpp"
#include "expanse/scenario.hpp"

namespace expanse {

/// Affine expression over investment columns: constant + sum coef * column.
struct LinExpr {
    double constant = 0.0;
    std::vector<std::pair<int, double>> terms;
};

namespace detail {

/// First build period whose capacity is still alive in `period` (0-based):
/// an investment made in period j serves periods j .. j + lifetime - 1.
inline int window_start(int period, int lifetime_periods) {
    return std::max(0, period - lifetime_periods + 1);
}

} // namespace detail

/// Installed capacity of an asset in a period: the remaining initial residual
/// plus every investment column inside the rolling lifetime window.
inline LinExpr installed_capacity_expr(double initial_residual, int lifetime_periods, int period,
                                       auto&& col_of_period) {
    LinExpr e;
    e.constant = initial_residual;
    for (int j = detail::window_start(period, lifetime_periods); j <= period; ++j)
        e.terms.push_back({col_of_period(j), 1.0});
    return e;
}

class ModelBuilder {
public:
    ModelBuilder(const Instance& inst, const ScenarioSet& scen)
        : inst_(inst), scen_(scen), bounds_(derive_capacity_bounds(inst)) {}

    LPModel build() {
        layout_columns();
        investment_rows();
        operational_rows();
        aggregate_rows();
        model_.index = ix_;
        model_.freeze();
        return std::move(model_);
    }

private:
    const Instance& inst_;
    const ScenarioSet& scen_;
    BoundTable bounds_;
    LPModel model_;
    DecisionIndex ix_;

    std::vector<int> node_profile_;   // node -> profile index or -1
    std::vector<int> gen_profile_;    // generator -> profile index or -1

    double alpha(int season) const { return inst_.seasons.seasons[static_cast<size_t>(season)].scale; }
    double eta(int period) const {
        return inst_.hydrogen.electrolyzer_consumption[static_cast<size_t>(period)];
    }

    // installed-capacity expressions per asset kind
    LinExpr v_gen(int g, int i) const {
        const auto& gen = inst_.generators[static_cast<size_t>(g)];
        return installed_capacity_expr(gen.initial_capacity[static_cast<size_t>(i)],
                                       gen.lifetime_periods, i,
                                       [&](int j) { return ix_.col_x_gen(g, j); });
    }
    LinExpr v_trans(int a, int i) const {
        const auto& arc = inst_.arcs[static_cast<size_t>(a)];
        return installed_capacity_expr(arc.initial_capacity[static_cast<size_t>(i)],
                                       arc.lifetime_periods, i,
                                       [&](int j) { return ix_.col_x_trans(a, j); });
    }
    LinExpr v_el(int node, int i) const {
        return installed_capacity_expr(0.0, inst_.hydrogen.electrolyzer_lifetime_periods, i,
                                       [&](int j) { return ix_.col_x_el(node, j); });
    }
    LinExpr v_pipe(int p, int i) const {
        return installed_capacity_expr(0.0,
                                       inst_.hydrogen.pipelines[static_cast<size_t>(p)].lifetime_periods,
                                       i, [&](int j) { return ix_.col_x_pipe(p, j); });
    }
    LinExpr v_conv(int node, int i) const {
        return installed_capacity_expr(0.0, inst_.policies.hub_converter_lifetime_periods, i,
                                       [&](int j) { return ix_.col_x_conv(node, j); });
    }

    /// row += coef * expr, moving the constant to the right-hand side.
    void add_expr(int row, const LinExpr& e, double coef) {
        for (auto& [col, c] : e.terms) model_.add_term(row, col, coef * c);
        model_.rhs[static_cast<size_t>(row)] -= coef * e.constant;
    }

    void layout_columns() {
        const int P = inst_.horizon.n_periods;
        ix_.n_periods = P;
        ix_.n_scenarios = scen_.n_scenarios;
        ix_.n_seasons = static_cast<int>(inst_.seasons.seasons.size());
        ix_.n_nodes = static_cast<int>(inst_.nodes.size());
        ix_.n_gens = static_cast<int>(inst_.generators.size());
        ix_.n_arcs = static_cast<int>(inst_.arcs.size());
        ix_.hydrogen_on = inst_.hydrogen_active();
        ix_.n_pipes = ix_.hydrogen_on ? static_cast<int>(inst_.hydrogen.pipelines.size()) : 0;

        int off = 0;
        for (auto& s : inst_.seasons.seasons) {
            ix_.season_hours.push_back(s.hours);
            ix_.season_offset.push_back(off);
            ix_.season_names.push_back(s.name);
            off += s.hours;
        }
        ix_.hours_total = off;

        ix_.hyd_pos.assign(static_cast<size_t>(ix_.n_nodes), -1);
        ix_.shed_pos.assign(static_cast<size_t>(ix_.n_nodes), -1);
        ix_.hub_pos.assign(static_cast<size_t>(ix_.n_nodes), -1);
        ix_.h2p_pos.assign(static_cast<size_t>(ix_.n_gens), -1);
        for (int n = 0; n < ix_.n_nodes; ++n) {
            const Node& node = inst_.nodes[static_cast<size_t>(n)];
            ix_.node_ids.push_back(node.id);
            if (ix_.hydrogen_on && node.hydrogen_capable) {
                ix_.hyd_pos[static_cast<size_t>(n)] = static_cast<int>(ix_.hyd_nodes.size());
                ix_.hyd_nodes.push_back(n);
            }
            if (node.kind == NodeKind::onshore) {
                ix_.shed_pos[static_cast<size_t>(n)] = static_cast<int>(ix_.shed_nodes.size());
                ix_.shed_nodes.push_back(n);
            }
            if (node.kind == NodeKind::hub) {
                ix_.hub_pos[static_cast<size_t>(n)] = static_cast<int>(ix_.hub_nodes.size());
                ix_.hub_nodes.push_back(n);
            }
        }
        for (int g = 0; g < ix_.n_gens; ++g) {
            const auto& gen = inst_.generators[static_cast<size_t>(g)];
            ix_.gen_ids.push_back(gen.id);
            if (gen.cls == GenClass::hydrogen_fueled) {
                if (!ix_.hydrogen_on)
                    throw BuildError("hydrogen-fueled generator " + gen.id +
                                     " but the hydrogen module is inactive");
                if (ix_.hyd_pos[static_cast<size_t>(gen.node)] < 0)
                    throw BuildError(inst_.nodes[static_cast<size_t>(gen.node)].id);
                ix_.h2p_pos[static_cast<size_t>(g)] = static_cast<int>(ix_.h2p_gens.size());
                ix_.h2p_gens.push_back(g);
            }
        }
        for (auto& a : inst_.arcs)
            ix_.arc_ids.push_back(inst_.nodes[static_cast<size_t>(a.node_a)].id + "_" +
                                  inst_.nodes[static_cast<size_t>(a.node_b)].id);
        if (ix_.hydrogen_on)
            for (auto& p : inst_.hydrogen.pipelines)
                ix_.pipe_ids.push_back(inst_.nodes[static_cast<size_t>(p.node_a)].id + "_" +
                                       inst_.nodes[static_cast<size_t>(p.node_b)].id);

        if (ix_.n_hub() > 0 && inst_.policies.hub_converter_capex.empty())
            throw BuildError("converter");
        if (ix_.hydrogen_on && inst_.hydrogen.electrolyzer_capex.empty())
            throw BuildError("electrolyzer cost data missing");

        node_profile_.assign(static_cast<size_t>(ix_.n_nodes), -1);
        for (int n = 0; n < ix_.n_nodes; ++n)
            if (!inst_.nodes[static_cast<size_t>(n)].demand_profile.empty())
                node_profile_[static_cast<size_t>(n)] =
                    inst_.profiles.find(inst_.nodes[static_cast<size_t>(n)].demand_profile);
        gen_profile_.assign(static_cast<size_t>(ix_.n_gens), -1);
        for (int g = 0; g < ix_.n_gens; ++g)
            if (!inst_.generators[static_cast<size_t>(g)].profile.empty())
                gen_profile_[static_cast<size_t>(g)] =
                    inst_.profiles.find(inst_.generators[static_cast<size_t>(g)].profile);

        // column offsets
        ix_.off_x_gen = 0;
        ix_.off_x_trans = ix_.off_x_gen + ix_.n_gens;
        ix_.off_x_el = ix_.off_x_trans + ix_.n_arcs;
        ix_.off_x_pipe = ix_.off_x_el + ix_.n_hyd();
        ix_.off_x_conv = ix_.off_x_pipe + ix_.n_pipes;
        ix_.inv_width = ix_.off_x_conv + ix_.n_hub();
        ix_.ops_base = P * ix_.inv_width;

        ix_.off_y_gen = 0;
        ix_.off_y_trans = ix_.off_y_gen + ix_.n_gens;
        ix_.off_y_shed = ix_.off_y_trans + 2 * ix_.n_arcs;
        ix_.off_y_p2h = ix_.off_y_shed + ix_.n_shed();
        ix_.off_y_hyd = ix_.off_y_p2h + ix_.n_hyd();
        ix_.off_y_sold = ix_.off_y_hyd + ix_.n_hyd();
        ix_.off_y_h2p = ix_.off_y_sold + ix_.n_hyd();
        ix_.off_y_ht = ix_.off_y_h2p + ix_.n_h2p();
        ix_.slot_width = ix_.off_y_ht + 2 * ix_.n_pipes;

        const Horizon& hz = inst_.horizon;
        const double phi = hz.phi();

        // investment columns, period-major
        for (int i = 0; i < P; ++i) {
            const double delta = hz.delta(i + 1);
            for (int g = 0; g < ix_.n_gens; ++g)
                model_.add_col(0.0, kInf,
                               delta * inst_.generators[static_cast<size_t>(g)].capex[static_cast<size_t>(i)]);
            for (int a = 0; a < ix_.n_arcs; ++a)
                model_.add_col(0.0, kInf,
                               delta * inst_.arcs[static_cast<size_t>(a)].capex[static_cast<size_t>(i)]);
            for (int k = 0; k < ix_.n_hyd(); ++k)
                model_.add_col(0.0, kInf,
                               delta * inst_.hydrogen.electrolyzer_capex[static_cast<size_t>(i)]);
            for (int p = 0; p < ix_.n_pipes; ++p)
                model_.add_col(0.0, kInf,
                               delta *
                                   inst_.hydrogen.pipelines[static_cast<size_t>(p)].capex[static_cast<size_t>(i)]);
            for (int hN = 0; hN < ix_.n_hub(); ++hN)
                model_.add_col(0.0, kInf,
                               delta * inst_.policies.hub_converter_capex[static_cast<size_t>(i)]);
        }

        // operational columns, scenario -> period -> season -> hour -> entity
        for (int w = 0; w < ix_.n_scenarios; ++w) {
            const double pi = scen_.probabilities[static_cast<size_t>(w)];
            for (int i = 0; i < P; ++i) {
                const double base = hz.delta(i + 1) * pi * phi;
                for (int s = 0; s < ix_.n_seasons; ++s) {
                    const double factor = base * alpha(s);
                    for (int h = 0; h < ix_.season_hours[static_cast<size_t>(s)]; ++h) {
                        for (int g = 0; g < ix_.n_gens; ++g)
                            model_.add_col(
                                0.0, kInf,
                                factor *
                                    inst_.generators[static_cast<size_t>(g)].variable_cost[static_cast<size_t>(i)]);
                        for (int a = 0; a < 2 * ix_.n_arcs; ++a) model_.add_col(0.0, kInf, 0.0);
                        for (int n = 0; n < ix_.n_shed(); ++n)
                            model_.add_col(0.0, kInf, factor * inst_.policies.shedding_cost);
                        for (int n = 0; n < ix_.n_hyd(); ++n) model_.add_col(0.0, kInf, 0.0); // y_p2h
                        for (int n = 0; n < ix_.n_hyd(); ++n)
                            model_.add_col(0.0, kInf,
                                           factor * inst_.hydrogen.storage_levelized_cost); // y_hyd
                        for (int n = 0; n < ix_.n_hyd(); ++n) model_.add_col(0.0, kInf, 0.0); // y_sold
                        for (int g = 0; g < ix_.n_h2p(); ++g) model_.add_col(0.0, kInf, 0.0);
                        for (int p = 0; p < 2 * ix_.n_pipes; ++p) model_.add_col(0.0, kInf, 0.0);
                    }
                }
            }
        }
    }

    void investment_rows() {
        const int P = inst_.horizon.n_periods;
        ix_.row_cap_gen.assign(static_cast<size_t>(P) * ix_.n_gens, -1);
        ix_.row_cap_trans.assign(static_cast<size_t>(P) * ix_.n_arcs, -1);

        for (int i = 0; i < P; ++i) {
            for (int g = 0; g < ix_.n_gens; ++g) {
                double cap = bounds_.generator_cap[static_cast<size_t>(g)];
                if (cap == kInf) continue;
                int row = model_.add_row(RowSense::LE, cap);
                ix_.row_cap_gen[static_cast<size_t>(i) * ix_.n_gens + g] = row;
                add_expr(row, v_gen(g, i), 1.0);
            }
            for (int a = 0; a < ix_.n_arcs; ++a) {
                double cap = bounds_.arc_cap[static_cast<size_t>(a)];
                if (cap == kInf) continue;
                int row = model_.add_row(RowSense::LE, cap);
                ix_.row_cap_trans[static_cast<size_t>(i) * ix_.n_arcs + a] = row;
                add_expr(row, v_trans(a, i), 1.0);
            }
        }

        // optional endogenous rule: farm cables bounded by built farm generation
        if (inst_.options.cable_cap_linked) {
            for (int i = 0; i < P; ++i)
                for (int a = 0; a < ix_.n_arcs; ++a) {
                    const auto& arc = inst_.arcs[static_cast<size_t>(a)];
                    for (int end : {arc.node_a, arc.node_b}) {
                        if (inst_.nodes[static_cast<size_t>(end)].kind != NodeKind::offshore_farm)
                            continue;
                        int row = model_.add_row(RowSense::LE, 0.0);
                        ix_.row_cable_link.push_back(row);
                        add_expr(row, v_trans(a, i), 1.0);
                        for (int g = 0; g < ix_.n_gens; ++g)
                            if (inst_.generators[static_cast<size_t>(g)].node == end)
                                add_expr(row, v_gen(g, i), -1.0);
                    }
                }
        }

        // hub converter sizing
        for (int i = 0; i < P; ++i)
            for (int hN : ix_.hub_nodes) {
                int row = model_.add_row(RowSense::LE, 0.0);
                ix_.row_hub.push_back(row);
                if (inst_.options.hub_sizing_per_period) {
                    if (ix_.hydrogen_on && ix_.hyd_pos[static_cast<size_t>(hN)] >= 0)
                        model_.add_term(row, ix_.col_x_el(hN, i), 1.0);
                    for (int a = 0; a < ix_.n_arcs; ++a)
                        if (inst_.arcs[static_cast<size_t>(a)].touches(hN))
                            model_.add_term(row, ix_.col_x_trans(a, i), 1.0);
                    model_.add_term(row, ix_.col_x_conv(hN, i), -1.0);
                } else {
                    if (ix_.hydrogen_on && ix_.hyd_pos[static_cast<size_t>(hN)] >= 0)
                        add_expr(row, v_el(hN, i), 1.0);
                    for (int a = 0; a < ix_.n_arcs; ++a)
                        if (inst_.arcs[static_cast<size_t>(a)].touches(hN))
                            add_expr(row, v_trans(a, i), 1.0);
                    add_expr(row, v_conv(hN, i), -1.0);
                }
            }
    }

    void operational_rows() {
        const int P = inst_.horizon.n_periods;
        ix_.roff_balance = 0;
        ix_.roff_glim = ix_.roff_balance + ix_.n_nodes;
        ix_.roff_tlim = ix_.roff_glim + ix_.n_gens;
        ix_.roff_h2plink = ix_.roff_tlim + 2 * ix_.n_arcs;
        ix_.roff_eq2 = ix_.roff_h2plink + ix_.n_h2p();
        ix_.roff_elcap = ix_.roff_eq2 + ix_.n_hyd();
        ix_.roff_hbal = ix_.roff_elcap + ix_.n_hyd();
        ix_.roff_pcap = ix_.roff_hbal + ix_.n_hyd();
        ix_.row_slot_width = ix_.roff_pcap + 2 * ix_.n_pipes;
        ix_.op_rows_base = model_.n_rows;

        const double lhv = inst_.hydrogen.lhv;

        for (int w = 0; w < ix_.n_scenarios; ++w)
            for (int i = 0; i < P; ++i)
                for (int s = 0; s < ix_.n_seasons; ++s)
                    for (int h = 0; h < ix_.season_hours[static_cast<size_t>(s)]; ++h) {
                        const int slot = ix_.slot(w, i, s, h);

                        // power balance per node
                        for (int n = 0; n < ix_.n_nodes; ++n) {
                            double demand = 0.0;
                            if (node_profile_[static_cast<size_t>(n)] >= 0)
                                demand = scen_.value(node_profile_[static_cast<size_t>(n)], w, s, h);
                            int row = model_.add_row(RowSense::EQ, demand);
                            (void)row;
                        }
                        // generator availability limits
                        for (int g = 0; g < ix_.n_gens; ++g) model_.add_row(RowSense::LE, 0.0);
                        // transmission flow limits, one per direction
                        for (int a = 0; a < 2 * ix_.n_arcs; ++a) model_.add_row(RowSense::LE, 0.0);
                        // hydrogen-fueled fuel link
                        for (int g = 0; g < ix_.n_h2p(); ++g) model_.add_row(RowSense::EQ, 0.0);
                        // electrolyzer conversion
                        for (int n = 0; n < ix_.n_hyd(); ++n) model_.add_row(RowSense::EQ, 0.0);
                        // electrolyzer capacity
                        for (int n = 0; n < ix_.n_hyd(); ++n) model_.add_row(RowSense::LE, 0.0);
                        // hydrogen flow balance
                        for (int n = 0; n < ix_.n_hyd(); ++n) model_.add_row(RowSense::EQ, 0.0);
                        // pipeline directional capacity
                        for (int p = 0; p < 2 * ix_.n_pipes; ++p) model_.add_row(RowSense::LE, 0.0);

                        fill_slot(w, i, s, h, slot, lhv);
                    }
    }

    void fill_slot(int w, int i, int s, int h, int slot, double lhv) {
        // power balance
        for (int g = 0; g < ix_.n_gens; ++g)
            model_.add_term(ix_.row_balance(inst_.generators[static_cast<size_t>(g)].node, slot),
                            ix_.col_y_gen(g, slot), 1.0);
        for (int a = 0; a < ix_.n_arcs; ++a) {
            const auto& arc = inst_.arcs[static_cast<size_t>(a)];
            const double receive = 1.0 - arc.loss_factor;
            // forward = node_a -> node_b
            model_.add_term(ix_.row_balance(arc.node_a, slot), ix_.col_y_trans(a, 0, slot), -1.0);
            model_.add_term(ix_.row_balance(arc.node_b, slot), ix_.col_y_trans(a, 0, slot), receive);
            model_.add_term(ix_.row_balance(arc.node_b, slot), ix_.col_y_trans(a, 1, slot), -1.0);
            model_.add_term(ix_.row_balance(arc.node_a, slot), ix_.col_y_trans(a, 1, slot), receive);
        }
        for (int n : ix_.shed_nodes) model_.add_term(ix_.row_balance(n, slot), ix_.col_y_shed(n, slot), 1.0);
        for (int n : ix_.hyd_nodes) model_.add_term(ix_.row_balance(n, slot), ix_.col_y_p2h(n, slot), -1.0);
        for (int p = 0; p < ix_.n_pipes; ++p) {
            const auto& pipe = inst_.hydrogen.pipelines[static_cast<size_t>(p)];
            const double half = 0.5 * pipe.compressor_load;
            if (half == 0.0) continue;
            for (int dir = 0; dir < 2; ++dir)
                for (int end : {pipe.node_a, pipe.node_b})
                    model_.add_term(ix_.row_balance(end, slot), ix_.col_y_ht(p, dir, slot), -half);
        }

        // generator limits
        for (int g = 0; g < ix_.n_gens; ++g) {
            const auto& gen = inst_.generators[static_cast<size_t>(g)];
            const int row = ix_.row_gen_limit(g, slot);
            model_.add_term(row, ix_.col_y_gen(g, slot), 1.0);
            double avail = 1.0;
            if (gen.cls == GenClass::intermittent)
                avail = scen_.value(gen_profile_[static_cast<size_t>(g)], w, s, h);
            add_expr(row, v_gen(g, i), -avail);
        }

        // transmission flows bounded by the installed arc capacity
        for (int a = 0; a < ix_.n_arcs; ++a)
            for (int dir = 0; dir < 2; ++dir) {
                const int row = ix_.row_trans_limit(a, dir, slot);
                model_.add_term(row, ix_.col_y_trans(a, dir, slot), 1.0);
                add_expr(row, v_trans(a, i), -1.0);
            }

        // hydrogen-fueled generation draws stored hydrogen as fuel
        for (int g : ix_.h2p_gens) {
            const auto& gen = inst_.generators[static_cast<size_t>(g)];
            const int row = ix_.row_h2p_link(g, slot);
            model_.add_term(row, ix_.col_y_gen(g, slot), 1.0);
            model_.add_term(row, ix_.col_y_h2p(g, slot), -gen.fuel_efficiency * lhv);
        }

        for (int n : ix_.hyd_nodes) {
            // conversion: production = power / consumption
            const int conv = ix_.row_conversion(n, slot);
            model_.add_term(conv, ix_.col_y_hyd(n, slot), 1.0);
            model_.add_term(conv, ix_.col_y_p2h(n, slot), -1.0 / eta(i));
            // electrolyzer capacity
            const int cap = ix_.row_el_cap(n, slot);
            model_.add_term(cap, ix_.col_y_p2h(n, slot), 1.0);
            add_expr(cap, v_el(n, i), -1.0);
            // flow balance: production - sold - burned - net export = 0
            const int bal = ix_.row_h2_balance(n, slot);
            model_.add_term(bal, ix_.col_y_hyd(n, slot), 1.0);
            model_.add_term(bal, ix_.col_y_sold(n, slot), -1.0);
            for (int g : ix_.h2p_gens)
                if (inst_.generators[static_cast<size_t>(g)].node == n)
                    model_.add_term(bal, ix_.col_y_h2p(g, slot), -1.0);
            for (int p = 0; p < ix_.n_pipes; ++p) {
                const auto& pipe = inst_.hydrogen.pipelines[static_cast<size_t>(p)];
                if (!pipe.touches(n)) continue;
                const int out_dir = pipe.node_a == n ? 0 : 1;
                model_.add_term(bal, ix_.col_y_ht(p, out_dir, slot), -1.0);
                model_.add_term(bal, ix_.col_y_ht(p, 1 - out_dir, slot), 1.0);
            }
        }

        // pipeline flows share one undirected capacity
        for (int p = 0; p < ix_.n_pipes; ++p)
            for (int dir = 0; dir < 2; ++dir) {
                const int row = ix_.row_pipe_cap(p, dir, slot);
                model_.add_term(row, ix_.col_y_ht(p, dir, slot), 1.0);
                add_expr(row, v_pipe(p, i), -1.0);
            }
    }

    void aggregate_rows() {
        const int P = inst_.horizon.n_periods;
        ix_.hdem_base = model_.n_rows;
        for (int w = 0; w < ix_.n_scenarios; ++w)
            for (int i = 0; i < P; ++i)
                for (int n : ix_.hyd_nodes) {
                    int row = model_.add_row(RowSense::GE,
                                             inst_.nodes[static_cast<size_t>(n)].hydrogen_demand_in(i));
                    for (int s = 0; s < ix_.n_seasons; ++s)
                        for (int h = 0; h < ix_.season_hours[static_cast<size_t>(s)]; ++h)
                            model_.add_term(row, ix_.col_y_sold(n, ix_.slot(w, i, s, h)), alpha(s));
                }

        ix_.co2_base = model_.n_rows;
        for (int w = 0; w < ix_.n_scenarios; ++w)
            for (int i = 0; i < P; ++i) {
                int row = model_.add_row(RowSense::LE, inst_.policies.co2_cap[static_cast<size_t>(i)]);
                for (int g = 0; g < ix_.n_gens; ++g) {
                    const double ef = inst_.generators[static_cast<size_t>(g)].emission_factor;
                    if (ef == 0.0) continue;
                    for (int s = 0; s < ix_.n_seasons; ++s)
                        for (int h = 0; h < ix_.season_hours[static_cast<size_t>(s)]; ++h)
                            model_.add_term(row, ix_.col_y_gen(g, ix_.slot(w, i, s, h)), ef * alpha(s));
                }
            }
    }
};

/// Orchestrator: validated instance + compatible scenario set -> frozen LP.
inline LPModel build_lp(const Instance& inst, const ScenarioSet& scen) {
    return ModelBuilder(inst, scen).build();
}

} // namespace expanse
