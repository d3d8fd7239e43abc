#pragma once

// Sparse LP container: min c'z subject to row senses {<=, =, >=} and finite
// or infinite column bounds, plus the bidirectional naming layer that maps
// every named decision and constraint family to contiguous index ranges.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "expanse/errors.hpp"

namespace expanse {

enum class RowSense : char { LE = 'L', EQ = 'E', GE = 'G' };

// ---------------------------------------------------------------------------
// DecisionIndex: arithmetic bidirectional maps between named decisions and
// the model's columns/rows. Column order: investment blocks period-major
// (entities within a period in registry order), then operational blocks
// scenario -> period -> season -> hour -> entity. Installed capacity is a
// derived expression over investment columns, not a column of its own.
// ---------------------------------------------------------------------------

struct FamilyCount {
    std::string family;
    std::int64_t count;
};

struct DecisionIndex {
    // shape
    int n_periods = 0, n_scenarios = 0, n_seasons = 0, hours_total = 0;
    std::vector<int> season_hours, season_offset;
    int n_nodes = 0, n_gens = 0, n_arcs = 0, n_pipes = 0;
    bool hydrogen_on = false;

    // entity registries (positions, and reverse maps node/gen -> position)
    std::vector<int> hyd_nodes, hyd_pos;     // hydrogen-capable nodes
    std::vector<int> h2p_gens, h2p_pos;      // hydrogen-fueled generators
    std::vector<int> shed_nodes, shed_pos;   // onshore nodes carrying shedding
    std::vector<int> hub_nodes, hub_pos;

    // names for exports
    std::vector<std::string> node_ids, gen_ids, arc_ids, pipe_ids, season_names;

    // column layout
    int inv_width = 0;   // columns per investment period block
    int off_x_gen = 0, off_x_trans = 0, off_x_el = 0, off_x_pipe = 0, off_x_conv = 0;
    int ops_base = 0;
    int slot_width = 0;  // columns per (scenario, period, hour) slot
    int off_y_gen = 0, off_y_trans = 0, off_y_shed = 0, off_y_p2h = 0, off_y_hyd = 0,
        off_y_sold = 0, off_y_h2p = 0, off_y_ht = 0;

    // row layout
    std::vector<int> row_cap_gen;     // n_periods * n_gens, -1 when unbounded
    std::vector<int> row_cap_trans;   // n_periods * n_arcs, -1 when unbounded
    std::vector<int> row_hub;         // n_periods * hub count
    std::vector<int> row_cable_link;  // optional (arc, farm, period) rows, flattened map
    int op_rows_base = 0;
    int row_slot_width = 0;
    int roff_balance = 0, roff_glim = 0, roff_tlim = 0, roff_h2plink = 0, roff_eq2 = 0,
        roff_elcap = 0, roff_hbal = 0, roff_pcap = 0;
    int hdem_base = 0;   // (scenario, period, hyd node)
    int co2_base = 0;    // (scenario, period)

    int hyd_of(int node) const {
        const int p = hyd_pos[static_cast<size_t>(node)];
        if (p < 0) throw BuildError(node_ids.empty() ? std::to_string(node)
                                                     : node_ids[static_cast<size_t>(node)]);
        return p;
    }
    int n_hyd() const { return static_cast<int>(hyd_nodes.size()); }
    int n_h2p() const { return static_cast<int>(h2p_gens.size()); }
    int n_shed() const { return static_cast<int>(shed_nodes.size()); }
    int n_hub() const { return static_cast<int>(hub_nodes.size()); }
    std::int64_t n_slots() const {
        return static_cast<std::int64_t>(n_scenarios) * n_periods * hours_total;
    }

    // ---- slots ----
    int slot(int scenario, int period, int season, int hour) const {
        return (scenario * n_periods + period) * hours_total +
               season_offset[static_cast<size_t>(season)] + hour;
    }
    void unslot(int s, int& scenario, int& period, int& season, int& hour) const {
        int g = s % hours_total;
        int wp = s / hours_total;
        period = wp % n_periods;
        scenario = wp / n_periods;
        season = 0;
        while (season + 1 < n_seasons && season_offset[static_cast<size_t>(season) + 1] <= g) ++season;
        hour = g - season_offset[static_cast<size_t>(season)];
    }

    // ---- investment columns ----
    int col_x_gen(int gen, int period) const { return period * inv_width + off_x_gen + gen; }
    int col_x_trans(int arc, int period) const { return period * inv_width + off_x_trans + arc; }
    int col_x_el(int node, int period) const {
        return period * inv_width + off_x_el + hyd_of(node);
    }
    int col_x_pipe(int pipe, int period) const { return period * inv_width + off_x_pipe + pipe; }
    int col_x_conv(int node, int period) const {
        return period * inv_width + off_x_conv + hub_pos[static_cast<size_t>(node)];
    }

    // ---- operational columns (slot = slot(w,i,s,h)) ----
    int col_y_gen(int gen, int s) const { return ops_base + s * slot_width + off_y_gen + gen; }
    int col_y_trans(int arc, int dir, int s) const {
        return ops_base + s * slot_width + off_y_trans + 2 * arc + dir;
    }
    int col_y_shed(int node, int s) const {
        return ops_base + s * slot_width + off_y_shed + shed_pos[static_cast<size_t>(node)];
    }
    int col_y_p2h(int node, int s) const {
        return ops_base + s * slot_width + off_y_p2h + hyd_of(node);
    }
    int col_y_hyd(int node, int s) const {
        return ops_base + s * slot_width + off_y_hyd + hyd_of(node);
    }
    int col_y_sold(int node, int s) const {
        return ops_base + s * slot_width + off_y_sold + hyd_of(node);
    }
    int col_y_h2p(int gen, int s) const {
        return ops_base + s * slot_width + off_y_h2p + h2p_pos[static_cast<size_t>(gen)];
    }
    int col_y_ht(int pipe, int dir, int s) const {
        return ops_base + s * slot_width + off_y_ht + 2 * pipe + dir;
    }

    // ---- rows ----
    int row_balance(int node, int s) const {
        return op_rows_base + s * row_slot_width + roff_balance + node;
    }
    int row_gen_limit(int gen, int s) const {
        return op_rows_base + s * row_slot_width + roff_glim + gen;
    }
    int row_trans_limit(int arc, int dir, int s) const {
        return op_rows_base + s * row_slot_width + roff_tlim + 2 * arc + dir;
    }
    int row_h2p_link(int gen, int s) const {
        return op_rows_base + s * row_slot_width + roff_h2plink + h2p_pos[static_cast<size_t>(gen)];
    }
    int row_conversion(int node, int s) const {
        return op_rows_base + s * row_slot_width + roff_eq2 + hyd_of(node);
    }
    int row_el_cap(int node, int s) const {
        return op_rows_base + s * row_slot_width + roff_elcap + hyd_of(node);
    }
    int row_h2_balance(int node, int s) const {
        return op_rows_base + s * row_slot_width + roff_hbal + hyd_of(node);
    }
    int row_pipe_cap(int pipe, int dir, int s) const {
        return op_rows_base + s * row_slot_width + roff_pcap + 2 * pipe + dir;
    }
    int row_h2_demand(int node, int period, int scenario) const {
        return hdem_base + (scenario * n_periods + period) * n_hyd() + hyd_of(node);
    }
    int row_co2(int period, int scenario) const {
        return co2_base + scenario * n_periods + period;
    }

    std::vector<FamilyCount> coverage() const {
        const std::int64_t S = n_slots();
        std::vector<FamilyCount> out;
        out.push_back({"x_gen", static_cast<std::int64_t>(n_periods) * n_gens});
        out.push_back({"x_trans", static_cast<std::int64_t>(n_periods) * n_arcs});
        out.push_back({"x_el", static_cast<std::int64_t>(n_periods) * n_hyd()});
        out.push_back({"x_pipe", static_cast<std::int64_t>(n_periods) * n_pipes});
        out.push_back({"x_conv", static_cast<std::int64_t>(n_periods) * n_hub()});
        out.push_back({"y_gen", S * n_gens});
        out.push_back({"y_trans", S * 2 * n_arcs});
        out.push_back({"y_shed", S * n_shed()});
        out.push_back({"y_p2h", S * n_hyd()});
        out.push_back({"y_hyd", S * n_hyd()});
        out.push_back({"y_hyd_sold", S * n_hyd()});
        out.push_back({"y_hyd_h2p", S * n_h2p()});
        out.push_back({"y_hyd_trans", S * 2 * n_pipes});
        return out;
    }

    // ---- name generation (used by MPS export and solution dumps) ----
    std::string slot_tag(int s) const {
        int w, i, season, h;
        unslot(s, w, i, season, h);
        return "w" + std::to_string(w) + "_p" + std::to_string(i + 1) + "_" +
               season_names[static_cast<size_t>(season)] + "_h" + std::to_string(h);
    }

    std::string name_col(int j) const {
        if (j < ops_base) {
            int period = j / inv_width;
            int local = j % inv_width;
            std::string p = "_p" + std::to_string(period + 1) + "_";
            if (local < off_x_trans) return "xgen" + p + gen_ids[static_cast<size_t>(local)];
            if (local < off_x_el)
                return "xtr" + p + arc_ids[static_cast<size_t>(local - off_x_trans)];
            if (local < off_x_pipe)
                return "xel" + p +
                       node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - off_x_el)])];
            if (local < off_x_conv)
                return "xpipe" + p + pipe_ids[static_cast<size_t>(local - off_x_pipe)];
            return "xconv" + p +
                   node_ids[static_cast<size_t>(hub_nodes[static_cast<size_t>(local - off_x_conv)])];
        }
        int s = (j - ops_base) / slot_width;
        int local = (j - ops_base) % slot_width;
        std::string tag = "_" + slot_tag(s) + "_";
        if (local < off_y_trans) return "yg" + tag + gen_ids[static_cast<size_t>(local)];
        if (local < off_y_shed) {
            int k = local - off_y_trans;
            return "yt" + tag + arc_ids[static_cast<size_t>(k / 2)] + (k % 2 ? "_bw" : "_fw");
        }
        if (local < off_y_p2h)
            return "yshed" + tag +
                   node_ids[static_cast<size_t>(shed_nodes[static_cast<size_t>(local - off_y_shed)])];
        if (local < off_y_hyd)
            return "yp2h" + tag +
                   node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - off_y_p2h)])];
        if (local < off_y_sold)
            return "yhyd" + tag +
                   node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - off_y_hyd)])];
        if (local < off_y_h2p)
            return "ysold" + tag +
                   node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - off_y_sold)])];
        if (local < off_y_ht)
            return "yh2p" + tag +
                   gen_ids[static_cast<size_t>(h2p_gens[static_cast<size_t>(local - off_y_h2p)])];
        int k = local - off_y_ht;
        return "yht" + tag + pipe_ids[static_cast<size_t>(k / 2)] + (k % 2 ? "_bw" : "_fw");
    }

    std::string name_row(int r) const {
        if (r < op_rows_base) {
            for (int i = 0; i < n_periods; ++i) {
                for (int g = 0; g < n_gens; ++g)
                    if (row_cap_gen[static_cast<size_t>(i) * n_gens + g] == r)
                        return "capg_p" + std::to_string(i + 1) + "_" + gen_ids[static_cast<size_t>(g)];
                for (int a = 0; a < n_arcs; ++a)
                    if (row_cap_trans[static_cast<size_t>(i) * n_arcs + a] == r)
                        return "capt_p" + std::to_string(i + 1) + "_" + arc_ids[static_cast<size_t>(a)];
            }
            for (size_t k = 0; k < row_hub.size(); ++k)
                if (row_hub[k] == r)
                    return "hub_p" + std::to_string(k / hub_nodes.size() + 1) + "_" +
                           node_ids[static_cast<size_t>(hub_nodes[k % hub_nodes.size()])];
            for (size_t k = 0; k < row_cable_link.size(); ++k)
                if (row_cable_link[k] == r)
                    return "cablelink_" + std::to_string(k);
            return "invrow_" + std::to_string(r);
        }
        if (r < hdem_base) {
            int s = (r - op_rows_base) / row_slot_width;
            int local = (r - op_rows_base) % row_slot_width;
            std::string tag = "_" + slot_tag(s) + "_";
            if (local < roff_glim) return "bal" + tag + node_ids[static_cast<size_t>(local)];
            if (local < roff_tlim)
                return "glim" + tag + gen_ids[static_cast<size_t>(local - roff_glim)];
            if (local < roff_h2plink) {
                int k = local - roff_tlim;
                return "tlim" + tag + arc_ids[static_cast<size_t>(k / 2)] + (k % 2 ? "_bw" : "_fw");
            }
            if (local < roff_eq2)
                return "fuel" + tag +
                       gen_ids[static_cast<size_t>(h2p_gens[static_cast<size_t>(local - roff_h2plink)])];
            if (local < roff_elcap)
                return "conv" + tag +
                       node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - roff_eq2)])];
            if (local < roff_hbal)
                return "elcap" + tag +
                       node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - roff_elcap)])];
            if (local < roff_pcap)
                return "hbal" + tag +
                       node_ids[static_cast<size_t>(hyd_nodes[static_cast<size_t>(local - roff_hbal)])];
            int k = local - roff_pcap;
            return "pcap" + tag + pipe_ids[static_cast<size_t>(k / 2)] + (k % 2 ? "_bw" : "_fw");
        }
        if (r < co2_base) {
            int k = r - hdem_base;
            int node = hyd_nodes[static_cast<size_t>(k % n_hyd())];
            int wp = k / n_hyd();
            return "hdem_w" + std::to_string(wp / n_periods) + "_p" +
                   std::to_string(wp % n_periods + 1) + "_" + node_ids[static_cast<size_t>(node)];
        }
        int k = r - co2_base;
        return "co2_w" + std::to_string(k / n_periods) + "_p" + std::to_string(k % n_periods + 1);
    }
};

struct LPModel {
    int n_cols = 0;
    int n_rows = 0;

    std::vector<double> obj;
    std::vector<double> col_lower, col_upper;
    std::vector<RowSense> sense;
    std::vector<double> rhs;

    // assembly buffers (triplets), compressed by freeze()
    std::vector<int> tri_row, tri_col;
    std::vector<double> tri_val;

    // column-major storage after freeze()
    std::vector<std::int64_t> col_start;   // size n_cols + 1
    std::vector<int> row_index;
    std::vector<double> value;
    bool frozen = false;

    DecisionIndex index;   // populated by the model builder, empty for ad-hoc models

    int add_col(double lower, double upper, double cost) {
        obj.push_back(cost);
        col_lower.push_back(lower);
        col_upper.push_back(upper);
        return n_cols++;
    }
    int add_row(RowSense s, double b) {
        sense.push_back(s);
        rhs.push_back(b);
        return n_rows++;
    }
    void add_term(int row, int col, double v) {
        if (v == 0.0) return;
        tri_row.push_back(row);
        tri_col.push_back(col);
        tri_val.push_back(v);
    }

    std::int64_t nnz() const { return static_cast<std::int64_t>(row_index.size()); }

    /// Compress triplets into CSC, merging duplicates, and verify finiteness.
    void freeze() {
        if (frozen) return;
        std::vector<std::int64_t> count(static_cast<size_t>(n_cols) + 1, 0);
        for (int c : tri_col) ++count[static_cast<size_t>(c) + 1];
        col_start.assign(static_cast<size_t>(n_cols) + 1, 0);
        for (int c = 0; c < n_cols; ++c) col_start[static_cast<size_t>(c) + 1] = col_start[static_cast<size_t>(c)] + count[static_cast<size_t>(c) + 1];
        std::vector<std::int64_t> cursor(col_start.begin(), col_start.end() - 1);
        row_index.assign(tri_row.size(), 0);
        value.assign(tri_row.size(), 0.0);
        for (size_t k = 0; k < tri_row.size(); ++k) {
            std::int64_t dst = cursor[static_cast<size_t>(tri_col[k])]++;
            row_index[static_cast<size_t>(dst)] = tri_row[k];
            value[static_cast<size_t>(dst)] = tri_val[k];
        }
        // merge duplicate (row, col) entries per column
        std::vector<std::int64_t> last_seen(static_cast<size_t>(n_rows), -1);
        std::int64_t write = 0;
        std::vector<std::int64_t> new_start(static_cast<size_t>(n_cols) + 1, 0);
        for (int c = 0; c < n_cols; ++c) {
            new_start[static_cast<size_t>(c)] = write;
            for (std::int64_t k = col_start[static_cast<size_t>(c)]; k < col_start[static_cast<size_t>(c) + 1]; ++k) {
                int r = row_index[static_cast<size_t>(k)];
                if (last_seen[static_cast<size_t>(r)] >= new_start[static_cast<size_t>(c)]) {
                    value[static_cast<size_t>(last_seen[static_cast<size_t>(r)])] += value[static_cast<size_t>(k)];
                } else {
                    row_index[static_cast<size_t>(write)] = r;
                    value[static_cast<size_t>(write)] = value[static_cast<size_t>(k)];
                    last_seen[static_cast<size_t>(r)] = write;
                    ++write;
                }
            }
        }
        new_start[static_cast<size_t>(n_cols)] = write;
        row_index.resize(static_cast<size_t>(write));
        value.resize(static_cast<size_t>(write));
        col_start = std::move(new_start);
        tri_row.clear();
        tri_row.shrink_to_fit();
        tri_col.clear();
        tri_col.shrink_to_fit();
        tri_val.clear();
        tri_val.shrink_to_fit();
        for (double v : value)
            if (!std::isfinite(v)) throw BuildError("non-finite matrix coefficient");
        for (double v : obj)
            if (!std::isfinite(v)) throw BuildError("non-finite objective coefficient");
        for (double v : rhs)
            if (!std::isfinite(v)) throw BuildError("non-finite right-hand side");
        frozen = true;
    }
};

} // namespace expanse
