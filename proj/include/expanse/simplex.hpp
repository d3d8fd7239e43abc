#pragma once

// Bounded-variable revised primal simplex with dual extraction.
//
// Rows enter the working problem as logical columns (a'x + s = b), so column
// bounds never expand into rows. Pricing is Dantzig (most violating reduced
// cost) with Bland's rule as the anti-cycling fallback after a long run of
// non-improving iterations. The basis is held as a sparse LU factorization
// refreshed periodically, with product-form eta updates in between. Geometric
// row/column equilibration is applied up front and unwound in every reported
// quantity. The crash basis seats singleton columns such as load shedding in
// their balance rows, which makes the all-shed point the starting vertex.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <algorithm>
#include <cstdio>
#include <vector>

#include "expanse/lp.hpp"
#include "expanse/lu.hpp"

namespace expanse {

enum class SolveStatus { optimal, infeasible, unbounded, iteration_limit };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::unbounded: return "unbounded";
        case SolveStatus::iteration_limit: return "iteration_limit";
    }
    return "?";
}

enum class Pricing { devex, dantzig };

struct SolveOptions {
    double tol_feasibility = 1e-7;
    double tol_optimality = 1e-7;
    double tol_pivot = 1e-9;
    double tol_ratio_entry = 1e-7;      // minimum |w| for a ratio-test blocker
    std::int64_t max_iterations = -1;   // -1: derived from the model size
    int refactor_interval = 500;
    bool equilibrate = true;
    Pricing pricing = Pricing::devex;   // dantzig available for comparison runs
    std::int64_t log_every = 0;         // 0: silent
};

struct Solution {
    SolveStatus status = SolveStatus::iteration_limit;
    std::vector<double> col_value;
    std::vector<double> col_reduced_cost;
    std::vector<double> row_dual;
    double objective = 0.0;
    std::int64_t iterations = 0;
    double solve_seconds = 0.0;
};

class SimplexSolver {
public:
    SimplexSolver(const LPModel& model, const SolveOptions& opts) : model_(model), opts_(opts) {
        if (!model.frozen) throw Error("solve requires a frozen model");
    }

    Solution run() {
        const auto t0 = std::chrono::steady_clock::now();
        setup();
        Solution sol;
        sol.status = iterate();
        extract(sol);
        sol.iterations = iterations_;
        sol.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return sol;
    }

private:
    enum VStat : char { kBasic, kAtLower, kAtUpper, kFree };

    const LPModel& model_;
    SolveOptions opts_;

    int m_ = 0, n_ = 0, ntot_ = 0;
    std::vector<std::int64_t> Ap_;
    std::vector<int> Ai_;
    std::vector<double> Ax_;                 // scaled structural matrix
    std::vector<std::int64_t> Rp_;           // row-major mirror for pivot-row passes
    std::vector<int> Rj_;
    std::vector<double> Rx_;
    std::vector<double> cost_, lo_, up_;     // scaled, logicals included
    std::vector<double> rhs_;                // scaled
    std::vector<double> row_scale_, col_scale_;

    std::vector<int> basic_;                 // slot -> column
    std::vector<VStat> vstat_;
    std::vector<double> xval_;               // every column's current value

    BasisLU lu_;
    struct Eta {
        int slot;
        double pivot;
        std::vector<std::pair<int, double>> entries;   // (slot, w) excluding the pivot slot
    };
    std::vector<Eta> etas_;
    std::size_t eta_nnz_ = 0;
    double replay_work_ = 0.0, factor_work_ = 0.0;

    std::vector<double> work_rows_;          // dense scratch, original-row indexed
    std::vector<double> work_slots_;         // FTRAN result, slot indexed
    std::vector<int> w_list_;                // nonzero slots of work_slots_
    std::vector<std::uint32_t> w_mark_;
    std::uint32_t w_stamp_ = 0;
    std::vector<double> pi_;
    std::vector<double> dual_obj_c_;
    std::vector<double> btran_tmp_;

    std::vector<double> dvec_;               // maintained reduced costs (phase 2)
    std::vector<double> devex_w_;            // Devex reference weights
    std::vector<double> rho_;                // pivot-row BTRAN scratch
    std::vector<int> rho_list_;
    std::vector<double> sparse_c_;           // maintained-zero rhs for sparse BTRANs
    std::vector<int> sc_list_;
    std::vector<double> alpha_row_;          // pivot row over all columns
    std::vector<std::uint32_t> alpha_mark_;
    std::uint32_t alpha_stamp_ = 0;
    std::vector<int> alpha_list_;
    bool have_d_ = false;

    double rho_size_sum_ = 0.0, rho_size_count_ = 0.0, w_size_sum_ = 0.0;
    int violated_count_ = 0;                 // basics outside their box
    std::int64_t iterations_ = 0;
    std::int64_t stall_ = 0;
    bool bland_ = false;
    bool clean_ = false;                     // fresh factorization, no pivots since
    double last_measure_ = kInf;

    // ---- setup -----------------------------------------------------------

    static double pow2_round(double s) {
        if (!(s > 0) || !std::isfinite(s)) return 1.0;
        return std::ldexp(1.0, static_cast<int>(std::lround(std::log2(s))));
    }

    void setup() {
        m_ = model_.n_rows;
        n_ = model_.n_cols;
        ntot_ = n_ + m_;
        Ap_ = model_.col_start;
        Ai_ = model_.row_index;
        Ax_ = model_.value;
        rhs_ = model_.rhs;

        row_scale_.assign(static_cast<size_t>(m_), 1.0);
        col_scale_.assign(static_cast<size_t>(n_), 1.0);
        if (opts_.equilibrate && m_ > 0 && n_ > 0) equilibrate();

        cost_.assign(static_cast<size_t>(ntot_), 0.0);
        lo_.assign(static_cast<size_t>(ntot_), 0.0);
        up_.assign(static_cast<size_t>(ntot_), 0.0);
        for (int j = 0; j < n_; ++j) {
            cost_[static_cast<size_t>(j)] = model_.obj[static_cast<size_t>(j)] * col_scale_[static_cast<size_t>(j)];
            double l = model_.col_lower[static_cast<size_t>(j)];
            double u = model_.col_upper[static_cast<size_t>(j)];
            lo_[static_cast<size_t>(j)] = l == -kInf ? -kInf : l / col_scale_[static_cast<size_t>(j)];
            up_[static_cast<size_t>(j)] = u == kInf ? kInf : u / col_scale_[static_cast<size_t>(j)];
        }
        for (int r = 0; r < m_; ++r) {
            const int j = n_ + r;
            switch (model_.sense[static_cast<size_t>(r)]) {
                case RowSense::LE: lo_[static_cast<size_t>(j)] = 0.0; up_[static_cast<size_t>(j)] = kInf; break;
                case RowSense::GE: lo_[static_cast<size_t>(j)] = -kInf; up_[static_cast<size_t>(j)] = 0.0; break;
                case RowSense::EQ: lo_[static_cast<size_t>(j)] = 0.0; up_[static_cast<size_t>(j)] = 0.0; break;
            }
        }

        vstat_.assign(static_cast<size_t>(ntot_), kAtLower);
        xval_.assign(static_cast<size_t>(ntot_), 0.0);
        for (int j = 0; j < n_; ++j) {
            if (lo_[static_cast<size_t>(j)] != -kInf) {
                vstat_[static_cast<size_t>(j)] = kAtLower;
                xval_[static_cast<size_t>(j)] = lo_[static_cast<size_t>(j)];
            } else if (up_[static_cast<size_t>(j)] != kInf) {
                vstat_[static_cast<size_t>(j)] = kAtUpper;
                xval_[static_cast<size_t>(j)] = up_[static_cast<size_t>(j)];
            } else {
                vstat_[static_cast<size_t>(j)] = kFree;
                xval_[static_cast<size_t>(j)] = 0.0;
            }
        }
        basic_.resize(static_cast<size_t>(m_));
        for (int r = 0; r < m_; ++r) {
            basic_[static_cast<size_t>(r)] = n_ + r;
            vstat_[static_cast<size_t>(n_) + r] = kBasic;
        }
        crash_unit_columns();

        work_rows_.assign(static_cast<size_t>(m_), 0.0);
        work_slots_.assign(static_cast<size_t>(m_), 0.0);
        w_mark_.assign(static_cast<size_t>(m_), 0);
        pi_.assign(static_cast<size_t>(m_), 0.0);
        dual_obj_c_.assign(static_cast<size_t>(m_), 0.0);
        btran_tmp_.assign(static_cast<size_t>(m_), 0.0);
        dvec_.assign(static_cast<size_t>(ntot_), 0.0);
        devex_w_.assign(static_cast<size_t>(ntot_), 1.0);
        rho_.assign(static_cast<size_t>(m_), 0.0);
        sparse_c_.assign(static_cast<size_t>(m_), 0.0);
        alpha_row_.assign(static_cast<size_t>(ntot_), 0.0);
        alpha_mark_.assign(static_cast<size_t>(ntot_), 0);

        // row-major mirror of the scaled matrix
        Rp_.assign(static_cast<size_t>(m_) + 1, 0);
        for (size_t p = 0; p < Ai_.size(); ++p) ++Rp_[static_cast<size_t>(Ai_[p]) + 1];
        for (int r = 0; r < m_; ++r) Rp_[static_cast<size_t>(r) + 1] += Rp_[static_cast<size_t>(r)];
        Rj_.assign(Ai_.size(), 0);
        Rx_.assign(Ai_.size(), 0.0);
        {
            std::vector<std::int64_t> cursor(Rp_.begin(), Rp_.end() - 1);
            for (int j = 0; j < n_; ++j)
                for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p) {
                    const std::int64_t dst = cursor[static_cast<size_t>(Ai_[static_cast<size_t>(p)])]++;
                    Rj_[static_cast<size_t>(dst)] = j;
                    Rx_[static_cast<size_t>(dst)] = Ax_[static_cast<size_t>(p)];
                }
        }

        refactor();
    }

    /// Seat nonnegative singleton columns (load shedding and the like) in
    /// their equality rows: the basis stays trivially factorable and the
    /// right-hand side lands on a variable that may legally carry it.
    void crash_unit_columns() {
        std::vector<int> candidate(static_cast<size_t>(m_), -1);
        for (int j = 0; j < n_; ++j) {
            if (Ap_[static_cast<size_t>(j) + 1] - Ap_[static_cast<size_t>(j)] != 1) continue;
            if (lo_[static_cast<size_t>(j)] != 0.0 || up_[static_cast<size_t>(j)] != kInf) continue;
            const std::int64_t p = Ap_[static_cast<size_t>(j)];
            if (Ax_[static_cast<size_t>(p)] <= 0.0) continue;
            const int r = Ai_[static_cast<size_t>(p)];
            if (model_.sense[static_cast<size_t>(r)] != RowSense::EQ) continue;
            if (rhs_[static_cast<size_t>(r)] < 0.0) continue;
            int& cand = candidate[static_cast<size_t>(r)];
            if (cand < 0 || cost_[static_cast<size_t>(j)] < cost_[static_cast<size_t>(cand)]) cand = j;
        }
        for (int r = 0; r < m_; ++r) {
            const int j = candidate[static_cast<size_t>(r)];
            if (j < 0) continue;
            const int logical = n_ + r;
            basic_[static_cast<size_t>(r)] = j;
            vstat_[static_cast<size_t>(j)] = kBasic;
            vstat_[static_cast<size_t>(logical)] = kAtLower;
            xval_[static_cast<size_t>(logical)] = 0.0;
        }
    }

    void equilibrate() {
        auto scaled = [&](std::int64_t p, int j) {
            return model_.value[static_cast<size_t>(p)] *
                   row_scale_[static_cast<size_t>(Ai_[static_cast<size_t>(p)])] *
                   col_scale_[static_cast<size_t>(j)];
        };
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<double> rmax(static_cast<size_t>(m_), 0.0), rmin(static_cast<size_t>(m_), kInf);
            for (int j = 0; j < n_; ++j)
                for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p) {
                    const double a = std::abs(scaled(p, j));
                    if (a == 0.0) continue;
                    auto r = static_cast<size_t>(Ai_[static_cast<size_t>(p)]);
                    rmax[r] = std::max(rmax[r], a);
                    rmin[r] = std::min(rmin[r], a);
                }
            for (int r = 0; r < m_; ++r) {
                if (rmax[static_cast<size_t>(r)] == 0.0) continue;
                row_scale_[static_cast<size_t>(r)] *=
                    pow2_round(1.0 / std::sqrt(rmax[static_cast<size_t>(r)] * rmin[static_cast<size_t>(r)]));
            }
            for (int j = 0; j < n_; ++j) {
                double cmax = 0.0, cmin = kInf;
                for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p) {
                    const double a = std::abs(scaled(p, j));
                    if (a == 0.0) continue;
                    cmax = std::max(cmax, a);
                    cmin = std::min(cmin, a);
                }
                if (cmax == 0.0) continue;
                col_scale_[static_cast<size_t>(j)] *= pow2_round(1.0 / std::sqrt(cmax * cmin));
            }
        }
        for (int j = 0; j < n_; ++j)
            for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p)
                Ax_[static_cast<size_t>(p)] = scaled(p, j);
        for (int r = 0; r < m_; ++r) rhs_[static_cast<size_t>(r)] *= row_scale_[static_cast<size_t>(r)];
    }

    // ---- linear algebra ---------------------------------------------------

    void refactor() {
        auto col_of = [&](int slot) {
            const int j = basic_[static_cast<size_t>(slot)];
            if (j >= n_) {
                unit_row_[0] = j - n_;
                unit_val_[0] = 1.0;
                return BasisColumn{unit_row_, unit_val_, 1};
            }
            return BasisColumn{Ai_.data() + Ap_[static_cast<size_t>(j)], Ax_.data() + Ap_[static_cast<size_t>(j)],
                               static_cast<int>(Ap_[static_cast<size_t>(j) + 1] - Ap_[static_cast<size_t>(j)])};
        };
        int failed = -1;
        while (!lu_.factor(m_, col_of, &failed)) {
            if (opts_.log_every > 0)
                std::fprintf(stderr, "  [refactor] singular basis at slot %d, repairing\n", failed);
            repair_basis(failed);
            failed = -1;
        }
        etas_.clear();
        eta_nnz_ = 0;
        replay_work_ = 0.0;
        // factor cost proxy: structural work of the factorization itself
        factor_work_ = 6.0 * static_cast<double>(lu_.factor_nnz());
        recompute_basics();
        clean_ = true;
        have_d_ = false;
    }

    /// Singular basis: seat the logical of an uncovered row in place of the
    /// slot the factorization rejected (or of some structural slot).
    void repair_basis(int failed_slot) {
        std::vector<char> row_covered(static_cast<size_t>(m_), 0);
        for (int slot = 0; slot < m_; ++slot) {
            const int j = basic_[static_cast<size_t>(slot)];
            if (j >= n_) row_covered[static_cast<size_t>(j - n_)] = 1;
        }
        int victim = failed_slot;
        if (victim < 0 || basic_[static_cast<size_t>(victim)] >= n_) {
            victim = -1;
            for (int slot = 0; slot < m_; ++slot)
                if (basic_[static_cast<size_t>(slot)] < n_) { victim = slot; break; }
        }
        int free_row = -1;
        for (int r = 0; r < m_; ++r)
            if (!row_covered[static_cast<size_t>(r)]) { free_row = r; break; }
        if (victim < 0 || free_row < 0) throw Error("basis repair failed");
        const int out = basic_[static_cast<size_t>(victim)];
        if (lo_[static_cast<size_t>(out)] != -kInf) {
            vstat_[static_cast<size_t>(out)] = kAtLower;
            xval_[static_cast<size_t>(out)] = lo_[static_cast<size_t>(out)];
        } else if (up_[static_cast<size_t>(out)] != kInf) {
            vstat_[static_cast<size_t>(out)] = kAtUpper;
            xval_[static_cast<size_t>(out)] = up_[static_cast<size_t>(out)];
        } else {
            vstat_[static_cast<size_t>(out)] = kFree;
            xval_[static_cast<size_t>(out)] = 0.0;
        }
        basic_[static_cast<size_t>(victim)] = n_ + free_row;
        vstat_[static_cast<size_t>(n_) + free_row] = kBasic;
    }

    /// xB = B^{-1} (b - N xN); refreshes xval_ and the violation census.
    void recompute_basics() {
        for (int r = 0; r < m_; ++r) work_rows_[static_cast<size_t>(r)] = rhs_[static_cast<size_t>(r)];
        for (int j = 0; j < ntot_; ++j) {
            if (vstat_[static_cast<size_t>(j)] == kBasic) continue;
            const double v = xval_[static_cast<size_t>(j)];
            if (v == 0.0) continue;
            if (j >= n_) {
                work_rows_[static_cast<size_t>(j - n_)] -= v;
            } else {
                for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p)
                    work_rows_[static_cast<size_t>(Ai_[static_cast<size_t>(p)])] -= Ax_[static_cast<size_t>(p)] * v;
            }
        }
        lu_.ftran(work_rows_, work_slots_);
        apply_etas_dense(work_slots_);
        violated_count_ = 0;
        for (int slot = 0; slot < m_; ++slot) {
            xval_[static_cast<size_t>(basic_[static_cast<size_t>(slot)])] = work_slots_[static_cast<size_t>(slot)];
            if (violation_state(basic_[static_cast<size_t>(slot)]) != 0) ++violated_count_;
            work_slots_[static_cast<size_t>(slot)] = 0.0;
        }
    }

    void apply_etas_dense(std::vector<double>& x) const {
        for (const Eta& e : etas_) {
            const double t = x[static_cast<size_t>(e.slot)] / e.pivot;
            if (t != 0.0)
                for (auto& [slot, w] : e.entries) x[static_cast<size_t>(slot)] -= w * t;
            x[static_cast<size_t>(e.slot)] = t;
        }
    }

    void apply_etas_transposed(std::vector<double>& c) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            double v = c[static_cast<size_t>(it->slot)];
            for (auto& [slot, w] : it->entries) v -= w * c[static_cast<size_t>(slot)];
            c[static_cast<size_t>(it->slot)] = v / it->pivot;
        }
    }

    /// w = B^{-1} A_j, sparse result in work_slots_ with support in w_list_.
    void ftran_column(int j) {
        ++w_stamp_;
        w_list_.clear();
        const int* pattern;
        int pattern_n;
        if (j >= n_) {
            unit_row_[0] = j - n_;
            work_rows_[static_cast<size_t>(j - n_)] = 1.0;
            pattern = unit_row_;
            pattern_n = 1;
        } else {
            for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p)
                work_rows_[static_cast<size_t>(Ai_[static_cast<size_t>(p)])] = Ax_[static_cast<size_t>(p)];
            pattern = Ai_.data() + Ap_[static_cast<size_t>(j)];
            pattern_n = static_cast<int>(Ap_[static_cast<size_t>(j) + 1] - Ap_[static_cast<size_t>(j)]);
        }
        lu_.ftran_sparse(pattern, pattern_n, work_rows_, work_slots_, w_list_);
        for (int slot : w_list_) w_mark_[static_cast<size_t>(slot)] = w_stamp_;
        // product-form updates on the sparse support
        for (const Eta& e : etas_) {
            if (w_mark_[static_cast<size_t>(e.slot)] != w_stamp_) continue;
            const double t = work_slots_[static_cast<size_t>(e.slot)] / e.pivot;
            work_slots_[static_cast<size_t>(e.slot)] = t;
            if (t == 0.0) continue;
            for (auto& [slot, w] : e.entries) {
                if (w_mark_[static_cast<size_t>(slot)] != w_stamp_) {
                    w_mark_[static_cast<size_t>(slot)] = w_stamp_;
                    w_list_.push_back(slot);
                    work_slots_[static_cast<size_t>(slot)] = 0.0;
                }
                work_slots_[static_cast<size_t>(slot)] -= w * t;
            }
        }
    }

    void clear_w() {
        for (int slot : w_list_) work_slots_[static_cast<size_t>(slot)] = 0.0;
        w_list_.clear();
    }

    /// pi = B^{-T} c_slot (dense).
    void btran(std::vector<double>& c_slot) {
        apply_etas_transposed(c_slot);
        lu_.btran(c_slot, pi_, btran_tmp_);
    }

    double dual_of_column(int j) const {
        if (j >= n_) return pi_[static_cast<size_t>(j - n_)];
        double s = 0.0;
        for (std::int64_t p = Ap_[static_cast<size_t>(j)]; p < Ap_[static_cast<size_t>(j) + 1]; ++p)
            s += Ax_[static_cast<size_t>(p)] * pi_[static_cast<size_t>(Ai_[static_cast<size_t>(p)])];
        return s;
    }

    // ---- feasibility bookkeeping -------------------------------------------

    double bound_tol(int j) const {
        const double l = lo_[static_cast<size_t>(j)], u = up_[static_cast<size_t>(j)];
        double mag = std::abs(xval_[static_cast<size_t>(j)]);
        if (l != -kInf) mag = std::max(mag, std::abs(l));
        if (u != kInf) mag = std::max(mag, std::abs(u));
        return opts_.tol_feasibility * (1.0 + mag);
    }

    /// +1 below lower, -1 above upper, 0 within tolerance of the box.
    /// One order looser than the pricing tolerance so terminal rounding
    /// residue cannot deadlock the phase switch.
    int violation_state(int j) const {
        const double v = xval_[static_cast<size_t>(j)];
        const double l = lo_[static_cast<size_t>(j)], u = up_[static_cast<size_t>(j)];
        const double tol = 10.0 * bound_tol(j);
        if (l != -kInf && v < l - tol) return +1;
        if (u != kInf && v > u + tol) return -1;
        return 0;
    }

    double total_infeasibility() const {
        double sum = 0.0;
        for (int slot = 0; slot < m_; ++slot) {
            const int j = basic_[static_cast<size_t>(slot)];
            const int state = violation_state(j);
            if (state > 0) sum += lo_[static_cast<size_t>(j)] - xval_[static_cast<size_t>(j)];
            else if (state < 0) sum += xval_[static_cast<size_t>(j)] - up_[static_cast<size_t>(j)];
        }
        return sum;
    }

    // ---- main loop -----------------------------------------------------------

    SolveStatus iterate() {
        const std::int64_t max_iter =
            opts_.max_iterations > 0 ? opts_.max_iterations
                                     : 400000 + 60LL * (static_cast<std::int64_t>(m_) + n_);
        const std::int64_t bland_trigger = 10LL * (static_cast<std::int64_t>(m_) + n_);
        int pivots_since_refactor = 0;
        int numeric_retries = 0;

        while (true) {
            if (iterations_ >= max_iter) return SolveStatus::iteration_limit;
            const bool phase1 = violated_count_ > 0;

            if ((iterations_ & 31) == 0) {
                const double measure = phase1 ? total_infeasibility() : objective_scaled();
                if (measure < last_measure_ - 1e-11 * (1.0 + std::abs(last_measure_))) stall_ = 0;
                else stall_ += 32;
                last_measure_ = measure;
                if (!bland_ && stall_ > bland_trigger) bland_ = true;
            }
            if (opts_.log_every > 0 && iterations_ % opts_.log_every == 0)
                std::fprintf(stderr, "iter %lld viol %d obj %.6e etas %zu lu %lld rho %.0f w %.0f\n",
                             static_cast<long long>(iterations_), violated_count_, objective_scaled(),
                             etas_.size(), static_cast<long long>(lu_.factor_nnz()),
                             rho_size_sum_ / std::max(1.0, rho_size_count_),
                             w_size_sum_ / std::max(1.0, rho_size_count_));

            // reduced costs: recomputed from duals in phase 1 (it is short),
            // maintained incrementally with the pivot row in phase 2
            if (phase1) {
                for (int slot = 0; slot < m_; ++slot) {
                    const int state = violation_state(basic_[static_cast<size_t>(slot)]);
                    dual_obj_c_[static_cast<size_t>(slot)] = state > 0 ? -1.0 : (state < 0 ? 1.0 : 0.0);
                }
                btran(dual_obj_c_);
                for (int j = 0; j < ntot_; ++j)
                    dvec_[static_cast<size_t>(j)] =
                        vstat_[static_cast<size_t>(j)] == kBasic ? 0.0 : -dual_of_column(j);
                have_d_ = false;
            } else if (!have_d_) {
                for (int slot = 0; slot < m_; ++slot)
                    dual_obj_c_[static_cast<size_t>(slot)] = cost_[static_cast<size_t>(basic_[static_cast<size_t>(slot)])];
                btran(dual_obj_c_);
                for (int j = 0; j < ntot_; ++j)
                    dvec_[static_cast<size_t>(j)] = vstat_[static_cast<size_t>(j)] == kBasic
                                                        ? 0.0
                                                        : cost_[static_cast<size_t>(j)] - dual_of_column(j);
                have_d_ = true;
            }

            // pricing
            const bool use_devex = opts_.pricing == Pricing::devex && !phase1;
            int enter = -1, dir = 0;
            double best = 0.0;
            for (int j = 0; j < ntot_; ++j) {
                const VStat st = vstat_[static_cast<size_t>(j)];
                if (st == kBasic) continue;
                if (lo_[static_cast<size_t>(j)] == up_[static_cast<size_t>(j)] && st != kFree) continue;   // fixed
                const double c = phase1 ? 0.0 : cost_[static_cast<size_t>(j)];
                const double d = dvec_[static_cast<size_t>(j)];
                const double tol = opts_.tol_optimality * (1.0 + std::abs(c));
                double score = 0.0;
                int cand_dir = 0;
                if (st == kAtLower && d < -tol) {
                    score = -d;
                    cand_dir = +1;
                } else if (st == kAtUpper && d > tol) {
                    score = d;
                    cand_dir = -1;
                } else if (st == kFree && std::abs(d) > tol) {
                    score = std::abs(d);
                    cand_dir = d < 0 ? +1 : -1;
                } else {
                    continue;
                }
                if (bland_) { enter = j; dir = cand_dir; break; }
                if (use_devex) score = score * score / devex_w_[static_cast<size_t>(j)];
                if (score > best) {
                    best = score;
                    enter = j;
                    dir = cand_dir;
                }
            }

            if (enter < 0) {
                if (!clean_) { refactor(); continue; }   // confirm on a fresh basis
                return phase1 ? SolveStatus::infeasible : SolveStatus::optimal;
            }

            ftran_column(enter);

            // ratio test over the sparse support of w
            int leave_slot = -1;
            double theta = kInf;
            double leave_abs_w = 0.0;
            bool leave_at_upper = false;
            const double entering_range =
                (lo_[static_cast<size_t>(enter)] != -kInf && up_[static_cast<size_t>(enter)] != kInf)
                    ? up_[static_cast<size_t>(enter)] - lo_[static_cast<size_t>(enter)]
                    : kInf;

            for (int slot : w_list_) {
                const double w = work_slots_[static_cast<size_t>(slot)];
                if (std::abs(w) <= opts_.tol_ratio_entry) continue;
                const double dw = dir * w;
                const int jb = basic_[static_cast<size_t>(slot)];
                const double v = xval_[static_cast<size_t>(jb)];
                const double l = lo_[static_cast<size_t>(jb)], u = up_[static_cast<size_t>(jb)];
                const int state = phase1 ? violation_state(jb) : 0;

                double t = kInf;
                bool at_upper = false;
                if (state > 0) {
                    // below lower: blocks at the lower bound only when rising
                    if (dw < 0) { t = (v - l) / dw; at_upper = false; }
                } else if (state < 0) {
                    if (dw > 0) { t = (v - u) / dw; at_upper = true; }
                } else {
                    if (dw > 0 && l != -kInf) { t = (v - l) / dw; at_upper = false; }
                    else if (dw < 0 && u != kInf) { t = (v - u) / dw; at_upper = true; }
                }
                if (t == kInf) continue;
                if (t < 0) t = 0;

                const double band = 1e-9 * (1.0 + theta);
                bool better;
                if (bland_) {
                    better = t < theta - band ||
                             (t <= theta + band && leave_slot >= 0 &&
                              jb < basic_[static_cast<size_t>(leave_slot)]);
                } else {
                    better = t < theta - band || (t <= theta + band && std::abs(w) > leave_abs_w);
                }
                if (leave_slot < 0 || better) {
                    leave_slot = slot;
                    theta = t;
                    leave_abs_w = std::abs(w);
                    leave_at_upper = at_upper;
                }
            }

            const bool bound_flip = entering_range < theta;
            if (leave_slot < 0 && !bound_flip) {
                if (!phase1) {
                    if (!clean_) { clear_w(); refactor(); continue; }
                    return SolveStatus::unbounded;
                }
                // phase 1 is bounded below; a missing blocker is numerical noise
                if (++numeric_retries > 3) return SolveStatus::iteration_limit;
                clear_w();
                refactor();
                continue;
            }

            ++iterations_;
            clean_ = false;

            if (bound_flip) {
                update_basics(dir, entering_range);
                vstat_[static_cast<size_t>(enter)] = dir > 0 ? kAtUpper : kAtLower;
                xval_[static_cast<size_t>(enter)] =
                    dir > 0 ? up_[static_cast<size_t>(enter)] : lo_[static_cast<size_t>(enter)];
                clear_w();
                continue;
            }

            const double pivot_w = work_slots_[static_cast<size_t>(leave_slot)];
            if (std::abs(pivot_w) < opts_.tol_pivot) {
                if (++numeric_retries > 5) return SolveStatus::iteration_limit;
                clear_w();
                refactor();
                continue;
            }
            numeric_retries = 0;

            update_basics(dir, theta);

            const int leave_col = basic_[static_cast<size_t>(leave_slot)];
            if (violation_state(leave_col) != 0) --violated_count_;
            vstat_[static_cast<size_t>(leave_col)] = leave_at_upper ? kAtUpper : kAtLower;
            xval_[static_cast<size_t>(leave_col)] = leave_at_upper ? up_[static_cast<size_t>(leave_col)]
                                                                   : lo_[static_cast<size_t>(leave_col)];

            xval_[static_cast<size_t>(enter)] += dir * theta;
            vstat_[static_cast<size_t>(enter)] = kBasic;
            basic_[static_cast<size_t>(leave_slot)] = enter;
            if (violation_state(enter) != 0) ++violated_count_;

            // maintain reduced costs and Devex weights with the pivot row
            if (!phase1 && have_d_) update_duals_and_weights(enter, leave_col, leave_slot, pivot_w);

            // record the eta for subsequent solves
            Eta eta;
            eta.slot = leave_slot;
            eta.pivot = pivot_w;
            eta.entries.reserve(w_list_.size());
            for (int slot : w_list_) {
                const double w = work_slots_[static_cast<size_t>(slot)];
                if (w != 0.0 && slot != leave_slot) eta.entries.push_back({slot, w});
            }
            eta_nnz_ += eta.entries.size() + 1;
            etas_.push_back(std::move(eta));
            clear_w();

            // amortized cadence: refactor when the accumulated eta-replay work
            // since the last factorization matches the factorization cost
            replay_work_ += static_cast<double>(eta_nnz_);
            if (++pivots_since_refactor >= opts_.refactor_interval ||
                replay_work_ > factor_work_) {
                pivots_since_refactor = 0;
                refactor();
            }
        }
    }

    /// Pivot-row maintenance of reduced costs (d_j -= beta * alpha_j) and the
    /// Devex reference weights. rho = B^{-T} e_r uses the pre-pivot basis, so
    /// this runs before the eta for this pivot is appended.
    /// Transposed product-form pass on a sparse vector, support maintained.
    void apply_etas_transposed_sparse(std::vector<double>& c, std::vector<int>& list) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            double dot = 0.0;
            for (auto& [slot, w] : it->entries) dot += w * c[static_cast<size_t>(slot)];
            const double prev = c[static_cast<size_t>(it->slot)];
            if (prev == 0.0 && dot == 0.0) continue;
            if (prev == 0.0) list.push_back(it->slot);
            c[static_cast<size_t>(it->slot)] = (prev - dot) / it->pivot;
        }
    }

    void update_duals_and_weights(int enter, int leave_col, int leave_slot, double pivot_w) {
        sc_list_.clear();
        sparse_c_[static_cast<size_t>(leave_slot)] = 1.0;
        sc_list_.push_back(leave_slot);
        apply_etas_transposed_sparse(sparse_c_, sc_list_);
        rho_list_.clear();
        lu_.btran_sparse(sparse_c_, sc_list_, rho_, rho_list_);
        rho_size_sum_ += static_cast<double>(rho_list_.size());
        w_size_sum_ += static_cast<double>(w_list_.size());
        rho_size_count_ += 1.0;

        const double beta = dvec_[static_cast<size_t>(enter)] / pivot_w;
        const double w_ref = std::max(devex_w_[static_cast<size_t>(enter)] / (pivot_w * pivot_w), 1.0);

        // alpha_row = rho' [A | I] accumulated over the nonzero rows of rho
        ++alpha_stamp_;
        alpha_list_.clear();
        auto touch = [&](int j, double v) {
            if (alpha_mark_[static_cast<size_t>(j)] != alpha_stamp_) {
                alpha_mark_[static_cast<size_t>(j)] = alpha_stamp_;
                alpha_row_[static_cast<size_t>(j)] = 0.0;
                alpha_list_.push_back(j);
            }
            alpha_row_[static_cast<size_t>(j)] += v;
        };
        for (int r : rho_list_) {
            const double rr = rho_[static_cast<size_t>(r)];
            rho_[static_cast<size_t>(r)] = 0.0;
            if (rr == 0.0) continue;
            touch(n_ + r, rr);
            for (std::int64_t p = Rp_[static_cast<size_t>(r)]; p < Rp_[static_cast<size_t>(r) + 1]; ++p)
                touch(Rj_[static_cast<size_t>(p)], rr * Rx_[static_cast<size_t>(p)]);
        }

        double wmax = 1.0;
        for (int j : alpha_list_) {
            if (vstat_[static_cast<size_t>(j)] == kBasic) continue;
            if (lo_[static_cast<size_t>(j)] == up_[static_cast<size_t>(j)]) continue;   // fixed: never priced
            const double alpha = alpha_row_[static_cast<size_t>(j)];
            if (alpha == 0.0) continue;
            dvec_[static_cast<size_t>(j)] -= beta * alpha;
            double& w = devex_w_[static_cast<size_t>(j)];
            const double cand = alpha * alpha * w_ref;
            if (cand > w) w = cand;
            if (w > wmax) wmax = w;
        }
        dvec_[static_cast<size_t>(enter)] = 0.0;
        dvec_[static_cast<size_t>(leave_col)] = -beta;   // alpha of the leaving column is 1
        devex_w_[static_cast<size_t>(leave_col)] = w_ref;
        if (wmax > 1e10) devex_w_.assign(static_cast<size_t>(ntot_), 1.0);   // framework reset
    }

    /// xB -= dir * w * t on the sparse support, maintaining the violation census.
    void update_basics(int dir, double t) {
        if (t == 0.0) return;
        for (int slot : w_list_) {
            const double w = work_slots_[static_cast<size_t>(slot)];
            if (w == 0.0) continue;
            const int jb = basic_[static_cast<size_t>(slot)];
            const int before = violation_state(jb);
            xval_[static_cast<size_t>(jb)] -= dir * w * t;
            const int after = violation_state(jb);
            violated_count_ += (after != 0) - (before != 0);
        }
    }

    double objective_scaled() const {
        double s = 0.0;
        for (int j = 0; j < ntot_; ++j) s += cost_[static_cast<size_t>(j)] * xval_[static_cast<size_t>(j)];
        return s;
    }

    // ---- extraction ----------------------------------------------------------

    void extract(Solution& sol) {
        sol.col_value.assign(static_cast<size_t>(n_), 0.0);
        sol.col_reduced_cost.assign(static_cast<size_t>(n_), 0.0);
        sol.row_dual.assign(static_cast<size_t>(m_), 0.0);

        for (int j = 0; j < n_; ++j) {
            double v = xval_[static_cast<size_t>(j)];
            // snap rounding-level bound violations onto the bound
            const double l = lo_[static_cast<size_t>(j)], u = up_[static_cast<size_t>(j)];
            const double tol = 100.0 * bound_tol(j);
            if (l != -kInf && v < l && v > l - tol) v = l;
            if (u != kInf && v > u && v < u + tol) v = u;
            sol.col_value[static_cast<size_t>(j)] = v * col_scale_[static_cast<size_t>(j)];
        }

        // final duals from the real cost vector
        for (int slot = 0; slot < m_; ++slot)
            dual_obj_c_[static_cast<size_t>(slot)] = cost_[static_cast<size_t>(basic_[static_cast<size_t>(slot)])];
        btran(dual_obj_c_);
        for (int r = 0; r < m_; ++r)
            sol.row_dual[static_cast<size_t>(r)] = pi_[static_cast<size_t>(r)] * row_scale_[static_cast<size_t>(r)];
        for (int j = 0; j < n_; ++j) {
            const double d = cost_[static_cast<size_t>(j)] - dual_of_column(j);
            sol.col_reduced_cost[static_cast<size_t>(j)] = d / col_scale_[static_cast<size_t>(j)];
        }

        double obj = 0.0;
        for (int j = 0; j < n_; ++j)
            obj += model_.obj[static_cast<size_t>(j)] * sol.col_value[static_cast<size_t>(j)];
        sol.objective = obj;
    }

    // scratch for logical basis columns
    int unit_row_[1] = {0};
    double unit_val_[1] = {1.0};
};

inline Solution solve(LPModel& model, const SolveOptions& opts = {}) {
    if (!model.frozen) model.freeze();
    if (model.n_cols == 0) {
        Solution sol;
        sol.status = SolveStatus::optimal;
        return sol;
    }
    return SimplexSolver(model, opts).run();
}

} // namespace expanse
