#pragma once

// Sparse LU factorization of a simplex basis (left-looking, partial pivoting
// by magnitude) plus the triangular solves the simplex loop needs. Row ids
// stay in original coordinates; pinv maps a row to its pivot position.

#include <algorithm>
#include <functional>
#include <cmath>
#include <cstdint>
#include <vector>

namespace expanse {

/// One basis column handed to the factorization.
struct BasisColumn {
    const int* rows = nullptr;
    const double* values = nullptr;
    int size = 0;
};

class BasisLU {
public:
    /// Factor the m x m matrix whose k-th column is provided by col_of(k).
    /// Returns false when a column goes structurally or numerically singular;
    /// `failed_slot` then names the offending basis slot.
    template <typename ColFn>
    bool factor(int m, ColFn&& col_of, int* failed_slot = nullptr) {
        m_ = m;
        Lp_.assign(1, 0);
        Li_.clear();
        Lx_.clear();
        Up_.assign(1, 0);
        Ui_.clear();
        Ux_.clear();
        urows_built_ = false;
        udiag_.assign(static_cast<size_t>(m), 0.0);
        pinv_.assign(static_cast<size_t>(m), -1);
        rowof_.assign(static_cast<size_t>(m), -1);
        slot_of_pos_.assign(static_cast<size_t>(m), -1);
        pos_of_slot_.assign(static_cast<size_t>(m), -1);
        work_.assign(static_cast<size_t>(m), 0.0);
        work2_.assign(static_cast<size_t>(m), 0.0);
        mark_.assign(static_cast<size_t>(m), 0);
        stamp_ = 0;
        topo_.resize(static_cast<size_t>(m));
        stack_.resize(static_cast<size_t>(m));
        head_.resize(static_cast<size_t>(m));

        // process row-local columns first and wide coupling columns last;
        // ties fall back to sparser-first, keeping unit columns trivial pivots
        std::vector<int> order(static_cast<size_t>(m));
        std::vector<std::int64_t> key(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            order[static_cast<size_t>(k)] = k;
            BasisColumn col = col_of(k);
            int lo = m, hi = 0;
            for (int t = 0; t < col.size; ++t) {
                lo = std::min(lo, col.rows[t]);
                hi = std::max(hi, col.rows[t]);
            }
            const std::int64_t span = col.size == 0 ? 0 : hi - lo;
            key[static_cast<size_t>(k)] = span * (m + 1LL) + col.size;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)]; });
        row_used_.assign(static_cast<size_t>(m), 0);

        for (int pos = 0; pos < m; ++pos) {
            const int slot = order[static_cast<size_t>(pos)];
            BasisColumn col = col_of(slot);

            // x = L^{-1} (current) applied to the column, pattern via DFS
            int ntop = reach(col.rows, col.size);
            for (int t = 0; t < col.size; ++t) work_[static_cast<size_t>(col.rows[t])] = col.values[t];
            for (int t = ntop; t < m_; ++t) {
                const int r = topo_[static_cast<size_t>(t)];
                const int k = pinv_[static_cast<size_t>(r)];
                if (k < 0) continue;
                const double xr = work_[static_cast<size_t>(r)];
                if (xr == 0.0) continue;
                for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                    work_[static_cast<size_t>(Li_[static_cast<size_t>(p)])] -= Lx_[static_cast<size_t>(p)] * xr;
            }

            // pivot: threshold partial pivoting, low-fill rows preferred among
            // the numerically acceptable candidates
            int pivot_row = -1;
            double pivot_mag = 0.0;
            double max_mag = 0.0;
            for (int t = ntop; t < m_; ++t) {
                const int r = topo_[static_cast<size_t>(t)];
                if (pinv_[static_cast<size_t>(r)] >= 0) continue;
                max_mag = std::max(max_mag, std::abs(work_[static_cast<size_t>(r)]));
            }
            for (int t = ntop; t < m_; ++t) {
                const int r = topo_[static_cast<size_t>(t)];
                if (pinv_[static_cast<size_t>(r)] >= 0) continue;
                const double mag = std::abs(work_[static_cast<size_t>(r)]);
                if (mag < 0.1 * max_mag || mag == 0.0) continue;
                const bool better =
                    pivot_row < 0 ||
                    row_used_[static_cast<size_t>(r)] < row_used_[static_cast<size_t>(pivot_row)] ||
                    (row_used_[static_cast<size_t>(r)] == row_used_[static_cast<size_t>(pivot_row)] &&
                     (mag > pivot_mag || (mag == pivot_mag && r < pivot_row)));
                if (better) {
                    pivot_mag = mag;
                    pivot_row = r;
                }
            }
            if (pivot_row < 0 || pivot_mag < 1e-11) {
                for (int t = ntop; t < m_; ++t) work_[static_cast<size_t>(topo_[static_cast<size_t>(t)])] = 0.0;
                if (failed_slot) *failed_slot = slot;
                return false;
            }
            const double pivot = work_[static_cast<size_t>(pivot_row)];

            for (int t = ntop; t < m_; ++t) {
                const int r = topo_[static_cast<size_t>(t)];
                const double v = work_[static_cast<size_t>(r)];
                work_[static_cast<size_t>(r)] = 0.0;
                if (v == 0.0 || r == pivot_row) continue;
                if (pinv_[static_cast<size_t>(r)] >= 0) {
                    Ui_.push_back(r);
                    Ux_.push_back(v);
                } else {
                    Li_.push_back(r);
                    Lx_.push_back(v / pivot);
                    ++row_used_[static_cast<size_t>(r)];
                }
            }
            udiag_[static_cast<size_t>(pos)] = pivot;
            pinv_[static_cast<size_t>(pivot_row)] = pos;
            rowof_[static_cast<size_t>(pos)] = pivot_row;
            slot_of_pos_[static_cast<size_t>(pos)] = slot;
            pos_of_slot_[static_cast<size_t>(slot)] = pos;
            Lp_.push_back(static_cast<std::int64_t>(Li_.size()));
            Up_.push_back(static_cast<std::int64_t>(Ui_.size()));
        }
        return true;
    }

    int size() const { return m_; }

    /// Row-major mirrors of the factor structure in position space, used by
    /// the sparse transpose solve. Built lazily after a factorization.
    void build_transpose_mirrors() {
        if (urows_built_) return;
        Urp_.assign(static_cast<size_t>(m_) + 1, 0);
        Lrp_.assign(static_cast<size_t>(m_) + 1, 0);
        for (int k = 0; k < m_; ++k) {
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                ++Urp_[static_cast<size_t>(pinv_[static_cast<size_t>(Ui_[static_cast<size_t>(p)])]) + 1];
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                ++Lrp_[static_cast<size_t>(pinv_[static_cast<size_t>(Li_[static_cast<size_t>(p)])]) + 1];
        }
        for (int k = 0; k < m_; ++k) {
            Urp_[static_cast<size_t>(k) + 1] += Urp_[static_cast<size_t>(k)];
            Lrp_[static_cast<size_t>(k) + 1] += Lrp_[static_cast<size_t>(k)];
        }
        Urk_.assign(Ui_.size(), 0);
        Lrk_.assign(Li_.size(), 0);
        std::vector<std::int64_t> uc(Urp_.begin(), Urp_.end() - 1), lc(Lrp_.begin(), Lrp_.end() - 1);
        for (int k = 0; k < m_; ++k) {
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                Urk_[static_cast<size_t>(uc[static_cast<size_t>(pinv_[static_cast<size_t>(Ui_[static_cast<size_t>(p)])])]++)] = k;
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                Lrk_[static_cast<size_t>(lc[static_cast<size_t>(pinv_[static_cast<size_t>(Li_[static_cast<size_t>(p)])])]++)] = k;
        }
        urows_built_ = true;
    }

    /// Sparse BTRAN: pi = B^{-T} c where c is nonzero only on the slots in
    /// c_list (values in c, slot indexed). Result scattered into pi (original
    /// rows) with the touched rows appended to pi_list; c is zeroed again.
    void btran_sparse(std::vector<double>& c, const std::vector<int>& c_list,
                      std::vector<double>& pi, std::vector<int>& pi_list) {
        build_transpose_mirrors();
        // U^T w = c: dependencies flow from smaller to larger positions
        upos_.clear();
        ++stamp_;
        for (int slot : c_list) {
            const int seed = pos_of_slot_[static_cast<size_t>(slot)];
            if (mark_[static_cast<size_t>(seed)] == stamp_) continue;
            int depth = 0;
            stack_[0] = seed;
            head_[0] = Urp_[static_cast<size_t>(seed)];
            mark_[static_cast<size_t>(seed)] = stamp_;
            while (depth >= 0) {
                const int k = stack_[static_cast<size_t>(depth)];
                bool descended = false;
                std::int64_t& p = head_[static_cast<size_t>(depth)];
                while (p < Urp_[static_cast<size_t>(k) + 1]) {
                    const int child = Urk_[static_cast<size_t>(p)];
                    ++p;
                    if (mark_[static_cast<size_t>(child)] != stamp_) {
                        mark_[static_cast<size_t>(child)] = stamp_;
                        ++depth;
                        stack_[static_cast<size_t>(depth)] = child;
                        head_[static_cast<size_t>(depth)] = Urp_[static_cast<size_t>(child)];
                        descended = true;
                        break;
                    }
                }
                if (!descended) {
                    upos_.push_back(k);
                    --depth;
                }
            }
        }
        std::sort(upos_.begin(), upos_.end());
        for (int k : upos_) {
            double v = c[static_cast<size_t>(slot_of_pos_[static_cast<size_t>(k)])];
            c[static_cast<size_t>(slot_of_pos_[static_cast<size_t>(k)])] = 0.0;
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                v -= Ux_[static_cast<size_t>(p)] * work_[static_cast<size_t>(pinv_[static_cast<size_t>(Ui_[static_cast<size_t>(p)])])];
            work_[static_cast<size_t>(k)] = v / udiag_[static_cast<size_t>(k)];
        }
        // L^T pi = w: dependencies flow from larger to smaller positions
        lpos_.clear();
        ++stamp_;
        for (int seed : upos_) {
            if (mark_[static_cast<size_t>(seed)] == stamp_) continue;
            int depth = 0;
            stack_[0] = seed;
            head_[0] = Lrp_[static_cast<size_t>(seed)];
            mark_[static_cast<size_t>(seed)] = stamp_;
            while (depth >= 0) {
                const int k = stack_[static_cast<size_t>(depth)];
                bool descended = false;
                std::int64_t& p = head_[static_cast<size_t>(depth)];
                while (p < Lrp_[static_cast<size_t>(k) + 1]) {
                    const int child = Lrk_[static_cast<size_t>(p)];
                    ++p;
                    if (mark_[static_cast<size_t>(child)] != stamp_) {
                        mark_[static_cast<size_t>(child)] = stamp_;
                        ++depth;
                        stack_[static_cast<size_t>(depth)] = child;
                        head_[static_cast<size_t>(depth)] = Lrp_[static_cast<size_t>(child)];
                        descended = true;
                        break;
                    }
                }
                if (!descended) {
                    lpos_.push_back(k);
                    --depth;
                }
            }
        }
        std::sort(lpos_.begin(), lpos_.end(), std::greater<int>());
        for (int k : lpos_) {
            double v = work_[static_cast<size_t>(k)];   // zero when the U stage left it untouched
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p) {
                const int dep = pinv_[static_cast<size_t>(Li_[static_cast<size_t>(p)])];
                v -= Lx_[static_cast<size_t>(p)] * work2_[static_cast<size_t>(dep)];
            }
            work2_[static_cast<size_t>(k)] = v;
        }
        for (int k : lpos_) {
            const double v = work2_[static_cast<size_t>(k)];
            work2_[static_cast<size_t>(k)] = 0.0;
            if (v != 0.0) {
                const int r = rowof_[static_cast<size_t>(k)];
                pi[static_cast<size_t>(r)] = v;
                pi_list.push_back(r);
            }
        }
        for (int k : upos_) work_[static_cast<size_t>(k)] = 0.0;
    }
    std::int64_t factor_nnz() const {
        return static_cast<std::int64_t>(Li_.size() + Ui_.size()) + m_;
    }

    /// x := B^{ -1 } x, dense in/out indexed by original row; the result is
    /// written back in basis-slot indexing via out[slot].
    void ftran(std::vector<double>& x, std::vector<double>& out) const {
        // forward: L y = x (unit diagonal), skipping zero pivot values
        for (int k = 0; k < m_; ++k) {
            const double v = x[static_cast<size_t>(rowof_[static_cast<size_t>(k)])];
            if (v == 0.0) continue;
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                x[static_cast<size_t>(Li_[static_cast<size_t>(p)])] -= Lx_[static_cast<size_t>(p)] * v;
        }
        // backward: U z = y
        for (int k = m_ - 1; k >= 0; --k) {
            const int r = rowof_[static_cast<size_t>(k)];
            const double v = x[static_cast<size_t>(r)] / udiag_[static_cast<size_t>(k)];
            x[static_cast<size_t>(r)] = v;
            if (v == 0.0) continue;
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                x[static_cast<size_t>(Ui_[static_cast<size_t>(p)])] -= Ux_[static_cast<size_t>(p)] * v;
        }
        // scatter into slot indexing and clear the work vector
        for (int k = 0; k < m_; ++k) {
            const int r = rowof_[static_cast<size_t>(k)];
            out[static_cast<size_t>(slot_of_pos_[static_cast<size_t>(k)])] = x[static_cast<size_t>(r)];
            x[static_cast<size_t>(r)] = 0.0;
        }
    }

    /// Sparse FTRAN: x carries the scattered right-hand side on rhs_rows.
    /// On return out[slot] holds B^{-1} rhs on the slots listed in out_list
    /// and x is zeroed again on every touched row.
    void ftran_sparse(const int* rhs_rows, int rhs_n, std::vector<double>& x,
                      std::vector<double>& out, std::vector<int>& out_list) {
        const int ntop = reach(rhs_rows, rhs_n);
        // forward L pass in topological order
        for (int t = ntop; t < m_; ++t) {
            const int r = topo_[static_cast<size_t>(t)];
            const int k = pinv_[static_cast<size_t>(r)];
            if (k < 0) continue;
            const double xr = x[static_cast<size_t>(r)];
            if (xr == 0.0) continue;
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                x[static_cast<size_t>(Li_[static_cast<size_t>(p)])] -= Lx_[static_cast<size_t>(p)] * xr;
        }
        // closure of positions reached through U (children have smaller positions)
        upos_.clear();
        ++stamp_;
        for (int t = ntop; t < m_; ++t) {
            const int seed = pinv_[static_cast<size_t>(topo_[static_cast<size_t>(t)])];
            if (seed < 0 || mark_[static_cast<size_t>(seed)] == stamp_) continue;
            int depth = 0;
            stack_[0] = seed;
            head_[0] = Up_[static_cast<size_t>(seed)];
            mark_[static_cast<size_t>(seed)] = stamp_;
            while (depth >= 0) {
                const int k = stack_[static_cast<size_t>(depth)];
                bool descended = false;
                std::int64_t& p = head_[static_cast<size_t>(depth)];
                while (p < Up_[static_cast<size_t>(k) + 1]) {
                    const int child = pinv_[static_cast<size_t>(Ui_[static_cast<size_t>(p)])];
                    ++p;
                    if (mark_[static_cast<size_t>(child)] != stamp_) {
                        mark_[static_cast<size_t>(child)] = stamp_;
                        ++depth;
                        stack_[static_cast<size_t>(depth)] = child;
                        head_[static_cast<size_t>(depth)] = Up_[static_cast<size_t>(child)];
                        descended = true;
                        break;
                    }
                }
                if (!descended) {
                    upos_.push_back(k);
                    --depth;
                }
            }
        }
        std::sort(upos_.begin(), upos_.end(), std::greater<int>());
        for (int k : upos_) {
            const int r = rowof_[static_cast<size_t>(k)];
            const double v = x[static_cast<size_t>(r)] / udiag_[static_cast<size_t>(k)];
            x[static_cast<size_t>(r)] = 0.0;
            const int slot = slot_of_pos_[static_cast<size_t>(k)];
            out[static_cast<size_t>(slot)] = v;
            out_list.push_back(slot);
            if (v == 0.0) continue;
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                x[static_cast<size_t>(Ui_[static_cast<size_t>(p)])] -= Ux_[static_cast<size_t>(p)] * v;
        }
    }

    /// pi := B^{-T} c with c given per basis slot; pi indexed by original row.
    void btran(const std::vector<double>& c_slot, std::vector<double>& pi,
               std::vector<double>& tmp) const {
        // U^T w = c (forward over positions), w in position indexing
        for (int k = 0; k < m_; ++k) {
            double v = c_slot[static_cast<size_t>(slot_of_pos_[static_cast<size_t>(k)])];
            for (std::int64_t p = Up_[static_cast<size_t>(k)]; p < Up_[static_cast<size_t>(k) + 1]; ++p)
                v -= Ux_[static_cast<size_t>(p)] * tmp[static_cast<size_t>(pinv_[static_cast<size_t>(Ui_[static_cast<size_t>(p)])])];
            tmp[static_cast<size_t>(k)] = v / udiag_[static_cast<size_t>(k)];
        }
        // L^T pi = w (backward over positions), result scattered to rows
        for (int k = m_ - 1; k >= 0; --k) {
            double v = tmp[static_cast<size_t>(k)];
            for (std::int64_t p = Lp_[static_cast<size_t>(k)]; p < Lp_[static_cast<size_t>(k) + 1]; ++p)
                v -= Lx_[static_cast<size_t>(p)] * pi[static_cast<size_t>(Li_[static_cast<size_t>(p)])];
            pi[static_cast<size_t>(rowof_[static_cast<size_t>(k)])] = v;
        }
        for (int k = 0; k < m_; ++k) tmp[static_cast<size_t>(k)] = 0.0;
    }

private:
    /// Topological reach of the rhs pattern through L; returns the first used
    /// index into topo_ (entries topo_[ntop..m) are in dependency order).
    int reach(const int* rows, int n_rows) {
        ++stamp_;
        int top = m_;
        for (int t = 0; t < n_rows; ++t) {
            int r = rows[t];
            if (mark_[static_cast<size_t>(r)] == stamp_) continue;
            // iterative DFS
            int depth = 0;
            stack_[0] = r;
            head_[0] = pinv_[static_cast<size_t>(r)] >= 0 ? Lp_[static_cast<size_t>(pinv_[static_cast<size_t>(r)])] : 0;
            mark_[static_cast<size_t>(r)] = stamp_;
            while (depth >= 0) {
                const int node = stack_[static_cast<size_t>(depth)];
                const int k = pinv_[static_cast<size_t>(node)];
                bool descended = false;
                if (k >= 0) {
                    std::int64_t& p = head_[static_cast<size_t>(depth)];
                    while (p < Lp_[static_cast<size_t>(k) + 1]) {
                        const int child = Li_[static_cast<size_t>(p)];
                        ++p;
                        if (mark_[static_cast<size_t>(child)] != stamp_) {
                            mark_[static_cast<size_t>(child)] = stamp_;
                            ++depth;
                            stack_[static_cast<size_t>(depth)] = child;
                            head_[static_cast<size_t>(depth)] =
                                pinv_[static_cast<size_t>(child)] >= 0
                                    ? Lp_[static_cast<size_t>(pinv_[static_cast<size_t>(child)])]
                                    : 0;
                            descended = true;
                            break;
                        }
                    }
                }
                if (!descended) {
                    topo_[static_cast<size_t>(--top)] = node;
                    --depth;
                }
            }
        }
        return top;
    }

    int m_ = 0;
    std::vector<int> row_used_;
    bool urows_built_ = false;
    std::vector<std::int64_t> Urp_, Lrp_;
    std::vector<int> Urk_, Lrk_;
    std::vector<int> lpos_;
    std::vector<double> work2_;
    std::vector<std::int64_t> Lp_, Up_;
    std::vector<int> Li_, Ui_;
    std::vector<double> Lx_, Ux_, udiag_;
    std::vector<int> pinv_, rowof_, slot_of_pos_, pos_of_slot_;

    // scratch
    std::vector<double> work_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<int> topo_, stack_, upos_;
    std::vector<std::int64_t> head_;
};

} // namespace expanse
