#pragma once

// Test-only oracles, deliberately independent of the library's solve path:
// a dense Gaussian eliminator, and a brute-force optimum finder that
// enumerates every basic solution of [A | I] with nonbasics pinned to their
// finite bounds. Only usable on tiny models; the enumeration guard throws
// if a test accidentally feeds it something big.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "expanse/lp.hpp"

namespace oracle {

/// Dense PA = LU solve; returns false when singular.
inline bool dense_solve(std::vector<std::vector<double>> a, std::vector<double> b,
                        std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[static_cast<size_t>(i)][static_cast<size_t>(k)]) >
                std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(k)]))
                pivot = i;
        if (std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(k)]) < 1e-11) return false;
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
        std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(pivot)]);
        for (int i = k + 1; i < n; ++i) {
            const double f = a[static_cast<size_t>(i)][static_cast<size_t>(k)] /
                             a[static_cast<size_t>(k)][static_cast<size_t>(k)];
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(k)];
        }
    }
    x.assign(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            s -= a[static_cast<size_t>(i)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = s / a[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
    return true;
}

struct Result {
    bool feasible = false;
    double objective = expanse::kInf;
    std::vector<double> x;   // structural columns of the best vertex
};

/// Exhaustive basic-solution enumeration of min c'x, Ax {<=,=,>=} b, l<=x<=u.
inline Result enumerate_optimum(const expanse::LPModel& model, double tol = 1e-7) {
    const int n = model.n_cols, m = model.n_rows;
    const int ntot = n + m;
    if (!model.frozen) throw std::logic_error("oracle needs a frozen model");

    // dense copy of [A | I] with logical bounds from the row senses
    std::vector<std::vector<double>> dense(static_cast<size_t>(m),
                                           std::vector<double>(static_cast<size_t>(ntot), 0.0));
    for (int j = 0; j < n; ++j)
        for (std::int64_t p = model.col_start[static_cast<size_t>(j)];
             p < model.col_start[static_cast<size_t>(j) + 1]; ++p)
            dense[static_cast<size_t>(model.row_index[static_cast<size_t>(p)])][static_cast<size_t>(j)] =
                model.value[static_cast<size_t>(p)];
    std::vector<double> lo(static_cast<size_t>(ntot)), up(static_cast<size_t>(ntot));
    for (int j = 0; j < n; ++j) {
        lo[static_cast<size_t>(j)] = model.col_lower[static_cast<size_t>(j)];
        up[static_cast<size_t>(j)] = model.col_upper[static_cast<size_t>(j)];
    }
    for (int r = 0; r < m; ++r) {
        dense[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = 1.0;
        switch (model.sense[static_cast<size_t>(r)]) {
            case expanse::RowSense::LE: lo[static_cast<size_t>(n + r)] = 0.0; up[static_cast<size_t>(n + r)] = expanse::kInf; break;
            case expanse::RowSense::GE: lo[static_cast<size_t>(n + r)] = -expanse::kInf; up[static_cast<size_t>(n + r)] = 0.0; break;
            case expanse::RowSense::EQ: lo[static_cast<size_t>(n + r)] = 0.0; up[static_cast<size_t>(n + r)] = 0.0; break;
        }
    }

    // guard against combinatorial blowup: C(ntot, m) capped
    {
        double combos = 1.0;
        for (int i = 0; i < m; ++i) combos *= static_cast<double>(ntot - i) / (i + 1);
        if (combos > 5e6) throw std::logic_error("oracle instance too large to enumerate");
    }

    Result best;
    std::vector<int> basis(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = i;

    auto evaluate_basis = [&]() {
        std::vector<char> is_basic(static_cast<size_t>(ntot), 0);
        for (int b : basis) is_basic[static_cast<size_t>(b)] = 1;
        // nonbasic columns with two finite bounds branch into both
        std::vector<int> nonbasic, two_sided;
        for (int j = 0; j < ntot; ++j) {
            if (is_basic[static_cast<size_t>(j)]) continue;
            const bool lf = lo[static_cast<size_t>(j)] != -expanse::kInf, uf = up[static_cast<size_t>(j)] != expanse::kInf;
            if (!lf && !uf) return;   // free nonbasic: not a vertex
            nonbasic.push_back(j);
            if (lf && uf && lo[static_cast<size_t>(j)] != up[static_cast<size_t>(j)]) two_sided.push_back(j);
        }
        const int k = static_cast<int>(two_sided.size());
        if (k > 20) throw std::logic_error("oracle instance has too many two-sided bounds");
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<double> xn(static_cast<size_t>(ntot), 0.0);
            for (int j : nonbasic)
                xn[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)] != -expanse::kInf ? lo[static_cast<size_t>(j)]
                                                                                  : up[static_cast<size_t>(j)];
            for (int t = 0; t < k; ++t)
                if (mask & (1 << t)) xn[static_cast<size_t>(two_sided[static_cast<size_t>(t)])] =
                    up[static_cast<size_t>(two_sided[static_cast<size_t>(t)])];

            std::vector<double> rhs = model.rhs;
            for (int j : nonbasic) {
                const double v = xn[static_cast<size_t>(j)];
                if (v == 0.0) continue;
                for (int r = 0; r < m; ++r) rhs[static_cast<size_t>(r)] -= dense[static_cast<size_t>(r)][static_cast<size_t>(j)] * v;
            }
            std::vector<std::vector<double>> bmat(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m)));
            for (int r = 0; r < m; ++r)
                for (int i = 0; i < m; ++i)
                    bmat[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                        dense[static_cast<size_t>(r)][static_cast<size_t>(basis[static_cast<size_t>(i)])];
            std::vector<double> xb;
            if (!dense_solve(bmat, rhs, xb)) continue;

            bool feasible = true;
            for (int i = 0; i < m && feasible; ++i) {
                const int j = basis[static_cast<size_t>(i)];
                const double v = xb[static_cast<size_t>(i)];
                const double scale = tol * (1.0 + std::abs(v));
                if (lo[static_cast<size_t>(j)] != -expanse::kInf && v < lo[static_cast<size_t>(j)] - scale) feasible = false;
                if (up[static_cast<size_t>(j)] != expanse::kInf && v > up[static_cast<size_t>(j)] + scale) feasible = false;
            }
            if (!feasible) continue;

            // snap basic values onto bounds they touch: a vertex has them
            // exactly there, and pricing a -1e-9 residual at a huge cost
            // would otherwise distort the comparison
            for (int i = 0; i < m; ++i) {
                const int j = basis[static_cast<size_t>(i)];
                double& v = xb[static_cast<size_t>(i)];
                const double scale = tol * (1.0 + std::abs(v)) * 10.0;
                if (lo[static_cast<size_t>(j)] != -expanse::kInf && std::abs(v - lo[static_cast<size_t>(j)]) <= scale)
                    v = lo[static_cast<size_t>(j)];
                if (up[static_cast<size_t>(j)] != expanse::kInf && std::abs(v - up[static_cast<size_t>(j)]) <= scale)
                    v = up[static_cast<size_t>(j)];
            }

            std::vector<double> x = xn;
            for (int i = 0; i < m; ++i) x[static_cast<size_t>(basis[static_cast<size_t>(i)])] = xb[static_cast<size_t>(i)];
            double objv = 0.0;
            for (int j = 0; j < n; ++j) objv += model.obj[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            if (!best.feasible || objv < best.objective) {
                best.feasible = true;
                best.objective = objv;
                best.x.assign(x.begin(), x.begin() + n);
            }
        }
    };

    // enumerate m-combinations of {0..ntot-1}
    if (m == 0) {
        best.feasible = true;
        best.objective = 0.0;
        for (int j = 0; j < n; ++j) {
            // no rows: each column independently at its cheapest finite bound
            const double c = model.obj[static_cast<size_t>(j)];
            double v = 0.0;
            if (c > 0) v = lo[static_cast<size_t>(j)];
            else if (c < 0) v = up[static_cast<size_t>(j)];
            best.objective += c * v;
            best.x.push_back(v);
        }
        return best;
    }
    while (true) {
        evaluate_basis();
        int i = m - 1;
        while (i >= 0 && basis[static_cast<size_t>(i)] == ntot - m + i) --i;
        if (i < 0) break;
        ++basis[static_cast<size_t>(i)];
        for (int t = i + 1; t < m; ++t) basis[static_cast<size_t>(t)] = basis[static_cast<size_t>(t) - 1] + 1;
    }
    return best;
}

} // namespace oracle
