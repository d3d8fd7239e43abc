#pragma once

// Post-solve certification. Recomputes every optimality residual from the
// model data and the reported solution alone -- none of the solver's internal
// bookkeeping is reused, so a bug there cannot certify itself.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "expanse/lp.hpp"
#include "expanse/simplex.hpp"
#include "expanse/text.hpp"

namespace expanse {

struct CertificateReport {
    double primal_residual = 0.0;     // vs 1e-7 * (1 + |b|_inf)
    double dual_residual = 0.0;       // vs 1e-7 * (1 + |c|_inf)
    double complementarity = 0.0;     // vs 1e-7 (scaled min-distance form)
    double duality_gap = 0.0;         // vs 1e-6 * (1 + |obj|)
    double primal_tol = 0.0, dual_tol = 0.0, comp_tol = 0.0, gap_tol = 0.0;
    bool primal_ok = false, dual_ok = false, comp_ok = false, gap_ok = false;

    bool all_ok() const { return primal_ok && dual_ok && comp_ok && gap_ok; }

    std::string to_string() const {
        auto line = [](const char* name, bool ok, double v, double tol) {
            return std::string(ok ? "PASS " : "FAIL ") + name + "  residual=" + fmt_g17(v) +
                   "  tolerance=" + fmt_g17(tol) + "\n";
        };
        std::string s;
        s += line("primal_feasibility ", primal_ok, primal_residual, primal_tol);
        s += line("dual_feasibility   ", dual_ok, dual_residual, dual_tol);
        s += line("complementarity    ", comp_ok, complementarity, comp_tol);
        s += line("strong_duality     ", gap_ok, duality_gap, gap_tol);
        return s;
    }
};

inline CertificateReport certify(const LPModel& model, const Solution& sol, double tol_feas = 1e-7,
                                 double tol_gap = 1e-6) {
    CertificateReport rep;
    const int m = model.n_rows, n = model.n_cols;
    const auto& x = sol.col_value;
    const auto& y = sol.row_dual;

    double bnorm = 0.0, cnorm = 0.0;
    for (double b : model.rhs) bnorm = std::max(bnorm, std::abs(b));
    for (double c : model.obj) cnorm = std::max(cnorm, std::abs(c));
    rep.primal_tol = tol_feas * (1.0 + bnorm);
    rep.dual_tol = tol_feas * (1.0 + cnorm);
    rep.comp_tol = tol_feas;
    rep.gap_tol = tol_gap * (1.0 + std::abs(sol.objective));

    // row activities and reduced costs from scratch
    std::vector<double> activity(static_cast<size_t>(m), 0.0);
    std::vector<double> reduced(model.obj.begin(), model.obj.end());
    for (int j = 0; j < n; ++j) {
        const double xj = x[static_cast<size_t>(j)];
        double aty = 0.0;
        for (std::int64_t p = model.col_start[static_cast<size_t>(j)];
             p < model.col_start[static_cast<size_t>(j) + 1]; ++p) {
            const int r = model.row_index[static_cast<size_t>(p)];
            const double a = model.value[static_cast<size_t>(p)];
            if (xj != 0.0) activity[static_cast<size_t>(r)] += a * xj;
            aty += a * y[static_cast<size_t>(r)];
        }
        reduced[static_cast<size_t>(j)] -= aty;
    }

    // primal feasibility: row senses and column bounds
    for (int r = 0; r < m; ++r) {
        const double gap = activity[static_cast<size_t>(r)] - model.rhs[static_cast<size_t>(r)];
        double v = 0.0;
        switch (model.sense[static_cast<size_t>(r)]) {
            case RowSense::LE: v = std::max(0.0, gap); break;
            case RowSense::GE: v = std::max(0.0, -gap); break;
            case RowSense::EQ: v = std::abs(gap); break;
        }
        rep.primal_residual = std::max(rep.primal_residual, v);
    }
    for (int j = 0; j < n; ++j) {
        const double l = model.col_lower[static_cast<size_t>(j)], u = model.col_upper[static_cast<size_t>(j)];
        if (l != -kInf) rep.primal_residual = std::max(rep.primal_residual, l - x[static_cast<size_t>(j)]);
        if (u != kInf) rep.primal_residual = std::max(rep.primal_residual, x[static_cast<size_t>(j)] - u);
    }

    // dual feasibility: reduced-cost signs against bound activity, and
    // row-dual signs against the row senses (minimization conventions)
    for (int j = 0; j < n; ++j) {
        const double l = model.col_lower[static_cast<size_t>(j)], u = model.col_upper[static_cast<size_t>(j)];
        const double d = reduced[static_cast<size_t>(j)];
        const double xj = x[static_cast<size_t>(j)];
        const double near = tol_feas * (1.0 + std::abs(xj)) * 10.0;
        const bool at_lower = l != -kInf && xj - l <= near;
        const bool at_upper = u != kInf && u - xj <= near;
        double v = 0.0;
        if (at_lower && at_upper) v = 0.0;                        // fixed
        else if (at_lower) v = std::max(0.0, -d);
        else if (at_upper) v = std::max(0.0, d);
        else v = std::abs(d);
        rep.dual_residual = std::max(rep.dual_residual, v);
    }
    for (int r = 0; r < m; ++r) {
        const double yr = y[static_cast<size_t>(r)];
        double v = 0.0;
        if (model.sense[static_cast<size_t>(r)] == RowSense::LE) v = std::max(0.0, yr);
        if (model.sense[static_cast<size_t>(r)] == RowSense::GE) v = std::max(0.0, -yr);
        rep.dual_residual = std::max(rep.dual_residual, v);
    }

    // complementarity: every inequality row is either active or carries a
    // (scaled) zero dual; every column sits at a bound or has zero reduced cost
    for (int r = 0; r < m; ++r) {
        if (model.sense[static_cast<size_t>(r)] == RowSense::EQ) continue;
        const double slack = std::abs(activity[static_cast<size_t>(r)] - model.rhs[static_cast<size_t>(r)]);
        const double v = std::min(slack / (1.0 + bnorm), std::abs(y[static_cast<size_t>(r)]) / (1.0 + cnorm));
        rep.complementarity = std::max(rep.complementarity, v);
    }
    for (int j = 0; j < n; ++j) {
        const double l = model.col_lower[static_cast<size_t>(j)], u = model.col_upper[static_cast<size_t>(j)];
        double dist = kInf;
        if (l != -kInf) dist = std::min(dist, std::abs(x[static_cast<size_t>(j)] - l));
        if (u != kInf) dist = std::min(dist, std::abs(u - x[static_cast<size_t>(j)]));
        if (dist == kInf) continue;   // free column: handled by dual residual
        const double v = std::min(dist / (1.0 + std::abs(x[static_cast<size_t>(j)])),
                                  std::abs(reduced[static_cast<size_t>(j)]) / (1.0 + cnorm));
        rep.complementarity = std::max(rep.complementarity, v);
    }

    // strong duality with bound adjustment: c'x = b'y + l'd+ + u'd-
    double dual_obj = 0.0;
    for (int r = 0; r < m; ++r) dual_obj += model.rhs[static_cast<size_t>(r)] * y[static_cast<size_t>(r)];
    for (int j = 0; j < n; ++j) {
        const double d = reduced[static_cast<size_t>(j)];
        const double l = model.col_lower[static_cast<size_t>(j)], u = model.col_upper[static_cast<size_t>(j)];
        if (d > 0 && l != -kInf) dual_obj += d * l;
        else if (d < 0 && u != kInf) dual_obj += d * u;
    }
    double primal_obj = 0.0;
    for (int j = 0; j < n; ++j) primal_obj += model.obj[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    rep.duality_gap = std::abs(primal_obj - dual_obj);

    rep.primal_ok = rep.primal_residual <= rep.primal_tol;
    rep.dual_ok = rep.dual_residual <= rep.dual_tol;
    rep.comp_ok = rep.complementarity <= rep.comp_tol;
    rep.gap_ok = rep.duality_gap <= rep.gap_tol;
    return rep;
}

} // namespace expanse
