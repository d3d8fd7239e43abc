#pragma once

// Free-format MPS export for cross-validation with external solvers.
// Sections: NAME, ROWS, COLUMNS, RHS, BOUNDS, ENDATA (RANGES unused).
// Names come from the model's DecisionIndex when present, sanitized to
// [A-Za-z0-9_], truncated to 255 characters and de-collided.

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "expanse/lp.hpp"
#include "expanse/text.hpp"

namespace expanse {

namespace detail {

inline std::string sanitize_name(const std::string& raw, std::map<std::string, int>& used) {
    std::string s;
    s.reserve(raw.size());
    for (char c : raw) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        s += ok ? c : '_';
    }
    if (s.empty()) s = "_";
    if (s.size() > 255) s.resize(255);
    auto it = used.find(s);
    if (it == used.end()) {
        used[s] = 1;
        return s;
    }
    std::string candidate;
    do {
        candidate = s + "_" + std::to_string(++it->second);
        if (candidate.size() > 255) {
            s.resize(240);
            candidate = s + "_" + std::to_string(it->second);
        }
    } while (used.count(candidate));
    used[candidate] = 1;
    return candidate;
}

} // namespace detail

/// All names the export will use, reusable by solution dumps.
struct ModelNames {
    std::vector<std::string> col, row;
};

inline ModelNames model_names(const LPModel& model) {
    ModelNames names;
    std::map<std::string, int> used;
    used["obj"] = 1;
    used["rhs"] = 1;
    const bool have_index = model.index.n_periods > 0;
    names.col.reserve(static_cast<size_t>(model.n_cols));
    for (int j = 0; j < model.n_cols; ++j)
        names.col.push_back(detail::sanitize_name(
            have_index ? model.index.name_col(j) : "c" + std::to_string(j), used));
    names.row.reserve(static_cast<size_t>(model.n_rows));
    for (int r = 0; r < model.n_rows; ++r)
        names.row.push_back(detail::sanitize_name(
            have_index ? model.index.name_row(r) : "r" + std::to_string(r), used));
    return names;
}

inline void export_mps(const LPModel& model, const std::string& path,
                       const std::string& problem_name = "expanse") {
    if (model.n_cols == 0) throw BuildError("empty model");
    if (!model.frozen) throw BuildError("model must be frozen before export");
    ModelNames names = model_names(model);

    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open for writing");

    out << "NAME " << problem_name << "\n";
    out << "ROWS\n";
    out << " N obj\n";
    for (int r = 0; r < model.n_rows; ++r)
        out << ' ' << static_cast<char>(model.sense[static_cast<size_t>(r)]) << ' '
            << names.row[static_cast<size_t>(r)] << "\n";

    out << "COLUMNS\n";
    for (int j = 0; j < model.n_cols; ++j) {
        int on_line = 0;
        auto emit = [&](const std::string& row, double v) {
            if (on_line == 0) out << ' ' << names.col[static_cast<size_t>(j)];
            out << ' ' << row << ' ' << fmt_g17(v);
            if (++on_line == 2) {
                out << "\n";
                on_line = 0;
            }
        };
        if (model.obj[static_cast<size_t>(j)] != 0.0) emit("obj", model.obj[static_cast<size_t>(j)]);
        for (std::int64_t p = model.col_start[static_cast<size_t>(j)];
             p < model.col_start[static_cast<size_t>(j) + 1]; ++p)
            emit(names.row[static_cast<size_t>(model.row_index[static_cast<size_t>(p)])],
                 model.value[static_cast<size_t>(p)]);
        if (on_line) out << "\n";
    }

    out << "RHS\n";
    {
        int on_line = 0;
        for (int r = 0; r < model.n_rows; ++r) {
            if (model.rhs[static_cast<size_t>(r)] == 0.0) continue;
            if (on_line == 0) out << " rhs";
            out << ' ' << names.row[static_cast<size_t>(r)] << ' '
                << fmt_g17(model.rhs[static_cast<size_t>(r)]);
            if (++on_line == 2) {
                out << "\n";
                on_line = 0;
            }
        }
        if (on_line) out << "\n";
    }

    // BOUNDS section only when something deviates from the [0, inf) default
    std::string bounds;
    for (int j = 0; j < model.n_cols; ++j) {
        const double l = model.col_lower[static_cast<size_t>(j)];
        const double u = model.col_upper[static_cast<size_t>(j)];
        const std::string& name = names.col[static_cast<size_t>(j)];
        if (l == 0.0 && u == kInf) continue;
        if (l == u) {
            bounds += " FX bnd " + name + " " + fmt_g17(l) + "\n";
            continue;
        }
        if (l == -kInf && u == kInf) {
            bounds += " FR bnd " + name + "\n";
            continue;
        }
        if (l == -kInf) bounds += " MI bnd " + name + "\n";
        else if (l != 0.0) bounds += " LO bnd " + name + " " + fmt_g17(l) + "\n";
        if (u != kInf) bounds += " UP bnd " + name + " " + fmt_g17(u) + "\n";
    }
    if (!bounds.empty()) out << "BOUNDS\n" << bounds;

    out << "ENDATA\n";
    if (!out) throw IoError(path, "write failed");
}

} // namespace expanse
