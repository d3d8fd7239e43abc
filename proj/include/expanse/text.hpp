#pragma once

// Plain-file plumbing shared by the instance loader and the report writers:
// a strict comma-separated reader (UTF-8, '.' decimal point, first row is
// the header) and a small ini-style manifest parser.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "expanse/errors.hpp"

namespace expanse {

inline std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline std::optional<double> parse_double(std::string_view s) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    double v = 0;
    auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e) return std::nullopt;
    return v;
}

inline std::optional<long long> parse_int(std::string_view s) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    long long v = 0;
    auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e) return std::nullopt;
    return v;
}

/// Shortest round-trippable decimal form, locale independent.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // prefer the shorter form when it round-trips
    for (int prec = 1; prec <= 16; ++prec) {
        char t[40];
        std::snprintf(t, sizeof t, "%.*g", prec, v);
        double back = 0;
        auto r = std::from_chars(t, t + std::char_traits<char>::length(t), back);
        if (r.ec == std::errc() && back == v) return t;
    }
    return buf;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

struct CsvTable {
    std::string file;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;   // data rows, header excluded

    int column(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
    int require_column(const std::string& name) const {
        int c = column(name);
        if (c < 0) throw ParseError(file, 1, name, "missing column");
        return c;
    }

    const std::string& cell(size_t row, int col) const { return rows[row][col]; }

    /// 1-based row number of data row `row` within the file.
    long file_row(size_t row) const { return static_cast<long>(row) + 2; }

    double num(size_t row, int col) const {
        auto v = parse_double(rows[row][col]);
        if (!v) throw ParseError(file, file_row(row), header[col], "malformed number '" + rows[row][col] + "'");
        return *v;
    }
    long long integer(size_t row, int col) const {
        auto v = parse_int(rows[row][col]);
        if (!v) throw ParseError(file, file_row(row), header[col], "malformed integer '" + rows[row][col] + "'");
        return *v;
    }
    bool empty_cell(size_t row, int col) const { return rows[row][col].empty(); }
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError(path);
    CsvTable t;
    t.file = path;
    std::string line;
    bool first = true;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (first) {
            t.header = fields;
            first = false;
        } else {
            if (fields.size() != t.header.size())
                throw ParseError(path, lineno, "", "expected " + std::to_string(t.header.size()) +
                                                      " fields, got " + std::to_string(fields.size()));
            t.rows.push_back(std::move(fields));
        }
    }
    if (first) throw ParseError(path, 1, "", "empty file");
    return t;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : path_(path), out_(path) {
        if (!out_) throw IoError(path, "cannot open for writing");
    }
    void row(const std::vector<std::string>& fields) {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }
    ~CsvWriter() { out_.flush(); }

private:
    std::string path_;
    std::ofstream out_;
};

// ---------------------------------------------------------------------------
// Manifest (ini-style: [section], key = value, ';' or '#' comments)
// ---------------------------------------------------------------------------

struct Manifest {
    std::string file;
    std::map<std::string, std::string> values;   // "section.key" -> raw value

    bool has(const std::string& key) const { return values.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw ParseError(file, 0, key, "missing manifest key");
        return it->second;
    }
    std::string get_or(const std::string& key, const std::string& dflt) const {
        auto it = values.find(key);
        return it == values.end() ? dflt : it->second;
    }
    double num(const std::string& key) const {
        auto v = parse_double(get(key));
        if (!v) throw ParseError(file, 0, key, "malformed number '" + get(key) + "'");
        return *v;
    }
    double num_or(const std::string& key, double dflt) const { return has(key) ? num(key) : dflt; }
    long long integer(const std::string& key) const {
        auto v = parse_int(get(key));
        if (!v) throw ParseError(file, 0, key, "malformed integer '" + get(key) + "'");
        return *v;
    }
    long long integer_or(const std::string& key, long long dflt) const {
        return has(key) ? integer(key) : dflt;
    }

    /// Comma-separated list of doubles; a single value broadcasts to `n`.
    std::vector<double> num_list(const std::string& key, size_t n) const {
        auto parts = split(get(key), ',');
        std::vector<double> out;
        for (auto& p : parts) {
            auto v = parse_double(p);
            if (!v) throw ParseError(file, 0, key, "malformed number '" + p + "'");
            out.push_back(*v);
        }
        if (out.size() == 1 && n > 1) out.assign(n, out[0]);
        if (out.size() != n)
            throw ParseError(file, 0, key, "expected " + std::to_string(n) + " values, got " +
                                               std::to_string(out.size()));
        return out;
    }
};

inline Manifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError(path);
    Manifest m;
    m.file = path;
    std::string line, section;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto cut = line.find_first_of(";#");
        if (cut != std::string::npos) line = line.substr(0, cut);
        std::string s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']') {
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(path, lineno, "", "expected key = value");
        std::string key = trim(std::string_view(s).substr(0, eq));
        std::string val = trim(std::string_view(s).substr(eq + 1));
        if (key.empty()) throw ParseError(path, lineno, "", "empty key");
        m.values[section.empty() ? key : section + "." + key] = val;
    }
    return m;
}

} // namespace expanse
