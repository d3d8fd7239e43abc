#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace expanse {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A required input file is missing or unreadable.
struct IngestError : Error {
    std::string file;
    explicit IngestError(const std::string& f)
        : Error("missing or unreadable input file: " + f), file(f) {}
};

/// A cross-reference between tables could not be resolved.
struct LinkError : Error {
    std::string entity;
    std::string key;
    LinkError(const std::string& ent, const std::string& k)
        : Error("unresolved reference from " + ent + " to '" + k + "'"), entity(ent), key(k) {}
};

/// A cell could not be parsed (bad number, bad enum, wrong arity).
struct ParseError : Error {
    std::string file;
    long row;    // 1-based, 0 when not applicable
    std::string column;
    ParseError(const std::string& f, long r, const std::string& col, const std::string& what)
        : Error(f + ":" + std::to_string(r) + " column '" + col + "': " + what),
          file(f), row(r), column(col) {}
};

/// An argument is outside its mathematical domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A capacity bound could not be derived for an entity.
struct BoundError : Error {
    std::string entity;
    explicit BoundError(const std::string& ent, const std::string& why)
        : Error("cannot derive capacity bound for " + ent + ": " + why), entity(ent) {}
};

/// Scenario sampling could not produce a valid window.
struct SampleError : Error {
    explicit SampleError(const std::string& what) : Error("sampling failed: " + what) {}
};

/// Model assembly was asked for something the instance does not support.
struct BuildError : Error {
    explicit BuildError(const std::string& what) : Error("model build failed: " + what) {}
};

/// Writing an output file failed.
struct IoError : Error {
    explicit IoError(const std::string& path, const std::string& why)
        : Error("cannot write " + path + ": " + why) {}
};

/// A report was requested from an unusable solution.
struct AnalysisError : Error {
    explicit AnalysisError(const std::string& what) : Error(what) {}
};

/// The independent cost recomputation disagrees with the solver objective.
struct AuditError : Error {
    explicit AuditError(const std::string& what) : Error(what) {}
};

} // namespace expanse
