#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awfslab {

enum class ErrorKind {
    MalformedTable,
    BoundaryMismatch,
    NotComposableInSlice,
    AdjunctionInvalid,
    MalformedCleavage,
    OrientationMismatch,
    NotAGroupoid,
    KindMismatch,
    NonCommutingProblem,
    ExtensionMismatch,
    NotAFibration,
    NotAPullback,
    CleavageIncompatible,
    JudgmentMismatch,
    ParseError,
    SchemaError,
    SizeOutOfRange,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorKind::NotComposableInSlice: return "NotComposableInSlice";
        case ErrorKind::AdjunctionInvalid: return "AdjunctionInvalid";
        case ErrorKind::MalformedCleavage: return "MalformedCleavage";
        case ErrorKind::OrientationMismatch: return "OrientationMismatch";
        case ErrorKind::NotAGroupoid: return "NotAGroupoid";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::NonCommutingProblem: return "NonCommutingProblem";
        case ErrorKind::ExtensionMismatch: return "ExtensionMismatch";
        case ErrorKind::NotAFibration: return "NotAFibration";
        case ErrorKind::NotAPullback: return "NotAPullback";
        case ErrorKind::CleavageIncompatible: return "CleavageIncompatible";
        case ErrorKind::JudgmentMismatch: return "JudgmentMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    }
    return "Unknown";
}

/// Every precondition failure in the library is reported as an `Error`
/// carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// One violated law together with the tuple that witnesses it.
struct Violation {
    std::string law;
    std::string witness;

    bool operator==(const Violation&) const = default;
};

/// Result of a law check. Empty iff every checked law holds.
struct ValidationReport {
    std::vector<Violation> violations;
    std::size_t checked = 0;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }

    void add(std::string law, std::string witness) {
        violations.push_back({std::move(law), std::move(witness)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = {}) {
        for (const auto& v : other.violations)
            violations.push_back({prefix.empty() ? v.law : prefix + ": " + v.law, v.witness});
        checked += other.checked;
    }
    bool has(std::string_view law_fragment) const {
        for (const auto& v : violations)
            if (v.law.find(law_fragment) != std::string::npos) return true;
        return false;
    }
    std::string summary(std::size_t max_lines = 10) const {
        if (ok()) return "ok";
        std::string out;
        for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
            if (i) out += "\n";
            out += violations[i].law + " @ " + violations[i].witness;
        }
        if (violations.size() > max_lines)
            out += "\n... (" + std::to_string(violations.size() - max_lines) + " more)";
        return out;
    }
};

}  // namespace awfslab
