#ifndef PROXLAB_ERROR_HPP
#define PROXLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxlab {

enum class ErrorKind {
    Dimension,           // shape mismatch, non-square input
    Range,               // index or size parameter out of range
    Singular,            // rank-deficient where full rank is required
    Undefined,           // quantity undefined for this input (e.g. gcd of zero matrix)
    Infeasible,          // empty polyhedron / no integral point
    Unbounded,           // LP or polyhedron unbounded
    Unpointed,           // polyhedron has a nontrivial lineality space
    Resource,            // configured enumeration cap exceeded
    DegenerateObjective, // Delta_I(A, alpha) = 0
    Hypothesis,          // stated precondition of a construction fails
    LiftDefect,          // lifted instance fails one of its identities
    Certification,       // a claimed structural property fails
    Stalled,             // pivoting made no progress
    Parse,               // malformed input file
    InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Range: return "range";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Undefined: return "undefined";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Unpointed: return "unpointed";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::DegenerateObjective: return "degenerate-objective";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::LiftDefect: return "lift-defect";
    case ErrorKind::Certification: return "certification";
    case ErrorKind::Stalled: return "stalled";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

/**
 * Single exception type for the library. The kind lets callers (the CLI in
 * particular) map failures onto stable exit codes.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Enumeration caps. Exceeding one raises ErrorKind::Resource.
struct Limits {
    unsigned long long max_box_points = 200'000'000ULL;
    unsigned long long max_subsets = 20'000'000ULL;
};

} // namespace proxlab

#endif
