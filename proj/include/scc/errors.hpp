#pragma once

#include <stdexcept>
#include <string>

namespace scc {

// Error taxonomy. Every throwing operation documents which of these it can
// raise; anything else escaping the library is a bug.

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Requested surface is outside the supported family (chi >= 0, or no
// reference/generator data exists for it).
struct UnsupportedSurface : Error { using Error::Error; };

// Weight vector is inadmissible, or a curve argument violates a documented
// precondition (not essential, wrong component count, wrong type...).
struct BadCurve : Error { using Error::Error; };

// Malformed input of any other kind (wrong vector length, bad flags,
// mismatched surfaces, unknown ids).
struct BadInput : Error { using Error::Error; };

// Mapping-class word references an unknown generator or is malformed.
struct BadWord : Error { using Error::Error; };

// Pair of vertices is not an edge of the complex in question.
struct NotAnEdge : Error { using Error::Error; };

// Vertex set is not a simplex of the complex in question.
struct NotASimplex : Error { using Error::Error; };

// A construction needed more of the complex than the supplied ball contains.
struct InsufficientBall : Error { using Error::Error; };

// Sharing-pair based vertex-map construction met an inconsistency.
struct ShareViolation : Error { using Error::Error; };

// An enumeration or search exceeded its configured budget.
struct BudgetExceeded : Error { using Error::Error; };

} // namespace scc
