#pragma once

#include "scc/drawing.hpp"
#include "scc/surface.hpp"

#include <vector>

namespace scc {

// Isotopy type of one closed curve on a surface.
enum class CurveType {
    trivial,           // bounds a disk
    boundary_parallel, // cobounds an annulus with a boundary component
    nonseparating,
    separating,
};

struct CurveClass {
    CurveType type = CurveType::trivial;
    std::vector<SurfaceSig> pieces; // signatures of the complement pieces, sorted
};

// Both expect w to draw as a single closed component and throw BadCurve
// otherwise.  The input need not be in minimal position.
CurveType curve_type(const TriangulatedSurface& ts, const Weights& w);
CurveClass classify_curve(const TriangulatedSurface& ts, const Weights& w);

// Canonical weight vector of the isotopy class of w (single closed
// component).  Taut normal forms are unique on surfaces whose vertices all
// lie on the boundary; around interior vertices equally heavy forms are
// identified by exhausting crossing-preserving vertex slides and taking the
// lexicographically least vector.  Throws BudgetExceeded if that closure
// grows past an internal cap.
Weights canonicalize(const TriangulatedSurface& ts, const Weights& w);

// Two disjoint, non-isotopic, nonseparating curves whose union separates.
bool is_bounding_pair(const TriangulatedSurface& ts, const Weights& a, const Weights& b);

// Fast positive test for i(a,b) == 0: when the summed weights are admissible
// they redraw as an embedded multicurve, and if its two components are
// exactly the input classes that drawing is a disjoint witness.  A false
// return means "no witness", not "they intersect" — callers fall back to the
// full intersection computation.
bool disjoint_witness(const TriangulatedSurface& ts, const Weights& a, const Weights& b);

} // namespace scc
