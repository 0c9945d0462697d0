#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scc/drawing.hpp"
#include "scc/surface.hpp"

namespace scc {

// --- slope coordinates on the S_{1,1} reference ----------------------------
// Primitive pairs (p,q) name the isotopy classes of essential simple closed
// curves on the one-holed torus. Canonical representative: q > 0, or (1,0).
// The reference triangulation realizes the central triangle of the Farey
// tessellation as the three lightest curves; every other slope is reached by
// mediant flips, and canonical weights add along each flip directed away from
// the centre.
struct Slope {
    int p = 1, q = 0;
    auto operator<=>(const Slope&) const = default;
};

Slope normalize_slope(int p, int q);       // throws BadInput unless primitive
std::int64_t slope_det(Slope a, Slope b);  // |ps - qr|
Weights slope_weights(Slope s);            // canonical weights on the reference

// All canonical slopes with |p|,|q| <= max_entry, lexicographic order.
std::vector<Slope> reduced_slopes(int max_entry);

// --- light curve tables -----------------------------------------------------
// All essential single closed curves of the reference surface with total
// weight <= max_total, as canonical forms, deduplicated and lex-sorted.
// Deterministic; cached per (signature, bound).
const std::vector<Weights>& light_curves(const SurfaceSig& sig, std::int64_t max_total);

// --- named fixture curves ---------------------------------------------------
// Deterministic named curves on each reference surface plus the twist
// generator list used by word machinery. Cached per signature.
struct ReferenceFixtures {
    TriangulatedSurface surface;
    std::map<std::string, Weights> curves;
    std::vector<std::string> twist_generators; // keys into `curves`
};

const ReferenceFixtures& reference_fixtures(const SurfaceSig& sig);

// Named curve lookup; throws BadInput for unknown names.
const Weights& fixture_curve(const SurfaceSig& sig, const std::string& name);

} // namespace scc
