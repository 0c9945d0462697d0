#pragma once
// Minimal position via bigon removal, and geometric intersection numbers.
//
// A joint drawing of two curve/arc systems is minimal exactly when no
// complement region is a bigon (two crossings, one run of each component)
// or, for a pair of arcs, a half-bigon (one crossing, runs ending on the
// surface boundary).  Removal re-routes one run parallel to the other on
// its far side; each removal strictly drops the pair's crossing count.

#include "scc/drawing.hpp"
#include "scc/regions.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace scc {

// Remove one (half-)bigon between components tagged tag_a / tag_b.
// Returns false when the pair is already in minimal position.
bool remove_one_bigon(Drawing& d, int tag_a, int tag_b);

// Repeated removal until minimal; returns the number of removals.
int reduce_pair(Drawing& d, int tag_a, int tag_b);

// Round-robin reduction of several tag pairs until globally stable.
void reduce_pairs(Drawing& d, const std::vector<std::pair<int, int>>& pairs);

// Minimal geometric intersection number of two admissible weight systems.
std::int64_t geometric_intersection(const TriangulatedSurface& ts, const Weights& a,
                                    const Weights& b);

// Memoized wrapper; keys are the (already canonical) weight vectors.
class IntersectionCache {
public:
    explicit IntersectionCache(const TriangulatedSurface& ts) : ts_(&ts) {}
    std::int64_t i(const Weights& a, const Weights& b);
    std::size_t size() const { return memo_.size(); }

private:
    const TriangulatedSurface* ts_;
    std::map<std::pair<Weights, Weights>, std::int64_t> memo_;
};

} // namespace scc
