#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "scc/surface.hpp"

namespace scc {

using Weights = std::vector<std::int64_t>;

// Per-triangle corner counts of an admissible weight vector. Corner k of a
// triangle is cut off by (w[side k+2] + w[side k] - w[side k+1]) / 2 arcs.
std::array<std::int64_t, 3> corner_counts(const TriangulatedSurface& ts, const Weights& w, int tri);

// Admissibility: every entry nonnegative, and in every triangle the corner
// counts are nonnegative integers (parity + triangle inequality). Boundary
// edge weights count arc endpoints. Throws BadInput on length mismatch.
bool is_admissible(const TriangulatedSurface& ts, const Weights& w);

// An explicit embedded drawing of a multicurve transverse to the
// triangulation: ordered marked points on edges plus chords inside
// triangles. Chords are realized as disk chords, so two chords in a triangle
// cross exactly when their endpoint pairs interleave on the triangle
// boundary; an embedded drawing never has two interleaved chords of the same
// component. Points on boundary edges are arc endpoints (exactly one chord);
// points on interior edges are crossings (exactly one chord per side).
class Drawing {
public:
    struct Point {
        int edge = -1;
        int tag = 0;     // which input block this point came from (see draw_many)
        bool alive = false;
        std::array<int, 2> chord{-1, -1}; // incident chords (at most 2)
    };
    struct Chord {
        int tri = -1;
        int p0 = -1, p1 = -1;
        bool alive = false;
    };

    explicit Drawing(const TriangulatedSurface& ts);

    const TriangulatedSurface& surface() const { return *ts_; }

    // --- construction -----------------------------------------------------
    // New point on edge e at position idx (0..count) in intrinsic order.
    int insert_point(int edge, int idx, int tag);
    // New chord in triangle tri between existing points.
    int add_chord(int tri, int p0, int p1);
    void remove_chord(int c);
    void remove_point(int p); // must have no live chords

    // --- queries ------------------------------------------------------------
    int point_count() const; // live points
    const Point& point(int p) const { return points_[p]; }
    const Chord& chord(int c) const { return chords_[c]; }
    int chord_count_live() const;
    int max_point_id() const { return static_cast<int>(points_.size()); }
    int max_chord_id() const { return static_cast<int>(chords_.size()); }
    const std::vector<int>& points_on_edge(int e) const { return edge_pts_[e]; }
    int index_on_edge(int p) const; // position of live point in its edge order
    // Which side of `tri` a point lies on (0..2); -1 if not on this triangle.
    int side_in_tri(int p, int tri) const;
    // Cyclic boundary coordinate of point p inside triangle tri (for
    // interleaving tests): (side, side-position).
    std::pair<int, std::int64_t> tri_coord(int p, int tri) const;
    // True iff the two chords (same triangle) cross.
    bool chords_cross(int c0, int c1) const;
    // Other chord at point p relative to chord c (-1 if none).
    int other_chord(int p, int c) const;

    std::int64_t count_crossings() const;          // all pairs, all triangles
    std::int64_t count_crossings(int tag0, int tag1) const; // between two tags

    // Checks the embedded-drawing invariants (chord endpoint sides, no
    // same-component interleaving, point/chord incidence); aborts via assert.
    void check() const;

    // --- components ---------------------------------------------------------
    // Connected components in deterministic order (by smallest point id).
    struct Component {
        bool is_arc = false;
        std::vector<int> chords; // in walk order (cycle for circles)
        std::vector<int> points; // walk order; arcs: first/last are endpoints
        Weights weights;         // per-edge crossing counts (arcs: endpoints too)
        int tag = -1;            // common tag if all points agree, else -1
    };
    std::vector<Component> components() const;
    std::vector<int> component_of_points() const; // point id -> component index

    // Total weight vector of the whole drawing.
    Weights weights() const;

    // --- normalization ------------------------------------------------------
    // Remove returning chords (both endpoints on the same interior edge seen
    // from one triangle) by sliding across the edge, smallest span first.
    // Terminates; preserves isotopy classes and embeddedness.
    void taut();

    // Interior-vertex normalization for single-component drawings: an
    // innermost run of corner arcs around an interior vertex can slide to
    // the complementary side of the vertex; this applies every slide that
    // strictly lowers the crossing count. Taut drawings stay taut.
    void vertex_slides();
    // Slides around interior vertices that keep the crossing count equal
    // (the remaining canonical-form ambiguity on closed surfaces): how many
    // are available, and apply one by scan index.
    int vertex_tie_count() const;
    void apply_vertex_tie(int idx);

private:
    const TriangulatedSurface* ts_;
    std::vector<Point> points_;
    std::vector<Chord> chords_;
    std::vector<std::vector<int>> edge_pts_;

    void attach(int pid, int cid);
    void detach(int pid, int cid);
    bool slide_one_returning_chord();
};

// Forced normal drawing of an admissible weight vector (throws BadCurve if
// inadmissible). All chords are corner arcs; nesting is the canonical one.
Drawing draw_normal(const TriangulatedSurface& ts, const Weights& w);

// Joint drawing of several weight vectors: on every edge the block of points
// of vector 0 comes first in intrinsic order, then vector 1, etc. Each block
// is drawn normally; crossings happen only between blocks. Point tags record
// the block index.
Drawing draw_many(const TriangulatedSurface& ts, const std::vector<Weights>& blocks);

// Normal weights of the closed curve running parallel to the boundary
// circuit through `start_edge`, pushed into the surface. The curve crosses
// exactly the interior edge ends at the circuit's vertices; the result is
// taut. All-zero weights mean the push-off is a trivial circle (the circuit
// bounds a disk on the pushed side).
Weights boundary_pushoff(const TriangulatedSurface& ts, int start_edge);

} // namespace scc
