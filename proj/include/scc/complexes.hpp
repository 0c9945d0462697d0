#pragma once
// Curve-complex constructions over the reference surfaces: the arc model of
// the intersection-four graph on the two-holed torus, sharing pairs and
// their bounding pairs, hexagon detection, slope graphs, and finite balls of
// the disjointness complexes.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scc/cutting.hpp"
#include "scc/drawing.hpp"
#include "scc/surface.hpp"

namespace scc {

// ---- joint minimal-position drawings ---------------------------------------

// Draw the blocks together and remove every bigon / half-bigon between
// distinct blocks, so block crossing counts are geometric intersection
// numbers. Blocks keep their tags.
Drawing joint_minimal(const TriangulatedSurface& ts, const std::vector<Weights>& blocks);

// ---- two-holed torus arc model ---------------------------------------------
// Separating curves correspond to arcs joining the two boundary circles: the
// connector lives in the pants side of the curve, and the curve is the
// neighbourhood boundary of the connector together with both boundary
// circles. All six operations work on the marked two-holed torus reference.

Weights connector_arc(const Weights& sep);  // curve -> its connector arc
Weights partner_curve(const Weights& arc);  // connector arc -> its curve

// The unique non-separating curve disjoint from both members of an
// intersection-four pair: their connectors cut the surface into an annulus
// whose core is that curve. Throws NotAnEdge otherwise.
Weights c_of_edge(const Weights& a, const Weights& b);

// Separating curves completing the pair {a, b} and the center to triangles:
// classes whose connector is disjoint from all three given connectors,
// enumerated exactly in the disk cut out by them. Throws NotAnEdge unless
// center/a/b are pairwise at intersection four.
std::vector<Weights> link_edge_completions(const Weights& center, const Weights& a,
                                           const Weights& b);

// The two curve families over the handle curves "b" and "c": consecutive
// members of the interleaved family meet in four points and the induced
// intersection-four graph on them is a bi-infinite path.
Weights fiber_curve_b(int n);
Weights fiber_curve_c(int n);

// ---- handles and sharing pairs ---------------------------------------------

// A curve cutting off a one-holed torus (its handle).
bool is_h_curve(const SurfaceSig& sig, const Weights& w);

// Does the handle cut off by `h` contain the class `c`? (c disjoint from h
// and lying on the handle side.)
bool handle_contains(const SurfaceSig& sig, const Weights& h, const Weights& c);

// Sharing pair test: the two handles intersect in an annulus and the
// complement of their union is connected; returns the annulus core (a
// non-separating curve inside both handles), or nullopt when the curves
// meet the pattern conditions but not the clauses. Throws BadInput when
// either input is not an h-curve.
std::optional<Weights> sharing_core(const SurfaceSig& sig, const Weights& a, const Weights& b);

// The bounding pair of a sharing pair: the essential neighbourhood-boundary
// classes of the union other than the core. Cutting along the pair leaves a
// two-holed torus piece containing both curves and the core. Throws
// BadInput when the input is not a sharing pair.
std::pair<Weights, Weights> sharing_bp(const SurfaceSig& sig, const Weights& a, const Weights& b);

// An arc drawn on the complement of a handle (weights on the non-handle
// piece of the h-curve's cut, which is deterministic per h-curve).
struct ComplementArc {
    Weights hcurve;
    Weights arc;
};

// The strands of `b` crossing the non-handle side of `a` for a sharing pair
// {a, b}: the two strands are parallel and their common class is the result.
// Throws NotAnEdge when {a, b} is not a sharing pair or the strands differ.
ComplementArc r_arc(const SurfaceSig& sig, const Weights& a, const Weights& b);
bool complement_arcs_equal(const SurfaceSig& sig, const ComplementArc& x,
                           const ComplementArc& y);

// ---- hexagon test ------------------------------------------------------------

// Six distinct separating curves in cyclic position: consecutive ones
// disjoint, second and third neighbours intersecting.
bool detect_hexagon(const SurfaceSig& sig, const std::vector<Weights>& six);

// ---- graphs ------------------------------------------------------------------

enum class GraphKind { C, Cs, T, D, E, F };
std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& s);

struct GraphVertex {
    std::string id;               // canonical coordinate string
    std::string type;             // "curve" | "bp" | "slope"
    std::vector<Weights> coords;  // one weight vector, or two for a bp
};

struct ComplexGraph {
    GraphKind kind{};
    SurfaceSig sig{};
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // index pairs, first < second
    std::string center;                      // provenance
    std::int64_t budget = 0;                 // provenance
};

struct BallBudget {
    int word_length = 2;
    std::int64_t weight_cap = 512;  // drop generator images heavier than this
    std::size_t vertex_cap = 4096;  // hard guard: beyond it -> BudgetExceeded
};

// Orbit ball: breadth-first closure of the center under the surface's
// generator steps, vertices filtered by the kind's membership rule, every
// induced edge re-checked independently by the kind's adjacency rule.
// Deterministic for a fixed budget. The E kind needs the fixed core.
ComplexGraph ball(GraphKind kind, const SurfaceSig& sig, const std::vector<Weights>& center,
                  const BallBudget& budget, const Weights& e_core = {});

// Full subgraph on explicitly given vertices (each vertex = its coords).
ComplexGraph induced_graph(GraphKind kind, const SurfaceSig& sig,
                           const std::vector<std::vector<Weights>>& vertices,
                           const Weights& e_core = {});

// Slope model of the intersection-one (genus one) / intersection-two (four
// holes) graph: mediant expansion to the given depth on both sides of the
// base edge. Edges are the determinant-one pairs created by the expansion,
// re-checked arithmetically; every edge lies in a recorded triangle.
struct SlopeTriangle {
    int a = -1, b = -1, c = -1;  // vertex indices
};
struct SlopeGraph {
    ComplexGraph graph;
    std::vector<SlopeTriangle> triangles;
    std::vector<char> edge_interior;  // per edge: expanded on both sides
};
SlopeGraph farey_graph_slopes(const SurfaceSig& kind, int depth);

std::string graph_to_dot(const ComplexGraph& g);

} // namespace scc
