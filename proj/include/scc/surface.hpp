#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "scc/errors.hpp"

namespace scc {

// Topological type of a compact connected orientable surface.
struct SurfaceSig {
    int genus = 0;
    int boundary = 0;

    int euler() const { return 2 - 2 * genus - boundary; }
    auto operator<=>(const SurfaceSig&) const = default;
};

std::string to_string(const SurfaceSig& sig); // e.g. "S_{1,2}"

// A triangulated surface. Triangles are oriented counterclockwise; side i of
// a triangle runs from corner i to corner i+1 (mod 3). Every edge has an
// intrinsic direction: the direction of its unique forward use. Interior
// edges have exactly one forward and one backward use (this encodes a global
// orientation); boundary edges have a single forward use plus a label.
//
// Boundary labels: positive labels number the original boundary components
// (1..p on reference surfaces); negative labels tag boundary produced by
// cutting, -(k+1) for multicurve component k.
struct TriangulatedSurface {
    struct Tri {
        std::array<int, 3> edge{-1, -1, -1};
        std::array<bool, 3> fwd{true, true, true};
    };
    struct Edge {
        int tri0 = -1, side0 = -1; // forward use (always present)
        int tri1 = -1, side1 = -1; // backward use (interior only)
        int boundary_label = 0;    // nonzero iff boundary edge
        bool interior() const { return boundary_label == 0; }
    };

    SurfaceSig sig;
    std::vector<Tri> tris;
    std::vector<Edge> edges;
    std::vector<std::string> edge_names; // optional, same length as edges when set

    // Derived by refresh():
    std::vector<int> corner_vertex; // size 3*tris.size(), vertex id per corner
    int vertex_count = 0;
    std::vector<bool> vertex_on_boundary; // size vertex_count

    int tri_count() const { return static_cast<int>(tris.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int side_edge(int t, int i) const { return tris[t].edge[i]; }
    bool side_fwd(int t, int i) const { return tris[t].fwd[i]; }
    int corner(int t, int k) const { return corner_vertex[3 * t + k]; }

    // For an interior edge seen from use (t,i), the use on the other side.
    std::pair<int, int> partner(int t, int i) const;

    // Recompute corner/vertex data; throws BadInput if the gluing data is
    // structurally inconsistent (bad indices, mismatched uses).
    void refresh();

    // Boundary circuits in deterministic order; each circuit is the cyclic
    // list of boundary edge ids walked with the surface on the left.
    std::vector<std::vector<int>> boundary_circuits() const;

    std::string edge_name(int e) const;
};

// Reference triangulation for the given signature. Deterministic; the models
// are documented in docs/reference_surfaces.md. Throws UnsupportedSurface
// unless chi(sig) < 0.
TriangulatedSurface build_reference_surface(const SurfaceSig& sig);

// Report-style validation: returns human-readable findings, empty iff all
// structural invariants hold (index consistency, orientability, connectivity,
// Euler characteristic and boundary count matching sig, uniform circuit
// labels). Pieces cut along arcs legitimately mix original and cut labels on
// one circuit; they pass allow_mixed_circuit_labels.
std::vector<std::string> validate(const TriangulatedSurface& ts,
                                  bool allow_mixed_circuit_labels = false);

// The S_{1,2} reference is a free Z/2 cover of the S_{1,1} reference; its
// deck transformation is a simplicial involution exchanging the two boundary
// components. Returned as an edge permutation (weights transform by
// w'[perm[e]] = w[e]).
std::vector<int> s12_deck_edge_permutation();

// Generic double cover of a base surface given a Z/2 cocycle on edges
// (per-triangle sum must vanish mod 2; boundary edges must carry 0 so that
// boundary components lift to two circles). Sheet-0/1 copies of base boundary
// label L get labels L and L + base boundary count.
TriangulatedSurface double_cover(const TriangulatedSurface& base,
                                 const std::vector<int>& cocycle);

} // namespace scc
