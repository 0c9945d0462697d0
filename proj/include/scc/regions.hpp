#pragma once
// Complement-region analysis of an embedded drawing relative to a chosen set
// of "barrier" components.  Each triangle's barrier chords cut it into an
// arrangement; arrangement faces are glued across interior edges into
// regions.  Regions are the pieces of the surface cut along the barriers and
// carry honest Euler characteristics and boundary circuits, which is what
// bigon detection, cutting and side tests are built from.

#include "scc/drawing.hpp"

#include <cstdint>
#include <vector>

namespace scc {

class RegionComplex {
public:
    enum VertexKind { VK_CROSSING = 0, VK_EDGE_POINT = 1, VK_SURFACE_VERTEX = 2 };

    struct Seg {
        int edge = -1;
        int k = -1;      // intrinsic interval index, 0 .. #barrier points on edge
        int lo_pid = -1; // barrier point at the low end (-1: edge start)
        int hi_pid = -1; // barrier point at the high end (-1: edge end)
    };
    struct Piece {
        int chord = -1;
        int j = -1; // 0 .. #crossings on the chord
        int comp = -1;
        int tag = -1;
    };
    struct Crossing {
        int chord_a = -1, chord_b = -1; // chord_a < chord_b
        int ja = -1, jb = -1;           // index of this crossing along each chord
        int tri = -1;
    };
    struct Dart {
        bool is_seg = false;
        int cell = -1; // seg id or piece id
        int tri = -1;
        int dir = 0; // segs: 0 = along the triangle's ccw boundary; pieces: 0 = p0 -> p1
        int tail_kind = 0, tail_id = -1; // VertexKind + id (crossing id / point id / corner code)
        int head_kind = 0, head_id = -1;
        int twin = -1; // opposite-direction dart on the same cell in the same triangle
        int glue = -1; // interior-seg inner darts: the inner dart across the edge
        int face = -1;
    };
    struct Face {
        int tri = -1;
        bool outer = false;
        std::vector<int> cycle; // darts in face-walk order, rotated to start at the min dart
        int region = -1;
    };
    struct CircuitItem {
        int dart = -1;
        bool is_seg = false;
        int boundary_label = 0; // segs only: label of the surface boundary edge
        int chord = -1, piece_j = -1, comp = -1, tag = -1, dir = 0; // pieces only
        int junction_kind = 0; // vertex kind reached after walking this item
        int junction_id = -1;
    };
    struct Circuit {
        int region = -1;
        std::vector<CircuitItem> items;
    };
    struct Region {
        int euler = 0;
        std::vector<int> faces;
        std::vector<int> circuits;
        bool touches_surface_boundary = false;
        std::vector<int> comps; // sorted barrier components on its boundary
    };

    // barrier_of_comp is indexed by the component ids of d.component_of_points().
    RegionComplex(const Drawing& d, std::vector<char> barrier_of_comp);

    const Drawing& drawing() const { return *d_; }
    const std::vector<int>& comp_of_point() const { return comp_; }
    bool is_barrier_comp(int c) const { return barrier_[c] != 0; }

    int seg_count() const { return static_cast<int>(segs_.size()); }
    int piece_count() const { return static_cast<int>(pieces_.size()); }
    const Seg& seg(int s) const { return segs_[s]; }
    const Piece& piece(int p) const { return pieces_[p]; }
    const Crossing& crossing(int x) const { return crossings_[x]; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const Dart& dart(int d) const { return darts_[d]; }
    int dart_count() const { return static_cast<int>(darts_.size()); }
    const Face& face(int f) const { return faces_[f]; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const Region& region(int r) const { return regions_[r]; }
    int region_count() const { return static_cast<int>(regions_.size()); }
    const Circuit& circuit(int c) const { return circuits_[c]; }
    int circuit_count() const { return static_cast<int>(circuits_.size()); }

    int seg_id(int edge, int k) const { return seg_base_[edge] + k; }
    int piece_id(int chord, int j) const { return piece_base_[chord] + j; }
    bool chord_is_barrier(int chord) const { return piece_base_[chord] >= 0; }

    // Interval index of the seg on `edge` containing current full index `idx`
    // (the index a non-barrier point has, or an insertion slot would have).
    int seg_containing(int edge, int idx) const;
    // Barrier points: their interval index k on their edge (segs k, k+1 are
    // the ones just below / above the point).
    int barrier_index_on_edge(int pid) const;

    // The inner (region-side) dart of a seg within one of its triangles.
    int inner_seg_dart(int seg, int tri) const;
    int face_of_seg_in_tri(int seg, int tri) const;
    int region_of_face(int f) const { return faces_[f].region; }
    // Region next to a seg (both sides glue to the same region).
    int region_of_seg(int s) const;
    // Face of the arrangement containing a chord of a non-barrier component;
    // requires that the chord crosses no barrier chord.
    int face_of_nonbarrier_chord(int chord) const;
    int region_of_nonbarrier_chord(int chord) const;

private:
    void build();
    const Drawing* d_;
    std::vector<char> barrier_;
    std::vector<int> comp_;

    std::vector<Seg> segs_;
    std::vector<int> seg_base_;               // per edge
    std::vector<std::vector<int>> bpts_;      // per edge: barrier pids in intrinsic order
    std::vector<Piece> pieces_;
    std::vector<int> piece_base_;             // per chord id (-1: not a barrier chord)
    std::vector<Crossing> crossings_;
    std::vector<Dart> darts_;
    std::vector<Face> faces_;
    std::vector<Region> regions_;
    std::vector<Circuit> circuits_;
    std::vector<std::vector<int>> seg_inner_darts_; // per seg: inner darts (1 or 2 tris)
};

// Convenience: mark as barriers all components whose tag is in `tags`.
std::vector<char> barrier_mask_for_tags(const Drawing& d, const std::vector<int>& tags);

} // namespace scc
