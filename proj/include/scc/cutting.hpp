#pragma once
// Cutting a surface along the barrier components of a drawing (embedded
// closed curves or arcs; distinct barrier components may cross).  Every
// complement region becomes a triangulated piece: each arrangement face is
// fanned into triangles from its first corner, interior seg cells glue
// neighbouring fans together, the two sides of each barrier chord become cut
// boundary edges labelled -(k+1) for barrier component k, and segs on
// original boundary edges keep their labels.  Barrier crossings and arc
// endpoints become piece vertices.  Components that avoid the barriers
// transport to normal coordinates on their piece; piece weights map back to
// the surface by summing over the seg cells of each original edge.

#include "scc/regions.hpp"
#include "scc/surface.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace scc {

class CutAlong {
public:
    // Requires: each barrier component is embedded (no self-crossings) and
    // taut (no returning chords on interior edges); distinct barrier
    // components may cross each other.
    CutAlong(const TriangulatedSurface& ts, const Drawing& d,
             std::vector<char> barrier_of_comp);

    int piece_count() const { return static_cast<int>(pieces_.size()); }
    const TriangulatedSurface& piece(int i) const { return pieces_[i]; }
    int piece_of_region(int r) const { return piece_of_region_[r]; }
    int region_of_piece(int i) const { return region_of_piece_[i]; }
    const RegionComplex& region_complex() const { return rc_; }
    const TriangulatedSurface& base() const { return *ts_; }

    // Cut boundary label carried by the sides of barrier component `comp`.
    int cut_label_of_comp(int comp) const;
    int comp_of_cut_label(int label) const;

    // Piece index and normal coordinates of the components tagged `tag`
    // (all their chords must avoid the barriers and lie in one region).
    std::pair<int, std::vector<std::int64_t>> transport(int tag) const;

    // Surface weights of a curve drawn on a piece; the weights must vanish
    // on the piece's cut boundary edges.
    std::vector<std::int64_t> back(int piece, const std::vector<std::int64_t>& w) const;

    // Piece edge holding seg cell s (-1 until assigned; segs belong to
    // exactly one piece).  Edge ids are piece-local.
    int piece_edge_of_seg(int s) const { return seg_edge_[s]; }
    // Piece edge made from a barrier chord dart (cut boundary side).
    int piece_edge_of_chord_dart(int dart) const { return dart_edge_[dart]; }

private:
    struct FaceFan {
        int piece = -1;
        std::vector<int> diag; // diag[t] (t = 2..k-2): piece edge of fan diagonal
    };

    int fan_side(int f, int pos) const; // position of a dart in its face cycle

    const TriangulatedSurface* ts_;
    Drawing d_; // snapshot of the drawing the complex is built over
    RegionComplex rc_;

    std::vector<TriangulatedSurface> pieces_;
    std::vector<int> piece_of_region_, region_of_piece_;
    std::vector<int> seg_edge_;        // seg id -> piece edge
    std::vector<int> dart_edge_;       // chord dart id -> piece edge
    std::vector<FaceFan> fans_;        // per face
    std::vector<int> cut_label_;       // comp id -> negative label (0: not barrier)
    std::vector<int> comp_of_label_;   // rank -> comp id
};

} // namespace scc
