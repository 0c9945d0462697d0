#include "scc/cutting.hpp"

#include <algorithm>
#include <cstdio>
#include <cassert>

#include "scc/errors.hpp"

namespace scc {

CutAlong::CutAlong(const TriangulatedSurface& ts, const Drawing& d,
                   std::vector<char> barrier_of_comp)
    : ts_(&ts), d_(d), rc_(d_, std::move(barrier_of_comp)) {
    // Barrier sanity: curves or arcs, each component embedded (crossings
    // between distinct barrier components are allowed and become piece
    // vertices), no returning chords.
    auto comps = d_.components();
    cut_label_.assign(comps.size(), 0);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        if (!rc_.is_barrier_comp(c)) continue;
        cut_label_[c] = -static_cast<int>(comp_of_label_.size()) - 1;
        comp_of_label_.push_back(c);
    }
    if (comp_of_label_.empty()) throw BadInput("cut needs at least one barrier component");
    // Arc endpoints and barrier crossings both produce circuits that mix
    // boundary labels on the pieces.
    bool mixed_labels_ok = rc_.crossing_count() > 0;
    for (int c : comp_of_label_) mixed_labels_ok = mixed_labels_ok || comps[c].is_arc;
    const auto comp_of_point = d_.component_of_points();
    for (int x = 0; x < rc_.crossing_count(); ++x) {
        const auto& cr = rc_.crossing(x);
        if (comp_of_point[d_.chord(cr.chord_a).p0] == comp_of_point[d_.chord(cr.chord_b).p0])
            throw BadInput("cut barrier component crosses itself");
    }
    for (int c = 0; c < d_.max_chord_id(); ++c) {
        if (!d_.chord(c).alive || !rc_.chord_is_barrier(c)) continue;
        int e0 = d_.point(d_.chord(c).p0).edge;
        if (e0 == d_.point(d_.chord(c).p1).edge && ts.edges[e0].interior())
            throw BadInput("cut barriers must be taut (returning chord)");
    }

    piece_of_region_.assign(rc_.region_count(), -1);
    seg_edge_.assign(rc_.seg_count(), -1);
    dart_edge_.assign(rc_.dart_count(), -1);
    fans_.resize(rc_.face_count());

    for (int r = 0; r < rc_.region_count(); ++r) {
        const auto& reg = rc_.region(r);
        int pi = static_cast<int>(pieces_.size());
        piece_of_region_[r] = pi;
        region_of_piece_.push_back(r);
        TriangulatedSurface out;

        for (int f : reg.faces) {
            const auto& face = rc_.face(f);
            assert(!face.outer);
            int k = static_cast<int>(face.cycle.size());
            assert(k >= 3);
            fans_[f].piece = pi;

            // one piece edge per polygon side
            std::vector<std::pair<int, bool>> side(k); // (edge id, forward)
            for (int pos = 0; pos < k; ++pos) {
                int dt = face.cycle[pos];
                const auto& dart = rc_.dart(dt);
                if (dart.is_seg) {
                    int s = dart.cell;
                    const auto& sedge = ts.edges[rc_.seg(s).edge];
                    if (!sedge.interior()) {
                        int e = static_cast<int>(out.edges.size());
                        out.edges.emplace_back();
                        out.edges.back().boundary_label = sedge.boundary_label;
                        seg_edge_[s] = e;
                        side[pos] = {e, true};
                    } else if (seg_edge_[s] < 0) {
                        int e = static_cast<int>(out.edges.size());
                        out.edges.emplace_back();
                        seg_edge_[s] = e;
                        side[pos] = {e, true};
                    } else {
                        side[pos] = {seg_edge_[s], false}; // second (backward) use
                    }
                } else {
                    const auto& pc = rc_.piece(dart.cell);
                    int e = static_cast<int>(out.edges.size());
                    out.edges.emplace_back();
                    out.edges.back().boundary_label = cut_label_[pc.comp];
                    dart_edge_[dt] = e;
                    side[pos] = {e, true};
                }
            }

            // fan diagonals (corner 0 to corner t) and fan triangles
            auto& diag = fans_[f].diag;
            diag.assign(k - 1, -1);
            for (int t = 2; t <= k - 2; ++t) {
                diag[t] = static_cast<int>(out.edges.size());
                out.edges.emplace_back();
            }
            for (int t = 1; t <= k - 2; ++t) {
                TriangulatedSurface::Tri tri;
                if (t == 1) {
                    tri.edge[0] = side[0].first;
                    tri.fwd[0] = side[0].second;
                } else {
                    tri.edge[0] = diag[t];
                    tri.fwd[0] = true;
                }
                tri.edge[1] = side[t].first;
                tri.fwd[1] = side[t].second;
                if (t == k - 2) {
                    tri.edge[2] = side[k - 1].first;
                    tri.fwd[2] = side[k - 1].second;
                } else {
                    tri.edge[2] = diag[t + 1];
                    tri.fwd[2] = false;
                }
                out.tris.push_back(tri);
            }
        }

        out.refresh();
        int chi = out.vertex_count - out.edge_count() + out.tri_count();
        int p = static_cast<int>(out.boundary_circuits().size());
        assert(chi == reg.euler);
        assert(p == static_cast<int>(reg.circuits.size()));
        int twog = 2 - chi - p;
        assert(twog >= 0 && twog % 2 == 0);
        out.sig = {twog / 2, p};
#ifndef NDEBUG
        if (auto findings = validate(out, mixed_labels_ok); !findings.empty()) {
            for (const auto& f : findings) std::fprintf(stderr, "piece validation: %s\n", f.c_str());
            assert(false && "cut piece failed validation");
        }
#endif
        (void)mixed_labels_ok;
        pieces_.push_back(std::move(out));
    }
}

int CutAlong::cut_label_of_comp(int comp) const {
    assert(comp >= 0 && comp < static_cast<int>(cut_label_.size()) && cut_label_[comp] != 0);
    return cut_label_[comp];
}

int CutAlong::comp_of_cut_label(int label) const {
    int rank = -label - 1;
    assert(rank >= 0 && rank < static_cast<int>(comp_of_label_.size()));
    return comp_of_label_[rank];
}

int CutAlong::fan_side(int f, int dartid) const {
    const auto& cyc = rc_.face(f).cycle;
    auto it = std::find(cyc.begin(), cyc.end(), dartid);
    assert(it != cyc.end());
    return static_cast<int>(it - cyc.begin());
}

std::pair<int, std::vector<std::int64_t>> CutAlong::transport(int tag) const {
    assert(d_.count_crossings(tag, tag) == 0);
    int region = -1;
    std::vector<std::int64_t> segraw(rc_.seg_count(), 0);
    std::vector<std::int64_t> w;

    for (int c = 0; c < d_.max_chord_id(); ++c) {
        const auto& ch = d_.chord(c);
        if (!ch.alive || d_.point(ch.p0).tag != tag) continue;
        if (rc_.chord_is_barrier(c)) throw BadInput("transport: tag is a barrier component");
        int f = rc_.face_of_nonbarrier_chord(c);
        int r = rc_.region_of_face(f);
        if (region < 0) {
            region = r;
            w.assign(pieces_[piece_of_region_[r]].edge_count(), 0);
        } else if (region != r) {
            throw BadInput("transport: tag spans several pieces");
        }

        int side[2];
        for (int end = 0; end < 2; ++end) {
            int pt = end ? ch.p1 : ch.p0;
            int s = rc_.seg_containing(d_.point(pt).edge, d_.index_on_edge(pt));
            segraw[s] += 1;
            int dt = rc_.inner_seg_dart(s, ch.tri);
            assert(rc_.dart(dt).face == f);
            side[end] = fan_side(f, dt);
        }
        int lo = std::min(side[0], side[1]), hi = std::max(side[0], side[1]);
        int k = static_cast<int>(rc_.face(f).cycle.size());
        for (int t = std::max(lo + 1, 2); t <= std::min(hi, k - 2); ++t)
            w[fans_[f].diag[t]] += 1;
    }
    if (region < 0) throw BadInput("transport: tag has no chords");

    int pi = piece_of_region_[region];
    for (int s = 0; s < rc_.seg_count(); ++s) {
        if (!segraw[s]) continue;
        assert(piece_of_region_[rc_.region_of_seg(s)] == pi);
        if (ts_->edges[rc_.seg(s).edge].interior()) {
            assert(segraw[s] % 2 == 0);
            w[seg_edge_[s]] += segraw[s] / 2;
        } else {
            w[seg_edge_[s]] += segraw[s];
        }
    }
    assert(is_admissible(pieces_[pi], w));
    return {pi, w};
}

std::vector<std::int64_t> CutAlong::back(int piece,
                                         const std::vector<std::int64_t>& w) const {
    const auto& ps = pieces_[piece];
    assert(static_cast<int>(w.size()) == ps.edge_count());
    for (int e = 0; e < ps.edge_count(); ++e)
        if (ps.edges[e].boundary_label < 0) assert(w[e] == 0);
    std::vector<std::int64_t> out(ts_->edge_count(), 0);
    for (int s = 0; s < rc_.seg_count(); ++s) {
        if (seg_edge_[s] < 0) continue;
        if (piece_of_region_[rc_.region_of_seg(s)] != piece) continue;
        out[rc_.seg(s).edge] += w[seg_edge_[s]];
    }
    return out;
}

} // namespace scc
