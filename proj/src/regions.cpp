#include "scc/regions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace scc {

namespace {

// ---------------------------------------------------------------------------
// exact chord geometry
//
// Each triangle's boundary vertices are placed on the parabola y = x^2 in
// cyclic order; chords become straight segments.  On the parabola, geometry
// factors: the crossing parameter of chord (u,v) along chord (p,q) is
//   t = (u-p)(v-p) / [(q-p)(u+v-p-q)],
// so crossing order along a chord is an exact small-integer fraction compare.
// A deterministic jitter on the abscissas removes concurrent triple points.
// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Frac {
    __int128 n, d; // d > 0
    Frac(__int128 nn, __int128 dd) : n(nn), d(dd) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        assert(d != 0);
    }
};
int frac_cmp(const Frac& a, const Frac& b) {
    __int128 l = a.n * b.d, r = b.n * a.d;
    return l < r ? -1 : (l > r ? 1 : 0);
}

bool cyc_inside(int x, int lo, int hi) {
    if (lo < hi) return lo < x && x < hi;
    return x > lo || x < hi;
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

std::vector<char> barrier_mask_for_tags(const Drawing& d, const std::vector<int>& tags) {
    auto comp = d.component_of_points();
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<char> mask(std::max(ncomp, 1), 0);
    for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
        if (comp[p] < 0) continue;
        int tag = d.point(p).tag;
        if (std::find(tags.begin(), tags.end(), tag) != tags.end()) mask[comp[p]] = 1;
    }
    return mask;
}

RegionComplex::RegionComplex(const Drawing& d, std::vector<char> barrier)
    : d_(&d), barrier_(std::move(barrier)) {
    comp_ = d.component_of_points();
    for (int p = 0; p < static_cast<int>(comp_.size()); ++p)
        if (comp_[p] >= 0 && comp_[p] >= static_cast<int>(barrier_.size())) barrier_.resize(comp_[p] + 1, 0);
    if (barrier_.empty()) barrier_.resize(1, 0);
    build();
}

int RegionComplex::seg_containing(int edge, int idx) const {
    int k = 0;
    for (int pid : bpts_[edge]) {
        if (d_->index_on_edge(pid) < idx)
            ++k;
        else
            break;
    }
    return k;
}

int RegionComplex::barrier_index_on_edge(int pid) const {
    const auto& v = bpts_[d_->point(pid).edge];
    auto it = std::find(v.begin(), v.end(), pid);
    assert(it != v.end());
    return static_cast<int>(it - v.begin());
}

int RegionComplex::inner_seg_dart(int seg, int tri) const {
    for (int dd : seg_inner_darts_[seg])
        if (darts_[dd].tri == tri) return dd;
    assert(false && "seg has no use in this triangle");
    return -1;
}

int RegionComplex::face_of_seg_in_tri(int seg, int tri) const {
    return darts_[inner_seg_dart(seg, tri)].face;
}

int RegionComplex::region_of_seg(int s) const {
    return faces_[darts_[seg_inner_darts_[s][0]].face].region;
}

int RegionComplex::face_of_nonbarrier_chord(int chord) const {
    const auto& ch = d_->chord(chord);
    assert(ch.alive && !chord_is_barrier(chord));
    int f = -1;
    for (int pid : {ch.p0, ch.p1}) {
        int e = d_->point(pid).edge;
        int s = seg_id(e, seg_containing(e, d_->index_on_edge(pid)));
        int fe = face_of_seg_in_tri(s, ch.tri);
        assert(f < 0 || f == fe);
        f = fe;
    }
    return f;
}

int RegionComplex::region_of_nonbarrier_chord(int chord) const {
    return faces_[face_of_nonbarrier_chord(chord)].region;
}

void RegionComplex::build() {
    const Drawing& d = *d_;
    const TriangulatedSurface& ts = d.surface();

    // -- seg cells ----------------------------------------------------------
    bpts_.assign(ts.edge_count(), {});
    for (int e = 0; e < ts.edge_count(); ++e)
        for (int pid : d.points_on_edge(e))
            if (barrier_[comp_[pid]]) bpts_[e].push_back(pid);
    seg_base_.assign(ts.edge_count(), 0);
    for (int e = 0; e < ts.edge_count(); ++e) {
        seg_base_[e] = static_cast<int>(segs_.size());
        int W = static_cast<int>(bpts_[e].size());
        for (int k = 0; k <= W; ++k) {
            Seg s;
            s.edge = e;
            s.k = k;
            s.lo_pid = k > 0 ? bpts_[e][k - 1] : -1;
            s.hi_pid = k < W ? bpts_[e][k] : -1;
            segs_.push_back(s);
        }
    }

    // -- barrier chords, crossings, pieces -----------------------------------
    piece_base_.assign(d.max_chord_id(), -1);
    std::vector<std::vector<int>> tri_chords(ts.tri_count());
    for (int c = 0; c < d.max_chord_id(); ++c) {
        if (!d.chord(c).alive) continue;
        if (!barrier_[comp_[d.chord(c).p0]]) continue;
        tri_chords[d.chord(c).tri].push_back(c);
    }
    std::vector<std::vector<int>> chord_cross(d.max_chord_id());
    for (int t = 0; t < ts.tri_count(); ++t) {
        const auto& list = tri_chords[t];
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (d.chords_cross(list[i], list[j])) {
                    Crossing x;
                    x.chord_a = list[i];
                    x.chord_b = list[j];
                    x.tri = t;
                    int id = static_cast<int>(crossings_.size());
                    crossings_.push_back(x);
                    chord_cross[list[i]].push_back(id);
                    chord_cross[list[j]].push_back(id);
                }
    }

    // boundary-cycle position of each barrier point per triangle, plus the
    // parabola abscissas used for exact crossing order.
    std::vector<std::array<int, 2>> pt_cycpos(d.max_point_id(), {-1, -1}); // per (point, use)
    auto cycpos_of = [&](int pid, int tri) {
        for (int u = 0; u < 2; ++u) {
            int v = pt_cycpos[pid][u];
            if (v >= 0 && (v >> 20) == tri) return v & ((1 << 20) - 1);
        }
        assert(false && "point has no position in this triangle");
        return -1;
    };

    struct BVert {
        int kind;
        int id;       // corner code / pid
        int seg_after; // seg cell of the bseg starting here
    };
    std::vector<std::vector<BVert>> tri_bverts(ts.tri_count());
    for (int t = 0; t < ts.tri_count(); ++t) {
        auto& bv = tri_bverts[t];
        for (int i = 0; i < 3; ++i) {
            int e = ts.side_edge(t, i);
            bool f = ts.side_fwd(t, i);
            int W = static_cast<int>(bpts_[e].size());
            auto seg_k = [&](int j) { return seg_id(e, f ? j : W - j); };
            bv.push_back({VK_SURFACE_VERTEX, 3 * t + i, seg_k(0)});
            for (int j = 0; j < W; ++j) {
                int pid = f ? bpts_[e][j] : bpts_[e][W - 1 - j];
                int pos = static_cast<int>(bv.size());
                if (pt_cycpos[pid][0] < 0)
                    pt_cycpos[pid][0] = (t << 20) | pos;
                else
                    pt_cycpos[pid][1] = (t << 20) | pos;
                bv.push_back({VK_EDGE_POINT, pid, seg_k(j + 1)});
            }
        }
    }

    // sort crossings along each chord (jitter abscissas until no ties)
    for (int t = 0; t < ts.tri_count(); ++t) {
        int M = static_cast<int>(tri_bverts[t].size());
        for (std::uint64_t seed = 0;; ++seed) {
            std::vector<std::int64_t> xpos(M);
            for (int m = 0; m < M; ++m)
                xpos[m] = 8LL * m + static_cast<std::int64_t>(splitmix64(seed * 1000003ULL + m) & 7ULL);
            bool ok = true;
            std::vector<std::vector<int>> sorted(tri_chords[t].size());
            for (size_t ci = 0; ci < tri_chords[t].size() && ok; ++ci) {
                int c = tri_chords[t][ci];
                auto& xs = chord_cross[c];
                if (xs.empty()) continue;
                std::int64_t p = xpos[cycpos_of(d.chord(c).p0, t)];
                std::int64_t q = xpos[cycpos_of(d.chord(c).p1, t)];
                auto tparam = [&](int xid) {
                    const Crossing& x = crossings_[xid];
                    int oc = x.chord_a == c ? x.chord_b : x.chord_a;
                    std::int64_t u = xpos[cycpos_of(d.chord(oc).p0, t)];
                    std::int64_t v = xpos[cycpos_of(d.chord(oc).p1, t)];
                    return Frac(static_cast<__int128>(u - p) * (v - p),
                                static_cast<__int128>(q - p) * (u + v - p - q));
                };
                std::vector<int> order = xs;
                std::sort(order.begin(), order.end(),
                          [&](int a, int b) { return frac_cmp(tparam(a), tparam(b)) < 0; });
                for (size_t i = 0; i + 1 < order.size(); ++i)
                    if (frac_cmp(tparam(order[i]), tparam(order[i + 1])) == 0) ok = false;
                sorted[ci] = order;
            }
            if (!ok) continue;
            for (size_t ci = 0; ci < tri_chords[t].size(); ++ci) {
                int c = tri_chords[t][ci];
                chord_cross[c] = sorted[ci];
                for (size_t i = 0; i < sorted[ci].size(); ++i) {
                    Crossing& x = crossings_[sorted[ci][i]];
                    (x.chord_a == c ? x.ja : x.jb) = static_cast<int>(i);
                }
            }
            break;
        }
    }

    for (int c = 0; c < d.max_chord_id(); ++c) {
        if (!d.chord(c).alive || !barrier_[comp_[d.chord(c).p0]]) continue;
        piece_base_[c] = static_cast<int>(pieces_.size());
        for (int j = 0; j <= static_cast<int>(chord_cross[c].size()); ++j) {
            Piece p;
            p.chord = c;
            p.j = j;
            p.comp = comp_[d.chord(c).p0];
            p.tag = d.point(d.chord(c).p0).tag;
            pieces_.push_back(p);
        }
    }

    // -- darts and rotations --------------------------------------------------
    std::vector<std::vector<int>> rots;       // rotation lists, ccw outgoing darts
    std::vector<int> rot_of_dart, pos_of_dart;
    seg_inner_darts_.assign(segs_.size(), {});
    auto add_dart = [&](Dart dd) {
        darts_.push_back(dd);
        rot_of_dart.push_back(-1);
        pos_of_dart.push_back(-1);
        return static_cast<int>(darts_.size()) - 1;
    };
    auto put_rot = [&](int rlist, int dart) {
        rot_of_dart[dart] = rlist;
        pos_of_dart[dart] = static_cast<int>(rots[rlist].size());
        rots[rlist].push_back(dart);
    };

    std::vector<int> outer_probe(ts.tri_count(), -1);
    for (int t = 0; t < ts.tri_count(); ++t) {
        const auto& bv = tri_bverts[t];
        int M = static_cast<int>(bv.size());
        std::vector<int> bseg_d0(M), bseg_d1(M);
        for (int m = 0; m < M; ++m) {
            const BVert& a = bv[m];
            const BVert& b = bv[(m + 1) % M];
            Dart d0;
            d0.is_seg = true;
            d0.cell = a.seg_after;
            d0.tri = t;
            d0.dir = 0;
            d0.tail_kind = a.kind;
            d0.tail_id = a.id;
            d0.head_kind = b.kind;
            d0.head_id = b.id;
            Dart d1 = d0;
            d1.dir = 1;
            std::swap(d1.tail_kind, d1.head_kind);
            std::swap(d1.tail_id, d1.head_id);
            bseg_d0[m] = add_dart(d0);
            bseg_d1[m] = add_dart(d1);
            darts_[bseg_d0[m]].twin = bseg_d1[m];
            darts_[bseg_d1[m]].twin = bseg_d0[m];
            seg_inner_darts_[a.seg_after].push_back(bseg_d0[m]);
        }
        outer_probe[t] = bseg_d1[0];

        // piece darts per local chord
        std::map<int, std::array<int, 2>> chord_end_darts; // chord -> outgoing dart at {p0,p1}
        std::map<int, std::array<std::array<int, 2>, 2>> cross_darts;
        // cross_darts[xid][which chord 0=a,1=b][0=toward p0, 1=toward p1]
        for (int c : tri_chords[t]) {
            const auto& xs = chord_cross[c];
            int n = static_cast<int>(xs.size());
            std::vector<int> node_kind(n + 2), node_id(n + 2);
            node_kind[0] = VK_EDGE_POINT;
            node_id[0] = d.chord(c).p0;
            node_kind[n + 1] = VK_EDGE_POINT;
            node_id[n + 1] = d.chord(c).p1;
            for (int i = 0; i < n; ++i) {
                node_kind[i + 1] = VK_CROSSING;
                node_id[i + 1] = xs[i];
            }
            std::vector<int> pd0(n + 1), pd1(n + 1);
            for (int j = 0; j <= n; ++j) {
                Dart d0;
                d0.is_seg = false;
                d0.cell = piece_id(c, j);
                d0.tri = t;
                d0.dir = 0;
                d0.tail_kind = node_kind[j];
                d0.tail_id = node_id[j];
                d0.head_kind = node_kind[j + 1];
                d0.head_id = node_id[j + 1];
                Dart d1 = d0;
                d1.dir = 1;
                std::swap(d1.tail_kind, d1.head_kind);
                std::swap(d1.tail_id, d1.head_id);
                pd0[j] = add_dart(d0);
                pd1[j] = add_dart(d1);
                darts_[pd0[j]].twin = pd1[j];
                darts_[pd1[j]].twin = pd0[j];
            }
            chord_end_darts[c] = {pd0[0], pd1[n]};
            for (int i = 0; i < n; ++i) {
                const Crossing& x = crossings_[xs[i]];
                int which = x.chord_a == c ? 0 : 1;
                cross_darts[xs[i]][which] = {pd1[i], pd0[i + 1]};
            }
        }

        // rotations: corners and barrier points along the boundary cycle
        for (int m = 0; m < M; ++m) {
            int rlist = static_cast<int>(rots.size());
            rots.emplace_back();
            int prev = (m + M - 1) % M;
            if (bv[m].kind == VK_SURFACE_VERTEX) {
                put_rot(rlist, bseg_d0[m]);
                put_rot(rlist, bseg_d1[prev]);
            } else {
                int pid = bv[m].id;
                int ch = -1;
                for (int c : {d.point(pid).chord[0], d.point(pid).chord[1]})
                    if (c >= 0 && d.chord(c).tri == t) ch = c;
                assert(ch >= 0 && "barrier point lacks a chord in this triangle");
                int dc = d.chord(ch).p0 == pid ? chord_end_darts[ch][0] : chord_end_darts[ch][1];
                put_rot(rlist, bseg_d0[m]);
                put_rot(rlist, dc);
                put_rot(rlist, bseg_d1[prev]);
            }
        }
        // rotations: crossings, ccw = [A->p0side, B->u, A->p1side, B->v]
        for (auto& [xid, cd] : cross_darts) {
            const Crossing& x = crossings_[xid];
            int mPa = cycpos_of(d.chord(x.chord_a).p0, t);
            int mQa = cycpos_of(d.chord(x.chord_a).p1, t);
            int mUb = cycpos_of(d.chord(x.chord_b).p0, t);
            bool u_is_p0 = cyc_inside(mUb, mPa, mQa);
            int rlist = static_cast<int>(rots.size());
            rots.emplace_back();
            put_rot(rlist, cd[0][0]);               // A toward p0
            put_rot(rlist, u_is_p0 ? cd[1][0] : cd[1][1]); // B toward u
            put_rot(rlist, cd[0][1]);               // A toward p1
            put_rot(rlist, u_is_p0 ? cd[1][1] : cd[1][0]); // B toward v
        }
    }

    // -- face tracing ---------------------------------------------------------
    auto next_dart = [&](int dd) {
        int tw = darts_[dd].twin;
        int rl = rot_of_dart[tw];
        int n = static_cast<int>(rots[rl].size());
        return rots[rl][(pos_of_dart[tw] - 1 + n) % n];
    };
    for (int dd = 0; dd < static_cast<int>(darts_.size()); ++dd) {
        if (darts_[dd].face >= 0) continue;
        int fid = static_cast<int>(faces_.size());
        Face f;
        f.tri = darts_[dd].tri;
        int cur = dd;
        do {
            darts_[cur].face = fid;
            f.cycle.push_back(cur);
            cur = next_dart(cur);
        } while (cur != dd);
        auto mn = std::min_element(f.cycle.begin(), f.cycle.end());
        std::rotate(f.cycle.begin(), mn, f.cycle.end());
        faces_.push_back(std::move(f));
    }
    for (int t = 0; t < ts.tri_count(); ++t) faces_[darts_[outer_probe[t]].face].outer = true;

    // -- glue and regions -----------------------------------------------------
    UF fuf(static_cast<int>(faces_.size()));
    for (int s = 0; s < static_cast<int>(segs_.size()); ++s) {
        auto& uses = seg_inner_darts_[s];
        assert(uses.size() == (ts.edges[segs_[s].edge].interior() ? 2u : 1u));
        if (uses.size() == 2) {
            darts_[uses[0]].glue = uses[1];
            darts_[uses[1]].glue = uses[0];
            fuf.unite(darts_[uses[0]].face, darts_[uses[1]].face);
        }
    }
    std::map<int, int> region_of_root;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        if (faces_[f].outer) continue;
        int r = fuf.find(f);
        auto it = region_of_root.find(r);
        if (it == region_of_root.end()) {
            it = region_of_root.emplace(r, static_cast<int>(regions_.size())).first;
            regions_.emplace_back();
        }
        faces_[f].region = it->second;
        regions_[it->second].faces.push_back(f);
    }

    // -- Euler characteristic of each region (cut along barriers) -------------
    UF iuf(2 * static_cast<int>(darts_.size()));
    auto tail_inst = [](int dd) { return 2 * dd; };
    auto head_inst = [](int dd) { return 2 * dd + 1; };
    for (const Face& f : faces_) {
        int n = static_cast<int>(f.cycle.size());
        for (int i = 0; i < n; ++i)
            iuf.unite(head_inst(f.cycle[i]), tail_inst(f.cycle[(i + 1) % n]));
    }
    for (int s = 0; s < static_cast<int>(segs_.size()); ++s) {
        auto& uses = seg_inner_darts_[s];
        if (uses.size() == 2) {
            iuf.unite(tail_inst(uses[0]), head_inst(uses[1]));
            iuf.unite(head_inst(uses[0]), tail_inst(uses[1]));
        }
    }
    std::vector<int> vclass_region(2 * darts_.size(), -1);
    std::vector<int> vcount(regions_.size(), 0), ecount(regions_.size(), 0);
    for (int dd = 0; dd < static_cast<int>(darts_.size()); ++dd) {
        const Dart& dt = darts_[dd];
        if (dt.face < 0 || faces_[dt.face].outer) continue;
        int r = faces_[dt.face].region;
        for (int inst : {tail_inst(dd), head_inst(dd)}) {
            int cl = iuf.find(inst);
            if (vclass_region[cl] != r) {
                // count each class once per region (classes never span regions)
                assert(vclass_region[cl] == -1);
                vclass_region[cl] = r;
                ++vcount[r];
            }
        }
        bool boundary = !dt.is_seg || dt.glue < 0;
        if (boundary) ++ecount[r];
    }
    for (int s = 0; s < static_cast<int>(segs_.size()); ++s)
        if (seg_inner_darts_[s].size() == 2)
            ++ecount[faces_[darts_[seg_inner_darts_[s][0]].face].region];
    for (int r = 0; r < static_cast<int>(regions_.size()); ++r)
        regions_[r].euler = vcount[r] - ecount[r] + static_cast<int>(regions_[r].faces.size());

    // -- boundary circuits -----------------------------------------------------
    std::map<int, int> out_of_class; // instance class -> outgoing boundary dart
    std::vector<int> bdarts;
    for (int dd = 0; dd < static_cast<int>(darts_.size()); ++dd) {
        const Dart& dt = darts_[dd];
        if (dt.face < 0 || faces_[dt.face].outer) continue;
        if (!dt.is_seg || dt.glue < 0) {
            bdarts.push_back(dd);
            auto [it, fresh] = out_of_class.emplace(iuf.find(tail_inst(dd)), dd);
            assert(fresh && "two boundary darts leave one vertex instance");
            (void)fresh;
        }
    }
    std::vector<char> seen(darts_.size(), 0);
    for (int start : bdarts) {
        if (seen[start]) continue;
        Circuit circ;
        circ.region = faces_[darts_[start].face].region;
        int cur = start;
        do {
            seen[cur] = 1;
            const Dart& dt = darts_[cur];
            CircuitItem item;
            item.dart = cur;
            item.is_seg = dt.is_seg;
            if (dt.is_seg) {
                item.boundary_label = ts.edges[segs_[dt.cell].edge].boundary_label;
            } else {
                const Piece& pc = pieces_[dt.cell];
                item.chord = pc.chord;
                item.piece_j = pc.j;
                item.comp = pc.comp;
                item.tag = pc.tag;
                item.dir = dt.dir;
            }
            item.junction_kind = dt.head_kind;
            item.junction_id = dt.head_id;
            circ.items.push_back(item);
            auto it = out_of_class.find(iuf.find(head_inst(cur)));
            assert(it != out_of_class.end());
            cur = it->second;
        } while (cur != start);
        int cid = static_cast<int>(circuits_.size());
        regions_[circ.region].circuits.push_back(cid);
        circuits_.push_back(std::move(circ));
    }

    // -- per-region summaries ----------------------------------------------------
    for (Region& r : regions_) {
        for (int cid : r.circuits)
            for (const CircuitItem& it : circuits_[cid].items) {
                if (it.is_seg)
                    r.touches_surface_boundary = true;
                else
                    r.comps.push_back(it.comp);
            }
        std::sort(r.comps.begin(), r.comps.end());
        r.comps.erase(std::unique(r.comps.begin(), r.comps.end()), r.comps.end());
    }
}

} // namespace scc
