#include "scc/drawing.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace scc {

Drawing::Drawing(const TriangulatedSurface& ts) : ts_(&ts), edge_pts_(ts.edge_count()) {}

int Drawing::insert_point(int edge, int idx, int tag) {
    assert(edge >= 0 && edge < ts_->edge_count());
    assert(idx >= 0 && idx <= static_cast<int>(edge_pts_[edge].size()));
    Point p;
    p.edge = edge;
    p.tag = tag;
    p.alive = true;
    int pid = static_cast<int>(points_.size());
    points_.push_back(p);
    edge_pts_[edge].insert(edge_pts_[edge].begin() + idx, pid);
    return pid;
}

int Drawing::add_chord(int tri, int p0, int p1) {
    assert(p0 != p1);
    assert(points_[p0].alive && points_[p1].alive);
    Chord c;
    c.tri = tri;
    c.p0 = p0;
    c.p1 = p1;
    c.alive = true;
    int cid = static_cast<int>(chords_.size());
    chords_.push_back(c);
    attach(p0, cid);
    attach(p1, cid);
    return cid;
}

void Drawing::attach(int pid, int cid) {
    auto& slots = points_[pid].chord;
    if (slots[0] < 0)
        slots[0] = cid;
    else {
        assert(slots[1] < 0);
        slots[1] = cid;
    }
}

void Drawing::detach(int pid, int cid) {
    auto& slots = points_[pid].chord;
    if (slots[0] == cid)
        slots[0] = std::exchange(slots[1], -1);
    else {
        assert(slots[1] == cid);
        slots[1] = -1;
    }
}

void Drawing::remove_chord(int c) {
    assert(chords_[c].alive);
    detach(chords_[c].p0, c);
    detach(chords_[c].p1, c);
    chords_[c].alive = false;
}

void Drawing::remove_point(int p) {
    assert(points_[p].alive);
    assert(points_[p].chord[0] < 0 && points_[p].chord[1] < 0);
    auto& order = edge_pts_[points_[p].edge];
    order.erase(std::find(order.begin(), order.end(), p));
    points_[p].alive = false;
}

int Drawing::point_count() const {
    int n = 0;
    for (const auto& p : points_)
        if (p.alive) ++n;
    return n;
}

int Drawing::chord_count_live() const {
    int n = 0;
    for (const auto& c : chords_)
        if (c.alive) ++n;
    return n;
}

int Drawing::index_on_edge(int p) const {
    const auto& order = edge_pts_[points_[p].edge];
    auto it = std::find(order.begin(), order.end(), p);
    assert(it != order.end());
    return static_cast<int>(it - order.begin());
}

int Drawing::side_in_tri(int p, int tri) const {
    for (int i = 0; i < 3; ++i)
        if (ts_->side_edge(tri, i) == points_[p].edge) return i;
    return -1;
}

std::pair<int, std::int64_t> Drawing::tri_coord(int p, int tri) const {
    int i = side_in_tri(p, tri);
    assert(i >= 0);
    std::int64_t W = static_cast<std::int64_t>(edge_pts_[points_[p].edge].size());
    std::int64_t k = index_on_edge(p);
    std::int64_t pos = ts_->side_fwd(tri, i) ? k + 1 : W - k;
    return {i, pos};
}

namespace {
bool cyclic_inside(std::pair<int, std::int64_t> x, std::pair<int, std::int64_t> lo,
                   std::pair<int, std::int64_t> hi) {
    if (lo < hi) return lo < x && x < hi;
    return x > lo || x < hi;
}
} // namespace

bool Drawing::chords_cross(int c0, int c1) const {
    const Chord& a = chords_[c0];
    const Chord& b = chords_[c1];
    assert(a.tri == b.tri);
    auto a0 = tri_coord(a.p0, a.tri), a1 = tri_coord(a.p1, a.tri);
    auto b0 = tri_coord(b.p0, b.tri), b1 = tri_coord(b.p1, b.tri);
    return cyclic_inside(b0, a0, a1) != cyclic_inside(b1, a0, a1);
}

int Drawing::other_chord(int p, int c) const {
    const auto& slots = points_[p].chord;
    if (slots[0] == c) return slots[1];
    assert(slots[1] == c);
    return slots[0];
}

std::int64_t Drawing::count_crossings() const {
    return count_crossings(-1, -1);
}

std::int64_t Drawing::count_crossings(int tag0, int tag1) const {
    std::vector<std::vector<int>> per_tri(ts_->tri_count());
    for (int c = 0; c < static_cast<int>(chords_.size()); ++c)
        if (chords_[c].alive) per_tri[chords_[c].tri].push_back(c);
    std::int64_t total = 0;
    for (const auto& list : per_tri) {
        for (size_t i = 0; i < list.size(); ++i) {
            for (size_t j = i + 1; j < list.size(); ++j) {
                int ti = points_[chords_[list[i]].p0].tag;
                int tj = points_[chords_[list[j]].p0].tag;
                if (tag0 >= 0) {
                    bool match = (ti == tag0 && tj == tag1) || (ti == tag1 && tj == tag0);
                    if (!match) continue;
                }
                if (chords_cross(list[i], list[j])) ++total;
            }
        }
    }
    return total;
}

void Drawing::check() const {
    for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
        if (!points_[p].alive) continue;
        const Point& pt = points_[p];
        int nch = (pt.chord[0] >= 0 ? 1 : 0) + (pt.chord[1] >= 0 ? 1 : 0);
        if (ts_->edges[pt.edge].interior()) {
            assert(nch == 2);
            assert(chords_[pt.chord[0]].tri != chords_[pt.chord[1]].tri);
        } else {
            assert(nch == 1);
        }
        auto& order = edge_pts_[pt.edge];
        assert(std::find(order.begin(), order.end(), p) != order.end());
    }
    for (const Chord& c : chords_) {
        if (!c.alive) continue;
        assert(points_[c.p0].alive && points_[c.p1].alive);
        assert(side_in_tri(c.p0, c.tri) >= 0 && side_in_tri(c.p1, c.tri) >= 0);
        assert(points_[c.p0].tag == points_[c.p1].tag);
    }
    // No two chords of one component may interleave (self-crossing).
    auto comp = component_of_points();
    std::vector<std::vector<int>> per_tri(ts_->tri_count());
    for (int c = 0; c < static_cast<int>(chords_.size()); ++c)
        if (chords_[c].alive) per_tri[chords_[c].tri].push_back(c);
    for (const auto& list : per_tri)
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (comp[chords_[list[i]].p0] == comp[chords_[list[j]].p0])
                    assert(!chords_cross(list[i], list[j]));
}

std::vector<int> Drawing::component_of_points() const {
    std::vector<int> parent(points_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Chord& c : chords_)
        if (c.alive) parent[find(c.p0)] = find(c.p1);
    std::vector<int> comp(points_.size(), -1);
    int next = 0;
    for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
        if (!points_[p].alive) continue;
        int r = find(p);
        if (comp[r] < 0) comp[r] = next++;
        comp[p] = comp[r];
    }
    // renumber so components are ordered by smallest point id (already true:
    // first live point of each class assigns the id).
    return comp;
}

std::vector<Drawing::Component> Drawing::components() const {
    std::vector<int> comp = component_of_points();
    int ncomp = 0;
    for (int p = 0; p < static_cast<int>(points_.size()); ++p)
        if (points_[p].alive) ncomp = std::max(ncomp, comp[p] + 1);
    std::vector<Component> out(ncomp);
    std::vector<int> start(ncomp, -1);
    // Arcs must start at an endpoint (single-chord point); circles at their
    // smallest point id.
    for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
        if (!points_[p].alive) continue;
        int k = comp[p];
        bool p_end = points_[p].chord[1] < 0;
        if (start[k] < 0) {
            start[k] = p;
            continue;
        }
        bool s_end = points_[start[k]].chord[1] < 0;
        if ((p_end && !s_end) || (p_end == s_end && p < start[k])) start[k] = p;
    }
    for (int k = 0; k < ncomp; ++k) {
        Component& c = out[k];
        c.weights.assign(ts_->edge_count(), 0);
        int p = start[k];
        assert(p >= 0);
        c.is_arc = points_[p].chord[1] < 0;
        c.tag = points_[p].tag;
        int prev_chord = -1;
        while (true) {
            c.points.push_back(p);
            c.weights[points_[p].edge] += 1;
            if (points_[p].tag != c.tag) c.tag = -1;
            int ch = (points_[p].chord[0] != prev_chord) ? points_[p].chord[0] : points_[p].chord[1];
            if (ch < 0) break; // arc endpoint reached
            c.chords.push_back(ch);
            const Chord& cc = chords_[ch];
            p = (cc.p0 == p) ? cc.p1 : cc.p0;
            prev_chord = ch;
            if (!c.is_arc && p == start[k]) break;
        }
    }
    return out;
}

Weights Drawing::weights() const {
    Weights w(ts_->edge_count(), 0);
    for (int e = 0; e < ts_->edge_count(); ++e) w[e] = static_cast<std::int64_t>(edge_pts_[e].size());
    return w;
}

bool Drawing::slide_one_returning_chord() {
    int best = -1;
    long long best_span = -1;
    int best_edge = -1, best_lo = -1;
    for (int c = 0; c < static_cast<int>(chords_.size()); ++c) {
        if (!chords_[c].alive) continue;
        const Chord& ch = chords_[c];
        if (points_[ch.p0].edge != points_[ch.p1].edge) continue;
        // free-standing arclets (arcs entering and leaving through the same
        // boundary edge with no continuation) are already taut
        if (other_chord(ch.p0, c) < 0 || other_chord(ch.p1, c) < 0) continue;
        int e = points_[ch.p0].edge;
        long long i0 = index_on_edge(ch.p0), i1 = index_on_edge(ch.p1);
        long long span = std::llabs(i0 - i1);
        long long lo = std::min(i0, i1);
        if (best < 0 || std::tuple(span, (long long)e, lo) <
                            std::tuple(best_span, (long long)best_edge, (long long)best_lo)) {
            best = c;
            best_span = span;
            best_edge = e;
            best_lo = static_cast<int>(lo);
        }
    }
    if (best < 0) return false;
    const Chord ch = chords_[best];
    int p0 = ch.p0, p1 = ch.p1;
    int c1 = other_chord(p0, best);
    int c2 = other_chord(p1, best);
    assert(c1 >= 0 && c2 >= 0);
    if (c1 == c2) throw BadCurve("trivial loop hugging an edge");
    // Across an interior edge the continuations sit in the neighbouring
    // triangle; on a boundary edge the curve only touches the edge and the
    // continuations share the chord's own triangle.  Either way the three
    // chords merge into one.
    int t2 = chords_[c1].tri;
    assert(chords_[c2].tri == t2);
    assert(ts_->edges[points_[p0].edge].interior() ? t2 != ch.tri : t2 == ch.tri);
    int x = chords_[c1].p0 == p0 ? chords_[c1].p1 : chords_[c1].p0;
    int y = chords_[c2].p0 == p1 ? chords_[c2].p1 : chords_[c2].p0;
    if (x == y) throw BadCurve("trivial loop hugging an edge");
    remove_chord(best);
    remove_chord(c1);
    remove_chord(c2);
    remove_point(p0);
    remove_point(p1);
    add_chord(t2, x, y);
    return true;
}

void Drawing::taut() {
    while (slide_one_returning_chord()) {
    }
}

// ---- interior-vertex slides ------------------------------------------------
//
// Corners at an interior vertex form a cyclic fan.  A chord between sides k
// and (k+2)%3 of a triangle cuts off corner k; an innermost consecutive run
// of such corner chords around the fan bounds a disk together with the
// vertex, so it can be rerouted through the complementary corners.  The
// reroute makes the curve tangent to the two spokes carrying the run's outer
// endpoints, so those crossings disappear too: the outer chords merge into
// the new route, and a run covering m of the d fan corners changes the
// crossing count by d - 2m - 2.  Only crossing-free drawings are handled;
// with crossings present the innermost-run argument breaks down.

namespace {

struct Fan {
    int vertex = -1;
    std::vector<std::pair<int, int>> corners; // (tri, corner) in cyclic order
};

std::vector<Fan> interior_fans(const TriangulatedSurface& ts) {
    std::vector<Fan> fans;
    std::vector<char> seen(ts.vertex_count, 0);
    for (int t = 0; t < ts.tri_count(); ++t)
        for (int k = 0; k < 3; ++k) {
            int v = ts.corner(t, k);
            if (ts.vertex_on_boundary[v] || seen[v]) continue;
            seen[v] = 1;
            Fan f;
            f.vertex = v;
            int ct = t, ck = k;
            do {
                f.corners.push_back({ct, ck});
                auto [pt, ps] = ts.partner(ct, ck);
                ct = pt;
                ck = (ps + 1) % 3;
            } while (ct != t || ck != k);
            fans.push_back(std::move(f));
        }
    return fans;
}

int cut_corner(int s0, int s1) {
    if (s0 == s1) return -1;
    return s1 == (s0 + 2) % 3 ? s0 : s1;
}

int endpoint_on_side(const Drawing& d, int c, int t, int side) {
    const auto& ch = d.chord(c);
    return d.side_in_tri(ch.p0, t) == side ? ch.p0 : ch.p1;
}

struct StarChain {
    int fan = -1;
    int first_pos = -1;      // fan position of chords.front()
    std::vector<int> chords; // consecutive around the fan
    bool loop = false;       // run closes up around the vertex (trivial comp)
};

struct StarScan {
    std::vector<Fan> fans;
    std::vector<StarChain> chains;
};

StarScan scan_star_chains(const Drawing& d) {
    const TriangulatedSurface& ts = d.surface();
    StarScan out;
    out.fans = interior_fans(ts);
    if (out.fans.empty()) return out;

    // innermost corner chord per (tri, corner)
    std::vector<int> inner(3 * ts.tri_count(), -1);
    std::vector<std::int64_t> inner_pos(3 * ts.tri_count(), 0);
    for (int c = 0; c < d.max_chord_id(); ++c) {
        const auto& ch = d.chord(c);
        if (!ch.alive) continue;
        int k = cut_corner(d.side_in_tri(ch.p0, ch.tri), d.side_in_tri(ch.p1, ch.tri));
        if (k < 0) continue;
        std::int64_t pos = d.tri_coord(endpoint_on_side(d, c, ch.tri, k), ch.tri).second;
        int key = 3 * ch.tri + k;
        if (inner[key] < 0 || pos < inner_pos[key]) {
            inner[key] = c;
            inner_pos[key] = pos;
        }
    }

    std::vector<char> visited(d.max_chord_id(), 0);
    for (int fi = 0; fi < static_cast<int>(out.fans.size()); ++fi) {
        const Fan& F = out.fans[fi];
        int dn = static_cast<int>(F.corners.size());
        // The chain member adjacent to chord c (sitting at fan position j)
        // across its exit (fwd) or entry (!fwd) junction, or -1.
        auto step = [&](int j, int c, bool fwd) -> int {
            auto [t, k] = F.corners[j];
            int p = endpoint_on_side(d, c, t, fwd ? k : (k + 2) % 3);
            int q = d.other_chord(p, c);
            if (q < 0) return -1;
            int jn = (j + (fwd ? 1 : dn - 1)) % dn;
            auto [tn, kn] = F.corners[jn];
            const auto& cn = d.chord(q);
            if (cn.tri != tn) return -1;
            if (cut_corner(d.side_in_tri(cn.p0, tn), d.side_in_tri(cn.p1, tn)) != kn) return -1;
            assert(inner[3 * tn + kn] == q && "neighbour of an innermost corner chord is innermost");
            return q;
        };

        for (int j0 = 0; j0 < dn; ++j0) {
            auto [t0, k0] = F.corners[j0];
            int c0 = inner[3 * t0 + k0];
            if (c0 < 0 || visited[c0]) continue;
            int cs = c0, js = j0;
            bool loop = false;
            for (int guard = 0; guard < dn; ++guard) {
                int cp = step(js, cs, false);
                if (cp < 0) break;
                if (cp == c0) {
                    loop = true;
                    break;
                }
                cs = cp;
                js = (js + dn - 1) % dn;
            }
            StarChain sc;
            sc.fan = fi;
            sc.loop = loop;
            sc.first_pos = js;
            sc.chords.push_back(cs);
            visited[cs] = 1;
            int cc = cs, jj = js;
            for (int guard = 0; guard + 1 < dn; ++guard) {
                int cn2 = step(jj, cc, true);
                if (cn2 < 0 || cn2 == sc.chords.front()) break;
                cc = cn2;
                jj = (jj + 1) % dn;
                sc.chords.push_back(cc);
                visited[cc] = 1;
            }
            if (!sc.loop) {
                // Degenerate runs that cannot be redrawn on the far side —
                // closing straight up at one point, ending an arc, or leaving
                // fewer than the representable number of far-side crossings —
                // are marked like loops so they are never slid.
                int m = static_cast<int>(sc.chords.size());
                auto [t1, k1] = F.corners[sc.first_pos];
                auto [tm, km] = F.corners[(sc.first_pos + m - 1) % dn];
                int u0 = endpoint_on_side(d, sc.chords.front(), t1, (k1 + 2) % 3);
                int um = endpoint_on_side(d, sc.chords.back(), tm, km);
                int cx = d.other_chord(u0, sc.chords.front());
                int cy = d.other_chord(um, sc.chords.back());
                if (u0 == um || cx < 0 || cy < 0) {
                    sc.loop = true;
                } else if (cx == cy) {
                    // the run plus one closing chord is the whole component
                    if (dn - m - 1 < 2) sc.loop = true;
                } else {
                    const auto& hx = d.chord(cx);
                    const auto& hy = d.chord(cy);
                    int x = hx.p0 == u0 ? hx.p1 : hx.p0;
                    int y = hy.p0 == um ? hy.p1 : hy.p0;
                    if (x == y && m == dn - 1) sc.loop = true;
                }
            }
            out.chains.push_back(std::move(sc));
        }
    }
    return out;
}

void apply_star_slide(Drawing& d, const Fan& F, const StarChain& sc) {
    int dn = static_cast<int>(F.corners.size());
    int m = static_cast<int>(sc.chords.size());
    assert(!sc.loop && m < dn);
    auto [t1, k1] = F.corners[sc.first_pos];
    int last_pos = (sc.first_pos + m - 1) % dn;
    auto [tm, km] = F.corners[last_pos];
    int u0 = endpoint_on_side(d, sc.chords.front(), t1, (k1 + 2) % 3);
    int um = endpoint_on_side(d, sc.chords.back(), tm, km);
    int cx = d.other_chord(u0, sc.chords.front()); // continuation past u0, in t(first_pos - 1)
    int cy = d.other_chord(um, sc.chords.back());  // continuation past um, in t(last_pos + 1)
    assert(u0 != um && cx >= 0 && cy >= 0);
    bool whole = cx == cy; // the run plus one closing chord is the whole component
    int x = -1, y = -1;
    if (whole) {
        assert(dn - m - 1 >= 2);
    } else {
        const auto& hx = d.chord(cx);
        const auto& hy = d.chord(cy);
        x = hx.p0 == u0 ? hx.p1 : hx.p0;
        y = hy.p0 == um ? hy.p1 : hy.p0;
        assert(x != y || m < dn - 1);
        assert(hx.tri == F.corners[(sc.first_pos + dn - 1) % dn].first);
        assert(hy.tri == F.corners[(last_pos + 1) % dn].first);
    }
    int tcx = d.chord(cx).tri;
    int tag = d.point(u0).tag;
    // drop the old run: its chords, the continuations, and every crossing
    // point swept across the vertex (junctions and the two outer endpoints)
    std::vector<int> junk{u0, um};
    for (int i = 0; i + 1 < m; ++i) {
        auto [t, k] = F.corners[(sc.first_pos + i) % dn];
        junk.push_back(endpoint_on_side(d, sc.chords[i], t, k));
    }
    for (int c : sc.chords) d.remove_chord(c);
    d.remove_chord(cx);
    if (!whole) d.remove_chord(cy);
    for (int p : junk) d.remove_point(p);
    // new crossings at the vertex ends of the complementary spokes; each
    // lies strictly inside whatever else cuts that corner, so the drawing
    // stays embedded
    std::vector<int> np;
    for (int i = 1; i <= dn - m - 1; ++i) {
        auto [t, k] = F.corners[(last_pos + i) % dn];
        int e = d.surface().side_edge(t, k);
        int at = d.surface().side_fwd(t, k) ? 0 : static_cast<int>(d.points_on_edge(e).size());
        np.push_back(d.insert_point(e, at, tag));
    }
    if (whole) {
        // the component re-closes across the old closing chord's triangle
        for (std::size_t i = 0; i + 1 < np.size(); ++i) {
            auto [t, k] = F.corners[(last_pos + 2 + static_cast<int>(i)) % dn];
            d.add_chord(t, np[i], np[i + 1]);
        }
        d.add_chord(tcx, np.back(), np.front());
    } else {
        // reroute from y around the far side of the vertex back to x
        int prev = y;
        for (std::size_t i = 0; i < np.size(); ++i) {
            auto [t, k] = F.corners[(last_pos + 1 + static_cast<int>(i)) % dn];
            d.add_chord(t, prev, np[i]);
            prev = np[i];
        }
        d.add_chord(F.corners[(sc.first_pos + dn - 1) % dn].first, prev, x);
    }
}

} // namespace

void Drawing::vertex_slides() {
    assert(count_crossings() == 0);
    assert(components().size() == 1);
    for (;;) {
        // a slide that re-closes a component can leave a returning chord;
        // keep the drawing taut between slides so runs stay recognizable
        while (slide_one_returning_chord()) {
        }
        StarScan s = scan_star_chains(*this);
        bool slid = false;
        for (const StarChain& sc : s.chains) {
            if (sc.loop) continue;
            int dn = static_cast<int>(s.fans[sc.fan].corners.size());
            if (2 * static_cast<int>(sc.chords.size()) >= dn) {
                apply_star_slide(*this, s.fans[sc.fan], sc);
                slid = true;
                break;
            }
        }
        if (!slid) return;
    }
}

int Drawing::vertex_tie_count() const {
    StarScan s = scan_star_chains(*this);
    int n = 0;
    for (const StarChain& sc : s.chains)
        if (!sc.loop && 2 * static_cast<int>(sc.chords.size()) ==
                            static_cast<int>(s.fans[sc.fan].corners.size()) - 2)
            ++n;
    return n;
}

void Drawing::apply_vertex_tie(int idx) {
    assert(count_crossings() == 0);
    assert(components().size() == 1);
    StarScan s = scan_star_chains(*this);
    for (const StarChain& sc : s.chains) {
        if (sc.loop || 2 * static_cast<int>(sc.chords.size()) !=
                           static_cast<int>(s.fans[sc.fan].corners.size()) - 2)
            continue;
        if (idx-- == 0) {
            apply_star_slide(*this, s.fans[sc.fan], sc);
            return;
        }
    }
    assert(false && "tie index out of range");
}

Weights boundary_pushoff(const TriangulatedSurface& ts, int start_edge) {
    if (start_edge < 0 || start_edge >= ts.edge_count() || ts.edges[start_edge].interior())
        throw BadInput("pushoff needs a boundary edge");
    Drawing d(ts);

    // Walk the circuit with the surface on the left (the boundary_circuits
    // rotation): pivoting around each head vertex crosses exactly the
    // interior edge ends the push-off meets, in strand order. Each crossing
    // sits near the pivot corner of its edge, so at most one point lands near
    // each edge end and the intrinsic position is forced.
    struct Hit {
        int point = -1;
        int tri_after = -1;
    };
    std::vector<Hit> hits;
    long long guard = 0;
    int e = start_edge;
    do {
        int t = ts.edges[e].tri0;
        int j = (ts.edges[e].side0 + 1) % 3;
        while (ts.edges[ts.tris[t].edge[j]].interior()) {
            if (++guard > 4LL * ts.edge_count() * (ts.tri_count() + 1))
                throw BadInput("pushoff walk does not close");
            int f = ts.tris[t].edge[j];
            bool near_start = ts.edges[f].tri0 == t && ts.edges[f].side0 == j;
            int idx = near_start ? 0 : static_cast<int>(d.points_on_edge(f).size());
            int p = d.insert_point(f, idx, 0);
            auto [t2, i2] = ts.partner(t, j);
            hits.push_back({p, t2});
            t = t2;
            j = (i2 + 1) % 3;
        }
        e = ts.tris[t].edge[j];
        if (++guard > 4LL * ts.edge_count() * (ts.tri_count() + 1))
            throw BadInput("pushoff walk does not close");
    } while (e != start_edge);

    if (hits.empty()) return Weights(ts.edge_count(), 0);
    if (hits.size() == 1) throw BadInput("pushoff crosses a single edge end");
    for (std::size_t k = 0; k < hits.size(); ++k)
        d.add_chord(hits[k].tri_after, hits[k].point, hits[(k + 1) % hits.size()].point);
#ifndef NDEBUG
    d.check();
#endif
    try {
        d.taut();
    } catch (const BadCurve&) {
        return Weights(ts.edge_count(), 0); // push-off was a trivial circle
    }
    return d.weights();
}

} // namespace scc
