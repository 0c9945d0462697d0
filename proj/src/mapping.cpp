#include "scc/mapping.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "scc/classify.hpp"
#include "scc/errors.hpp"
#include "scc/fixtures.hpp"
#include "scc/intersect.hpp"

namespace scc {

namespace {

// ---------------------------------------------------------------------------
// Uniform smoothing of every crossing of a drawing. A crossing is a pair of
// interleaved chords in one triangle; its two resolutions reconnect the four
// strand ends without crossing. Smoothing every crossing with one fixed
// handedness is exactly the reroute a twist performs once the twisting curve
// is present as parallel copies: each copy is absorbed into the image curve.
// ---------------------------------------------------------------------------

using Cyc = std::pair<int, std::int64_t>; // tri boundary coordinate, ccw order

// x strictly inside the ccw arc from a to b.
bool ccw_between(const Cyc& a, const Cyc& x, const Cyc& b) {
    if (a < b) return a < x && x < b;
    return a < x || x < b;
}

struct Partner {
    int other;    // local index of the crossing chord
    Cyc near_key; // partner endpoint inside this chord's p..q arc
    Cyc far_key;  // the partner's other endpoint
};

// Ends of the chain of segments a chord is divided into by its crossings:
// segment s runs from crossing s-1 to crossing s; ends -1 and m are the
// chord's own endpoints.
struct Slot {
    int chord = -1; // local index
    int seg = -1;
    int end = 0; // 0: the p0-side end of the segment, 1: the p1-side end
    auto operator<=>(const Slot&) const = default;
};

// Smooths every crossing inside one triangle. Returns false when the
// triangle has no crossings (drawing untouched). The resolution is
// role-asymmetric: at each crossing the image-curve strand is rerouted onto
// the copy strand, turning ccw for one twist sign and cw for the other —
// swapping which curve twists about which flips the outcome.
bool smooth_tri(Drawing& d, int tri, const std::vector<int>& chords, bool ccw) {
    const int n = static_cast<int>(chords.size());
    std::vector<char> is_target(n);
    for (int i = 0; i < n; ++i)
        is_target[i] = d.point(d.chord(chords[i]).p0).tag == 0 ? 1 : 0;
    std::vector<Cyc> kp(n), kq(n);
    for (int i = 0; i < n; ++i) {
        kp[i] = d.tri_coord(d.chord(chords[i]).p0, tri);
        kq[i] = d.tri_coord(d.chord(chords[i]).p1, tri);
    }
    std::vector<std::vector<Partner>> part(n);
    bool any = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!d.chords_cross(chords[i], chords[j])) continue;
            any = true;
            Partner pi{j, kp[j], kq[j]};
            if (!ccw_between(kp[i], pi.near_key, kq[i])) std::swap(pi.near_key, pi.far_key);
            part[i].push_back(pi);
            Partner pj{i, kp[i], kq[i]};
            if (!ccw_between(kp[j], pj.near_key, kq[j])) std::swap(pj.near_key, pj.far_key);
            part[j].push_back(pj);
        }
    if (!any) return false;

    // Order each chord's crossings from its p0 end. Crossings hanging off a
    // shared partner point: the partner whose far end sits ccw-later from q
    // crosses closer to p0; parallel duplicates tiebreak by index.
    for (int i = 0; i < n; ++i)
        std::sort(part[i].begin(), part[i].end(), [&](const Partner& a, const Partner& b) {
            if (a.near_key != b.near_key) return ccw_between(kp[i], a.near_key, b.near_key);
            if (a.far_key != b.far_key) return ccw_between(kq[i], b.far_key, a.far_key);
            return a.other < b.other;
        });
    auto cross_index = [&](int i, int other) {
        for (std::size_t s = 0; s < part[i].size(); ++s)
            if (part[i][s].other == other) return static_cast<int>(s);
        assert(false && "crossing partner lost");
        return -1;
    };

    // Pair the four strand ends at each crossing. In ccw boundary order the
    // ends alternate between the two chords; one handedness joins ends 0-1
    // and 2-3, the other 1-2 and 3-0.
    std::map<Slot, Slot> link;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < static_cast<int>(part[i].size()); ++s) {
            int j = part[i][s].other;
            if (j < i) continue;
            int t = cross_index(j, i);
            // slot.end: the end of that segment sitting at this crossing —
            // segment s meets its crossing s at the p1-side end (end=1),
            // segment s+1 at the p0-side end (end=0). The key is the
            // direction the segment leaves the crossing in.
            struct End {
                Cyc key;
                Slot slot;
            };
            std::array<End, 4> e{End{kp[i], Slot{i, s, 1}}, End{kq[i], Slot{i, s + 1, 0}},
                                 End{kp[j], Slot{j, t, 1}}, End{kq[j], Slot{j, t + 1, 0}}};
            std::sort(e.begin(), e.end(), [](const End& a, const End& b) { return a.key < b.key; });
            if (is_target[i] == is_target[j])
                throw BadCurve("crossing between two strands of the same role");
            // Around the crossing the ends alternate roles; pick the pairing
            // whose image-curve ends join their ccw-next (or cw-next) ends.
            const int tgt = is_target[i] ? i : j;
            const int bi = e[0].slot.chord == tgt ? 0 : 1;
            int off = (ccw ? bi : bi + 1) & 1;
            link[e[off].slot] = e[off + 1].slot;
            link[e[off + 1].slot] = e[off].slot;
            link[e[(off + 2) % 4].slot] = e[(off + 3) % 4].slot;
            link[e[(off + 3) % 4].slot] = e[(off + 2) % 4].slot;
        }

    // Walk the resolved strands between chord endpoints.
    std::set<std::pair<int, int>> visited; // (chord local, segment)
    std::vector<std::pair<int, int>> fresh; // new chords as point pairs
    for (int i = 0; i < n; ++i) {
        const int m = static_cast<int>(part[i].size());
        if (m == 0) continue;
        for (int side = 0; side < 2; ++side) {
            int seg = side == 0 ? 0 : m;
            if (visited.count({i, seg})) continue;
            int start_pt = side == 0 ? d.chord(chords[i]).p0 : d.chord(chords[i]).p1;
            int ci = i, cs = seg;
            // The end we entered through: boundary side. Exit through the
            // other end of each segment.
            int enter_end = side == 0 ? 0 : 1;
            int end_pt = -1;
            int guard = 0;
            for (;;) {
                if (++guard > 8 * (n + 2) * (n + 2))
                    throw BadCurve("crossing resolution walk does not close");
                visited.insert({ci, cs});
                int exit_end = 1 - enter_end;
                bool at_boundary = (exit_end == 0 && cs == 0) ||
                                   (exit_end == 1 && cs == static_cast<int>(part[ci].size()));
                if (at_boundary) {
                    end_pt = exit_end == 0 ? d.chord(chords[ci]).p0 : d.chord(chords[ci]).p1;
                    break;
                }
                Slot nxt = link.at(Slot{ci, cs, exit_end});
                ci = nxt.chord;
                cs = nxt.seg;
                enter_end = nxt.end;
            }
            assert(end_pt >= 0 && end_pt != start_pt);
            fresh.push_back({start_pt, end_pt});
        }
    }
    for (int i = 0; i < n; ++i) {
        const int m = static_cast<int>(part[i].size());
        if (m == 0) continue;
        for (int s = 0; s <= m; ++s)
            if (!visited.count({i, s}))
                throw BadCurve("crossing resolution closed up inside a triangle");
    }

    for (int i = 0; i < n; ++i)
        if (!part[i].empty()) d.remove_chord(chords[i]);
    for (auto [p0, p1] : fresh) d.add_chord(tri, p0, p1);
    return true;
}

// All live chords per triangle, then smooth triangle by triangle (crossings
// never span triangles).
void smooth_all(Drawing& d, bool ccw) {
    std::vector<std::vector<int>> per_tri(d.surface().tri_count());
    for (int c = 0; c < d.max_chord_id(); ++c)
        if (d.chord(c).alive) per_tri[d.chord(c).tri].push_back(c);
    for (int t = 0; t < d.surface().tri_count(); ++t)
        if (per_tri[t].size() >= 2) smooth_tri(d, t, per_tri[t], ccw);
    assert(d.count_crossings() == 0);
}

std::int64_t require_single_closed(const TriangulatedSurface& ts, const Weights& w,
                                   const char* who) {
    Drawing d = draw_normal(ts, w);
    auto comps = d.components();
    if (comps.size() != 1 || comps[0].is_arc)
        throw BadCurve(std::string(who) + " must be a single closed curve");
    std::int64_t t = 0;
    for (auto x : w) t += x;
    return t;
}

// Single component, closed or arc; returns true for an arc.
bool require_single(const TriangulatedSurface& ts, const Weights& w, const char* who) {
    Drawing d = draw_normal(ts, w);
    auto comps = d.components();
    if (comps.size() != 1)
        throw BadCurve(std::string(who) + " must be a single curve or arc");
    return comps[0].is_arc;
}

} // namespace

Weights apply_twist(const TriangulatedSurface& ts, const Weights& a, const Weights& b, int n) {
    require_single_closed(ts, a, "twisting curve");
    const bool arc = require_single(ts, b, "twisted curve/arc");
    const Weights ac = canonicalize(ts, a);
    Weights cur = arc ? b : canonicalize(ts, b);
    const std::int64_t k = geometric_intersection(ts, ac, cur);
    if (k == 0 || n == 0) return cur;

    const bool ccw = n < 0;
    for (int step = 0; step < std::abs(n); ++step) {
        std::vector<Weights> blocks;
        blocks.push_back(cur);
        for (std::int64_t j = 0; j < k; ++j) blocks.push_back(ac);
        Drawing d = draw_many(ts, blocks);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(blocks.size()); ++j) pairs.push_back({i, j});
        reduce_pairs(d, pairs);
        d.taut();
        for (int j = 1; j < static_cast<int>(blocks.size()); ++j) {
            assert(d.count_crossings(0, j) == k && "copy not in minimal position");
            for (int j2 = j + 1; j2 < static_cast<int>(blocks.size()); ++j2)
                assert(d.count_crossings(j, j2) == 0 && "parallel copies collide");
        }
        smooth_all(d, ccw);
        d.taut();
        auto comps = d.components();
        if (comps.size() != 1 || comps[0].is_arc != arc)
            throw BadCurve("twist resolution did not close into one curve");
        cur = d.weights();
    }
    // Arcs have no canonical normal form (endpoints slide along the
    // boundary); the taut representative is returned as-is.
    return arc ? cur : canonicalize(ts, cur);
}

// --- words -------------------------------------------------------------------

Word parse_word(const std::string& text) {
    Word w;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) return w; // empty word = identity
    for (;;) {
        skip_ws();
        std::size_t start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start) throw BadWord("expected a generator name at position " + std::to_string(i));
        WordStep st{text.substr(start, i - start), 1};
        skip_ws();
        if (i < n && text[i] == '^') {
            ++i;
            skip_ws();
            std::size_t es = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                throw BadWord("bad exponent in word near position " + std::to_string(es));
            st.exp = std::stoi(text.substr(es, i - es));
        }
        w.push_back(st);
        skip_ws();
        if (i == n) break;
        if (text[i] != '.') throw BadWord("expected '.' between word steps");
        ++i;
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << '.';
        os << w[i].name;
        if (w[i].exp != 1) os << '^' << w[i].exp;
    }
    return os.str();
}

namespace {

// Canonical form for closed curves; taut representative for arcs (arcs have
// no canonical normal form, their endpoints slide along the boundary).
Weights tidy(const TriangulatedSurface& ts, const Weights& w) {
    if (!require_single(ts, w, "word image")) return canonicalize(ts, w);
    Drawing d = draw_normal(ts, w);
    d.taut();
    return d.weights();
}

Weights apply_edge_permutation(const TriangulatedSurface& ts, const std::vector<int>& perm,
                               const Weights& w) {
    if (perm.size() != w.size()) throw BadInput("edge permutation length mismatch");
    Weights r(w.size(), 0);
    for (std::size_t e = 0; e < w.size(); ++e) r[perm[e]] = w[e];
    return tidy(ts, r);
}

const SurfaceSig kTwoHoledTorus{1, 2};

// Twist word of the pinned half twist (applied before the deck swap). The
// first six steps repeat the handle chain word three times: by the two-chain
// relation their square is the twist along "alpha", and the block acts
// trivially on every curve class inside the handle. The last six steps
// composed with the deck swap form an involution fixing "alpha", "b" and
// "c", so the product swaps the boundary components, is the identity on the
// handle, and squares to the "alpha" twist. Held in place by regression
// tests.
const char* kHalfTwistTail = "b.c.b.c.b.c.c2.c1.c2.c3.c2.c1";
// Sign s with h^2 acting as the twist along "alpha" to the power s.
const int kHalfSquareSign = 1;

} // namespace

Weights apply_word(const SurfaceSig& sig, const Word& w, const Weights& target) {
    const ReferenceFixtures& fx = reference_fixtures(sig);
    Weights cur = target;
    for (const WordStep& st : w) {
        if (st.name == "swap") {
            if (sig != kTwoHoledTorus)
                throw BadWord("'swap' only acts on the two-holed torus reference");
            if (((st.exp % 2) + 2) % 2 == 1)
                cur = apply_edge_permutation(fx.surface, s12_deck_edge_permutation(), cur);
        } else if (st.name == "h") {
            if (sig != kTwoHoledTorus)
                throw BadWord("'h' only acts on the two-holed torus reference");
            cur = apply_half_twist(cur, st.exp);
        } else {
            cur = apply_twist(fx.surface, fixture_curve(sig, st.name), cur, st.exp);
        }
    }
    return tidy(fx.surface, cur);
}

Word random_word(const SurfaceSig& sig, int length, std::uint64_t seed) {
    const ReferenceFixtures& fx = reference_fixtures(sig);
    if (fx.twist_generators.empty()) throw BadInput("no twist generators on " + to_string(sig));
    std::mt19937_64 rng(seed);
    Word w;
    for (int i = 0; i < length; ++i) {
        const std::string& g = fx.twist_generators[rng() % fx.twist_generators.size()];
        int exp = (rng() & 1) ? 1 : -1;
        w.push_back({g, exp});
    }
    return w;
}

Weights apply_half_twist(const Weights& target, int n) {
    const ReferenceFixtures& fx = reference_fixtures(kTwoHoledTorus);
    const int r = ((n % 2) + 2) % 2;
    const int k = (n - r) / 2;
    Weights cur = target;
    if (k != 0)
        cur = apply_twist(fx.surface, fixture_curve(kTwoHoledTorus, "alpha"), cur,
                          k * kHalfSquareSign);
    if (r == 1) {
        Word h = parse_word(kHalfTwistTail);
        h.push_back(WordStep{"swap", 1});
        cur = apply_word(kTwoHoledTorus, h, cur);
    }
    return tidy(fx.surface, cur);
}

} // namespace scc
