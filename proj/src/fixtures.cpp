#include "scc/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "scc/classify.hpp"
#include "scc/errors.hpp"
#include "scc/intersect.hpp"

namespace scc {

// --- slopes ------------------------------------------------------------------

Slope normalize_slope(int p, int q) {
    if (p == 0 && q == 0) throw BadInput("slope (0,0)");
    if (std::gcd(std::abs(p), std::abs(q)) != 1) throw BadInput("slope not primitive");
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

std::int64_t slope_det(Slope a, Slope b) {
    return std::abs(static_cast<std::int64_t>(a.p) * b.q - static_cast<std::int64_t>(a.q) * b.p);
}

namespace {

// Position of a slope on the projective circle: linear order by p/q with
// (1,0) smallest; the circle closes between the largest value and (1,0).
bool slope_less(Slope a, Slope b) {
    if (a == b) return false;
    if (a.q == 0) return true;
    if (b.q == 0) return false;
    return static_cast<std::int64_t>(a.p) * b.q < static_cast<std::int64_t>(b.p) * a.q;
}

// Do {x,y} separate u from v on the circle?
bool separates(Slope x, Slope y, Slope u, Slope v) {
    if (slope_less(y, x)) std::swap(x, y);
    bool u_in = slope_less(x, u) && slope_less(u, y);
    bool v_in = slope_less(x, v) && slope_less(v, y);
    return u_in != v_in;
}

Slope mediant_other(Slope a, Slope b, Slope not_this) {
    auto cand = [&](int p, int q) { return normalize_slope(p, q); };
    Slope s1 = cand(a.p + b.p, a.q + b.q);
    Slope s2 = (a.p - b.p == 0 && a.q - b.q == 0) ? s1 : cand(a.p - b.p, a.q - b.q);
    if (s1 == not_this) return s2;
    return s1;
}

Weights add(const Weights& a, const Weights& b) {
    Weights r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

Weights slope_weights(Slope s) {
    // Central triangle of the reference: these three are the lightest curves
    // and pairwise intersect once (pinned by the slope-oracle regression).
    struct Corner {
        Slope s;
        Weights w;
    };
    Corner A{Slope{1, 0}, {1, 0, 0, 1, 0}};
    Corner B{Slope{0, 1}, {0, 1, 0, 1, 1}};
    Corner C{Slope{1, 1}, {1, 1, 0, 0, 1}};
    for (int guard = 0; guard < 1 << 20; ++guard) {
        if (s == A.s) return A.w;
        if (s == B.s) return B.w;
        if (s == C.s) return C.w;
        // Flip across the edge whose opposite corner is cut off from s.
        if (separates(A.s, B.s, C.s, s)) {
            C = Corner{mediant_other(A.s, B.s, C.s), add(A.w, B.w)};
        } else if (separates(A.s, C.s, B.s, s)) {
            B = Corner{mediant_other(A.s, C.s, B.s), add(A.w, C.w)};
        } else {
            A = Corner{mediant_other(B.s, C.s, A.s), add(B.w, C.w)};
        }
    }
    throw BadInput("slope walk does not terminate");
}

std::vector<Slope> reduced_slopes(int max_entry) {
    std::vector<Slope> out;
    for (int p = -max_entry; p <= max_entry; ++p)
        for (int q = -max_entry; q <= max_entry; ++q) {
            if (q < 0 || (q == 0 && p != 1)) continue;
            if (p == 0 && q == 0) continue;
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            out.push_back(Slope{p, q});
        }
    std::sort(out.begin(), out.end(),
              [](Slope a, Slope b) { return std::pair(a.p, a.q) < std::pair(b.p, b.q); });
    return out;
}

// --- light curve tables --------------------------------------------------------

namespace {

// Enumeration order that completes triangles as early as possible: walk the
// triangles and append unseen side edges.
std::vector<int> enumeration_order(const TriangulatedSurface& ts) {
    std::vector<int> order;
    std::vector<bool> seen(ts.edge_count(), false);
    for (int t = 0; t < ts.tri_count(); ++t)
        for (int i = 0; i < 3; ++i) {
            int e = ts.side_edge(t, i);
            if (!seen[e]) {
                seen[e] = true;
                order.push_back(e);
            }
        }
    return order;
}

void enumerate_rec(const TriangulatedSurface& ts, const std::vector<int>& order,
                   const std::vector<std::vector<int>>& ready, std::size_t pos, std::int64_t left,
                   Weights& w, std::vector<Weights>& out) {
    if (pos == order.size()) {
        std::int64_t tot = 0;
        for (auto x : w) tot += x;
        if (tot == 0) return;
        Drawing d = draw_normal(ts, w);
        auto comps = d.components();
        if (comps.size() == 1 && !comps[0].is_arc) out.push_back(w);
        return;
    }
    int e = order[pos];
    for (std::int64_t v = 0; v <= left; ++v) {
        w[e] = v;
        bool ok = true;
        for (int t : ready[pos]) {
            std::int64_t a = w[ts.side_edge(t, 0)], b = w[ts.side_edge(t, 1)],
                         c = w[ts.side_edge(t, 2)];
            if ((a + b + c) % 2 != 0 || a > b + c || b > a + c || c > a + b) {
                ok = false;
                break;
            }
        }
        if (ok) enumerate_rec(ts, order, ready, pos + 1, left - v, w, out);
    }
    w[e] = 0;
}

} // namespace

const std::vector<Weights>& light_curves(const SurfaceSig& sig, std::int64_t max_total) {
    static std::map<std::pair<SurfaceSig, std::int64_t>, std::vector<Weights>> cache;
    auto key = std::pair(sig, max_total);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    TriangulatedSurface ts = build_reference_surface(sig);
    std::vector<int> order = enumeration_order(ts);
    std::vector<int> pos_of_edge(ts.edge_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos_of_edge[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> ready(order.size());
    for (int t = 0; t < ts.tri_count(); ++t) {
        int last = std::max({pos_of_edge[ts.side_edge(t, 0)], pos_of_edge[ts.side_edge(t, 1)],
                             pos_of_edge[ts.side_edge(t, 2)]});
        ready[last].push_back(t);
    }
    Weights w(ts.edge_count(), 0);
    std::vector<Weights> raw;
    enumerate_rec(ts, order, ready, 0, max_total, w, raw);

    std::set<Weights> canon;
    for (const Weights& c : raw) {
        CurveType t = curve_type(ts, c);
        if (t == CurveType::trivial || t == CurveType::boundary_parallel) continue;
        canon.insert(canonicalize(ts, c));
    }
    auto [slot, fresh] = cache.emplace(key, std::vector<Weights>(canon.begin(), canon.end()));
    (void)fresh;
    return slot->second;
}

// --- named fixtures --------------------------------------------------------------

namespace {

std::int64_t total(const Weights& w) {
    std::int64_t t = 0;
    for (auto x : w) t += x;
    return t;
}

// Order candidates by total weight then lex: the deterministic search order.
std::vector<Weights> by_weight(const std::vector<Weights>& in) {
    std::vector<Weights> v = in;
    std::stable_sort(v.begin(), v.end(), [](const Weights& a, const Weights& b) {
        auto ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return v;
}

// First chain (i(c_j, c_{j+1}) = 1, other pairs disjoint, all curves
// distinct) of the requested length over the candidate list, by depth-first
// search in candidate order.
bool chain_rec(const TriangulatedSurface& ts, const std::vector<Weights>& cands,
               IntersectionCache& ic, std::vector<Weights>& chain, std::size_t want) {
    if (chain.size() == want) return true;
    for (const Weights& x : cands) {
        bool ok = std::find(chain.begin(), chain.end(), x) == chain.end();
        for (std::size_t j = 0; ok && j < chain.size(); ++j) {
            std::int64_t need = (j + 1 == chain.size()) ? 1 : 0;
            if (ic.i(chain[j], x) != need) ok = false;
        }
        if (!ok) continue;
        chain.push_back(x);
        if (chain_rec(ts, cands, ic, chain, want)) return true;
        chain.pop_back();
    }
    return false;
}

ReferenceFixtures build_fixtures(const SurfaceSig& sig) {
    ReferenceFixtures fx;
    fx.surface = build_reference_surface(sig);

    if (sig == SurfaceSig{1, 1}) {
        fx.curves["a"] = slope_weights(Slope{1, 0});
        fx.curves["b"] = slope_weights(Slope{0, 1});
        fx.twist_generators = {"a", "b"};
        return fx;
    }

    // Twist generators: a chain of 2g+1 non-separating curves when there is
    // genus (consecutive curves meet once); genus zero has only separating
    // curves, which meet evenly, so the three lightest essential curves stand
    // in. Chains drive the word machinery and the orbit searches.
    IntersectionCache ic(fx.surface);
    std::vector<Weights> chain;
    if (sig.genus == 0) {
        auto cands = by_weight(light_curves(sig, 10));
        if (cands.size() < 3)
            throw BadInput("fewer than three light essential curves on " + to_string(sig));
        chain.assign(cands.begin(), cands.begin() + 3);
    } else {
        const std::size_t want = 2 * sig.genus + 1;
        for (std::int64_t bound : {6, 8, 10}) {
            std::vector<Weights> nonsep;
            for (const Weights& c : by_weight(light_curves(sig, bound)))
                if (curve_type(fx.surface, c) == CurveType::nonseparating) nonsep.push_back(c);
            chain.clear();
            if (chain_rec(fx.surface, nonsep, ic, chain, want)) break;
        }
        if (chain.size() != want)
            throw BadInput("no twist-generator chain of length " + std::to_string(want) + " on " +
                           to_string(sig));
    }
    for (std::size_t j = 0; j < chain.size(); ++j) {
        std::string name = "c" + std::to_string(j + 1);
        fx.curves[name] = chain[j];
        fx.twist_generators.push_back(name);
    }

    if (sig == SurfaceSig{1, 2}) {
        // "alpha": the lightest separating curve (the half-twist axis; it
        // cuts off the handle). "b", "c": the lightest pair of curves inside
        // that handle meeting once — the handle's coordinate frame.
        IntersectionCache ic(fx.surface);
        for (const Weights& w : by_weight(light_curves(sig, 14))) {
            if (curve_type(fx.surface, w) != CurveType::separating) continue;
            fx.curves["alpha"] = w;
            break;
        }
        if (!fx.curves.count("alpha"))
            throw BadInput("no separating curve found on " + to_string(sig));
        const Weights& alpha = fx.curves.at("alpha");
        std::vector<Weights> handle;
        for (const Weights& w : by_weight(light_curves(sig, 14)))
            if (curve_type(fx.surface, w) == CurveType::nonseparating && ic.i(w, alpha) == 0)
                handle.push_back(w);
        for (std::size_t i = 0; i < handle.size() && !fx.curves.count("b"); ++i)
            for (std::size_t j = i + 1; j < handle.size(); ++j)
                if (ic.i(handle[i], handle[j]) == 1) {
                    fx.curves["b"] = handle[i];
                    fx.curves["c"] = handle[j];
                    break;
                }
        if (!fx.curves.count("b"))
            throw BadInput("no once-meeting curve pair in the handle on " + to_string(sig));
    }
    return fx;
}

} // namespace

const ReferenceFixtures& reference_fixtures(const SurfaceSig& sig) {
    static std::map<SurfaceSig, ReferenceFixtures> cache;
    auto it = cache.find(sig);
    if (it != cache.end()) return it->second;
    auto [slot, fresh] = cache.emplace(sig, build_fixtures(sig));
    (void)fresh;
    return slot->second;
}

const Weights& fixture_curve(const SurfaceSig& sig, const std::string& name) {
    const ReferenceFixtures& fx = reference_fixtures(sig);
    auto it = fx.curves.find(name);
    if (it == fx.curves.end())
        throw BadInput("unknown fixture curve '" + name + "' on " + to_string(sig));
    return it->second;
}

} // namespace scc
