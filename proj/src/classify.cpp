#include "scc/classify.hpp"

#include "scc/cutting.hpp"
#include "scc/errors.hpp"
#include "scc/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>

namespace scc {

namespace {

Drawing draw_single(const TriangulatedSurface& ts, const Weights& w, const char* who) {
    Drawing d = draw_normal(ts, w);
    auto comps = d.components();
    if (comps.size() != 1 || comps[0].is_arc)
        throw BadCurve(std::string(who) + " expects a single closed component");
    return d;
}

std::int64_t total(const Weights& w) {
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

bool has_original_boundary(const TriangulatedSurface& piece) {
    for (const auto& e : piece.edges)
        if (e.boundary_label > 0) return true;
    return false;
}

} // namespace

CurveClass classify_curve(const TriangulatedSurface& ts, const Weights& w) {
    Drawing d = draw_single(ts, w, "classify_curve");
    CutAlong cut(ts, d, {1});
    CurveClass out;
    for (int i = 0; i < cut.piece_count(); ++i) out.pieces.push_back(cut.piece(i).sig);
    std::sort(out.pieces.begin(), out.pieces.end());
    for (int i = 0; i < cut.piece_count(); ++i) {
        const TriangulatedSurface& piece = cut.piece(i);
        if (piece.sig == SurfaceSig{0, 1}) {
            out.type = CurveType::trivial;
            return out;
        }
        if (piece.sig == SurfaceSig{0, 2} && has_original_boundary(piece)) {
            out.type = CurveType::boundary_parallel;
            return out;
        }
    }
    out.type = cut.piece_count() == 1 ? CurveType::nonseparating : CurveType::separating;
    return out;
}

CurveType curve_type(const TriangulatedSurface& ts, const Weights& w) {
    return classify_curve(ts, w).type;
}

Weights canonicalize(const TriangulatedSurface& ts, const Weights& w) {
    Drawing d0 = draw_single(ts, w, "canonicalize");
    d0.taut();
    d0.vertex_slides();
    Weights best = d0.weights();

    // Close up under crossing-preserving vertex slides; a slide chain that
    // unlocks a strict reduction restarts the closure at the lower level.
    std::int64_t level = total(best);
    std::set<Weights> visited{best};
    std::deque<Weights> queue{best};
    constexpr std::size_t cap = 4096;
    while (!queue.empty()) {
        Weights cur = queue.front();
        queue.pop_front();
        int ties = draw_normal(ts, cur).vertex_tie_count();
        for (int i = 0; i < ties; ++i) {
            Drawing d = draw_normal(ts, cur);
            d.apply_vertex_tie(i);
            d.vertex_slides();
            Weights next = d.weights();
            if (total(next) < level) {
                level = total(next);
                best = next;
                visited = {next};
                queue = {next};
                break;
            }
            if (visited.insert(next).second) {
                if (visited.size() > cap)
                    throw BudgetExceeded("canonical form: vertex-slide closure past cap");
                queue.push_back(next);
                if (next < best) best = next;
            }
        }
    }
    return best;
}

bool is_bounding_pair(const TriangulatedSurface& ts, const Weights& a, const Weights& b) {
    if (curve_type(ts, a) != CurveType::nonseparating) return false;
    if (curve_type(ts, b) != CurveType::nonseparating) return false;
    if (canonicalize(ts, a) == canonicalize(ts, b)) return false; // isotopic
    if (geometric_intersection(ts, a, b) != 0) return false;
    Drawing d = draw_many(ts, {a, b});
    reduce_pairs(d, {{0, 1}});
    d.taut();
    assert(d.count_crossings() == 0);
    CutAlong cut(ts, d, {1, 1});
    return cut.piece_count() == 2;
}

bool disjoint_witness(const TriangulatedSurface& ts, const Weights& a, const Weights& b) {
    if (a.size() != b.size()) throw BadInput("weight vectors disagree in length");
    Weights sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    if (!is_admissible(ts, sum)) return false;
    Drawing d = draw_normal(ts, sum);
    auto comps = d.components();
    if (comps.size() != 2 || comps[0].is_arc || comps[1].is_arc) return false;
    Weights ca = canonicalize(ts, a);
    Weights cb = canonicalize(ts, b);
    Weights w0 = canonicalize(ts, comps[0].weights);
    Weights w1 = canonicalize(ts, comps[1].weights);
    return (w0 == ca && w1 == cb) || (w0 == cb && w1 == ca);
}

} // namespace scc
