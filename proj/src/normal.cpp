#include "scc/drawing.hpp"

#include <cassert>

namespace scc {

std::array<std::int64_t, 3> corner_counts(const TriangulatedSurface& ts, const Weights& w, int tri) {
    std::array<std::int64_t, 3> c{};
    for (int k = 0; k < 3; ++k) {
        std::int64_t wk = w[ts.side_edge(tri, k)];
        std::int64_t wk1 = w[ts.side_edge(tri, (k + 1) % 3)];
        std::int64_t wk2 = w[ts.side_edge(tri, (k + 2) % 3)];
        c[k] = (wk2 + wk - wk1) / 2;
    }
    return c;
}

bool is_admissible(const TriangulatedSurface& ts, const Weights& w) {
    if (static_cast<int>(w.size()) != ts.edge_count())
        throw BadInput("weight vector length " + std::to_string(w.size()) + " does not match edge count " +
                       std::to_string(ts.edge_count()));
    for (auto x : w)
        if (x < 0) return false;
    for (int t = 0; t < ts.tri_count(); ++t) {
        std::int64_t sum = 0;
        for (int i = 0; i < 3; ++i) sum += w[ts.side_edge(t, i)];
        if (sum % 2 != 0) return false;
        for (auto c : corner_counts(ts, w, t))
            if (c < 0) return false;
    }
    return true;
}

Drawing draw_normal(const TriangulatedSurface& ts, const Weights& w) {
    return draw_many(ts, {w});
}

Drawing draw_many(const TriangulatedSurface& ts, const std::vector<Weights>& blocks) {
    for (const Weights& w : blocks)
        if (!is_admissible(ts, w)) throw BadCurve("weight vector is not admissible");
    Drawing d(ts);
    // Points: block 0 first on every edge, in intrinsic order.
    std::vector<std::vector<std::int64_t>> offset(blocks.size(), std::vector<std::int64_t>(ts.edge_count(), 0));
    for (int e = 0; e < ts.edge_count(); ++e) {
        std::int64_t off = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            offset[b][e] = off;
            for (std::int64_t q = 0; q < blocks[b][e]; ++q)
                d.insert_point(e, static_cast<int>(off + q), static_cast<int>(b));
            off += blocks[b][e];
        }
    }
    // Chords: the forced corner arcs of each block.
    for (size_t b = 0; b < blocks.size(); ++b) {
        const Weights& w = blocks[b];
        for (int t = 0; t < ts.tri_count(); ++t) {
            auto cc = corner_counts(ts, w, t);
            for (int k = 0; k < 3; ++k) {
                int e_out = ts.side_edge(t, k);              // side starting at corner k
                int e_in = ts.side_edge(t, (k + 2) % 3);     // side ending at corner k
                bool f_out = ts.side_fwd(t, k);
                bool f_in = ts.side_fwd(t, (k + 2) % 3);
                for (std::int64_t j = 1; j <= cc[k]; ++j) {
                    // j-th innermost arc at corner k: side k position j,
                    // side k+2 position (w - j + 1), within the block.
                    std::int64_t p_out = j;
                    std::int64_t p_in = w[e_in] - j + 1;
                    std::int64_t q_out = f_out ? p_out : w[e_out] + 1 - p_out;
                    std::int64_t q_in = f_in ? p_in : w[e_in] + 1 - p_in;
                    int pid_out = d.points_on_edge(e_out)[offset[b][e_out] + q_out - 1];
                    int pid_in = d.points_on_edge(e_in)[offset[b][e_in] + q_in - 1];
                    d.add_chord(t, pid_out, pid_in);
                }
            }
        }
    }
    return d;
}

} // namespace scc
