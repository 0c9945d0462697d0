#include "scc/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace scc {

std::string to_string(const SurfaceSig& sig) {
    std::ostringstream os;
    os << "S_{" << sig.genus << "," << sig.boundary << "}";
    return os.str();
}

std::pair<int, int> TriangulatedSurface::partner(int t, int i) const {
    const Edge& e = edges[tris[t].edge[i]];
    if (!e.interior()) throw BadInput("partner() on boundary edge");
    if (e.tri0 == t && e.side0 == i) return {e.tri1, e.side1};
    return {e.tri0, e.side0};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void TriangulatedSurface::refresh() {
    const int T = tri_count();
    const int E = edge_count();
    // Rebuild edge use records from the triangles (single source of truth).
    for (auto& e : edges) {
        e.tri0 = e.side0 = e.tri1 = e.side1 = -1;
    }
    for (int t = 0; t < T; ++t) {
        for (int i = 0; i < 3; ++i) {
            int ei = tris[t].edge[i];
            if (ei < 0 || ei >= E) throw BadInput("triangle side references bad edge index");
            Edge& e = edges[ei];
            if (tris[t].fwd[i]) {
                if (e.tri0 >= 0) throw BadInput("edge has two forward uses (orientation broken)");
                e.tri0 = t;
                e.side0 = i;
            } else {
                if (e.tri1 >= 0) throw BadInput("edge has two backward uses (orientation broken)");
                e.tri1 = t;
                e.side1 = i;
            }
        }
    }
    for (int ei = 0; ei < E; ++ei) {
        const Edge& e = edges[ei];
        if (e.tri0 < 0) throw BadInput("edge " + edge_name(ei) + " has no forward use");
        if (e.interior() && e.tri1 < 0)
            throw BadInput("interior edge " + edge_name(ei) + " has a single use");
        if (!e.interior() && e.tri1 >= 0)
            throw BadInput("boundary edge " + edge_name(ei) + " has two uses");
    }
    // Vertex classes: across an interior edge, the start corner of one use is
    // identified with the end corner of the other use.
    UnionFind uf(3 * T);
    for (const Edge& e : edges) {
        if (!e.interior()) continue;
        uf.unite(3 * e.tri0 + e.side0, 3 * e.tri1 + (e.side1 + 1) % 3);
        uf.unite(3 * e.tri0 + (e.side0 + 1) % 3, 3 * e.tri1 + e.side1);
    }
    corner_vertex.assign(3 * T, -1);
    std::map<int, int> ids;
    for (int c = 0; c < 3 * T; ++c) {
        int root = uf.find(c);
        auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
        corner_vertex[c] = it->second;
        (void)fresh;
    }
    vertex_count = static_cast<int>(ids.size());
    vertex_on_boundary.assign(vertex_count, false);
    for (const Edge& e : edges) {
        if (e.interior()) continue;
        vertex_on_boundary[corner(e.tri0, e.side0)] = true;
        vertex_on_boundary[corner(e.tri0, (e.side0 + 1) % 3)] = true;
    }
}

std::vector<std::vector<int>> TriangulatedSurface::boundary_circuits() const {
    std::vector<std::vector<int>> circuits;
    std::vector<bool> seen(edge_count(), false);
    for (int start = 0; start < edge_count(); ++start) {
        if (edges[start].interior() || seen[start]) continue;
        std::vector<int> circuit;
        int e = start;
        int guard = 0;
        do {
            if (++guard > 4 * edge_count() * (tri_count() + 1))
                throw BadInput("boundary walk does not close");
            circuit.push_back(e);
            seen[e] = true;
            // Rotate around the head vertex until the next boundary side.
            int t = edges[e].tri0;
            int j = (edges[e].side0 + 1) % 3;
            while (edges[tris[t].edge[j]].interior()) {
                auto [t2, i2] = partner(t, j);
                t = t2;
                j = (i2 + 1) % 3;
                if (++guard > 4 * edge_count() * (tri_count() + 1))
                    throw BadInput("vertex rotation does not close");
            }
            e = tris[t].edge[j];
        } while (e != start);
        circuits.push_back(std::move(circuit));
    }
    return circuits;
}

std::string TriangulatedSurface::edge_name(int e) const {
    if (e >= 0 && e < static_cast<int>(edge_names.size()) && !edge_names[e].empty())
        return edge_names[e];
    return "e" + std::to_string(e);
}

std::vector<std::string> validate(const TriangulatedSurface& input,
                                  bool allow_mixed_circuit_labels) {
    std::vector<std::string> findings;
    TriangulatedSurface ts = input;
    try {
        ts.refresh();
    } catch (const Error& err) {
        findings.push_back(std::string("structure: ") + err.what());
        return findings;
    }
    // Connectivity over triangles through interior edges.
    if (ts.tri_count() == 0) {
        findings.push_back("structure: no triangles");
        return findings;
    }
    std::vector<bool> reached(ts.tri_count(), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int i = 0; i < 3; ++i) {
            if (!ts.edges[ts.side_edge(t, i)].interior()) continue;
            auto [t2, i2] = ts.partner(t, i);
            (void)i2;
            if (!reached[t2]) {
                reached[t2] = true;
                stack.push_back(t2);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        findings.push_back("connectivity: triangulation is not connected");

    const int chi = ts.vertex_count - ts.edge_count() + ts.tri_count();
    if (chi != ts.sig.euler())
        findings.push_back("euler: chi=" + std::to_string(chi) + " but sig says " +
                           std::to_string(ts.sig.euler()));
    std::vector<std::vector<int>> circuits;
    try {
        circuits = ts.boundary_circuits();
    } catch (const Error& err) {
        findings.push_back(std::string("boundary: ") + err.what());
        return findings;
    }
    if (static_cast<int>(circuits.size()) != ts.sig.boundary)
        findings.push_back("boundary: " + std::to_string(circuits.size()) +
                           " circuits but sig says " + std::to_string(ts.sig.boundary));
    if (!allow_mixed_circuit_labels) {
        for (const auto& circuit : circuits) {
            int label = ts.edges[circuit.front()].boundary_label;
            for (int e : circuit) {
                if (ts.edges[e].boundary_label != label) {
                    findings.push_back("boundary: circuit mixes labels " + std::to_string(label) +
                                       " and " + std::to_string(ts.edges[e].boundary_label));
                    break;
                }
            }
        }
    }
    return findings;
}

namespace {

struct Token {
    std::string name;
    int sign = +1;         // -1 marks the reversed second occurrence
    int boundary_label = 0; // nonzero: single-occurrence boundary side
};

// Fan triangulation of a polygon with glued sides. Corners 0..k-1 ccw;
// triangle t (t = 1..k-2) is (0, t, t+1); diagonals d_t = (0 -> t).
TriangulatedSurface from_polygon_word(const std::vector<Token>& word, const SurfaceSig& sig) {
    const int k = static_cast<int>(word.size());
    if (k < 3) throw BadInput("polygon word too short");
    TriangulatedSurface ts;
    ts.sig = sig;

    std::map<std::string, int> first_use; // name -> edge id
    std::vector<int> side_edge(k, -1);
    std::vector<bool> side_fwd(k, true);
    for (int i = 0; i < k; ++i) {
        const Token& tok = word[i];
        auto it = first_use.find(tok.name);
        if (it == first_use.end()) {
            TriangulatedSurface::Edge e;
            e.boundary_label = tok.boundary_label;
            side_edge[i] = static_cast<int>(ts.edges.size());
            side_fwd[i] = true;
            first_use[tok.name] = side_edge[i];
            ts.edges.push_back(e);
            ts.edge_names.push_back(tok.name);
            if (tok.sign != +1) throw BadInput("polygon word: reversed side seen first: " + tok.name);
        } else {
            if (tok.sign != -1 || word[i].boundary_label != 0)
                throw BadInput("polygon word: bad second occurrence of " + tok.name);
            side_edge[i] = it->second;
            side_fwd[i] = false;
            if (!ts.edges[side_edge[i]].interior())
                throw BadInput("polygon word: boundary side repeated: " + tok.name);
        }
    }
    // Diagonals d_2 .. d_{k-2}.
    std::vector<int> diag(k, -1);
    for (int t = 2; t <= k - 2; ++t) {
        diag[t] = static_cast<int>(ts.edges.size());
        ts.edges.emplace_back();
        ts.edge_names.push_back("d" + std::to_string(t));
    }
    ts.tris.resize(k - 2);
    for (int t = 1; t <= k - 2; ++t) {
        TriangulatedSurface::Tri& tri = ts.tris[t - 1];
        // side 0: corner 0 -> t
        if (t == 1) {
            tri.edge[0] = side_edge[0];
            tri.fwd[0] = side_fwd[0];
        } else {
            tri.edge[0] = diag[t];
            tri.fwd[0] = true;
        }
        // side 1: corner t -> t+1 (polygon side s_t)
        tri.edge[1] = side_edge[t];
        tri.fwd[1] = side_fwd[t];
        // side 2: corner t+1 -> 0
        if (t == k - 2) {
            tri.edge[2] = side_edge[k - 1];
            tri.fwd[2] = side_fwd[k - 1];
        } else {
            tri.edge[2] = diag[t + 1];
            tri.fwd[2] = false;
        }
    }
    ts.refresh();
    return ts;
}

std::vector<Token> reference_word(const SurfaceSig& sig) {
    std::vector<Token> word;
    for (int i = 1; i <= sig.genus; ++i) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        word.push_back({a, +1, 0});
        word.push_back({b, +1, 0});
        word.push_back({a, -1, 0});
        word.push_back({b, -1, 0});
    }
    if (sig.boundary >= 1) {
        word.push_back({"r1", +1, 1});
        for (int j = 2; j <= sig.boundary; ++j) {
            std::string c = "c" + std::to_string(j);
            word.push_back({c, +1, 0});
            word.push_back({"r" + std::to_string(j), +1, j});
            word.push_back({c, -1, 0});
        }
    }
    return word;
}

const std::vector<int>& s11_cover_cocycle() {
    // Edges of the S_{1,1} reference in build order: a, b, r1, d2, d3.
    // phi(a)=1 and the per-triangle cocycle condition force phi(d2)=1.
    static const std::vector<int> phi = {1, 0, 0, 1, 0};
    return phi;
}

} // namespace

TriangulatedSurface double_cover(const TriangulatedSurface& base, const std::vector<int>& cocycle) {
    if (static_cast<int>(cocycle.size()) != base.edge_count())
        throw BadInput("cocycle length mismatch");
    for (int t = 0; t < base.tri_count(); ++t) {
        int sum = 0;
        for (int i = 0; i < 3; ++i) sum += cocycle[base.side_edge(t, i)] & 1;
        if (sum % 2 != 0) throw BadInput("cocycle condition fails on triangle " + std::to_string(t));
    }
    for (int e = 0; e < base.edge_count(); ++e)
        if (!base.edges[e].interior() && (cocycle[e] & 1))
            throw BadInput("cocycle must vanish on boundary edges");

    TriangulatedSurface cov;
    cov.tris.resize(2 * base.tri_count());
    cov.edges.resize(2 * base.edge_count());
    cov.edge_names.resize(2 * base.edge_count());
    // Cover edge 2e+s: its forward use is the sheet-s copy of the base
    // forward use; the backward use (if any) sits on sheet s xor phi(e).
    for (int e = 0; e < base.edge_count(); ++e) {
        const auto& be = base.edges[e];
        for (int s = 0; s < 2; ++s) {
            int ce = 2 * e + s;
            cov.edge_names[ce] = base.edge_name(e) + "@" + std::to_string(s);
            int t0 = 2 * be.tri0 + s;
            cov.tris[t0].edge[be.side0] = ce;
            cov.tris[t0].fwd[be.side0] = true;
            if (be.interior()) {
                int s1 = s ^ (cocycle[e] & 1);
                int t1 = 2 * be.tri1 + s1;
                cov.tris[t1].edge[be.side1] = ce;
                cov.tris[t1].fwd[be.side1] = false;
            } else {
                cov.edges[ce].boundary_label =
                    be.boundary_label + (s == 0 ? 0 : base.sig.boundary);
            }
        }
    }
    cov.refresh();
    const int chi = cov.vertex_count - cov.edge_count() + cov.tri_count();
    const int b = static_cast<int>(cov.boundary_circuits().size());
    if ((2 - chi - b) % 2 != 0) throw BadInput("cover signature is not integral");
    cov.sig = SurfaceSig{(2 - chi - b) / 2, b};
    return cov;
}

TriangulatedSurface build_reference_surface(const SurfaceSig& sig) {
    if (sig.genus < 0 || sig.boundary < 0 || sig.euler() >= 0)
        throw UnsupportedSurface("no reference triangulation for " + to_string(sig) +
                                 " (need negative Euler characteristic)");
    if (sig == SurfaceSig{1, 2}) {
        // Built as the free Z/2 cover of the S_{1,1} reference so the sheet
        // swap is a simplicial involution exchanging the boundary components
        // (used by the marked half-twist model).
        TriangulatedSurface base = build_reference_surface(SurfaceSig{1, 1});
        return double_cover(base, s11_cover_cocycle());
    }
    return from_polygon_word(reference_word(sig), sig);
}

std::vector<int> s12_deck_edge_permutation() {
    TriangulatedSurface base = build_reference_surface(SurfaceSig{1, 1});
    std::vector<int> perm(2 * base.edge_count());
    for (int e = 0; e < base.edge_count(); ++e) {
        perm[2 * e] = 2 * e + 1;
        perm[2 * e + 1] = 2 * e;
    }
    return perm;
}

} // namespace scc
