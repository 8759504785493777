#include "spt/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace spt {

int perm_parity(const std::vector<int>& seq) {
    std::vector<int> s = seq;
    int par = 1;
    for (size_t i = 0; i < s.size(); ++i) {
        size_t m = i;
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[j] < s[m]) m = j;
        if (m != i) {
            std::swap(s[i], s[m]);
            par = -par;
        }
    }
    return par;
}

namespace {
Triangle mk_tri(std::array<int, 3> ccw, std::array<int, 3> edges) {
    Triangle t;
    t.ccw = ccw;
    t.edges = edges;
    t.sigma = perm_parity({ccw[0], ccw[1], ccw[2]});
    t.verts = ccw;
    std::sort(t.verts.begin(), t.verts.end());
    if (t.verts[0] == t.verts[1] || t.verts[1] == t.verts[2])
        throw std::invalid_argument("degenerate triangle");
    return t;
}

void finish(TriLattice& lat) {
    lat.edge_tris.assign(lat.edges.size(), {});
    for (size_t t = 0; t < lat.tris.size(); ++t)
        for (int e : lat.tris[t].edges) lat.edge_tris[e].push_back(static_cast<int>(t));
    lat.vertex_edges.assign(lat.nv, {});
    for (size_t e = 0; e < lat.edges.size(); ++e) {
        auto [vp, vm] = lat.edges[e];
        if (vp <= vm) throw std::invalid_argument("edge must point from larger to smaller vertex");
        lat.vertex_edges[vp].push_back(static_cast<int>(e));
        lat.vertex_edges[vm].push_back(static_cast<int>(e));
    }
    bool boundary_ok = lat.surface.kind == "disk";
    for (const auto& inc : lat.edge_tris) {
        if (inc.size() == 2) continue;
        if (inc.size() == 1 && boundary_ok) continue;
        throw std::invalid_argument("edge incidence inconsistent with the surface");
    }
    // Each interior edge must be traversed once in each direction by the CCW
    // boundary words of its two faces.
    std::vector<int> net(lat.edges.size(), 0), hits(lat.edges.size(), 0);
    for (size_t t = 0; t < lat.tris.size(); ++t)
        for (const auto& oe : plaquette_word(lat, static_cast<int>(t))) {
            net[oe.e] += oe.sign;
            hits[oe.e] += 1;
        }
    for (size_t e = 0; e < lat.edges.size(); ++e) {
        if (hits[e] == 2 && net[e] != 0)
            throw std::invalid_argument("incompatible face orientations at an edge");
        if (hits[e] != static_cast<int>(lat.edge_tris[e].size()))
            throw std::logic_error("edge incidence bookkeeping mismatch");
    }
    int want = lat.surface.kind == "sphere" ? 2 : (lat.surface.kind == "torus" ? 0 : 1);
    if (lat.euler_characteristic() != want)
        throw std::invalid_argument("Euler characteristic does not match the surface");
}
}  // namespace

int TriLattice::vertex_id(int r, int c) const {
    int rr = ((r % grid_rows) + grid_rows) % grid_rows;
    int cc = ((c % grid_cols) + grid_cols) % grid_cols;
    return rr * grid_cols + cc;
}

int TriLattice::euler_characteristic() const {
    return nv - static_cast<int>(edges.size()) + static_cast<int>(tris.size());
}

int TriLattice::edge_between(int a, int b) const {
    for (size_t e = 0; e < edges.size(); ++e)
        if ((edges[e].first == a && edges[e].second == b) ||
            (edges[e].first == b && edges[e].second == a))
            return static_cast<int>(e);
    return -1;
}

TriLattice sphere_lattice() {
    TriLattice lat;
    lat.surface = {"sphere", 0, 0};
    lat.nv = 4;
    lat.edges = {{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}};
    // Tetrahedron boundary; CCW as seen from outside.
    lat.tris = {mk_tri({0, 1, 2}, {0, 3, 1}), mk_tri({0, 3, 1}, {0, 4, 2}),
                mk_tri({0, 2, 3}, {1, 5, 2}), mk_tri({1, 3, 2}, {3, 5, 4})};
    finish(lat);
    return lat;
}

TriLattice torus_lattice(int N, int M) {
    if (N < 2 || M < 2)
        throw std::invalid_argument("torus needs N, M >= 2 (smaller grids create self-loops)");
    TriLattice lat;
    lat.surface = {"torus", N, M};
    lat.grid_rows = N;
    lat.grid_cols = M;
    lat.nv = N * M;
    auto vid = [&](int r, int c) { return lat.vertex_id(r, c); };
    auto adde = [&](int u, int w) {
        lat.edges.emplace_back(std::max(u, w), std::min(u, w));
        return static_cast<int>(lat.edges.size()) - 1;
    };
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < M; ++c) {
            lat.H[{r, c}] = adde(vid(r, c), vid(r, c + 1));
            lat.V[{r, c}] = adde(vid(r, c), vid(r + 1, c));
            lat.D[{r, c}] = adde(vid(r, c), vid(r + 1, c + 1));
        }
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < M; ++c) {
            int a = vid(r, c), b = vid(r, c + 1), d = vid(r + 1, c + 1), c2 = vid(r + 1, c);
            lat.TU[{r, c}] = static_cast<int>(lat.tris.size());
            lat.tris.push_back(mk_tri({a, d, b}, {lat.H[{r, c}], lat.V[{r, (c + 1) % M}],
                                                  lat.D[{r, c}]}));
            lat.TL[{r, c}] = static_cast<int>(lat.tris.size());
            lat.tris.push_back(mk_tri({a, c2, d}, {lat.V[{r, c}], lat.H[{(r + 1) % N, c}],
                                                   lat.D[{r, c}]}));
        }
    finish(lat);
    return lat;
}

TriLattice disk_lattice(int N) {
    if (N < 3) throw std::invalid_argument("disk fan needs N >= 3");
    TriLattice lat;
    lat.surface = {"disk", N, 0};
    lat.nv = N + 1;  // center 0, rim 1..N
    auto adde = [&](int u, int w) {
        lat.edges.emplace_back(std::max(u, w), std::min(u, w));
        return static_cast<int>(lat.edges.size()) - 1;
    };
    std::vector<int> spoke(N + 1), rim(N + 1);
    for (int i = 1; i <= N; ++i) spoke[i] = adde(0, i);
    for (int i = 1; i <= N; ++i) rim[i] = adde(i, i % N + 1);
    for (int i = 1; i <= N; ++i) {
        int j = i % N + 1;
        lat.tris.push_back(mk_tri({0, i, j}, {spoke[i], rim[i], spoke[j]}));
    }
    finish(lat);
    return lat;
}

TriLattice build_lattice(const SurfaceSpec& spec) {
    if (spec.kind == "sphere") return sphere_lattice();
    if (spec.kind == "torus") return torus_lattice(spec.N, spec.M);
    if (spec.kind == "disk") return disk_lattice(spec.N);
    throw std::invalid_argument("unknown surface kind: " + spec.kind);
}

namespace {
DualCrossing mk_cross(const TriLattice& lat, int e, int from, int to, int vprev, int vnext) {
    DualCrossing c;
    c.e = e;
    c.from = from;
    c.to = to;
    c.vprev = vprev;
    c.vnext = vnext;
    c.sign = lat.edges[e].first == vnext ? +1 : -1;
    return c;
}
}  // namespace

std::pair<DualPath, DualPath> dual_cycles(const TriLattice& lat, int rstar, int cstar) {
    if (lat.surface.kind != "torus")
        throw std::invalid_argument("dual cycles are defined on a torus");
    int N = lat.grid_rows, M = lat.grid_cols;
    auto vid = [&](int r, int c) { return lat.vertex_id(r, c); };
    DualPath px, py;
    int r = rstar;
    for (int c = 0; c < M; ++c) {
        // eastward: ... TL(r,c) --D(r,c)--> TU(r,c) --V(r,c+1)--> TL(r,c+1) ...
        px.crossings.push_back(mk_cross(lat, lat.D.at({r, c}), lat.TL.at({r, c}),
                                        lat.TU.at({r, c}), vid(r, c), vid(r + 1, c + 1)));
        px.crossings.push_back(mk_cross(lat, lat.V.at({r, (c + 1) % M}), lat.TU.at({r, c}),
                                        lat.TL.at({r, (c + 1) % M}), vid(r + 1, c + 1),
                                        vid(r, c + 1)));
    }
    int c = cstar;
    for (int rr = 0; rr < N; ++rr) {
        // southward: ... TU(r,c) --D(r,c)--> TL(r,c) --H(r+1,c)--> TU(r+1,c) ...
        py.crossings.push_back(mk_cross(lat, lat.D.at({rr, c}), lat.TU.at({rr, c}),
                                        lat.TL.at({rr, c}), vid(rr, c), vid(rr + 1, c + 1)));
        py.crossings.push_back(mk_cross(lat, lat.H.at({(rr + 1) % N, c}), lat.TL.at({rr, c}),
                                        lat.TU.at({(rr + 1) % N, c}), vid(rr + 1, c + 1),
                                        vid(rr + 1, c)));
    }
    return {px, py};
}

std::pair<int, int> dual_intersection(const TriLattice& lat, const DualPath& px,
                                      const DualPath& py) {
    (void)lat;
    int ix = -1, iy = -1, count = 0;
    for (size_t i = 0; i < px.crossings.size(); ++i)
        for (size_t j = 0; j < py.crossings.size(); ++j)
            if (px.crossings[i].e == py.crossings[j].e) {
                ix = static_cast<int>(i);
                iy = static_cast<int>(j);
                ++count;
            }
    if (count != 1) throw std::logic_error("dual cycles must intersect exactly once");
    return {ix, iy};
}

std::vector<OrientedEdge> plaquette_word(const TriLattice& lat, int tri) {
    const Triangle& t = lat.tris[tri];
    // Rotate the CCW listing to start at the smallest vertex label.
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (t.ccw[i] < t.ccw[k]) k = i;
    std::array<int, 3> seq = {t.ccw[k], t.ccw[(k + 1) % 3], t.ccw[(k + 2) % 3]};
    std::vector<OrientedEdge> word;
    for (int i = 0; i < 3; ++i) {
        int x = seq[i], y = seq[(i + 1) % 3];
        int e = -1;
        for (int cand : t.edges) {
            auto [vp, vm] = lat.edges[cand];
            if ((vp == x && vm == y) || (vp == y && vm == x)) { e = cand; break; }
        }
        if (e < 0) throw std::logic_error("triangle edge list inconsistent");
        word.push_back({e, lat.edges[e].first == x ? +1 : -1});
    }
    return word;
}

}  // namespace spt
