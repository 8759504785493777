#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace spt {

// Parity of the permutation sorting seq ascending (entries distinct).
int perm_parity(const std::vector<int>& seq);

struct Triangle {
    std::array<int, 3> verts;  // ascending
    int sigma;                 // +-1: parity of the CCW listing vs ascending
    std::array<int, 3> ccw;    // CCW as seen from outside the oriented surface
    std::array<int, 3> edges;  // edge ids
};

struct SurfaceSpec {
    std::string kind;  // "sphere", "torus", "disk"
    int N = 0, M = 0;
};

// Triangulation of an oriented surface. Edges are directed from the larger
// vertex index (tail, v+) to the smaller (head, v-).
struct TriLattice {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;  // (v+, v-) with v+ > v-
    std::vector<Triangle> tris;
    SurfaceSpec surface;

    std::vector<std::vector<int>> edge_tris;     // incident triangles per edge
    std::vector<std::vector<int>> vertex_edges;  // incident edges per vertex

    // Torus bookkeeping (empty otherwise): grid edge/triangle lookup keyed by
    // (row, col). H: east edge, V: south edge, D: southeast diagonal. TU is the
    // upper-right triangle of cell (r,c), TL the lower-left one.
    std::map<std::pair<int, int>, int> H, V, D, TU, TL;
    int grid_rows = 0, grid_cols = 0;

    int ne() const { return static_cast<int>(edges.size()); }
    int vertex_id(int r, int c) const;
    int euler_characteristic() const;
    // Edge id joining vertices a and b, or -1.
    int edge_between(int a, int b) const;
};

// sphere: tetrahedron boundary. torus: N x M grid with the southeast diagonal,
// vertices row-major (needs N, M >= 2: smaller grids would produce self-loop
// edges). disk: fan of N triangles around a center vertex (needs N >= 3).
TriLattice build_lattice(const SurfaceSpec& spec);
TriLattice sphere_lattice();
TriLattice torus_lattice(int N, int M);
TriLattice disk_lattice(int N);

// One step of a closed dual path: the path leaves triangle `from`, crosses
// edge `e`, and enters triangle `to`. vprev/vnext are the endpoints of e seen
// before/after the crossing in path order; `sign` is the crossing handedness
// (+1 when the edge direction tail->head agrees with vnext->vprev).
struct DualCrossing {
    int e = 0, from = 0, to = 0, vprev = 0, vnext = 0, sign = 0;
};

struct DualPath {
    std::vector<DualCrossing> crossings;
    bool closed = true;
};

// The horizontal and vertical closed dual cycles of a torus, through dual row
// rstar and dual column cstar. They intersect exactly once, on the diagonal
// edge D(rstar, cstar).
std::pair<DualPath, DualPath> dual_cycles(const TriLattice& lat, int rstar = 0, int cstar = 0);

// Index of the shared crossing within each path (x-path, y-path).
std::pair<int, int> dual_intersection(const TriLattice& lat, const DualPath& px,
                                      const DualPath& py);

struct OrientedEdge {
    int e;
    int sign;  // +1: traversed tail->head (larger to smaller vertex)
};

// Boundary word of a plaquette (triangle) in CCW traversal order starting
// from its smallest vertex label.
std::vector<OrientedEdge> plaquette_word(const TriLattice& lat, int tri);

}  // namespace spt
