#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spt/cocycle.hpp"
#include "spt/tensor.hpp"

namespace spt {

// The two orientations of the symmetry MPO. Plus right-multiplies configs by
// h^-1, Minus by h; they are each other's inverse up to a bond gauge.
enum class MpoSide { Plus, Minus };

// Site tensor B(h), legs [bl, br, pout, pin], all of dimension |G|.
//   Plus:  B[u,w, u h^-1, u] = a(u w^-1, w h^-1, h)
//   Minus: B[u,w, u h,   u] = conj a(u w^-1, w, h)
Tensor mpo_tensor(const Cocycle3& c, int h, MpoSide side = MpoSide::Plus);

// Bond fusion tensor X(g,h), legs [top, bottom, fused]:
//   X[f h^-1, f, f] = a(f (gh)^-1, g, h)
// It zips the stacked pair B(g) over B(h) into B(gh).
Tensor fusion_tensor(const Cocycle3& c, int g, int h);

// Bond gauge Z(h) = diag_b a(b, h, h^-1).
Eigen::MatrixXcd bond_gauge_z(const Cocycle3& c, int h);

// Length-L ring operator in monomial form: V |y> = phase[y] |y . s| where
// y . s multiplies every site on the right by s. phase is indexed by the
// big-endian packed configuration.
struct MonomialRing {
    int L = 0;
    int shift = 0;
    std::vector<cd> phase;
};

MonomialRing ring_operator(const Cocycle3& c, int h, int L, MpoSide side = MpoSide::Plus);

// Operator product a * b with b applied first.
MonomialRing compose_rings(const FiniteGroup& G, const MonomialRing& a, const MonomialRing& b);

// max_y |a.phase[y] - b.phase[y]|; infinity when shifts or lengths differ.
double ring_distance(const MonomialRing& a, const MonomialRing& b);

// Dense matrix of the ring operator (columns indexed by input configs).
Eigen::MatrixXcd ring_matrix(const FiniteGroup& G, const MonomialRing& r);

// Worst residual of V(g) V(h) = V(gh) over all pairs, for both orientations,
// on a ring of length L.
struct RepresentationReport {
    double worst_plus = 0.0;
    double worst_minus = 0.0;
};
RepresentationReport check_representation(const Cocycle3& c, int L);

// Local fusion identity: contracting the bond pair of the stacked tensors
// B(g) over B(h) with X(g,h) on the right equals attaching X(g,h) on the left
// of B(gh). Returns the max abs residual.
double check_zipper(const Cocycle3& c, int g, int h);

// Ratio of the two ways of fusing three bonds, ((g h) k) vs (g (h k)).
// For the tensors above the ratio is the constant 1/a(g,h,k).
struct AssociatorResult {
    cd ratio;
    double residual;  // deviation of the ratio from constancy over the support
};
AssociatorResult extract_associator(const Cocycle3& c, int g, int h, int k);

// Crossing tensors where a vertical h-line passes a horizontal g-line,
// legs [gi, go, hi, ho]. Require gh = hg. The W kinds carry the double-slant
// phase; the V kinds are the W kinds re-dressed by bond gauges.
enum class CrossKind { WR, WL, VR, VL };
Tensor crossing_tensor(const Cocycle3& c, CrossKind kind, int g, int h);

// Bend the vertical line: swap hi/ho, then relabel both h-legs by x -> x h^-1.
Tensor bend_crossing(const FiniteGroup& G, const Tensor& t, int h);

// The four exact relations tying the crossing kinds together:
//   bend_h WR(g,h^-1) = alpha^(g)(h,h^-1) WL(g,h)
//   WR(g,h^-1)        = a(g,h^-1,h)       VR(g,h^-1)
//   bend_h VR(g,h^-1) = omega^g(h,h^-1)   VL(g,h)
//   VL(g,h)           = a(g,h,h^-1)       WL(g,h)
// phases are measured from the tensors; errs compare them to the predictions.
struct CrossingSquareReport {
    std::array<cd, 4> phases;
    std::array<double, 4> errs;
    double worst = 0.0;
};
CrossingSquareReport verify_crossing_square(const Cocycle3& c, int g, int h);

// Fuse two VR crossings along the g-string with X(k,h) caps: A carries k,
// B carries h. The result is proportional to VR(g, kh); scalar is the
// proportionality factor (the 2-cocycle omega^g(k,h)). Throws if the
// composite is not proportional to the reference.
struct CrossingComposition {
    Tensor fused;
    cd scalar;
    double residual;
};
CrossingComposition compose_crossings(const Cocycle3& c, const Tensor& A, const Tensor& B,
                                      int g, int k, int h);

// Phase picked up by VR(g,h) under conjugation by the k-crossing, measured
// entirely from tensor compositions: compose k, then h, then k^-1, and
// normalize by the trivial k k^-1 composition.
cd symmetry_action_on_crossing(const Cocycle3& c, int g, int h, int k);

// Action of the modular maps on a crossing label (g,h): the image label and
// the scalar prefactor.
struct ModularStep {
    std::pair<int, int> pair;
    cd phase;
};
ModularStep modular_s_on_crossing(const Cocycle3& c, int g, int h);  // -> (h, g^-1)
ModularStep modular_t_on_crossing(const Cocycle3& c, int g, int h);  // -> (g, gh)

// Diagonal bond gauge Z with B-(g) = chi * Z B+(g^-1) Z^-1, found as the
// leading eigenvector of the mixed transfer matrix. z is normalized to
// z[0] = 1 and unit modulus; chi is reported, not asserted.
struct OrientationGauge {
    Eigen::VectorXcd z;
    cd chi;
    double residual;
};
OrientationGauge solve_orientation_gauge(const Cocycle3& c, int g);

// Spectrum of the doubled transfer matrix E_g = sum_{po,pi} B(g) (x) conj B(g).
// single_block means a unique top eigenvalue separated by a finite gap.
struct TransferReport {
    std::vector<cd> eigenvalues;  // sorted by decreasing modulus
    double gap = 0.0;
    bool single_block = false;
};
TransferReport transfer_spectrum(const Cocycle3& c, int g);

// Rank of the length-L identity ring versus the trace of the physical-pair
// transfer matrix, tr(E_P^L) with E_P = sum_p B(e)[.,.,p,p]. dense_rank is an
// SVD cross-check, only filled for small dense sizes (otherwise -1).
struct RankTraceReport {
    long monomial_rank = 0;
    double trace = 0.0;
    long dense_rank = -1;
};
RankTraceReport rank_vs_trace(const Cocycle3& c, int L);

}  // namespace spt
