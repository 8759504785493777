#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spt/group.hpp"

namespace spt {

using cd = std::complex<double>;

// U(1)-valued 3-cochain on G^3, stored densely. Normalized means
// alpha(a,b,c) = 1 whenever any argument is the identity.
class Cocycle3 {
public:
    Cocycle3() = default;
    Cocycle3(FiniteGroup G, std::vector<cd> table);

    const FiniteGroup& group() const { return G_; }
    int order() const { return G_.order(); }

    cd a(int x, int y, int z) const {
        int n = G_.order();
        return tab_[(static_cast<size_t>(x) * n + y) * n + z];
    }
    void set(int x, int y, int z, cd v) {
        int n = G_.order();
        tab_[(static_cast<size_t>(x) * n + y) * n + z] = v;
    }
    const std::vector<cd>& table() const { return tab_; }
    bool is_normalized(double tol = 1e-12) const;

private:
    FiniteGroup G_;
    std::vector<cd> tab_;
};

struct CocycleViolation {
    int g0, g1, g2, g3;
    double err;
};

struct CocycleReport {
    double worst = 0.0;
    double unit_modulus_worst = 0.0;
    bool normalized = true;
    std::vector<CocycleViolation> violations;  // capped at max_violations
};

// Exhaustive check of the 3-cocycle condition
//   a(g1,g2,g3) a(g0, g1 g2, g3) a(g0,g1,g2) = a(g0 g1, g2, g3) a(g0, g1, g2 g3)
// plus unit-modulus and normalization diagnostics.
CocycleReport verify_cocycle(const Cocycle3& c, double tol = 1e-10,
                             size_t max_violations = 16);

Cocycle3 trivial_cocycle(const FiniteGroup& G);

// Representative of H^3(Z_N, U(1)) at level p:
//   a(x,y,z) = exp(2 pi i p x floor((y+z)/N) / N).
Cocycle3 cyclic_cocycle(int N, int p);

// Product-of-cyclic-groups cocycle with type-I levels pI (one per factor),
// type-II levels pII keyed by factor pair (i,j), and type-III levels pIII
// keyed by (i,j,k). Factor order matches product_group's little-endian pairing.
Cocycle3 product_cyclic_cocycle(const std::vector<int>& Ns,
                                const std::vector<int>& pI = {},
                                const std::map<std::pair<int, int>, int>& pII = {},
                                const std::map<std::tuple<int, int, int>, int>& pIII = {});

Cocycle3 multiply(const Cocycle3& a, const Cocycle3& b);
Cocycle3 inverse(const Cocycle3& c);

// Coboundary of a normalized 2-cochain beta:
//   (d beta)(a,b,c) = beta(b,c) beta(a, bc) / (beta(a,b) beta(ab, c)).
Cocycle3 coboundary(const FiniteGroup& G, const Eigen::MatrixXcd& beta);

// Random normalized coboundary; if roots > 0, beta values are roots-th roots
// of unity, otherwise generic phases.
Cocycle3 random_coboundary(const FiniteGroup& G, std::mt19937_64& rng, int roots = 0);

// Slant product alpha^(g)(k,h) = a(g,k,h) a(k,h,g) / a(k,g,h). Rows k, cols h.
Eigen::MatrixXcd slant1(const Cocycle3& c, int g);

// omega^g(k,h) = alpha^(g)(k,h) * a(g, kh, (kh)^-1) / (a(g,k,k^-1) a(g,h,h^-1)).
// A 2-cocycle on the centralizer of g.
Eigen::MatrixXcd omega_g(const Cocycle3& c, int g);

// Twice-slant 1D representation theta(k) = omega^x(k,y) / omega^x(y,k),
// defined for k in C(x,y). Requires xy = yx.
std::map<int, cd> slant2(const Cocycle3& c, int x, int y);

// Pivotal 2-cochain beta(g,h) = a(h,g,g^-1) / a(hg, g^-1, h^-1), whose
// coboundary equals a(a,b,c) / a(c^-1, b^-1, a^-1).
Eigen::MatrixXcd pivotal_beta(const Cocycle3& c);
// Worst residual of d(pivotal_beta) against that ratio.
double pivotal_beta_residual(const Cocycle3& c);

// One-line pivotal phases gamma(g,h) = a(g,h,h^-1)^-1 and
// gamma'(g,h) = a(g^-1, g, h).
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> one_line_pivotals(const Cocycle3& c);

// Coboundary-invariant fingerprint of the cohomology class: per
// commuting-pair class, the slant2 character table of its representative,
// plus the spectrum of the modular T matrix on the full commuting-pair basis.
// Values are snapped to a fixed grid so equal classes compare byte-equal.
struct ClassFingerprint {
    // One entry per commuting-pair class: rep pair and slant2 values over the
    // (sorted) centralizer of the rep.
    std::vector<std::pair<std::pair<int, int>, std::vector<cd>>> slant2_chars;
    std::vector<cd> t_spectrum;  // sorted canonically

    std::string canonical_string() const;
    bool operator==(const ClassFingerprint& o) const {
        return canonical_string() == o.canonical_string();
    }
};

ClassFingerprint class_fingerprint(const Cocycle3& c);

// Modular S and T on the raw commuting-pair basis:
//   S |x,y> = alpha^(y)(x^-1, x)^-1 |y, x^-1>,   T |x,y> = a(x,y,x) |x, xy>.
// Returns (S, T, pair list fixing the basis order).
struct ModularData {
    Eigen::MatrixXcd S, T;
    std::vector<std::pair<int, int>> pairs;
    double rel_s4;      // ||S^4 - 1||
    double rel_st3_s2;  // ||(ST)^3 - S^2||
};

ModularData modular_matrices(const Cocycle3& c);

}  // namespace spt
