#include "spt/mpo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spt {

Tensor mpo_tensor(const Cocycle3& c, int h, MpoSide side) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Tensor t({n, n, n, n});
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            int x = G.mult(u, G.inv(w));
            if (side == MpoSide::Plus)
                t.at({u, w, G.mult(u, G.inv(h)), u}) = c.a(x, G.mult(w, G.inv(h)), h);
            else
                t.at({u, w, G.mult(u, h), u}) = std::conj(c.a(x, w, h));
        }
    return t;
}

Tensor fusion_tensor(const Cocycle3& c, int g, int h) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    int gh = G.mult(g, h);
    Tensor t({n, n, n});
    for (int f = 0; f < n; ++f)
        t.at({G.mult(f, G.inv(h)), f, f}) = c.a(G.mult(f, G.inv(gh)), g, h);
    return t;
}

Eigen::MatrixXcd bond_gauge_z(const Cocycle3& c, int h) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
    for (int b = 0; b < n; ++b) z(b, b) = c.a(b, h, G.inv(h));
    return z;
}

MonomialRing ring_operator(const Cocycle3& c, int h, int L, MpoSide side) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    long total = 1;
    for (int i = 0; i < L; ++i) total *= n;
    MonomialRing r;
    r.L = L;
    r.shift = side == MpoSide::Plus ? G.inv(h) : h;
    r.phase.assign(total, cd(1.0, 0.0));
    for (long idx = 0; idx < total; ++idx) {
        std::vector<int> cfg = unpack_config(idx, n, L);
        cd p(1.0, 0.0);
        for (int i = 0; i < L; ++i) {
            int u = cfg[i], w = cfg[(i + 1) % L];
            int x = G.mult(u, G.inv(w));
            if (side == MpoSide::Plus)
                p *= c.a(x, G.mult(w, G.inv(h)), h);
            else
                p *= std::conj(c.a(x, w, h));
        }
        r.phase[idx] = p;
    }
    return r;
}

namespace {
long shifted_index(const FiniteGroup& G, long idx, int L, int s) {
    std::vector<int> cfg = unpack_config(idx, G.order(), L);
    for (int& v : cfg) v = G.mult(v, s);
    return pack_config(cfg, G.order());
}
}  // namespace

MonomialRing compose_rings(const FiniteGroup& G, const MonomialRing& a, const MonomialRing& b) {
    if (a.L != b.L) throw std::invalid_argument("ring lengths differ");
    MonomialRing out;
    out.L = a.L;
    out.shift = G.mult(b.shift, a.shift);
    out.phase.resize(a.phase.size());
    for (long y = 0; y < static_cast<long>(out.phase.size()); ++y)
        out.phase[y] = b.phase[y] * a.phase[shifted_index(G, y, a.L, b.shift)];
    return out;
}

double ring_distance(const MonomialRing& a, const MonomialRing& b) {
    if (a.L != b.L || a.shift != b.shift || a.phase.size() != b.phase.size())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (size_t i = 0; i < a.phase.size(); ++i)
        worst = std::max(worst, std::abs(a.phase[i] - b.phase[i]));
    return worst;
}

Eigen::MatrixXcd ring_matrix(const FiniteGroup& G, const MonomialRing& r) {
    long N = static_cast<long>(r.phase.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
    for (long y = 0; y < N; ++y) m(shifted_index(G, y, r.L, r.shift), y) = r.phase[y];
    return m;
}

RepresentationReport check_representation(const Cocycle3& c, int L) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    RepresentationReport rep;
    for (MpoSide side : {MpoSide::Plus, MpoSide::Minus}) {
        std::vector<MonomialRing> V(n);
        for (int g = 0; g < n; ++g) V[g] = ring_operator(c, g, L, side);
        double worst = 0.0;
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                worst = std::max(
                    worst, ring_distance(compose_rings(G, V[g], V[h]), V[G.mult(g, h)]));
        (side == MpoSide::Plus ? rep.worst_plus : rep.worst_minus) = worst;
    }
    return rep;
}

double check_zipper(const Cocycle3& c, int g, int h) {
    Tensor Bg = mpo_tensor(c, g), Bh = mpo_tensor(c, h);
    Tensor Bgh = mpo_tensor(c, c.group().mult(g, h));
    Tensor X = fusion_tensor(c, g, h);
    // stack[bl1, br1, pout, bl2, br2, pin], B(g) applied after B(h)
    Tensor stack = contract(Bg, Bh, {3}, {2});
    // lhs[bl1, pout, bl2, pin, cr]
    Tensor lhs = contract(stack, X, {1, 4}, {0, 1});
    // rhs[bl1, bl2, cr, pout, pin] -> [bl1, pout, bl2, pin, cr]
    Tensor rhs = transpose(contract(X, Bgh, {2}, {0}), {0, 3, 1, 4, 2});
    double worst = 0.0;
    for (long i = 0; i < lhs.size(); ++i)
        worst = std::max(worst, std::abs(lhs.data[i] - rhs.data[i]));
    return worst;
}

AssociatorResult extract_associator(const Cocycle3& c, int g, int h, int k) {
    const FiniteGroup& G = c.group();
    // ((g h) k): fuse g,h then attach k.  [p,q,r,cc]
    Tensor c1 = contract(fusion_tensor(c, g, h), fusion_tensor(c, G.mult(g, h), k), {2}, {0});
    // (g (h k)): fuse h,k then attach g.  [q,r] + [p,cc] -> reorder
    Tensor c2 = transpose(
        contract(fusion_tensor(c, h, k), fusion_tensor(c, g, G.mult(h, k)), {2}, {1}),
        {2, 0, 1, 3});
    cd ratio(0.0, 0.0);
    double residual = 0.0;
    bool found = false;
    for (long i = 0; i < c2.size(); ++i) {
        double m2 = std::abs(c2.data[i]), m1 = std::abs(c1.data[i]);
        if (m2 < 0.5 && m1 < 0.5) continue;
        if (m2 < 0.5 || m1 < 0.5) {
            residual = std::max(residual, std::max(m1, m2));  // support mismatch
            continue;
        }
        cd r = c1.data[i] / c2.data[i];
        if (!found) {
            ratio = r;
            found = true;
        }
        residual = std::max(residual, std::abs(r - ratio));
    }
    if (!found) throw std::logic_error("fusion tensors have empty support");
    return {ratio, residual};
}

Tensor crossing_tensor(const Cocycle3& c, CrossKind kind, int g, int h) {
    const FiniteGroup& G = c.group();
    if (!G.commute(g, h)) throw std::invalid_argument("crossing needs commuting (g,h)");
    int n = G.order();
    Tensor t({n, n, n, n});
    auto a = [&](int x, int y, int z) { return c.a(x, y, z); };
    if (kind == CrossKind::WR || kind == CrossKind::WL) {
        int gh = G.mult(g, h);
        for (int cc = 0; cc < n; ++cc) {
            int x = G.mult(cc, G.inv(gh));
            int ch = G.mult(cc, G.inv(h)), cg = G.mult(cc, G.inv(g));
            if (kind == CrossKind::WR)
                t.at({cc, ch, cg, cc}) = a(x, g, h) * std::conj(a(x, h, g));
            else
                t.at({ch, cc, cc, cg}) = a(x, h, g) * std::conj(a(x, g, h));
        }
        return t;
    }
    for (int f = 0; f < n; ++f) {
        int fh = G.mult(f, h), fg = G.mult(f, G.inv(g));
        int fhg = G.mult(fh, G.inv(g));
        cd base = a(fg, G.mult(g, h), G.inv(h)) * a(fg, h, g);
        if (kind == CrossKind::VR)
            t.at({fh, f, fhg, fh}) = base / a(f, h, G.inv(h));
        else
            t.at({f, fh, fh, fhg}) = std::conj(base) * a(f, h, G.inv(h));
    }
    return t;
}

Tensor bend_crossing(const FiniteGroup& G, const Tensor& t, int h) {
    Tensor s = transpose(t, {0, 1, 3, 2});
    Tensor out(s.dims);
    int n = G.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    out.at({a, b, x, y}) = s.at({a, b, G.mult(x, G.inv(h)), G.mult(y, G.inv(h))});
    return out;
}

namespace {
std::pair<cd, double> measure_phase(const Tensor& A, const Tensor& B, cd predicted) {
    auto phi = phase_between(A, B, 1e-9);
    if (!phi) return {cd(0.0, 0.0), std::numeric_limits<double>::infinity()};
    return {*phi, std::abs(*phi - predicted)};
}
}  // namespace

CrossingSquareReport verify_crossing_square(const Cocycle3& c, int g, int h) {
    const FiniteGroup& G = c.group();
    int hi = G.inv(h);
    Tensor wr = crossing_tensor(c, CrossKind::WR, g, hi);
    Tensor wl = crossing_tensor(c, CrossKind::WL, g, h);
    Tensor vr = crossing_tensor(c, CrossKind::VR, g, hi);
    Tensor vl = crossing_tensor(c, CrossKind::VL, g, h);

    CrossingSquareReport rep;
    std::array<std::pair<cd, double>, 4> res = {
        measure_phase(bend_crossing(G, wr, h), wl, slant1(c, g)(h, hi)),
        measure_phase(wr, vr, c.a(g, hi, h)),
        measure_phase(bend_crossing(G, vr, h), vl, omega_g(c, g)(h, hi)),
        measure_phase(vl, wl, c.a(g, h, hi)),
    };
    for (int i = 0; i < 4; ++i) {
        rep.phases[i] = res[i].first;
        rep.errs[i] = res[i].second;
        rep.worst = std::max(rep.worst, res[i].second);
    }
    return rep;
}

CrossingComposition compose_crossings(const Cocycle3& c, const Tensor& A, const Tensor& B,
                                      int g, int k, int h) {
    Tensor X = fusion_tensor(c, k, h);
    Tensor Xc = X;
    for (cd& v : Xc.data) v = std::conj(v);
    // g-string runs through B then A; h-legs of A are the top fusion slot.
    Tensor t1 = contract(B, A, {1}, {0});          // [i, c, d, j, a, b]
    Tensor t2 = contract(t1, Xc, {4, 1}, {0, 1});  // [i, d, j, b, e]
    Tensor t3 = contract(t2, X, {3, 1}, {0, 1});   // [i, j, e, f]
    Tensor ref = crossing_tensor(c, CrossKind::VR, g, c.group().mult(k, h));
    auto phi = phase_between(t3, ref, 1e-8);
    if (!phi) throw std::runtime_error("crossing composition is not proportional to VR(g, kh)");
    double worst = 0.0;
    for (long i = 0; i < t3.size(); ++i)
        worst = std::max(worst, std::abs(t3.data[i] - *phi * ref.data[i]));
    return {t3, *phi, worst};
}

cd symmetry_action_on_crossing(const Cocycle3& c, int g, int h, int k) {
    const FiniteGroup& G = c.group();
    int ki = G.inv(k);
    Tensor vk = crossing_tensor(c, CrossKind::VR, g, k);
    Tensor vh = crossing_tensor(c, CrossKind::VR, g, h);
    Tensor vki = crossing_tensor(c, CrossKind::VR, g, ki);
    cd s1 = compose_crossings(c, vk, vh, g, k, h).scalar;
    Tensor vkh = crossing_tensor(c, CrossKind::VR, g, G.mult(k, h));
    cd s2 = compose_crossings(c, vkh, vki, g, G.mult(k, h), ki).scalar;
    cd s0 = compose_crossings(c, vk, vki, g, k, ki).scalar;
    return s1 * s2 / s0;
}

ModularStep modular_s_on_crossing(const Cocycle3& c, int g, int h) {
    const FiniteGroup& G = c.group();
    if (!G.commute(g, h)) throw std::invalid_argument("crossing needs commuting (g,h)");
    int gi = G.inv(g);
    return {{h, gi}, cd(1.0, 0.0) / slant1(c, h)(gi, g)};
}

ModularStep modular_t_on_crossing(const Cocycle3& c, int g, int h) {
    const FiniteGroup& G = c.group();
    if (!G.commute(g, h)) throw std::invalid_argument("crossing needs commuting (g,h)");
    return {{g, G.mult(g, h)}, c.a(g, h, g)};
}

OrientationGauge solve_orientation_gauge(const Cocycle3& c, int g) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Tensor bm = mpo_tensor(c, g, MpoSide::Minus);
    Tensor bp = mpo_tensor(c, G.inv(g), MpoSide::Plus);
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (int u = 0; u < n; ++u)
        for (int up = 0; up < n; ++up)
            for (int w = 0; w < n; ++w)
                for (int wp = 0; wp < n; ++wp) {
                    cd s(0.0, 0.0);
                    for (int po = 0; po < n; ++po)
                        for (int pi = 0; pi < n; ++pi)
                            s += bm.at({u, w, po, pi}) * std::conj(bp.at({up, wp, po, pi}));
                    T(u * n + up, w * n + wp) = s;
                }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(best))) best = i;
    if (std::abs(es.eigenvalues()(best) - cd(n, 0.0)) > 1e-8 * n)
        throw std::runtime_error("mixed transfer matrix lacks the expected top eigenvalue");
    Eigen::VectorXcd vec = es.eigenvectors().col(best);
    Eigen::VectorXcd z(n);
    for (int u = 0; u < n; ++u) {
        z(u) = vec(u * n + u);
        if (std::abs(z(u)) < 1e-8)
            throw std::runtime_error("orientation gauge eigenvector vanishes on the diagonal");
    }
    z /= z(0);
    for (int u = 0; u < n; ++u) z(u) /= std::abs(z(u));

    Tensor dressed(bp.dims);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            for (int po = 0; po < n; ++po)
                for (int pi = 0; pi < n; ++pi)
                    dressed.at({u, w, po, pi}) = z(u) * bp.at({u, w, po, pi}) / z(w);
    auto phi = phase_between(bm, dressed, 1e-8);
    if (!phi) throw std::runtime_error("orientation gauge relation failed");
    double worst = 0.0;
    for (long i = 0; i < bm.size(); ++i)
        worst = std::max(worst, std::abs(bm.data[i] - *phi * dressed.data[i]));
    return {z, *phi, worst};
}

TransferReport transfer_spectrum(const Cocycle3& c, int g) {
    int n = c.order();
    Tensor b = mpo_tensor(c, g);
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (int u = 0; u < n; ++u)
        for (int up = 0; up < n; ++up)
            for (int w = 0; w < n; ++w)
                for (int wp = 0; wp < n; ++wp) {
                    cd s(0.0, 0.0);
                    for (int po = 0; po < n; ++po)
                        for (int pi = 0; pi < n; ++pi)
                            s += b.at({u, w, po, pi}) * std::conj(b.at({up, wp, po, pi}));
                    E(u * n + up, w * n + wp) = s;
                }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(E, false);
    std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](cd a, cd b) { return std::abs(a) > std::abs(b); });
    TransferReport rep;
    rep.eigenvalues = ev;
    rep.gap = std::abs(ev[0]) - (ev.size() > 1 ? std::abs(ev[1]) : 0.0);
    rep.single_block = rep.gap > 1e-6 * std::abs(ev[0]);
    return rep;
}

RankTraceReport rank_vs_trace(const Cocycle3& c, int L) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    MonomialRing id = ring_operator(c, 0, L);
    if (id.shift != 0) throw std::logic_error("identity ring must not shift configs");
    RankTraceReport rep;
    for (const cd& p : id.phase)
        if (std::abs(p) > 1e-12) ++rep.monomial_rank;

    Tensor b = mpo_tensor(c, 0);
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            for (int p = 0; p < n; ++p) E(u, w) += b.at({u, w, p, p});
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < L; ++i) power = power * E;
    rep.trace = power.trace().real();

    if (static_cast<long>(id.phase.size()) <= 1024)
        rep.dense_rank = matrix_rank(ring_matrix(G, id));
    return rep;
}

}  // namespace spt
