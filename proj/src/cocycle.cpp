#include "spt/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spt {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

cd unit_phase(double turns) { return std::polar(1.0, kTau * turns); }

int gcd3(int a, int b, int c) { return std::gcd(std::gcd(a, b), c); }
}  // namespace

Cocycle3::Cocycle3(FiniteGroup G, std::vector<cd> table) : G_(std::move(G)), tab_(std::move(table)) {
    size_t n = static_cast<size_t>(G_.order());
    if (tab_.size() != n * n * n)
        throw std::invalid_argument("cocycle table size does not match |G|^3");
}

bool Cocycle3::is_normalized(double tol) const {
    int n = G_.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (std::abs(a(0, x, y) - 1.0) > tol) return false;
            if (std::abs(a(x, 0, y) - 1.0) > tol) return false;
            if (std::abs(a(x, y, 0) - 1.0) > tol) return false;
        }
    return true;
}

CocycleReport verify_cocycle(const Cocycle3& c, double tol, size_t max_violations) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    CocycleReport rep;
    rep.normalized = c.is_normalized(tol);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                rep.unit_modulus_worst =
                    std::max(rep.unit_modulus_worst, std::abs(std::abs(c.a(x, y, z)) - 1.0));
    for (int g0 = 0; g0 < n; ++g0)
        for (int g1 = 0; g1 < n; ++g1)
            for (int g2 = 0; g2 < n; ++g2)
                for (int g3 = 0; g3 < n; ++g3) {
                    cd lhs = c.a(g1, g2, g3) * c.a(g0, G.mult(g1, g2), g3) * c.a(g0, g1, g2);
                    cd rhs = c.a(G.mult(g0, g1), g2, g3) * c.a(g0, g1, G.mult(g2, g3));
                    double err = std::abs(lhs - rhs);
                    if (err > rep.worst) rep.worst = err;
                    if (err > tol && rep.violations.size() < max_violations)
                        rep.violations.push_back({g0, g1, g2, g3, err});
                }
    return rep;
}

Cocycle3 trivial_cocycle(const FiniteGroup& G) {
    size_t n = static_cast<size_t>(G.order());
    return Cocycle3(G, std::vector<cd>(n * n * n, cd(1.0, 0.0)));
}

Cocycle3 cyclic_cocycle(int N, int p) {
    FiniteGroup G = cyclic_group(N);
    std::vector<cd> tab(static_cast<size_t>(N) * N * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            for (int z = 0; z < N; ++z)
                tab[(static_cast<size_t>(x) * N + y) * N + z] =
                    unit_phase(static_cast<double>(p) * x * ((y + z) / N) / N);
    return Cocycle3(std::move(G), std::move(tab));
}

Cocycle3 product_cyclic_cocycle(const std::vector<int>& Ns, const std::vector<int>& pI,
                                const std::map<std::pair<int, int>, int>& pII,
                                const std::map<std::tuple<int, int, int>, int>& pIII) {
    if (Ns.empty()) throw std::invalid_argument("need at least one cyclic factor");
    FiniteGroup G = cyclic_group(Ns[0]);
    for (size_t i = 1; i < Ns.size(); ++i) G = product_group(G, cyclic_group(Ns[i]));
    int n = G.order();
    size_t k = Ns.size();
    std::vector<int> levels(k, 0);
    for (size_t i = 0; i < pI.size() && i < k; ++i) levels[i] = pI[i];
    auto comps = [&](int e) {
        std::vector<int> out(k);
        for (size_t i = 0; i < k; ++i) {
            out[i] = e % Ns[i];
            e /= Ns[i];
        }
        return out;
    };
    std::vector<cd> tab(static_cast<size_t>(n) * n * n);
    for (int x = 0; x < n; ++x) {
        auto cx = comps(x);
        for (int y = 0; y < n; ++y) {
            auto cy = comps(y);
            for (int z = 0; z < n; ++z) {
                auto cz = comps(z);
                double turns = 0.0;
                for (size_t i = 0; i < k; ++i)
                    turns += static_cast<double>(levels[i]) * cx[i] *
                             ((cy[i] + cz[i]) / Ns[i]) / Ns[i];
                for (const auto& [ij, p] : pII) {
                    auto [i, j] = ij;
                    turns += static_cast<double>(p) * cx[i] * ((cy[j] + cz[j]) / Ns[j]) / Ns[i];
                }
                for (const auto& [ijl, p] : pIII) {
                    auto [i, j, l] = ijl;
                    turns += static_cast<double>(p) * cx[i] * cy[j] * cz[l] /
                             gcd3(Ns[i], Ns[j], Ns[l]);
                }
                tab[(static_cast<size_t>(x) * n + y) * n + z] = unit_phase(turns);
            }
        }
    }
    return Cocycle3(std::move(G), std::move(tab));
}

Cocycle3 multiply(const Cocycle3& a, const Cocycle3& b) {
    if (a.order() != b.order()) throw std::invalid_argument("cocycle group mismatch");
    std::vector<cd> tab(a.table().size());
    for (size_t i = 0; i < tab.size(); ++i) tab[i] = a.table()[i] * b.table()[i];
    return Cocycle3(a.group(), std::move(tab));
}

Cocycle3 inverse(const Cocycle3& c) {
    std::vector<cd> tab(c.table().size());
    for (size_t i = 0; i < tab.size(); ++i) tab[i] = std::conj(c.table()[i]);
    return Cocycle3(c.group(), std::move(tab));
}

Cocycle3 coboundary(const FiniteGroup& G, const Eigen::MatrixXcd& beta) {
    int n = G.order();
    if (beta.rows() != n || beta.cols() != n)
        throw std::invalid_argument("beta size does not match |G|");
    std::vector<cd> tab(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                tab[(static_cast<size_t>(a) * n + b) * n + c] =
                    beta(b, c) * beta(a, G.mult(b, c)) / (beta(a, b) * beta(G.mult(a, b), c));
    return Cocycle3(G, std::move(tab));
}

Cocycle3 random_coboundary(const FiniteGroup& G, std::mt19937_64& rng, int roots) {
    int n = G.order();
    Eigen::MatrixXcd beta(n, n);
    if (roots > 0) {
        std::uniform_int_distribution<int> dist(0, roots - 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                beta(i, j) = unit_phase(static_cast<double>(dist(rng)) / roots);
    } else {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) beta(i, j) = unit_phase(dist(rng));
    }
    // Normalized 2-cochain: identity slices are 1.
    for (int i = 0; i < n; ++i) {
        beta(0, i) = 1.0;
        beta(i, 0) = 1.0;
    }
    return coboundary(G, beta);
}

Eigen::MatrixXcd slant1(const Cocycle3& c, int g) {
    int n = c.order();
    Eigen::MatrixXcd t(n, n);
    for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h)
            t(k, h) = c.a(g, k, h) * c.a(k, h, g) / c.a(k, g, h);
    return t;
}

Eigen::MatrixXcd omega_g(const Cocycle3& c, int g) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Eigen::MatrixXcd s = slant1(c, g);
    Eigen::MatrixXcd t(n, n);
    for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h) {
            int kh = G.mult(k, h);
            t(k, h) = s(k, h) * c.a(g, kh, G.inv(kh)) /
                      (c.a(g, k, G.inv(k)) * c.a(g, h, G.inv(h)));
        }
    return t;
}

std::map<int, cd> slant2(const Cocycle3& c, int x, int y) {
    const FiniteGroup& G = c.group();
    if (!G.commute(x, y)) throw std::invalid_argument("slant2 needs a commuting pair");
    Eigen::MatrixXcd w = omega_g(c, x);
    std::map<int, cd> theta;
    for (int k : G.centralizer({x, y})) theta[k] = w(k, y) / w(y, k);
    return theta;
}

Eigen::MatrixXcd pivotal_beta(const Cocycle3& c) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Eigen::MatrixXcd b(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            b(g, h) = c.a(h, g, G.inv(g)) / c.a(G.mult(h, g), G.inv(g), G.inv(h));
    return b;
}

double pivotal_beta_residual(const Cocycle3& c) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Eigen::MatrixXcd b = pivotal_beta(c);
    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                cd db = b(y, z) * b(x, G.mult(y, z)) / (b(x, y) * b(G.mult(x, y), z));
                cd want = c.a(x, y, z) / c.a(G.inv(z), G.inv(y), G.inv(x));
                worst = std::max(worst, std::abs(db - want));
            }
    return worst;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> one_line_pivotals(const Cocycle3& c) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Eigen::MatrixXcd gamma(n, n), gamma_p(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            gamma(g, h) = 1.0 / c.a(g, h, G.inv(h));
            gamma_p(g, h) = c.a(G.inv(g), g, h);
        }
    return {gamma, gamma_p};
}

namespace {
// Snap a unit phase to a 1e-6 grid in its (re, im) parts so that fingerprints
// of gauge-equivalent cocycles compare byte-identical.
cd snap(cd v) {
    auto grid = [](double x) {
        double s = std::round(x * 1e6) / 1e6;
        if (s == 0.0) s = 0.0;  // normalize -0
        return s;
    };
    return {grid(v.real()), grid(v.imag())};
}

bool cd_less(const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}
}  // namespace

std::string ClassFingerprint::canonical_string() const {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed;
    for (const auto& [rep, vals] : slant2_chars) {
        os << "(" << rep.first << "," << rep.second << "):";
        for (const auto& v : vals) os << v.real() << "," << v.imag() << ";";
        os << "|";
    }
    os << "T:";
    for (const auto& v : t_spectrum) os << v.real() << "," << v.imag() << ";";
    return os.str();
}

ClassFingerprint class_fingerprint(const Cocycle3& c) {
    ClassFingerprint fp;
    for (const auto& cls : commuting_pair_classes(c.group())) {
        auto theta = slant2(c, cls.rep.first, cls.rep.second);
        std::vector<cd> vals;
        vals.reserve(theta.size());
        for (const auto& [k, v] : theta) vals.push_back(snap(v));
        fp.slant2_chars.push_back({cls.rep, std::move(vals)});
    }
    ModularData md = modular_matrices(c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(md.T, false);
    std::vector<cd> spec(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    for (auto& v : spec) v = snap(v);
    std::sort(spec.begin(), spec.end(), cd_less);
    fp.t_spectrum = std::move(spec);
    return fp;
}

ModularData modular_matrices(const Cocycle3& c) {
    const FiniteGroup& G = c.group();
    auto pairs = commuting_pairs(G);
    int m = static_cast<int>(pairs.size());
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < m; ++i) idx[pairs[i]] = i;

    ModularData md;
    md.pairs = pairs;
    md.S = Eigen::MatrixXcd::Zero(m, m);
    md.T = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        auto [x, y] = pairs[i];
        md.S(idx.at({y, G.inv(x)}), i) = 1.0 / slant1(c, y)(G.inv(x), x);
        md.T(idx.at({x, G.mult(x, y)}), i) = c.a(x, y, x);
    }
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);
    Eigen::MatrixXcd S2 = md.S * md.S;
    Eigen::MatrixXcd ST = md.S * md.T;
    md.rel_s4 = (S2 * S2 - I).norm();
    md.rel_st3_s2 = (ST * ST * ST - S2).norm();
    return md;
}

}  // namespace spt
