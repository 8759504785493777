#include "spt/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spt {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)) {
    n_ = static_cast<int>(table.size());
    if (n_ == 0) throw std::invalid_argument("group table is empty");
    table_.resize(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
        if (static_cast<int>(table[a].size()) != n_)
            throw std::invalid_argument("group table is not square");
        for (int b = 0; b < n_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n_) throw std::invalid_argument("group table entry out of range");
            table_[static_cast<size_t>(a) * n_ + b] = v;
        }
    }
    for (int a = 0; a < n_; ++a) {
        if (mult(0, a) != a || mult(a, 0) != a)
            throw std::invalid_argument("element 0 is not the identity");
    }
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mult(a, b) == 0 && mult(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw std::invalid_argument("element without a two-sided inverse");
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                    throw std::invalid_argument("group table is not associative");
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::centralizer(const std::vector<int>& xs) const {
    std::vector<int> out;
    for (int g = 0; g < n_; ++g) {
        bool ok = true;
        for (int x : xs)
            if (mult(g, x) != mult(x, g)) { ok = false; break; }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> all(n_);
    std::iota(all.begin(), all.end(), 0);
    return centralizer(all);
}

std::vector<int> FiniteGroup::conjugacy_class_of(int x) const {
    std::set<int> orb;
    for (int g = 0; g < n_; ++g) orb.insert(conj(g, x));
    return {orb.begin(), orb.end()};
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(n_, false);
    for (int x = 0; x < n_; ++x) {
        if (seen[x]) continue;
        auto cls = conjugacy_class_of(x);
        for (int y : cls) seen[y] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

FiniteGroup cyclic_group(int N) {
    if (N < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) t[a][b] = (a + b) % N;
    return FiniteGroup("Z" + std::to_string(N), std::move(t));
}

FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
    // Little-endian pairing: element = a + |A| * b.
    int na = A.order(), nb = B.order(), n = na * nb;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a1 = 0; a1 < na; ++a1)
        for (int a2 = 0; a2 < nb; ++a2)
            for (int b1 = 0; b1 < na; ++b1)
                for (int b2 = 0; b2 < nb; ++b2)
                    t[a1 + na * a2][b1 + na * b2] = A.mult(a1, b1) + na * B.mult(a2, b2);
    return FiniteGroup(A.name() + "x" + B.name(), std::move(t));
}

FiniteGroup symmetric_group(int m) {
    if (m != 3) throw std::invalid_argument("symmetric_group supports only m = 3");
    // Permutations of {0,1,2}, identity first, remaining ones in lexicographic order.
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw std::logic_error("permutation lookup failed");
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int k = 0; k < 3; ++k) comp[k] = perms[a][perms[b][k]];
            t[a][b] = index_of(comp);
        }
    return FiniteGroup("S3", std::move(t));
}

FiniteGroup dihedral_group(int m) {
    if (m != 4) throw std::invalid_argument("dihedral_group supports only m = 4");
    // Element i = r^(i%4) s^(i/4); relations r^4 = s^2 = 1, s r s = r^-1.
    auto enc = [](int r, int s) { return (r % 4 + 4) % 4 + 4 * (s & 1); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ra = a % 4, sa = a / 4, rb = b % 4, sb = b / 4;
            // (r^ra s^sa)(r^rb s^sb) = r^(ra + rb*(-1)^sa) s^(sa+sb)
            int r = sa ? ra - rb : ra + rb;
            t[a][b] = enc(r, sa ^ sb);
        }
    return FiniteGroup("D4", std::move(t));
}

FiniteGroup make_group(const GroupSpec& spec) {
    if (spec.kind == "cyclic") {
        if (spec.params.size() != 1) throw std::invalid_argument("cyclic needs one order");
        return cyclic_group(spec.params[0]);
    }
    if (spec.kind == "product") {
        if (spec.params.empty()) throw std::invalid_argument("product needs at least one order");
        FiniteGroup g = cyclic_group(spec.params[0]);
        for (size_t i = 1; i < spec.params.size(); ++i)
            g = product_group(g, cyclic_group(spec.params[i]));
        return g;
    }
    if (spec.kind == "symmetric") {
        if (spec.params.size() != 1) throw std::invalid_argument("symmetric needs one parameter");
        return symmetric_group(spec.params[0]);
    }
    if (spec.kind == "dihedral") {
        if (spec.params.size() != 1) throw std::invalid_argument("dihedral needs one parameter");
        return dihedral_group(spec.params[0]);
    }
    if (spec.kind == "table")
        return FiniteGroup(spec.name.empty() ? "custom" : spec.name, spec.table);
    throw std::invalid_argument("unknown group kind: " + spec.kind);
}

std::vector<std::pair<int, int>> commuting_pairs(const FiniteGroup& G) {
    std::vector<std::pair<int, int>> out;
    int n = G.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (G.commute(x, y)) out.emplace_back(x, y);
    return out;
}

std::vector<CommutingPairClass> commuting_pair_classes(const FiniteGroup& G) {
    int n = G.order();
    std::map<std::pair<int, int>, std::pair<int, int>> rep_of;
    std::vector<CommutingPairClass> classes;
    for (auto [x, y] : commuting_pairs(G)) {
        if (rep_of.count({x, y})) continue;
        std::set<std::pair<int, int>> orb;
        for (int g = 0; g < n; ++g) orb.insert({G.conj(g, x), G.conj(g, y)});
        auto rep = *orb.begin();
        for (auto& p : orb) rep_of[p] = rep;
        classes.push_back({rep, {orb.begin(), orb.end()}});
    }
    std::sort(classes.begin(), classes.end(),
              [](const CommutingPairClass& a, const CommutingPairClass& b) { return a.rep < b.rep; });
    return classes;
}

long burnside_commuting_pair_class_count(const FiniteGroup& G) {
    int n = G.order();
    long total = 0;
    for (int g = 0; g < n; ++g) {
        auto cg = G.centralizer({g});
        for (int x : cg)
            for (int y : cg)
                if (G.commute(x, y)) ++total;
    }
    if (total % n != 0) throw std::logic_error("Burnside count is not divisible by |G|");
    return total / n;
}

long pack_config(const std::vector<int>& cfg, int base) {
    long idx = 0;
    for (int c : cfg) idx = idx * base + c;
    return idx;
}

std::vector<int> unpack_config(long idx, int base, int slots) {
    std::vector<int> cfg(slots);
    for (int i = slots - 1; i >= 0; --i) {
        cfg[i] = static_cast<int>(idx % base);
        idx /= base;
    }
    return cfg;
}

}  // namespace spt
