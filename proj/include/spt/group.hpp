#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spt {

// Finite group given by its multiplication table. Element 0 is the identity;
// elements are indices into the table.
class FiniteGroup {
public:
    FiniteGroup() = default;

    // Validates closure, identity at index 0, associativity and inverses.
    // Throws std::invalid_argument on any violation.
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    int mult(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // g x g^-1
    int conj(int g, int x) const { return mult(mult(g, x), inv(g)); }

    bool is_abelian() const;
    bool commute(int a, int b) const { return mult(a, b) == mult(b, a); }

    std::vector<int> centralizer(const std::vector<int>& xs) const;
    std::vector<int> center() const;
    std::vector<std::vector<int>> conjugacy_classes() const;
    // Conjugacy class of x as a sorted element list.
    std::vector<int> conjugacy_class_of(int x) const;

    const std::vector<int>& raw_table() const { return table_; }

private:
    std::string name_;
    int n_ = 0;
    std::vector<int> table_;  // row-major n*n
    std::vector<int> inv_;
};

FiniteGroup cyclic_group(int N);
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);
// Symmetric group on m letters; only m == 3 is supported.
FiniteGroup symmetric_group(int m);
// Dihedral group of the m-gon (order 2m); only m == 4 is supported.
FiniteGroup dihedral_group(int m);

struct GroupSpec {
    // kind: "cyclic", "product", "symmetric", "dihedral", "table"
    std::string kind;
    std::vector<int> params;                  // cyclic/product orders, or m
    std::string name;                         // optional, for "table"
    std::vector<std::vector<int>> table;      // for "table"
};

FiniteGroup make_group(const GroupSpec& spec);

// Simultaneous-conjugation class of a commuting pair. rep is the
// lexicographically minimal member of the orbit.
struct CommutingPairClass {
    std::pair<int, int> rep;
    std::vector<std::pair<int, int>> members;  // sorted
};

std::vector<std::pair<int, int>> commuting_pairs(const FiniteGroup& G);
std::vector<CommutingPairClass> commuting_pair_classes(const FiniteGroup& G);

// Orbit count of commuting pairs under simultaneous conjugation, computed via
// Burnside's lemma: (1/|G|) sum_g #{(x,y) in C(g)^2 : xy = yx}. Independent
// cross-check for commuting_pair_classes().size().
long burnside_commuting_pair_class_count(const FiniteGroup& G);

// Big-endian mixed-radix packing of configurations with `slots` digits of
// size `base`: idx = ((c[0]*base + c[1])*base + ...).
long pack_config(const std::vector<int>& cfg, int base);
std::vector<int> unpack_config(long idx, int base, int slots);

}  // namespace spt
