#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flaghom {

// Root vectors are coordinate vectors in the basis of simple roots.
using RootVec = std::vector<int16_t>;

// Crystallographic root system of a split simple Lie algebra, Bourbaki
// numbering.  Generator/root indices are 0-based internally; the CLI layer
// translates to the 1-based labels used everywhere in print.
class RootSystem {
public:
    RootSystem(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    // cartan(i, j) = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
    int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i) * rank_ + j]; }
    // d_i = (alpha_i, alpha_i)/2, normalized so short roots have d = 1.
    int dsym(int i) const { return dsym_[static_cast<size_t>(i)]; }
    // (alpha_i, alpha_j) in the same normalization.
    int inner_simple(int i, int j) const { return dsym_[static_cast<size_t>(i)] * cartan(i, j); }
    // Order m(i,j) of s_i s_j: 2, 3, 4, or 6.
    int bond_order(int i, int j) const;

    // Simple reflection s_i acting on a root vector (only coordinate i moves).
    RootVec reflect(int i, const RootVec& v) const;

    const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
    size_t num_positive_roots() const { return pos_roots_.size(); }
    // Index into positive_roots(), or -1.
    int positive_root_index(const RootVec& v) const;

    // (gamma, gamma)/2 for any root given by coordinates.
    long long root_norm_half(const RootVec& v) const;
    // Height of the coroot gamma^vee expressed in simple coroots; exact
    // integer arithmetic, throws InvariantError on non-integrality.
    long long coroot_height(const RootVec& v) const;

    // |W| for this type (exact).
    uint64_t weyl_order() const;

private:
    char type_;
    int rank_;
    std::vector<int> cartan_; // rank x rank row-major
    std::vector<int> dsym_;
    std::vector<RootVec> pos_roots_; // sorted by (height, coords)
};

// "F4" / "e6" / "B3" -> ('F', 4); validates type letter and rank range.
std::pair<char, int> parse_type_rank(const std::string& s);

} // namespace flaghom
