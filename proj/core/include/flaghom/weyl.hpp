#pragma once

#include "flaghom/root_system.hpp"

#include <cstdint>
#include <vector>

namespace flaghom {

// Fully enumerated Weyl group with flat per-element tables.  Elements are
// identified by their action matrix on the root lattice and indexed in
// deterministic BFS order: by length, then by discovery (parents in index
// order, children by ascending generator).  Index 0 is the identity.
//
// Normal forms are InverseShortLex: peel the smallest-index right descent,
// collect, reverse.  Stored 0-based in one shared letter pool.
class WeylGroup {
public:
    static constexpr uint64_t kDefaultBudget = 20'000'000;

    static WeylGroup enumerate(const RootSystem& rs, uint64_t max_elements = kDefaultBudget);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    uint32_t size() const { return static_cast<uint32_t>(len_.size()); }
    uint32_t identity() const { return 0; }
    uint32_t longest_element() const { return size() - 1; }

    int length(uint32_t w) const { return len_[w]; }
    int max_length() const { return len_.empty() ? 0 : len_.back(); }
    uint16_t right_descents(uint32_t w) const { return rdesc_[w]; }
    uint16_t left_descents(uint32_t w) const { return ldesc_[w]; }

    uint32_t rmul(uint32_t w, int s) const { return rtab_[static_cast<size_t>(w) * rank() + s]; }
    uint32_t lmul(int s, uint32_t w) const { return ltab_[static_cast<size_t>(w) * rank() + s]; }

    const uint8_t* nf(uint32_t w) const { return nf_pool_.data() + nf_off_[w]; }
    std::vector<uint8_t> nf_word(uint32_t w) const {
        return {nf(w), nf(w) + length(w)};
    }

    const int8_t* matrix(uint32_t w) const { return mats_.data() + static_cast<size_t>(w) * rank() * rank(); }
    RootVec act(uint32_t w, const RootVec& v) const;

    // Fold a word through the multiplication table; the result is the group
    // element regardless of whether the word is reduced.
    uint32_t element_of_word(const uint8_t* letters, size_t n) const;
    uint32_t element_of_word(const std::vector<uint8_t>& word) const {
        return element_of_word(word.data(), word.size());
    }
    bool is_reduced(const std::vector<uint8_t>& word) const {
        return length(element_of_word(word)) == static_cast<int>(word.size());
    }

    // [begin, end) element-index range of the given length bucket.
    std::pair<uint32_t, uint32_t> length_range(int l) const;
    std::vector<uint32_t> length_profile() const;

    // Elements w with D_R(w) ∩ Θ = ∅, ascending index (= (length, index) order).
    std::vector<uint32_t> minimal_coset_reps(uint16_t theta_mask) const;

private:
    friend WeylGroup read_group_cache(const std::string&, uint64_t);
    WeylGroup(const RootSystem& rs) : rs_(rs) {}
    void finish_tables_from_matrices(); // rtab/ltab/descents/len_ranges via hashing
    void build_normal_forms();

    RootSystem rs_;
    std::vector<int8_t> mats_;
    std::vector<uint8_t> len_;
    std::vector<uint16_t> rdesc_, ldesc_;
    std::vector<uint32_t> rtab_, ltab_;
    std::vector<uint32_t> nf_off_;
    std::vector<uint8_t> nf_pool_;
    std::vector<std::pair<uint32_t, uint32_t>> len_ranges_;
};

// Structural diff produced by left multiplication on a normal form.
struct NfLeftMul {
    uint32_t result;   // element index of s·w
    bool deleted;      // true: one letter removed; false: one letter inserted
    int position;      // longest-common-prefix length j (= 0-based diff index)
    int letter;        // the deleted/inserted letter (0-based generator)
};
NfLeftMul nf_left_multiply(const WeylGroup& W, int s, uint32_t w);

} // namespace flaghom
