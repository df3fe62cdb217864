#include "flaghom/weyl.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>

namespace flaghom {

namespace {

// Open-addressing hash over raw matrix bytes.  Element matrices are the
// canonical identity (words are never used for identity).
struct MatrixIndex {
    MatrixIndex(size_t expected, size_t key_bytes) : key_bytes_(key_bytes) {
        size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
    }

    uint64_t hash(const int8_t* key) const {
        uint64_t h = 1469598103934665603ull;
        for (size_t i = 0; i < key_bytes_; ++i) {
            h ^= static_cast<uint8_t>(key[i]);
            h *= 1099511628211ull;
        }
        return h;
    }

    // Returns the existing index or inserts `fresh` and returns it.
    uint32_t find_or_insert(const int8_t* key, const std::vector<int8_t>& pool, uint32_t fresh) {
        size_t pos = hash(key) & mask_;
        for (;;) {
            uint32_t slot = slots_[pos];
            if (slot == kEmpty) {
                slots_[pos] = fresh;
                return fresh;
            }
            if (std::memcmp(pool.data() + static_cast<size_t>(slot) * key_bytes_, key, key_bytes_) == 0)
                return slot;
            pos = (pos + 1) & mask_;
        }
    }

    uint32_t find(const int8_t* key, const std::vector<int8_t>& pool) const {
        size_t pos = hash(key) & mask_;
        for (;;) {
            uint32_t slot = slots_[pos];
            if (slot == kEmpty) return kEmpty;
            if (std::memcmp(pool.data() + static_cast<size_t>(slot) * key_bytes_, key, key_bytes_) == 0)
                return slot;
            pos = (pos + 1) & mask_;
        }
    }

    static constexpr uint32_t kEmpty = 0xFFFFFFFFu;
    size_t key_bytes_;
    size_t mask_;
    std::vector<uint32_t> slots_;
};

// out = M_w * M_s (right multiplication): col_j -= cartan[s][j] * col_s.
void mul_right(const RootSystem& rs, const int8_t* mw, int s, int8_t* out) {
    int r = rs.rank();
    std::memcpy(out, mw, static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i) {
        int8_t cs = mw[i * r + s];
        if (cs == 0) continue;
        for (int j = 0; j < r; ++j) out[i * r + j] = static_cast<int8_t>(out[i * r + j] - rs.cartan(s, j) * cs);
    }
}

// out = M_s * M_w (left multiplication): row_s -= sum_j cartan[s][j] * row_j.
void mul_left(const RootSystem& rs, int s, const int8_t* mw, int8_t* out) {
    int r = rs.rank();
    std::memcpy(out, mw, static_cast<size_t>(r) * r);
    for (int j = 0; j < r; ++j) {
        int c = rs.cartan(s, j);
        if (c == 0) continue;
        for (int k = 0; k < r; ++k) out[s * r + k] = static_cast<int8_t>(out[s * r + k] - c * mw[j * r + k]);
    }
}

} // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, uint64_t max_elements) {
    uint64_t order = rs.weyl_order();
    if (order > max_elements)
        throw ResourceError("refusing to enumerate " + rs.name() + ": |W| = " + std::to_string(order) +
                            " exceeds the element budget " + std::to_string(max_elements));
    if (rs.num_positive_roots() > 255)
        throw ResourceError("refusing to enumerate " + rs.name() + ": word lengths exceed 255");

    WeylGroup W(rs);
    int r = rs.rank();
    size_t mb = static_cast<size_t>(r) * r;
    W.mats_.resize(order * mb);
    W.len_.resize(order);
    W.rtab_.assign(order * static_cast<size_t>(r), 0);

    // identity
    for (int i = 0; i < r; ++i) W.mats_[static_cast<size_t>(i) * r + i] = 1;
    W.len_[0] = 0;

    MatrixIndex index(order, mb);
    index.find_or_insert(W.mats_.data(), W.mats_, 0);

    uint32_t count = 1;
    std::vector<int8_t> tmp(mb);
    for (uint32_t w = 0; w < count; ++w) {
        const int8_t* mw = W.mats_.data() + static_cast<size_t>(w) * mb;
        for (int s = 0; s < r; ++s) {
            mul_right(rs, mw, s, tmp.data());
            uint32_t found = index.find_or_insert(tmp.data(), W.mats_, count);
            if (found == count) {
                if (count >= order) throw InvariantError("enumeration exceeded |W|");
                std::memcpy(W.mats_.data() + static_cast<size_t>(count) * mb, tmp.data(), mb);
                W.len_[count] = static_cast<uint8_t>(W.len_[w] + 1);
                ++count;
            }
            W.rtab_[static_cast<size_t>(w) * r + s] = found;
            // mats_ may look reallocated-free: it was fully sized up front, and
            // mw stays valid because resize never happens during the loop.
        }
    }
    if (count != order)
        throw InvariantError("enumeration closed at " + std::to_string(count) + " of " + std::to_string(order));

    W.finish_tables_from_matrices();
    W.build_normal_forms();
    return W;
}

void WeylGroup::finish_tables_from_matrices() {
    const RootSystem& rs = rs_;
    int r = rs.rank();
    size_t mb = static_cast<size_t>(r) * r;
    uint32_t n = static_cast<uint32_t>(len_.size());

    MatrixIndex index(n, mb);
    for (uint32_t w = 0; w < n; ++w) {
        uint32_t got = index.find_or_insert(matrix(w), mats_, w);
        if (got != w) throw InvariantError("duplicate element matrix in table");
    }

    if (rtab_.empty()) { // cache-load path: rebuild right table by lookup
        rtab_.assign(static_cast<size_t>(n) * r, 0);
        std::vector<int8_t> tmp(mb);
        for (uint32_t w = 0; w < n; ++w)
            for (int s = 0; s < r; ++s) {
                mul_right(rs, matrix(w), s, tmp.data());
                uint32_t found = index.find(tmp.data(), mats_);
                if (found == MatrixIndex::kEmpty) throw InvariantError("right product missing from table");
                rtab_[static_cast<size_t>(w) * r + s] = found;
            }
    }

    ltab_.assign(static_cast<size_t>(n) * r, 0);
    {
        std::vector<int8_t> tmp(mb);
        for (uint32_t w = 0; w < n; ++w)
            for (int s = 0; s < r; ++s) {
                mul_left(rs, s, matrix(w), tmp.data());
                uint32_t found = index.find(tmp.data(), mats_);
                if (found == MatrixIndex::kEmpty) throw InvariantError("left product missing from table");
                ltab_[static_cast<size_t>(w) * r + s] = found;
            }
    }

    rdesc_.assign(n, 0);
    ldesc_.assign(n, 0);
    for (uint32_t w = 0; w < n; ++w) {
        uint16_t rd = 0, ld = 0;
        for (int s = 0; s < r; ++s) {
            if (len_[rmul(w, s)] < len_[w]) rd = static_cast<uint16_t>(rd | (1u << s));
            if (len_[lmul(s, w)] < len_[w]) ld = static_cast<uint16_t>(ld | (1u << s));
        }
        rdesc_[w] = rd;
        ldesc_[w] = ld;
    }

    len_ranges_.clear();
    uint32_t begin = 0;
    for (uint32_t w = 1; w <= n; ++w) {
        if (w == n || len_[w] != len_[begin]) {
            if (w < n && len_[w] < len_[begin]) throw InvariantError("elements not ordered by length");
            len_ranges_.push_back({begin, w});
            begin = w;
        }
    }
}

void WeylGroup::build_normal_forms() {
    uint32_t n = size();
    int r = rank();
    size_t pool_size = 0;
    for (uint32_t w = 0; w < n; ++w) pool_size += len_[w];
    nf_off_.assign(n, 0);
    nf_pool_.resize(pool_size);
    size_t at = 0;
    for (uint32_t w = 0; w < n; ++w) {
        nf_off_[w] = static_cast<uint32_t>(at);
        if (w == 0) continue;
        int j = std::countr_zero(static_cast<unsigned>(rdesc_[w]));
        if (j >= r) throw InvariantError("non-identity element without right descent");
        uint32_t parent = rtab_[static_cast<size_t>(w) * r + j];
        if (parent >= w) throw InvariantError("descent parent not yet processed");
        // NF(w) = NF(w·s_j) ++ [j]: prefix property of InverseShortLex.
        std::memcpy(nf_pool_.data() + at, nf_pool_.data() + nf_off_[parent], len_[parent]);
        nf_pool_[at + len_[parent]] = static_cast<uint8_t>(j);
        at += len_[w];
    }
}

RootVec WeylGroup::act(uint32_t w, const RootVec& v) const {
    int r = rank();
    const int8_t* m = matrix(w);
    RootVec out(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        long long acc = 0;
        for (int j = 0; j < r; ++j) acc += static_cast<long long>(m[i * r + j]) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = static_cast<int16_t>(acc);
    }
    return out;
}

uint32_t WeylGroup::element_of_word(const uint8_t* letters, size_t n) const {
    uint32_t w = 0;
    for (size_t i = 0; i < n; ++i) {
        if (letters[i] >= rank()) throw UsageError("generator index out of range in word");
        w = rmul(w, letters[i]);
    }
    return w;
}

std::pair<uint32_t, uint32_t> WeylGroup::length_range(int l) const {
    if (l < 0 || l >= static_cast<int>(len_ranges_.size())) return {0, 0};
    return len_ranges_[static_cast<size_t>(l)];
}

std::vector<uint32_t> WeylGroup::length_profile() const {
    std::vector<uint32_t> p;
    p.reserve(len_ranges_.size());
    for (auto [b, e] : len_ranges_) p.push_back(e - b);
    return p;
}

std::vector<uint32_t> WeylGroup::minimal_coset_reps(uint16_t theta_mask) const {
    if (theta_mask >> rank()) throw UsageError("theta mask has bits beyond the rank");
    std::vector<uint32_t> reps;
    for (uint32_t w = 0; w < size(); ++w)
        if ((rdesc_[w] & theta_mask) == 0) reps.push_back(w);
    return reps;
}

NfLeftMul nf_left_multiply(const WeylGroup& W, int s, uint32_t w) {
    if (s < 0 || s >= W.rank()) throw UsageError("generator index out of range");
    uint32_t v = W.lmul(s, w);
    int lw = W.length(w), lv = W.length(v);
    const uint8_t* a = W.nf(w);
    const uint8_t* b = W.nf(v);
    int j = 0;
    while (j < std::min(lw, lv) && a[j] == b[j]) ++j;
    NfLeftMul out;
    out.result = v;
    out.position = j;
    if (lv == lw - 1) {
        out.deleted = true;
        out.letter = a[j];
        // the rest of the shorter word must match past the deletion
        for (int k = j; k < lv; ++k)
            if (b[k] != a[k + 1]) throw InvariantError("left multiplication did not delete exactly one letter");
    } else if (lv == lw + 1) {
        out.deleted = false;
        out.letter = b[j];
        for (int k = j; k < lw; ++k)
            if (a[k] != b[k + 1]) throw InvariantError("left multiplication did not insert exactly one letter");
    } else {
        throw InvariantError("left multiplication changed length by more than one");
    }
    return out;
}

} // namespace flaghom
