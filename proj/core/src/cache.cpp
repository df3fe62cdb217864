#include "flaghom/cache.hpp"
#include "flaghom/errors.hpp"

#include <cstring>
#include <fstream>

namespace flaghom {

namespace {

constexpr char kMagic[4] = {'W', 'G', 'C', '1'};
constexpr uint16_t kVersion = 1;

uint64_t fnv1a(const uint8_t* data, size_t n) {
    uint64_t h = 14695981039346656037ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

template <typename T>
void put(std::vector<uint8_t>& out, T v) {
    for (size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

template <typename T>
T get(const std::vector<uint8_t>& in, size_t& at) {
    if (at + sizeof(T) > in.size()) throw CacheError("cache file is truncated");
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v = static_cast<T>(v | (static_cast<T>(in[at + i]) << (8 * i)));
    at += sizeof(T);
    return v;
}

} // namespace

void write_group_cache(const WeylGroup& W, const std::string& path) {
    std::vector<uint8_t> out;
    out.reserve(64 + W.size() * 8);
    for (char c : kMagic) out.push_back(static_cast<uint8_t>(c));
    put<uint16_t>(out, kVersion);
    out.push_back(static_cast<uint8_t>(W.roots().type()));
    out.push_back(static_cast<uint8_t>(W.roots().rank()));
    put<uint64_t>(out, W.size());
    for (uint32_t w = 0; w < W.size(); ++w) {
        out.push_back(static_cast<uint8_t>(W.length(w)));
        const uint8_t* nf = W.nf(w);
        out.insert(out.end(), nf, nf + W.length(w));
        put<uint16_t>(out, W.right_descents(w));
        put<uint16_t>(out, W.left_descents(w));
    }
    put<uint64_t>(out, fnv1a(out.data(), out.size()));

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw CacheError("cannot open cache file for writing: " + path);
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw CacheError("short write to cache file: " + path);
}

WeylGroup read_group_cache(const std::string& path, uint64_t max_elements) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw CacheError("cannot open cache file: " + path);
    std::vector<uint8_t> in(static_cast<size_t>(f.tellg()));
    f.seekg(0);
    f.read(reinterpret_cast<char*>(in.data()), static_cast<std::streamsize>(in.size()));
    if (!f) throw CacheError("short read from cache file: " + path);

    if (in.size() < 16 + 8) throw CacheError("cache file is truncated");
    if (std::memcmp(in.data(), kMagic, 4) != 0) throw CacheError("bad cache magic (not a WGC1 file)");
    size_t at = 4;
    uint16_t version = get<uint16_t>(in, at);
    if (version != kVersion)
        throw CacheError("unsupported cache version " + std::to_string(version));

    uint64_t stored_sum = 0;
    std::memcpy(&stored_sum, in.data() + in.size() - 8, 8);
    if (fnv1a(in.data(), in.size() - 8) != stored_sum) throw CacheError("cache checksum mismatch");

    char type = static_cast<char>(get<uint8_t>(in, at));
    int rank = get<uint8_t>(in, at);
    RootSystem rs(type, rank);
    uint64_t count = get<uint64_t>(in, at);
    if (count != rs.weyl_order()) throw CacheError("cache element count does not match |W|");
    if (count > max_elements)
        throw CacheError("cached group exceeds the element budget " + std::to_string(max_elements));

    WeylGroup W(rs);
    size_t payload_end = in.size() - 8;
    W.len_.resize(count);
    W.rdesc_.resize(count);
    W.ldesc_.resize(count);
    W.nf_off_.resize(count);
    std::vector<uint8_t> pool;
    int prev_len = 0;
    for (uint64_t w = 0; w < count; ++w) {
        uint8_t len = get<uint8_t>(in, at);
        if (len < prev_len) throw CacheError("cache records are not ordered by length");
        prev_len = len;
        if (at + len > payload_end) throw CacheError("cache file is truncated");
        W.nf_off_[w] = static_cast<uint32_t>(pool.size());
        for (int i = 0; i < len; ++i) {
            uint8_t letter = in[at++];
            if (letter >= rank) throw CacheError("cache word letter out of range");
            pool.push_back(letter);
        }
        W.len_[w] = len;
        W.rdesc_[w] = get<uint16_t>(in, at);
        W.ldesc_[w] = get<uint16_t>(in, at);
    }
    if (at != payload_end) throw CacheError("cache file has trailing bytes");
    W.nf_pool_ = std::move(pool);

    // rebuild matrices by folding the stored words
    int r = rank;
    size_t mb = static_cast<size_t>(r) * r;
    W.mats_.assign(count * mb, 0);
    std::vector<int8_t> cur(mb), nxt(mb);
    for (uint64_t w = 0; w < count; ++w) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int i = 0; i < r; ++i) cur[static_cast<size_t>(i) * r + i] = 1;
        const uint8_t* word = W.nf_pool_.data() + W.nf_off_[w];
        for (int i = 0; i < W.len_[w]; ++i) {
            // right-multiply by s = word[i]: col_j -= cartan[s][j] * col_s
            int s = word[i];
            std::memcpy(nxt.data(), cur.data(), mb);
            for (int row = 0; row < r; ++row) {
                int8_t cs = cur[static_cast<size_t>(row) * r + s];
                if (cs == 0) continue;
                for (int j = 0; j < r; ++j)
                    nxt[static_cast<size_t>(row) * r + j] =
                        static_cast<int8_t>(nxt[static_cast<size_t>(row) * r + j] - rs.cartan(s, j) * cs);
            }
            std::swap(cur, nxt);
        }
        std::memcpy(W.mats_.data() + w * mb, cur.data(), mb);
    }

    std::vector<uint16_t> stored_rdesc = W.rdesc_, stored_ldesc = W.ldesc_;
    std::vector<uint8_t> stored_pool = W.nf_pool_;
    try {
        W.finish_tables_from_matrices(); // recomputes descents from scratch
        W.build_normal_forms();
    } catch (const InvariantError& e) {
        throw CacheError(std::string("cache contents are inconsistent: ") + e.what());
    }
    if (W.rdesc_ != stored_rdesc || W.ldesc_ != stored_ldesc)
        throw CacheError("cache descent masks do not match the reconstructed group");
    if (W.nf_pool_ != stored_pool)
        throw CacheError("cache words are not the canonical normal forms");
    return W;
}

} // namespace flaghom
