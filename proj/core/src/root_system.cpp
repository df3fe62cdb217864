#include "flaghom/root_system.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace flaghom {

namespace {

// Builds the Cartan matrix and squared-length normalization for one of the
// finite types, Bourbaki numbering throughout:
//   A_n: chain 1-2-...-n
//   B_n: chain with alpha_n short (double bond n-1 => n)
//   C_n: chain with alpha_n long
//   D_n: chain 1..n-1, node n attached to n-2
//   E_n: chain 1-3-4-5-...-n, node 2 attached to 4
//   F_4: 1-2=>3-4 (1,2 long; 3,4 short)
//   G_2: alpha_1 short, alpha_2 long
void build_cartan(char type, int n, std::vector<int>& cartan, std::vector<int>& dsym) {
    auto edges = std::vector<std::pair<int, int>>{}; // 0-based simple bonds
    dsym.assign(static_cast<size_t>(n), 1);
    switch (type) {
    case 'A':
        if (n < 1) throw UsageError("type A needs rank >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        break;
    case 'B':
        if (n < 2) throw UsageError("type B needs rank >= 2");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        for (int i = 0; i + 1 < n; ++i) dsym[static_cast<size_t>(i)] = 2;
        break;
    case 'C':
        if (n < 2) throw UsageError("type C needs rank >= 2");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        dsym[static_cast<size_t>(n - 1)] = 2;
        break;
    case 'D':
        if (n < 3) throw UsageError("type D needs rank >= 3");
        for (int i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({n - 3, n - 1});
        break;
    case 'E':
        if (n < 6 || n > 8) throw UsageError("type E needs rank 6, 7, or 8");
        edges.push_back({0, 2});
        for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({1, 3});
        break;
    case 'F':
        if (n != 4) throw UsageError("type F needs rank 4");
        edges = {{0, 1}, {1, 2}, {2, 3}};
        dsym = {2, 2, 1, 1};
        break;
    case 'G':
        if (n != 2) throw UsageError("type G needs rank 2");
        edges = {{0, 1}};
        dsym = {1, 3};
        break;
    default:
        throw UsageError(std::string("unknown type letter '") + type + "'");
    }
    cartan.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) cartan[static_cast<size_t>(i) * n + i] = 2;
    for (auto [a, b] : edges) {
        // (alpha_a, alpha_b) = -max(d_a, d_b) for every bond in these diagrams.
        int inner = -std::max(dsym[static_cast<size_t>(a)], dsym[static_cast<size_t>(b)]);
        cartan[static_cast<size_t>(a) * n + b] = inner / dsym[static_cast<size_t>(a)];
        cartan[static_cast<size_t>(b) * n + a] = inner / dsym[static_cast<size_t>(b)];
    }
}

} // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
    build_cartan(type, rank, cartan_, dsym_);

    // Positive roots: close the simple roots under all simple reflections,
    // keeping vectors with nonnegative coordinates.
    std::set<RootVec> seen;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank; ++i) {
        RootVec e(static_cast<size_t>(rank), 0);
        e[static_cast<size_t>(i)] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank; ++i) {
                RootVec w = reflect(i, v);
                bool nonneg = std::all_of(w.begin(), w.end(), [](int16_t c) { return c >= 0; });
                if (nonneg && seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    pos_roots_.assign(seen.begin(), seen.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const RootVec& a, const RootVec& b) {
        int ha = 0, hb = 0;
        for (int16_t c : a) ha += c;
        for (int16_t c : b) hb += c;
        if (ha != hb) return ha < hb;
        return a < b;
    });
}

int RootSystem::bond_order(int i, int j) const {
    if (i == j) return 1;
    switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InvariantError("impossible Cartan product");
    }
}

RootVec RootSystem::reflect(int i, const RootVec& v) const {
    long long pairing = 0; // <v, alpha_i^vee>
    for (int j = 0; j < rank_; ++j) pairing += static_cast<long long>(cartan(i, j)) * v[static_cast<size_t>(j)];
    RootVec w = v;
    w[static_cast<size_t>(i)] = static_cast<int16_t>(w[static_cast<size_t>(i)] - pairing);
    return w;
}

int RootSystem::positive_root_index(const RootVec& v) const {
    auto it = std::lower_bound(pos_roots_.begin(), pos_roots_.end(), v,
                               [](const RootVec& a, const RootVec& b) {
                                   int ha = 0, hb = 0;
                                   for (int16_t c : a) ha += c;
                                   for (int16_t c : b) hb += c;
                                   if (ha != hb) return ha < hb;
                                   return a < b;
                               });
    if (it == pos_roots_.end() || *it != v) return -1;
    return static_cast<int>(it - pos_roots_.begin());
}

long long RootSystem::root_norm_half(const RootVec& v) const {
    long long norm = 0; // (v, v)
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            norm += static_cast<long long>(v[static_cast<size_t>(i)]) * v[static_cast<size_t>(j)] * inner_simple(i, j);
    if (norm <= 0 || norm % 2 != 0) throw InvariantError("root has non-positive or odd norm");
    return norm / 2;
}

long long RootSystem::coroot_height(const RootVec& v) const {
    // gamma^vee = sum_i (c_i d_i / d_gamma) alpha_i^vee; each term is integral.
    long long dg = root_norm_half(v);
    long long h = 0;
    for (int i = 0; i < rank_; ++i) {
        long long num = static_cast<long long>(v[static_cast<size_t>(i)]) * dsym(i);
        if (num % dg != 0) throw InvariantError("coroot coordinate is not integral");
        h += num / dg;
    }
    return h;
}

uint64_t RootSystem::weyl_order() const {
    auto fact = [](int k) {
        uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<uint64_t>(i);
        return f;
    };
    switch (type_) {
    case 'A': return fact(rank_ + 1);
    case 'B':
    case 'C': return (uint64_t{1} << rank_) * fact(rank_);
    case 'D': return (uint64_t{1} << (rank_ - 1)) * fact(rank_);
    case 'E':
        if (rank_ == 6) return 51840;
        if (rank_ == 7) return 2903040;
        return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw InvariantError("unknown type");
    }
}

std::pair<char, int> parse_type_rank(const std::string& s) {
    if (s.size() < 2) throw UsageError("type must look like A3, B4, F4, ...: got '" + s + "'");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw UsageError("rank must be numeric in '" + s + "'");
    int rank = std::stoi(s.substr(1));
    if (rank < 1 || rank > 64) throw UsageError("rank out of range in '" + s + "'");
    std::vector<int> cartan, dsym;
    build_cartan(t, rank, cartan, dsym); // rejects unknown letters and bad ranks
    return {t, rank};
}

} // namespace flaghom
