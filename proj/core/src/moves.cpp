#include "flaghom/moves.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace flaghom {

namespace {

void reject_triple_bonds(const RootSystem& rs) {
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = i + 1; j < rs.rank(); ++j)
            if (rs.bond_order(i, j) == 6)
                throw UsageError("moves over " + rs.name() +
                                 " are unsupported: order-6 braid relations carry no move sign here");
}

std::string word_key(const Word& w) { return std::string(w.begin(), w.end()); }

// Column-wise evaluation of the word's action matrix, used to compare
// elements without a group table.
std::vector<RootVec> word_columns(const RootSystem& rs, const Word& word) {
    std::vector<RootVec> cols;
    for (int j = 0; j < rs.rank(); ++j) {
        RootVec v(static_cast<size_t>(rs.rank()), 0);
        v[static_cast<size_t>(j)] = 1;
        for (size_t i = word.size(); i-- > 0;) v = rs.reflect(word[i], v);
        cols.push_back(std::move(v));
    }
    return cols;
}

} // namespace

int move_sign(MoveKind kind) {
    switch (kind) {
    case MoveKind::Commutation: return -1;
    case MoveKind::ShortBraid: return +1;
    case MoveKind::LongBraid: return -1;
    }
    throw InvariantError("bad MoveKind");
}

std::vector<Move> applicable_moves(const RootSystem& rs, const Word& word) {
    reject_triple_bonds(rs);
    std::vector<Move> out;
    int n = static_cast<int>(word.size());
    for (int p = 0; p < n; ++p) {
        if (p + 1 < n) {
            int a = word[p], b = word[p + 1];
            if (a != b && rs.bond_order(a, b) == 2) out.push_back({p, MoveKind::Commutation});
        }
        if (p + 2 < n) {
            int a = word[p], b = word[p + 1];
            if (a != b && word[p + 2] == a && rs.bond_order(a, b) == 3) out.push_back({p, MoveKind::ShortBraid});
        }
        if (p + 3 < n) {
            int a = word[p], b = word[p + 1];
            if (a != b && word[p + 2] == a && word[p + 3] == b && rs.bond_order(a, b) == 4)
                out.push_back({p, MoveKind::LongBraid});
        }
    }
    return out;
}

Word apply_move(const RootSystem& rs, const Word& word, int pos, MoveKind kind) {
    reject_triple_bonds(rs);
    int span = kind == MoveKind::Commutation ? 2 : kind == MoveKind::ShortBraid ? 3 : 4;
    int need_order = kind == MoveKind::Commutation ? 2 : kind == MoveKind::ShortBraid ? 3 : 4;
    if (pos < 0 || pos + span > static_cast<int>(word.size()))
        throw UsageError("move at position " + std::to_string(pos) + " does not fit in the word");
    int a = word[static_cast<size_t>(pos)], b = word[static_cast<size_t>(pos) + 1];
    bool pattern = a != b && rs.bond_order(a, b) == need_order;
    for (int k = 2; k < span && pattern; ++k)
        pattern = word[static_cast<size_t>(pos) + k] == ((k % 2 == 0) ? a : b);
    if (!pattern)
        throw UsageError("letters at position " + std::to_string(pos) + " do not match the move pattern");
    Word out = word;
    for (int k = 0; k < span; ++k)
        out[static_cast<size_t>(pos) + k] = static_cast<uint8_t>((k % 2 == 0) ? b : a);
    return out;
}

int degree_by_move_path(const RootSystem& rs, const Word& a, const Word& b, size_t frontier_cap) {
    reject_triple_bonds(rs);
    if (a.size() != b.size()) throw UsageError("words of different lengths cannot be connected by moves");
    if (word_columns(rs, a) != word_columns(rs, b))
        throw UsageError("words evaluate to different group elements");
    if (a == b) return +1;

    std::unordered_map<std::string, int> sign;
    sign.reserve(1024);
    sign[word_key(a)] = +1;
    std::deque<Word> queue{a};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        int cur_sign = sign.at(word_key(cur));
        for (const Move& m : applicable_moves(rs, cur)) {
            Word next = apply_move(rs, cur, m.pos, m.kind);
            int next_sign = cur_sign * move_sign(m.kind);
            auto [it, fresh] = sign.emplace(word_key(next), next_sign);
            if (!fresh) {
                if (it->second != next_sign)
                    throw InvariantError("move path signs disagree: degree is not path-independent here");
                continue;
            }
            if (sign.size() > frontier_cap)
                throw ResourceError("move graph exceeded " + std::to_string(frontier_cap) + " words");
            queue.push_back(std::move(next));
        }
    }
    auto it = sign.find(word_key(b));
    if (it == sign.end())
        throw UsageError("words are not connected by elementary moves (inputs must be reduced)");
    return it->second;
}

namespace {

int lcp_len(const uint8_t* a, int la, const uint8_t* b, int lb) {
    int n = std::min(la, lb), j = 0;
    while (j < n && a[j] == b[j]) ++j;
    return j;
}

// Running sign of rebuilding `word` letter by letter through left
// multiplications; also returns the inverse element it accumulates.
std::pair<int, uint32_t> left_rebuild_sign(const WeylGroup& W, const uint8_t* word, int len) {
    uint32_t y = W.identity();
    int sgn = 1;
    for (int k = 0; k < len; ++k) {
        uint32_t y2 = W.lmul(word[k], y);
        if (W.length(y2) != W.length(y) + 1)
            throw InvariantError("left rebuild hit a deletion on a reduced word");
        int j = lcp_len(W.nf(y), W.length(y), W.nf(y2), W.length(y2));
        if (j & 1) sgn = -sgn;
        y = y2;
    }
    return {sgn, y};
}

} // namespace

int degree_by_normal_form(const WeylGroup& W, uint32_t w, uint32_t wprime, int I, DegreeStrategy strategy) {
    int L = W.length(w);
    if (W.length(wprime) != L - 1) throw UsageError("not a covering pair: lengths differ by more than one");
    if (I < 1 || I > L) throw UsageError("deletion index out of range");
    const uint8_t* a = W.nf(w);
    const uint8_t* b = W.nf(wprime);

    Word deleted(a, a + L);
    deleted.erase(deleted.begin() + (I - 1));
    if (W.element_of_word(deleted) != wprime)
        throw UsageError("deletion index does not produce the lower element of the pair");

    if (strategy == DegreeStrategy::RightToLeft) {
        auto [sd, yd] = left_rebuild_sign(W, deleted.data(), L - 1);
        auto [sb, yb] = left_rebuild_sign(W, b, L - 1);
        if (yd != yb) throw InvariantError("right-to-left rebuilds reached different elements");
        return sd * sb;
    }

    if (std::equal(deleted.begin(), deleted.end(), b)) return +1;

    int p = 0;
    while (p < L - 1 && a[p] == b[p]) ++p;
    if (p >= I - 1)
        throw InvariantError("first difference fell at or beyond the deletion index");

    uint32_t u = W.element_of_word(a + I, static_cast<size_t>(L - I));
    int deg = 1;
    int stop = strategy == DegreeStrategy::LeftToRightFullScan ? 0 : p;
    for (int q = I - 2; q >= stop; --q) {
        uint32_t u2 = W.lmul(a[q], u);
        if (W.length(u2) != W.length(u) + 1)
            throw InvariantError("normal-form degree scan hit a deletion");
        int j = lcp_len(W.nf(u), W.length(u), W.nf(u2), W.length(u2));
        if (q < p && j != 0)
            throw InvariantError("full-scan step below the first difference moved the sign");
        if (j & 1) deg = -deg;
        u = u2;
    }
    // The rebuilt element must be the corresponding suffix of NF(w').
    int tail = W.length(u);
    if (tail != L - 1 - stop ||
        lcp_len(W.nf(u), tail, b + stop, tail) != tail)
        throw InvariantError("normal-form degree scan did not reproduce the suffix of NF(w')");
    return deg;
}

} // namespace flaghom
