#pragma once

#include "flaghom/moves.hpp"
#include "flaghom/weyl.hpp"

#include <algorithm>
#include <map>
#include <vector>

// Brute-force reference machinery shared by the unit tests.
namespace testutil {

using flaghom::Word;

// All reduced words of w, by peeling right descents.  Exponential; only for
// the small groups exercised in tests.
inline std::vector<Word> all_reduced_words(const flaghom::WeylGroup& W, uint32_t w,
                                           std::map<uint32_t, std::vector<Word>>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (w == W.identity()) {
        out.push_back({});
    } else {
        for (int s = 0; s < W.rank(); ++s) {
            if (!((W.right_descents(w) >> s) & 1)) continue;
            for (Word u : all_reduced_words(W, W.rmul(w, s), memo)) {
                u.push_back(static_cast<uint8_t>(s));
                out.push_back(std::move(u));
            }
        }
    }
    memo[w] = out;
    return out;
}

// Inverse via the reversed normal form (generators are involutions).
inline uint32_t inverse_of(const flaghom::WeylGroup& W, uint32_t w) {
    Word nf = W.nf_word(w);
    std::reverse(nf.begin(), nf.end());
    return W.element_of_word(nf);
}

} // namespace testutil
