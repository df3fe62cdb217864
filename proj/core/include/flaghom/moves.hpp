#pragma once

#include "flaghom/root_system.hpp"
#include "flaghom/weyl.hpp"

#include <cstdint>
#include <vector>

namespace flaghom {

using Word = std::vector<uint8_t>; // generator letters, 0-based

enum class MoveKind { Commutation, ShortBraid, LongBraid };

// Jacobian sign of the coordinate change induced by one elementary move:
// commutation -1, short braid +1, long braid -1.
int move_sign(MoveKind kind);

struct Move {
    int pos; // 0-based start of the pattern
    MoveKind kind;
};

// All moves applicable to `word`.  Throws UsageError when the diagram has a
// triple bond: braid moves of order 6 carry no defined sign here, so words
// over G2 cannot be rewritten.
std::vector<Move> applicable_moves(const RootSystem& rs, const Word& word);

// Rewrites the pattern at `pos`; throws UsageError naming the position when
// the letters there do not match the move.
Word apply_move(const RootSystem& rs, const Word& word, int pos, MoveKind kind);

// Breadth-first oracle: connects two reduced words of the same element by
// elementary moves and returns the product of move signs.  Path independence
// is asserted on every revisit.  Words of different elements are rejected;
// exceeding `frontier_cap` distinct words raises ResourceError.
int degree_by_move_path(const RootSystem& rs, const Word& a, const Word& b,
                        size_t frontier_cap = 1'000'000);

enum class DegreeStrategy {
    LeftToRight,         // early-exit scan (the production path)
    LeftToRightFullScan, // no early exit; asserts agreement with the above
    RightToLeft,         // suffix-based variant; asserts nothing, tested equal
};

// Sign of the coordinate change between the parameterizations of the cell of
// w' coming from NF(w) with letter I deleted (1-based I) and from NF(w').
int degree_by_normal_form(const WeylGroup& W, uint32_t w, uint32_t wprime, int I,
                          DegreeStrategy strategy = DegreeStrategy::LeftToRight);

} // namespace flaghom
