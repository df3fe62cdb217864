#pragma once

#include "flaghom/moves.hpp"
#include "flaghom/weyl.hpp"

#include <cstdint>
#include <vector>

namespace flaghom {

// One Bruhat cover w ⋗ w' read off a normal-form deletion.
struct Cover {
    uint32_t lower;  // element index of w'
    int position;    // 1-based deletion index I in NF(w)
    RootVec gamma;   // u^{-1}(alpha_I) with u the suffix after the deleted letter
};

// All covers of w, one per valid deletion position; each lower element
// appears exactly once (asserted).
std::vector<Cover> covers_down(const WeylGroup& W, uint32_t w);

// (-1)^I * degree * (1 + (-1)^{ht(gamma^vee)}), always in {0, +2, -2}.
// The degree scan is skipped when the coroot height is odd (coefficient 0).
int cover_coefficient(const WeylGroup& W, uint32_t w, const Cover& cover,
                      DegreeStrategy strategy = DegreeStrategy::LeftToRight);

// Fully evaluated cover, for inspection and tests.
struct CoverDatum {
    uint32_t w;
    uint32_t wprime;
    int I;
    RootVec gamma;
    long long coroot_height;
    int degree;
    int coefficient;
};
CoverDatum cover_datum(const WeylGroup& W, uint32_t w, const Cover& cover,
                       DegreeStrategy strategy = DegreeStrategy::LeftToRight);

// Column-compressed integer matrix; entries within a column are sorted by row.
struct SparseMat {
    uint32_t rows = 0, cols = 0;
    std::vector<uint32_t> col_ptr; // size cols+1
    std::vector<uint32_t> row_idx;
    std::vector<int32_t> values;
    size_t nnz() const { return row_idx.size(); }
};

// Cellular chain complex of a (partial) flag manifold.  cells[d] lists the
// minimal coset representatives of length d in ascending element index;
// boundary[d] maps dimension-d chains to dimension-(d-1) chains (boundary[0]
// is the empty map out of dimension 0).
struct ChainComplex {
    std::vector<std::vector<uint32_t>> cells;
    std::vector<SparseMat> boundary;
    int top_dim() const { return static_cast<int>(cells.size()) - 1; }
    size_t total_cells() const;
};

struct BuildOptions {
    int threads = 1;
    DegreeStrategy strategy = DegreeStrategy::LeftToRight;
    bool check_square = true; // verify boundary∘boundary = 0 after assembly
};

ChainComplex build_chain_complex(const WeylGroup& W, uint16_t theta_mask,
                                 const BuildOptions& opts = {});

// Throws InvariantError unless every product D_d · D_{d+1} vanishes and every
// stored entry is ±2.
void check_boundary_square_zero(const ChainComplex& cc);

} // namespace flaghom
