#pragma once

#include "flaghom/boundary.hpp"
#include "flaghom/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace flaghom {

using BigInt = boost::multiprecision::cpp_int;

// Invariant factors d_1 | d_2 | ... | d_r (all positive, units included),
// exact over arbitrary-precision integers.
std::vector<BigInt> smith_normal_form(const SparseMat& m);

// Rank over GF(p).  With halve set, entries are divided by 2 first (the
// boundary matrices are even throughout; an odd entry throws).
uint32_t rank_mod_p(const SparseMat& m, uint64_t p, bool halve = false, int threads = 1);

// Deterministic 62-bit probe primes (fixed seed), distinct.
std::pair<uint64_t, uint64_t> rank_probe_primes();

enum class HomologyMode { Exact, RankInferred, Auto };

struct HomologySummary {
    std::vector<uint32_t> cells;            // n_i
    std::vector<long long> betti;           // beta_i
    std::vector<long long> torsion_ranks;   // T_i = # nontrivial invariant factors of D_{i+1}
    std::vector<bool> torsion_certified;    // true when T_i came from an exact SNF
    std::vector<std::string> violations;    // invariant factors other than 2, spelled out
    bool exact_mode = true;                 // every dimension went through exact SNF
};

// Homology of the complex: H_i = Z^{beta_i} + (Z/2)^{T_i} whenever
// violations is empty.  Auto mode switches to rank inference above
// `exact_threshold` total cells.  Rank inference computes rank(D/2) over
// GF(2) and two 62-bit prime fields; on agreement the common value is taken
// as the rational rank, otherwise that dimension falls back to exact SNF.
// Rank inference alone cannot certify that every invariant factor is 2 —
// exact mode is the authority on torsion structure.
HomologySummary homology_groups(const ChainComplex& cc, HomologyMode mode = HomologyMode::Auto,
                                int threads = 1, size_t exact_threshold = 20000);

// Generating polynomial of the free ranks.
IntPoly poincare_polynomial(const HomologySummary& h);

// Cell counts n_i; mod 2 every boundary map vanishes (entries are even, which
// is asserted), so these are the mod-2 Betti numbers.
std::vector<uint32_t> mod2_betti(const ChainComplex& cc);

} // namespace flaghom
