#include "flaghom/homology.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

namespace flaghom {

// ---------------------------------------------------------------------------
// Smith normal form, dense, arbitrary precision.  Pivot on minimal absolute
// value; after clearing a pivot's row and column, any submatrix entry not
// divisible by the pivot gets its row folded in and the clearing repeats, so
// the diagonal comes out as a divisibility chain.

std::vector<BigInt> smith_normal_form(const SparseMat& m) {
    size_t rows = m.rows, cols = m.cols;
    std::vector<BigInt> a(rows * cols);
    for (uint32_t c = 0; c < m.cols; ++c)
        for (uint32_t e = m.col_ptr[c]; e < m.col_ptr[c + 1]; ++e)
            a[static_cast<size_t>(m.row_idx[e]) * cols + c] = m.values[e];

    auto at = [&](size_t i, size_t j) -> BigInt& { return a[i * cols + j]; };
    std::vector<BigInt> factors;

    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        // minimal nonzero |entry| in the trailing submatrix
        size_t pi = t, pj = t;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (at(i, j) == 0) continue;
                BigInt v = abs(at(i, j));
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t)
            for (size_t j = 0; j < cols; ++j) std::swap(at(t, j), at(pi, j));
        if (pj != t)
            for (size_t i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pj));

        for (bool dirty = true; dirty;) {
            dirty = false;
            // clear column t
            for (size_t i = t + 1; i < rows; ++i) {
                if (at(i, t) == 0) continue;
                BigInt q = at(i, t) / at(t, t);
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
                if (at(i, t) != 0) { // remainder became the smaller pivot
                    for (size_t j = t; j < cols; ++j) std::swap(at(t, j), at(i, j));
                    dirty = true;
                }
            }
            // clear row t
            for (size_t j = t + 1; j < cols; ++j) {
                if (at(t, j) == 0) continue;
                BigInt q = at(t, j) / at(t, t);
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
                if (at(t, j) != 0) {
                    for (size_t i = t; i < rows; ++i) std::swap(at(i, t), at(i, j));
                    dirty = true;
                }
            }
            if (dirty) continue;
            // divisibility sweep
            for (size_t i = t + 1; i < rows && !dirty; ++i)
                for (size_t j = t + 1; j < cols && !dirty; ++j)
                    if (at(i, j) % at(t, t) != 0) {
                        for (size_t k = t; k < cols; ++k) at(t, k) += at(i, k);
                        dirty = true;
                    }
        }
        factors.push_back(abs(at(t, t)));
    }
    for (size_t i = 1; i < factors.size(); ++i)
        if (factors[i] % factors[i - 1] != 0)
            throw InvariantError("invariant factors failed the divisibility chain");
    return factors;
}

// ---------------------------------------------------------------------------
// Modular ranks: peel singleton rows/columns exactly, then eliminate a dense
// core.  Peeling a pivot whose row (or column) has a single surviving entry
// leaves the complementary submatrix untouched, so rank = 1 + rank(rest).

namespace {

struct Entry {
    uint32_t row, col;
    int32_t val;
};

struct PeeledCore {
    size_t rank_peeled = 0;
    std::vector<uint32_t> live_rows, live_cols; // original ids, ascending
    std::vector<Entry> entries;                 // surviving entries
};

PeeledCore peel_singletons(const SparseMat& m, bool halve) {
    std::vector<Entry> entries;
    entries.reserve(m.nnz());
    for (uint32_t c = 0; c < m.cols; ++c)
        for (uint32_t e = m.col_ptr[c]; e < m.col_ptr[c + 1]; ++e) {
            int32_t v = m.values[e];
            if (halve) {
                if (v % 2 != 0) throw InvariantError("odd entry in a boundary matrix");
                v /= 2;
            }
            if (v != 0) entries.push_back({m.row_idx[e], c, v});
        }

    std::vector<std::vector<uint32_t>> row_ent(m.rows), col_ent(m.cols); // entry ids
    for (uint32_t i = 0; i < entries.size(); ++i) {
        row_ent[entries[i].row].push_back(i);
        col_ent[entries[i].col].push_back(i);
    }
    std::vector<uint32_t> row_cnt(m.rows), col_cnt(m.cols);
    for (uint32_t r = 0; r < m.rows; ++r) row_cnt[r] = static_cast<uint32_t>(row_ent[r].size());
    for (uint32_t c = 0; c < m.cols; ++c) col_cnt[c] = static_cast<uint32_t>(col_ent[c].size());

    std::vector<char> row_alive(m.rows, 1), col_alive(m.cols, 1), ent_alive(entries.size(), 1);
    std::deque<std::pair<char, uint32_t>> work; // ('r', row) or ('c', col)
    for (uint32_t r = 0; r < m.rows; ++r)
        if (row_cnt[r] == 1) work.push_back({'r', r});
    for (uint32_t c = 0; c < m.cols; ++c)
        if (col_cnt[c] == 1) work.push_back({'c', c});

    PeeledCore out;
    auto kill_entry = [&](uint32_t e) {
        if (!ent_alive[e]) return;
        ent_alive[e] = 0;
        if (row_alive[entries[e].row] && --row_cnt[entries[e].row] == 1)
            work.push_back({'r', entries[e].row});
        if (col_alive[entries[e].col] && --col_cnt[entries[e].col] == 1)
            work.push_back({'c', entries[e].col});
    };
    auto kill_row = [&](uint32_t r) {
        row_alive[r] = 0;
        for (uint32_t e : row_ent[r]) kill_entry(e);
    };
    auto kill_col = [&](uint32_t c) {
        col_alive[c] = 0;
        for (uint32_t e : col_ent[c]) kill_entry(e);
    };

    while (!work.empty()) {
        auto [kind, id] = work.front();
        work.pop_front();
        if (kind == 'r') {
            if (!row_alive[id] || row_cnt[id] != 1) continue;
            uint32_t pivot = UINT32_MAX;
            for (uint32_t e : row_ent[id])
                if (ent_alive[e]) pivot = e;
            if (pivot == UINT32_MAX) continue;
            ++out.rank_peeled;
            ent_alive[pivot] = 0;
            row_alive[id] = 0;
            kill_col(entries[pivot].col);
        } else {
            if (!col_alive[id] || col_cnt[id] != 1) continue;
            uint32_t pivot = UINT32_MAX;
            for (uint32_t e : col_ent[id])
                if (ent_alive[e]) pivot = e;
            if (pivot == UINT32_MAX) continue;
            ++out.rank_peeled;
            ent_alive[pivot] = 0;
            col_alive[id] = 0;
            kill_row(entries[pivot].row);
        }
    }

    std::vector<uint32_t> row_map(m.rows, UINT32_MAX), col_map(m.cols, UINT32_MAX);
    for (uint32_t r = 0; r < m.rows; ++r)
        if (row_alive[r] && row_cnt[r] > 0) {
            row_map[r] = static_cast<uint32_t>(out.live_rows.size());
            out.live_rows.push_back(r);
        }
    for (uint32_t c = 0; c < m.cols; ++c)
        if (col_alive[c] && col_cnt[c] > 0) {
            col_map[c] = static_cast<uint32_t>(out.live_cols.size());
            out.live_cols.push_back(c);
        }
    for (uint32_t e = 0; e < entries.size(); ++e)
        if (ent_alive[e])
            out.entries.push_back({row_map[entries[e].row], col_map[entries[e].col], entries[e].val});
    return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % n);
}

// Montgomery arithmetic mod an odd n < 2^63.
struct Montgomery {
    explicit Montgomery(uint64_t n) : n_(n) {
        uint64_t inv = n; // Newton iteration for n^{-1} mod 2^64
        for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
        ninv_ = ~inv + 1; // -n^{-1} mod 2^64
        uint64_t r = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) % n);
        r2_ = mulmod_u64(r, r, n); // R^2 mod n
    }
    uint64_t reduce(__uint128_t t) const {
        uint64_t mlo = static_cast<uint64_t>(t) * ninv_;
        __uint128_t sum = t + static_cast<__uint128_t>(mlo) * n_;
        uint64_t res = static_cast<uint64_t>(sum >> 64);
        return res >= n_ ? res - n_ : res;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(static_cast<__uint128_t>(a) * b); }
    uint64_t to(uint64_t a) const { return mul(a % n_, r2_); }
    uint64_t from(uint64_t a) const { return reduce(a); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + n_ - b; }
    uint64_t pow(uint64_t base, uint64_t e) const {
        uint64_t acc = to(1);
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    uint64_t n_, ninv_, r2_;
};

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t acc = 1;
    a %= n;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return acc;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// GF(2) rank of the peeled core via bitset elimination.
size_t dense_rank_gf2(const PeeledCore& core) {
    size_t rows = core.live_rows.size(), cols = core.live_cols.size();
    if (rows == 0 || cols == 0) return 0;
    size_t words = (cols + 63) / 64;
    std::vector<uint64_t> bits(rows * words, 0);
    for (const Entry& e : core.entries)
        if (e.val & 1) bits[e.row * words + (e.col >> 6)] ^= (1ull << (e.col & 63));
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t w = c >> 6;
        uint64_t mask = 1ull << (c & 63);
        size_t pivot = SIZE_MAX;
        for (size_t i = rank; i < rows; ++i)
            if (bits[i * words + w] & mask) {
                pivot = i;
                break;
            }
        if (pivot == SIZE_MAX) continue;
        if (pivot != rank)
            for (size_t k = w; k < words; ++k) std::swap(bits[pivot * words + k], bits[rank * words + k]);
        for (size_t i = rank + 1; i < rows; ++i)
            if (bits[i * words + w] & mask)
                for (size_t k = w; k < words; ++k) bits[i * words + k] ^= bits[rank * words + k];
        ++rank;
    }
    return rank;
}

// GF(p) rank of the peeled core, dense Montgomery elimination; row updates
// are split across threads (exact field ops, so the result is unchanged).
size_t dense_rank_mod_p(const PeeledCore& core, uint64_t p, int threads) {
    size_t rows = core.live_rows.size(), cols = core.live_cols.size();
    if (rows == 0 || cols == 0) return 0;
    Montgomery mont(p);
    std::vector<uint64_t> a(rows * cols, 0);
    for (const Entry& e : core.entries) {
        long long v = e.val % static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
        a[e.row * cols + e.col] = mont.to(static_cast<uint64_t>(v));
    }
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = SIZE_MAX;
        for (size_t i = rank; i < rows; ++i)
            if (a[i * cols + c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == SIZE_MAX) continue;
        if (pivot != rank)
            for (size_t k = c; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        uint64_t inv = mont.pow(a[rank * cols + c], p - 2);
        const uint64_t* prow = &a[rank * cols];
        auto eliminate = [&](size_t i) {
            uint64_t lead = a[i * cols + c];
            if (lead == 0) return;
            uint64_t f = mont.mul(lead, inv);
            uint64_t* row = &a[i * cols];
            row[c] = 0;
            for (size_t k = c + 1; k < cols; ++k) row[k] = mont.sub(row[k], mont.mul(f, prow[k]));
        };
        size_t below = rows - rank - 1;
        if (threads <= 1 || below < 64) {
            for (size_t i = rank + 1; i < rows; ++i) eliminate(i);
        } else {
            size_t workers = std::min<size_t>(static_cast<size_t>(threads), below);
            size_t chunk = (below + workers - 1) / workers;
            std::vector<std::thread> pool;
            for (size_t t = 0; t < workers; ++t) {
                size_t b = rank + 1 + t * chunk, e = std::min(rows, b + chunk);
                if (b >= e) break;
                pool.emplace_back([b, e, &eliminate] {
                    for (size_t i = b; i < e; ++i) eliminate(i);
                });
            }
            for (auto& th : pool) th.join();
        }
        ++rank;
    }
    return rank;
}

} // namespace

uint32_t rank_mod_p(const SparseMat& m, uint64_t p, bool halve, int threads) {
    if (p < 2) throw UsageError("modulus must be prime");
    PeeledCore core = peel_singletons(m, halve);
    size_t rank = core.rank_peeled;
    if (p == 2)
        rank += dense_rank_gf2(core);
    else
        rank += dense_rank_mod_p(core, p, threads);
    return static_cast<uint32_t>(rank);
}

std::pair<uint64_t, uint64_t> rank_probe_primes() {
    uint64_t state = 0x464c4147484f4d31ull; // fixed seed: reproducible probes
    auto next_prime = [&state]() {
        for (;;) {
            uint64_t x = splitmix64(state);
            uint64_t cand = (1ull << 61) | (x & ((1ull << 61) - 1)) | 1ull;
            if (is_prime_u64(cand)) return cand;
        }
    };
    uint64_t p1 = next_prime();
    uint64_t p2 = next_prime();
    while (p2 == p1) p2 = next_prime();
    return {p1, p2};
}

std::vector<uint32_t> mod2_betti(const ChainComplex& cc) {
    for (const SparseMat& m : cc.boundary)
        for (int32_t v : m.values)
            if (v % 2 != 0) throw InvariantError("odd boundary entry; mod-2 boundaries do not vanish");
    std::vector<uint32_t> out;
    for (const auto& bucket : cc.cells) out.push_back(static_cast<uint32_t>(bucket.size()));
    return out;
}

HomologySummary homology_groups(const ChainComplex& cc, HomologyMode mode, int threads,
                                size_t exact_threshold) {
    int top = cc.top_dim();
    bool exact = mode == HomologyMode::Exact ||
                 (mode == HomologyMode::Auto && cc.total_cells() <= exact_threshold);

    HomologySummary h;
    for (const auto& bucket : cc.cells) h.cells.push_back(static_cast<uint32_t>(bucket.size()));

    // ranks[d] = rank of D_d over Q; factor lists where an exact SNF ran
    std::vector<uint32_t> ranks(static_cast<size_t>(top) + 2, 0);
    std::vector<std::vector<BigInt>> factors(static_cast<size_t>(top) + 2);
    std::vector<char> dim_exact(static_cast<size_t>(top) + 2, 0);
    auto [p1, p2] = rank_probe_primes();

    std::vector<int> dims;
    for (int d = 1; d <= top; ++d) dims.push_back(d);
    std::exception_ptr first_error;
    std::mutex mu;
    auto run_dim = [&](int d) {
        try {
            const SparseMat& m = cc.boundary[static_cast<size_t>(d)];
            if (!exact) {
                uint32_t r2 = rank_mod_p(m, 2, /*halve=*/true, threads);
                uint32_t rp1 = rank_mod_p(m, p1, /*halve=*/true, threads);
                uint32_t rp2 = rank_mod_p(m, p2, /*halve=*/true, threads);
                if (r2 == rp1 && rp1 == rp2) {
                    ranks[static_cast<size_t>(d)] = r2;
                    return;
                }
                // a prime saw a different rank: this dimension goes exact
            }
            std::vector<BigInt> f = smith_normal_form(m);
            ranks[static_cast<size_t>(d)] = static_cast<uint32_t>(f.size());
            factors[static_cast<size_t>(d)] = std::move(f);
            dim_exact[static_cast<size_t>(d)] = 1;
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!first_error) first_error = std::current_exception();
        }
    };
    // dimensions are independent; in exact mode they parallelize cleanly
    if (threads > 1 && exact && dims.size() > 1) {
        size_t workers = std::min<size_t>(static_cast<size_t>(threads), dims.size());
        std::vector<std::thread> pool;
        std::atomic<size_t> cursor{0};
        for (size_t t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= dims.size()) break;
                    run_dim(dims[i]);
                }
            });
        for (auto& th : pool) th.join();
    } else {
        for (int d : dims) run_dim(d);
    }
    if (first_error) std::rethrow_exception(first_error);

    h.exact_mode = true;
    for (int d = 1; d <= top; ++d) h.exact_mode = h.exact_mode && dim_exact[static_cast<size_t>(d)];

    for (int i = 0; i <= top; ++i) {
        long long n = h.cells[static_cast<size_t>(i)];
        long long beta = n - ranks[static_cast<size_t>(i)] - ranks[static_cast<size_t>(i) + 1];
        if (beta < 0) throw InvariantError("negative Betti number: rank computation is inconsistent");
        h.betti.push_back(beta);
        bool certified = dim_exact[static_cast<size_t>(i) + 1] != 0 || i == top;
        long long torsion;
        if (dim_exact[static_cast<size_t>(i) + 1]) {
            torsion = 0;
            for (const BigInt& f : factors[static_cast<size_t>(i) + 1])
                if (f != 1) {
                    ++torsion;
                    if (f != 2)
                        h.violations.push_back("H_" + std::to_string(i) + " has invariant factor " +
                                               f.str() + " (not 2)");
                }
        } else {
            // inferred: rank(D) probes agreed, factors of D = 2M presumed all 2
            torsion = ranks[static_cast<size_t>(i) + 1];
        }
        h.torsion_ranks.push_back(torsion);
        h.torsion_certified.push_back(certified);
    }

    // Euler characteristic must match the cell counts.
    long long chi_cells = 0, chi_betti = 0;
    for (int i = 0; i <= top; ++i) {
        long long sgn = (i % 2 == 0) ? 1 : -1;
        chi_cells += sgn * h.cells[static_cast<size_t>(i)];
        chi_betti += sgn * h.betti[static_cast<size_t>(i)];
    }
    if (chi_cells != chi_betti) throw InvariantError("Euler characteristic mismatch");

    // Universal coefficients with 2-torsion only: n_i = beta_i + T_i + T_{i-1}.
    if (h.violations.empty())
        for (int i = 0; i <= top; ++i) {
            long long prev = i > 0 ? h.torsion_ranks[static_cast<size_t>(i) - 1] : 0;
            if (h.betti[static_cast<size_t>(i)] + h.torsion_ranks[static_cast<size_t>(i)] + prev !=
                h.cells[static_cast<size_t>(i)])
                throw InvariantError("universal-coefficient count mismatch at dimension " + std::to_string(i));
        }

    return h;
}

IntPoly poincare_polynomial(const HomologySummary& h) {
    return IntPoly(std::vector<long long>(h.betti.begin(), h.betti.end()));
}

} // namespace flaghom
