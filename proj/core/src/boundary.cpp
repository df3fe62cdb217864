#include "flaghom/boundary.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace flaghom {

std::vector<Cover> covers_down(const WeylGroup& W, uint32_t w) {
    const RootSystem& rs = W.roots();
    int L = W.length(w);
    const uint8_t* a = W.nf(w);
    std::vector<Cover> out;
    std::set<uint32_t> lowers;
    Word deleted;
    deleted.reserve(static_cast<size_t>(L));
    for (int I = 1; I <= L; ++I) {
        deleted.assign(a, a + L);
        deleted.erase(deleted.begin() + (I - 1));
        uint32_t v = W.element_of_word(deleted);
        if (W.length(v) != L - 1) continue; // deleted word not reduced
        // gamma = u^{-1}(alpha_I) with u = s_{I+1} ... s_L
        RootVec g(static_cast<size_t>(rs.rank()), 0);
        g[a[I - 1]] = 1;
        for (int k = I; k < L; ++k) g = rs.reflect(a[k], g);
        if (rs.positive_root_index(g) < 0)
            throw InvariantError("cover root is not a positive root");
        if (!lowers.insert(v).second)
            throw InvariantError("two deletion positions produced the same lower element");
        out.push_back(Cover{v, I, std::move(g)});
    }
    return out;
}

int cover_coefficient(const WeylGroup& W, uint32_t w, const Cover& cover, DegreeStrategy strategy) {
    long long ht = W.roots().coroot_height(cover.gamma);
    if (ht & 1) return 0;
    int deg = degree_by_normal_form(W, w, cover.lower, cover.position, strategy);
    int sign = (cover.position & 1) ? -1 : +1;
    return sign * deg * 2;
}

CoverDatum cover_datum(const WeylGroup& W, uint32_t w, const Cover& cover, DegreeStrategy strategy) {
    CoverDatum d;
    d.w = w;
    d.wprime = cover.lower;
    d.I = cover.position;
    d.gamma = cover.gamma;
    d.coroot_height = W.roots().coroot_height(cover.gamma);
    d.degree = degree_by_normal_form(W, w, cover.lower, cover.position, strategy);
    d.coefficient = (d.coroot_height & 1) ? 0 : ((d.I & 1) ? -1 : +1) * d.degree * 2;
    return d;
}

size_t ChainComplex::total_cells() const {
    size_t n = 0;
    for (const auto& c : cells) n += c.size();
    return n;
}

namespace {

// Runs fn(i) for i in [0, n) over `threads` workers in fixed contiguous
// chunks; output written at disjoint indices stays deterministic.
template <typename Fn>
void parallel_for(size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(threads), n);
    size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t) {
        size_t begin = t * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

ChainComplex build_chain_complex(const WeylGroup& W, uint16_t theta_mask, const BuildOptions& opts) {
    if (W.roots().type() == 'G')
        throw UsageError("no cellular boundary over G2: its braid relation has order 6, "
                         "and the rewriting signs behind the boundary coefficients are only "
                         "defined for relations of order 2, 3, and 4");
    std::vector<uint32_t> reps = W.minimal_coset_reps(theta_mask);
    int top = 0;
    for (uint32_t w : reps) top = std::max(top, W.length(w));

    ChainComplex cc;
    cc.cells.assign(static_cast<size_t>(top) + 1, {});
    for (uint32_t w : reps) cc.cells[static_cast<size_t>(W.length(w))].push_back(w);

    // cell -> row position within its dimension
    std::vector<uint32_t> pos(W.size(), 0);
    for (const auto& bucket : cc.cells)
        for (size_t i = 0; i < bucket.size(); ++i) pos[bucket[i]] = static_cast<uint32_t>(i);

    cc.boundary.resize(static_cast<size_t>(top) + 1);
    cc.boundary[0].rows = 0;
    cc.boundary[0].cols = static_cast<uint32_t>(cc.cells[0].size());
    cc.boundary[0].col_ptr.assign(cc.cells[0].size() + 1, 0);

    for (int d = 1; d <= top; ++d) {
        const auto& cols = cc.cells[static_cast<size_t>(d)];
        std::vector<std::vector<std::pair<uint32_t, int32_t>>> entries(cols.size());
        std::exception_ptr first_error;
        std::mutex error_mu;
        parallel_for(cols.size(), opts.threads, [&](size_t c) {
            try {
                auto& col = entries[c];
                for (const Cover& cov : covers_down(W, cols[c])) {
                    if (W.right_descents(cov.lower) & theta_mask) continue; // projection off W^Theta
                    int coeff = cover_coefficient(W, cols[c], cov, opts.strategy);
                    if (coeff != 0) col.push_back({pos[cov.lower], coeff});
                }
                std::sort(col.begin(), col.end());
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
        if (first_error) std::rethrow_exception(first_error);

        SparseMat& m = cc.boundary[static_cast<size_t>(d)];
        m.rows = static_cast<uint32_t>(cc.cells[static_cast<size_t>(d) - 1].size());
        m.cols = static_cast<uint32_t>(cols.size());
        m.col_ptr.resize(cols.size() + 1);
        size_t nnz = 0;
        for (size_t c = 0; c < cols.size(); ++c) {
            m.col_ptr[c] = static_cast<uint32_t>(nnz);
            nnz += entries[c].size();
        }
        m.col_ptr[cols.size()] = static_cast<uint32_t>(nnz);
        m.row_idx.reserve(nnz);
        m.values.reserve(nnz);
        for (const auto& col : entries)
            for (auto [r, v] : col) {
                m.row_idx.push_back(r);
                m.values.push_back(v);
            }
    }

    if (opts.check_square) check_boundary_square_zero(cc);
    return cc;
}

void check_boundary_square_zero(const ChainComplex& cc) {
    for (const SparseMat& m : cc.boundary)
        for (int32_t v : m.values)
            if (v != 2 && v != -2)
                throw InvariantError("boundary entry " + std::to_string(v) + " is not ±2");

    for (int d = 1; d < static_cast<int>(cc.boundary.size()) - 1; ++d) {
        const SparseMat& lo = cc.boundary[static_cast<size_t>(d)];
        const SparseMat& hi = cc.boundary[static_cast<size_t>(d) + 1];
        std::vector<long long> acc(lo.rows, 0);
        std::vector<uint32_t> touched;
        for (uint32_t c = 0; c < hi.cols; ++c) {
            for (uint32_t e = hi.col_ptr[c]; e < hi.col_ptr[c + 1]; ++e) {
                uint32_t mid = hi.row_idx[e];
                long long v = hi.values[e];
                for (uint32_t f = lo.col_ptr[mid]; f < lo.col_ptr[mid + 1]; ++f) {
                    if (acc[lo.row_idx[f]] == 0) touched.push_back(lo.row_idx[f]);
                    acc[lo.row_idx[f]] += v * lo.values[f];
                }
            }
            for (uint32_t r : touched) {
                if (acc[r] != 0)
                    throw InvariantError("boundary square is nonzero at dimension " + std::to_string(d + 1));
                acc[r] = 0;
            }
            touched.clear();
        }
    }
}

} // namespace flaghom
