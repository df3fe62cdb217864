#include "flaghom/orientability.hpp"
#include "flaghom/errors.hpp"

namespace flaghom {

std::vector<int> theta_positive_root_indices(const RootSystem& rs, uint16_t theta_mask) {
    if (theta_mask >> rs.rank()) throw UsageError("theta mask has bits beyond the rank");
    std::vector<int> out;
    const auto& roots = rs.positive_roots();
    for (size_t i = 0; i < roots.size(); ++i) {
        bool supported = true;
        for (int j = 0; j < rs.rank() && supported; ++j)
            if (roots[i][static_cast<size_t>(j)] != 0 && !(theta_mask & (1u << j))) supported = false;
        if (supported) out.push_back(static_cast<int>(i));
    }
    return out;
}

int flag_dimension(const RootSystem& rs, uint16_t theta_mask) {
    return static_cast<int>(rs.num_positive_roots()) -
           static_cast<int>(theta_positive_root_indices(rs, theta_mask).size());
}

long long pairing_sum(const RootSystem& rs, int alpha, uint16_t theta_mask) {
    if (alpha < 0 || alpha >= rs.rank()) throw UsageError("simple root index out of range");
    if (theta_mask & (1u << alpha)) throw UsageError("pairing sum is defined for alpha outside theta");
    // sum_beta <beta, alpha^vee> = sum_j (sum_beta beta_j) * cartan[alpha][j]
    std::vector<long long> total(static_cast<size_t>(rs.rank()), 0);
    for (int idx : theta_positive_root_indices(rs, theta_mask)) {
        const RootVec& beta = rs.positive_roots()[static_cast<size_t>(idx)];
        for (int j = 0; j < rs.rank(); ++j) total[static_cast<size_t>(j)] += beta[static_cast<size_t>(j)];
    }
    long long s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += static_cast<long long>(rs.cartan(alpha, j)) * total[static_cast<size_t>(j)];
    return s;
}

long long a_type_pairing_rule(int n, int k) {
    if (k < 1 || k > n) throw UsageError("index outside [1, n]");
    return -static_cast<long long>(k) * (n - k + 1);
}

OrientabilityReport orientability(const RootSystem& rs, uint16_t theta_mask, const IntPoly* poincare) {
    OrientabilityReport rep;
    rep.dim = flag_dimension(rs, theta_mask);
    rep.by_root_sums = true;
    for (int a = 0; a < rs.rank(); ++a) {
        if (theta_mask & (1u << a)) continue;
        long long s = pairing_sum(rs, a, theta_mask);
        rep.sums.push_back({a + 1, s});
        if (s % 2 != 0) rep.by_root_sums = false;
    }
    if (poincare) rep.by_top_degree = poincare->degree() == rep.dim;
    return rep;
}

} // namespace flaghom
