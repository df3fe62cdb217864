#pragma once

#include "flaghom/poly.hpp"
#include "flaghom/root_system.hpp"

#include <optional>
#include <vector>

namespace flaghom {

// Indices (into rs.positive_roots()) of the positive roots supported on the
// sub-diagram theta.
std::vector<int> theta_positive_root_indices(const RootSystem& rs, uint16_t theta_mask);

// Real dimension of the flag manifold F_theta: positive roots outside the
// theta subsystem.
int flag_dimension(const RootSystem& rs, uint16_t theta_mask);

// S(alpha, theta) = sum over beta in <theta>+ of <beta, alpha^vee>, for a
// simple root alpha (0-based) outside theta.
long long pairing_sum(const RootSystem& rs, int alpha, uint16_t theta_mask);

// Closed-form value of pairing_sum for type A with theta = all indices
// except k: -k(n-k+1).
long long a_type_pairing_rule(int n, int k);

struct OrientabilityReport {
    int dim = 0;
    bool by_root_sums = false;               // all pairing sums even
    std::optional<bool> by_top_degree;       // deg(P) == dim, when P is known
    std::vector<std::pair<int, long long>> sums; // (1-based simple index, sum) for alpha outside theta
};

// Both orientability criteria.  The top-degree criterion is filled only when
// a Poincaré polynomial is supplied; the two are computed independently.
OrientabilityReport orientability(const RootSystem& rs, uint16_t theta_mask,
                                  const IntPoly* poincare = nullptr);

} // namespace flaghom
