#pragma once

#include "flaghom/poly.hpp"
#include "flaghom/root_system.hpp"

#include <string>
#include <vector>

namespace flaghom {

// Closed-form evaluation either produces the exact coefficient list or
// declines.  It never returns a polynomial it cannot stand behind:
// inputs outside the verified range come back unsupported with a reason.
struct ClosedFormResult {
    bool supported = false;
    IntPoly poly;
    std::string reason; // set when unsupported
    static ClosedFormResult ok(IntPoly p) { return {true, std::move(p), ""}; }
    static ClosedFormResult no(std::string why) { return {false, IntPoly(), std::move(why)}; }
};

// X statistic of the complement vector k (1-based, ascending) inside [1..n]:
// sum of floor(gap/2) over the gap vector (k1, k2-k1, ..., n+1-kr).
int x_statistic(int n, const std::vector<int>& k);

// Poincaré polynomials of partial flag manifolds, theta given as the 1-based
// set of included simple-root indices.
IntPoly pa_poly(int n, const std::vector<int>& theta);
IntPoly pb_poly(int n, const std::vector<int>& theta);
IntPoly pc_poly(int n, const std::vector<int>& theta);
ClosedFormResult pd_poly(int n, const std::vector<int>& theta);

// Connected components of the sub-Dynkin diagram spanned by theta, with a
// type name ("A3", "B2", "C3", "D4", "E6", ...) per component.
struct DiagramComponent {
    std::string type;
    std::vector<int> nodes; // 1-based, ascending
};
std::vector<DiagramComponent> classify_subdiagram(const RootSystem& rs, uint16_t theta_mask);

// Dispatcher over all supported types/ranks.
ClosedFormResult closed_form_poincare(const RootSystem& rs, uint16_t theta_mask);

} // namespace flaghom
