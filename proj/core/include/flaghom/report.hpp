#pragma once

#include "flaghom/homology.hpp"
#include "flaghom/orientability.hpp"

#include <string>
#include <vector>

namespace flaghom {

// Machine interface of a homology run.  Field order in the emitted JSON is
// fixed: type, rank, theta, cells, betti, torsion_ranks, poincare,
// orientable, dim, mode, elapsed_ms.
struct RunRecord {
    std::string type;          // "F4", "A3", ...
    std::vector<int> theta;    // 1-based inclusion indices
    HomologySummary homology;
    IntPoly poincare;
    bool orientable = false;
    int dim = 0;
    std::string mode;          // "exact" | "inferred"
    long long elapsed_ms = 0;  // zeroed under --stable-output
};

std::string homology_report_json(const RunRecord& r);

// cmd_poincare payload: closed form (if supported), cellular result, verdict.
struct PoincareRecord {
    std::string type;
    std::vector<int> theta;
    bool closed_supported = false;
    IntPoly closed_form;
    std::string unsupported_reason;
    IntPoly computed;
    std::string match; // "equal" | "unsupported-closed-form" | "MISMATCH"
    std::string mode;
    long long elapsed_ms = 0;
};

std::string poincare_report_json(const PoincareRecord& r);

// One CSV row per theta: both criteria plus the data behind them.
struct OrientabilityRow {
    std::vector<int> theta;
    std::string theta_types;     // "A2xA1", "-" for empty
    int dim = 0;
    int poincare_degree = -1;    // -1 when no closed form is available
    bool by_root_sums = false;
    int has_degree = 0;          // 0: unknown, 1: yes
    bool by_top_degree = false;
};

std::string orientability_csv(const std::string& type, const std::vector<OrientabilityRow>& rows);

} // namespace flaghom
