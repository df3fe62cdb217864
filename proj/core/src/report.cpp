#include "flaghom/report.hpp"

#include <json.hpp>

#include <sstream>

namespace flaghom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_coeffs(const IntPoly& p) {
    ordered_json a = ordered_json::array();
    for (long long c : p.coeffs()) a.push_back(c);
    return a;
}

std::pair<std::string, int> split_tag(const std::string& tag) {
    return {tag.substr(0, 1), std::stoi(tag.substr(1))};
}

} // namespace

std::string homology_report_json(const RunRecord& r) {
    auto [letter, rank] = split_tag(r.type);
    ordered_json j;
    j["type"] = letter;
    j["rank"] = rank;
    j["theta"] = r.theta;
    j["cells"] = r.homology.cells;
    j["betti"] = r.homology.betti;
    j["torsion_ranks"] = r.homology.torsion_ranks;
    j["poincare"] = poly_coeffs(r.poincare);
    j["orientable"] = r.orientable;
    j["dim"] = r.dim;
    j["mode"] = r.mode;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string poincare_report_json(const PoincareRecord& r) {
    auto [letter, rank] = split_tag(r.type);
    ordered_json j;
    j["type"] = letter;
    j["rank"] = rank;
    j["theta"] = r.theta;
    if (r.closed_supported)
        j["closed_form"] = poly_coeffs(r.closed_form);
    else
        j["closed_form"] = nullptr;
    if (!r.closed_supported) j["closed_form_unsupported_reason"] = r.unsupported_reason;
    j["computed"] = poly_coeffs(r.computed);
    j["match"] = r.match;
    j["mode"] = r.mode;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string orientability_csv(const std::string& type, const std::vector<OrientabilityRow>& rows) {
    std::ostringstream out;
    out << "type,theta,theta_types,dim,poincare_degree,orientable_by_root_sums,orientable_by_top_degree,agree\n";
    for (const auto& r : rows) {
        out << type << ",";
        if (r.theta.empty()) {
            out << "-";
        } else {
            for (size_t i = 0; i < r.theta.size(); ++i) out << (i ? " " : "") << r.theta[i];
        }
        out << "," << (r.theta_types.empty() ? "-" : r.theta_types) << "," << r.dim << ",";
        if (r.poincare_degree >= 0)
            out << r.poincare_degree;
        else
            out << "?";
        out << "," << (r.by_root_sums ? "yes" : "no") << ",";
        if (r.has_degree)
            out << (r.by_top_degree ? "yes" : "no") << ","
                << (r.by_top_degree == r.by_root_sums ? "yes" : "NO");
        else
            out << "?,?";
        out << "\n";
    }
    return out.str();
}

} // namespace flaghom
