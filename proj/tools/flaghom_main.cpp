#include "flaghom/cache.hpp"
#include "flaghom/closed_form.hpp"
#include "flaghom/errors.hpp"
#include "flaghom/homology.hpp"
#include "flaghom/orientability.hpp"
#include "flaghom/report.hpp"
#include "flaghom/verify.hpp"
#include "flaghom/weyl.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace flaghom;

struct Common {
    std::string type;
    int rank = 0;
    std::optional<std::string> theta;
    std::optional<std::string> theta_removed;
    std::string mode = "auto";
    int threads = 1;
    std::string cache_path;
    bool stable_output = false;
    uint64_t max_elements = WeylGroup::kDefaultBudget;
};

void add_group_options(CLI::App* sub, Common& c) {
    sub->add_option("--type", c.type, "Lie type: a letter (with --rank) or a tag like F4")->required();
    sub->add_option("--rank", c.rank, "rank when --type is a bare letter");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", c.cache_path,
                    "group cache file: read when present, otherwise built and written");
    sub->add_option("--max-elements", c.max_elements, "refuse groups larger than this");
}

void add_theta_options(CLI::App* sub, Common& c) {
    auto* inc = sub->add_option("--theta", c.theta,
                                "included simple-root indices, e.g. \"1,3\"; \"\" for the empty set");
    auto* rem = sub->add_option("--theta-removed", c.theta_removed,
                                "complement convention: indices NOT in theta");
    inc->excludes(rem);
}

void add_output_options(CLI::App* sub, Common& c) {
    sub->add_option("--mode", c.mode, "homology engine: exact | rank-inferred | auto")
        ->check(CLI::IsMember({"exact", "rank-inferred", "auto"}));
    sub->add_flag("--stable-output", c.stable_output, "zero out elapsed_ms for byte-stable output");
}

RootSystem make_root_system(const Common& c) {
    std::string tag = c.type;
    if (tag.size() == 1 && c.rank > 0) tag += std::to_string(c.rank);
    auto [letter, rank] = parse_type_rank(tag);
    return RootSystem(letter, rank);
}

std::vector<int> parse_index_list(const std::string& s, int rank) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size()) throw UsageError("bad theta index: " + cur);
        if (v < 1 || v > rank) throw UsageError("theta index out of range: " + cur);
        out.push_back(v);
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',' || ch == ' ') {
            flush();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw UsageError(std::string("bad character in theta: ") + ch);
        }
    }
    flush();
    return out;
}

uint16_t theta_mask_from(const Common& c, int rank) {
    uint16_t mask = 0;
    if (c.theta_removed) {
        mask = static_cast<uint16_t>((1u << rank) - 1);
        for (int i : parse_index_list(*c.theta_removed, rank))
            mask &= static_cast<uint16_t>(~(1u << (i - 1)));
    } else if (c.theta) {
        for (int i : parse_index_list(*c.theta, rank)) {
            if (mask & (1u << (i - 1))) throw UsageError("duplicate theta index " + std::to_string(i));
            mask |= static_cast<uint16_t>(1u << (i - 1));
        }
    }
    return mask;
}

std::vector<int> theta_list(uint16_t mask, int rank) {
    std::vector<int> v;
    for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) v.push_back(i + 1);
    return v;
}

std::string type_key(const RootSystem& rs, uint16_t mask) {
    std::string s;
    for (const auto& comp : classify_subdiagram(rs, mask)) {
        if (!s.empty()) s += "x";
        s += comp.type;
    }
    return s;
}

WeylGroup load_group(const RootSystem& rs, const Common& c) {
    if (!c.cache_path.empty() && std::filesystem::exists(c.cache_path)) {
        WeylGroup W = read_group_cache(c.cache_path, c.max_elements);
        if (W.roots().type() != rs.type() || W.roots().rank() != rs.rank())
            throw UsageError("cache file " + c.cache_path + " holds " + W.roots().name() +
                             ", not " + rs.name());
        return W;
    }
    WeylGroup W = WeylGroup::enumerate(rs, c.max_elements);
    if (!c.cache_path.empty()) write_group_cache(W, c.cache_path);
    return W;
}

HomologyMode homology_mode(const std::string& m) {
    if (m == "exact") return HomologyMode::Exact;
    if (m == "rank-inferred") return HomologyMode::RankInferred;
    return HomologyMode::Auto;
}

struct HomologyRun {
    HomologySummary summary;
    IntPoly poincare;
    OrientabilityReport orient;
    long long elapsed_ms = 0;
};

HomologyRun run_homology(const RootSystem& rs, const WeylGroup& W, uint16_t mask, const Common& c) {
    auto t0 = std::chrono::steady_clock::now();
    BuildOptions opts;
    opts.threads = c.threads;
    ChainComplex cc = build_chain_complex(W, mask, opts);
    HomologyRun run;
    run.summary = homology_groups(cc, homology_mode(c.mode), c.threads);
    run.poincare = poincare_polynomial(run.summary);
    run.orient = orientability(rs, mask, &run.poincare);
    auto t1 = std::chrono::steady_clock::now();
    run.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (c.stable_output) run.elapsed_ms = 0;
    if (!run.summary.violations.empty()) {
        std::string what = "torsion outside Z/2:";
        for (const auto& v : run.summary.violations) what += " " + v;
        throw MismatchError(what);
    }
    if (run.orient.by_top_degree.has_value() &&
        *run.orient.by_top_degree != run.orient.by_root_sums)
        throw MismatchError("orientability criteria disagree: root sums say " +
                            std::string(run.orient.by_root_sums ? "yes" : "no") +
                            ", top degree says the opposite");
    return run;
}

int cmd_homology(const Common& c) {
    RootSystem rs = make_root_system(c);
    uint16_t mask = theta_mask_from(c, rs.rank());
    WeylGroup W = load_group(rs, c);
    HomologyRun run = run_homology(rs, W, mask, c);
    RunRecord rec;
    rec.type = rs.name();
    rec.theta = theta_list(mask, rs.rank());
    rec.homology = run.summary;
    rec.poincare = run.poincare;
    rec.orientable = run.orient.by_root_sums;
    rec.dim = run.orient.dim;
    rec.mode = run.summary.exact_mode ? "exact" : "inferred";
    rec.elapsed_ms = run.elapsed_ms;
    std::cout << homology_report_json(rec);
    return 0;
}

int cmd_poincare(const Common& c) {
    RootSystem rs = make_root_system(c);
    uint16_t mask = theta_mask_from(c, rs.rank());
    ClosedFormResult cf = closed_form_poincare(rs, mask);
    WeylGroup W = load_group(rs, c);
    HomologyRun run = run_homology(rs, W, mask, c);

    PoincareRecord rec;
    rec.type = rs.name();
    rec.theta = theta_list(mask, rs.rank());
    rec.closed_supported = cf.supported;
    rec.closed_form = cf.poly;
    rec.unsupported_reason = cf.reason;
    rec.computed = run.poincare;
    rec.mode = run.summary.exact_mode ? "exact" : "inferred";
    rec.elapsed_ms = run.elapsed_ms;
    if (!cf.supported)
        rec.match = "unsupported-closed-form";
    else
        rec.match = (cf.poly == run.poincare) ? "equal" : "MISMATCH";
    std::cout << poincare_report_json(rec);
    return rec.match == "MISMATCH" ? 2 : 0;
}

int cmd_orientability(const Common& c, bool all_theta) {
    RootSystem rs = make_root_system(c);
    std::vector<uint16_t> masks;
    if (all_theta) {
        for (uint32_t m = 0; m < (1u << rs.rank()); ++m) masks.push_back(static_cast<uint16_t>(m));
    } else {
        masks.push_back(theta_mask_from(c, rs.rank()));
    }
    std::vector<OrientabilityRow> rows;
    for (uint16_t mask : masks) {
        ClosedFormResult cf = closed_form_poincare(rs, mask);
        OrientabilityReport rep = orientability(rs, mask, cf.supported ? &cf.poly : nullptr);
        OrientabilityRow row;
        row.theta = theta_list(mask, rs.rank());
        row.theta_types = type_key(rs, mask);
        row.dim = rep.dim;
        row.poincare_degree = cf.supported ? cf.poly.degree() : -1;
        row.by_root_sums = rep.by_root_sums;
        row.has_degree = rep.by_top_degree.has_value() ? 1 : 0;
        row.by_top_degree = rep.by_top_degree.value_or(false);
        rows.push_back(std::move(row));
    }
    std::cout << orientability_csv(rs.name(), rows);
    return 0;
}

int cmd_verify(const std::string& suite, int threads) {
    SuiteResult r = run_verify_suite(suite, std::cout, threads);
    std::cout << "suite " << suite << ": " << r.checked << " checks, " << r.failed
              << (r.failed == 1 ? " failure" : " failures") << "\n";
    return r.failed ? 2 : 0;
}

int cmd_cache(const Common& c, const std::string& out_path, const std::string& check_path) {
    if (out_path.empty() && check_path.empty())
        throw UsageError("cache: nothing to do (pass --out and/or --check)");
    if (!out_path.empty()) {
        RootSystem rs = make_root_system(c);
        WeylGroup W = WeylGroup::enumerate(rs, c.max_elements);
        write_group_cache(W, out_path);
        std::cout << "wrote " << out_path << ": " << rs.name() << ", " << W.size()
                  << " elements\n";
    }
    if (!check_path.empty()) {
        WeylGroup W = read_group_cache(check_path, c.max_elements);
        std::cout << "ok " << check_path << ": " << W.roots().name() << ", " << W.size()
                  << " elements, max length " << W.max_length() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology, Poincaré polynomials, and orientability of real flag manifolds"};
    app.require_subcommand(1);

    Common c;
    bool all_theta = false;
    std::string suite, cache_out, cache_check;

    CLI::App* hom = app.add_subcommand("homology", "integral homology of one flag manifold");
    add_group_options(hom, c);
    add_theta_options(hom, c);
    add_output_options(hom, c);

    CLI::App* poi = app.add_subcommand("poincare", "closed form vs cellular Poincaré polynomial");
    add_group_options(poi, c);
    add_theta_options(poi, c);
    add_output_options(poi, c);

    CLI::App* ori = app.add_subcommand("orientability", "orientability by both criteria (CSV)");
    ori->add_option("--type", c.type, "Lie type")->required();
    ori->add_option("--rank", c.rank, "rank when --type is a bare letter");
    ori->add_flag("--all-theta", all_theta, "every subset of the simple roots");
    add_theta_options(ori, c);

    CLI::App* ver = app.add_subcommand("verify", "run a named fixture suite");
    std::string suite_help = "one of:";
    for (const auto& s : flaghom::verify_suite_names()) suite_help += " " + s;
    ver->add_option("suite", suite, suite_help)->required();
    ver->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* cac = app.add_subcommand("cache", "build or validate a group cache file");
    cac->add_option("--type", c.type, "Lie type (required with --out)");
    cac->add_option("--rank", c.rank, "rank when --type is a bare letter");
    cac->add_option("--out", cache_out, "enumerate the group and write it here");
    cac->add_option("--check", cache_check, "read and fully validate this cache file");
    cac->add_option("--max-elements", c.max_elements, "refuse groups larger than this");

    try {
        app.parse(argc, argv);
        if (hom->parsed()) return cmd_homology(c);
        if (poi->parsed()) return cmd_poincare(c);
        if (ori->parsed()) return cmd_orientability(c, all_theta);
        if (ver->parsed()) return cmd_verify(suite, c.threads);
        if (cac->parsed()) return cmd_cache(c, cache_out, cache_check);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const flaghom::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const flaghom::CacheError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const flaghom::MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 2;
    } catch (const flaghom::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const flaghom::InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
