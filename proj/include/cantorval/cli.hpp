#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantorval/certificate.hpp"
#include "cantorval/classify.hpp"
#include "cantorval/cover.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/oracle.hpp"
#include "cantorval/render.hpp"
#include "cantorval/scan.hpp"

namespace cantorval {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::vector<long long> parse_block_arg(const std::string& csv) {
    std::vector<long long> block;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size()) throw Error("");
            block.push_back(v);
        } catch (const std::exception&) {
            throw Error("invalid block term '" + token + "' in '" + csv + "'");
        }
    }
    if (block.empty()) throw Error("empty block '" + csv + "'");
    return block;
}

inline Ratio parse_ratio_arg(const std::string& text) {
    const auto r = try_parse_ratio(text);
    if (!r) throw Error("invalid ratio '" + text + "', expected num/den");
    return *r;
}

inline const char* verdict_long(Verdict v) {
    switch (v) {
        case Verdict::FiniteUnionOfIntervals: return "finite union of intervals";
        case Verdict::Cantor: return "Cantor set";
        case Verdict::Cantorval: return "Cantorval";
        default: return "undecided";
    }
}

inline std::string ratio_line(const Ratio& r) {
    return ratio_str(r) + " (~" + approx6(r) + ")";
}

inline void print_classification(std::ostream& out, const MultigeometricSeq& x,
                                 const Classification& cls) {
    out << "sequence:";
    for (size_t i = 0; i < x.k.size(); ++i) out << (i ? "," : " ") << x.k[i];
    out << "\nq: " << ratio_line(x.q) << "\n";
    out << "verdict: " << verdict_token(cls.verdict) << " (" << verdict_long(cls.verdict) << ")\n";
    const Thresholds t = thresholds(primitive_form(x));
    out << "thresholds:\n";
    out << "  kakeya_I_threshold  " << ratio_line(t.kakeya_I_threshold) << "\n";
    if (t.kakeya_II_bound) out << "  kakeya_II_bound     " << ratio_line(*t.kakeya_II_bound) << "\n";
    out << "  theorem3_bound      " << ratio_line(t.theorem3_bound) << "\n";
    if (t.window_lo) out << "  window_lo           " << ratio_line(*t.window_lo) << "\n";
    out << "  window_hi_naive     " << ratio_line(t.window_hi_naive) << "\n";
    out << "  window_hi_refined   " << ratio_line(t.window_hi_refined) << "\n";
    out << "  monotone_bound      " << ratio_line(t.monotone_bound) << "\n";
    if (cls.provenance.empty()) {
        out << "provenance: none, no rule applies\n";
    } else {
        out << "provenance:\n";
        for (const RuleRecord& r : cls.provenance)
            out << "  " << rule_name(r.rule) << "  " << r.witness() << "  [" << r.note << "]\n";
    }
    if (cls.verdict == Verdict::Unknown) {
        auto describe = [](const CriticalPoint& c) {
            std::string s = ratio_str(c.q) + " (";
            for (size_t i = 0; i < c.labels.size(); ++i) s += (i ? ", " : "") + c.labels[i];
            return s + ")";
        };
        out << "nearest thresholds:";
        if (cls.nearest_below) out << " below " << describe(*cls.nearest_below);
        if (cls.nearest_above) out << (cls.nearest_below ? "," : "") << " above "
                                   << describe(*cls.nearest_above);
        if (!cls.nearest_below && !cls.nearest_above) out << " none";
        out << "\n";
    }
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error("failed writing '" + path + "'");
}

} // namespace detail

// Runs the command-line interface on already-split arguments (no program
// name).  All output is accumulated and returned; nothing is printed here.
inline CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    std::ostringstream out;

    CLI::App app{"classifier and approximator for achievement sets of multigeometric series"};
    app.name("cantorval");
    app.require_subcommand(1);

    bool json = false;
    std::string svg_path;
    size_t budget = kDefaultPointBudget;
    auto* budget_opt = app.add_option("--budget", budget, "point budget for covers and grids");
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--svg", svg_path, "also write an SVG rendering to this path");

    std::string seq_arg, q_arg;
    int depth = 3;
    int terms = 0;
    bool force = false;
    std::string method;
    std::string format = "ascii";
    int width = 80;
    bool no_labels = false;

    auto* c_classify = app.add_subcommand("classify", "decide the topological type at one ratio");
    c_classify->add_option("sequence", seq_arg, "block, comma separated, e.g. 3,2,2,2")->required();
    c_classify->add_option("q", q_arg, "ratio num/den in (0, 1/2)")->required();

    auto* c_scan = app.add_subcommand("scan", "sweep all ratios for one block");
    c_scan->add_option("sequence", seq_arg, "block, comma separated")->required();
    c_scan->add_option("--width", width, "text rendering width");
    c_scan->add_flag("--no-labels", no_labels, "omit threshold labels");

    auto* c_cover = app.add_subcommand("cover", "guaranteed outer cover at a refinement depth");
    c_cover->add_option("sequence", seq_arg, "block, comma separated")->required();
    c_cover->add_option("q", q_arg, "ratio num/den in (0, 1/2)")->required();
    c_cover->add_option("--depth", depth, "refinement depth")->required();

    auto* c_oracle = app.add_subcommand("oracle", "exact subset sums of a truncation");
    c_oracle->add_option("sequence", seq_arg, "block, comma separated")->required();
    c_oracle->add_option("q", q_arg, "ratio num/den in (0, 1/2)")->required();
    c_oracle->add_option("--terms", terms, "number of leading terms, at most 30")->required();
    c_oracle->add_flag("--force", force, "allow term counts above 24");

    auto* c_certify = app.add_subcommand("certify", "construct an interval inside the set");
    c_certify->add_option("sequence", seq_arg, "block, comma separated")->required();
    c_certify->add_option("q", q_arg, "ratio num/den in (0, 1/2)")->required();
    c_certify->add_option("--method", method, "th2 (run construction) or th7 (digit grid)")
        ->required()
        ->check(CLI::IsMember({"th2", "th7"}));
    c_certify->add_option("--depth", depth, "grid depth for th7");

    auto* c_render = app.add_subcommand("render", "render the ratio sweep for one block");
    c_render->add_option("sequence", seq_arg, "block, comma separated")->required();
    c_render->add_option("--format", format, "ascii, svg, or json")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    c_render->add_option("--width", width, "rendering width");
    c_render->add_flag("--no-labels", no_labels, "omit labels");

    for (CLI::App* sub : {c_classify, c_scan, c_cover, c_oracle, c_certify, c_render})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("cantorval");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        return result;
    }

    try {
        if (c_classify->parsed()) {
            const MultigeometricSeq x =
                canonicalize(detail::parse_block_arg(seq_arg), detail::parse_ratio_arg(q_arg));
            const Classification cls = classify(x);
            if (json)
                out << classification_json(x, cls).dump(2) << "\n";
            else
                detail::print_classification(out, x, cls);
        } else if (c_scan->parsed() || c_render->parsed()) {
            const ScanReport report = scan(detail::parse_block_arg(seq_arg));
            if (!svg_path.empty()) {
                detail::write_file(svg_path, render_scan_svg(report, 800, !no_labels));
                out << "svg written: " << svg_path << "\n";
            }
            if (c_render->parsed() && format == "svg") {
                out << render_scan_svg(report, width >= 200 ? width : 800, !no_labels);
            } else if (json || (c_render->parsed() && format == "json")) {
                out << scan_json(report).dump(2) << "\n";
            } else {
                out << render_scan_ascii(report, width, !no_labels);
                if (c_scan->parsed()) {
                    out << "regions:\n";
                    for (const ScanRegion& r : report.regions) {
                        out << "  " << (r.lo_closed ? '[' : '(') << ratio_str(r.lo) << ", "
                            << ratio_str(r.hi) << (r.hi_closed ? ']' : ')') << "  "
                            << verdict_token(r.verdict);
                        if (r.rule) out << "  " << rule_name(*r.rule);
                        out << "\n";
                    }
                }
            }
        } else if (c_cover->parsed()) {
            const MultigeometricSeq x =
                canonicalize(detail::parse_block_arg(seq_arg), detail::parse_ratio_arg(q_arg));
            const DepthCover cover = depth_cover(x, depth, budget);
            if (!svg_path.empty()) {
                detail::write_file(svg_path, render_cover_svg(cover));
                out << "svg written: " << svg_path << "\n";
            }
            if (json) {
                out << cover_json(x, cover).dump(2) << "\n";
            } else {
                out << "depth: " << cover.depth << "\npoints: " << cover.point_count()
                    << "\ntail_radius: " << detail::ratio_line(cover.tail_radius)
                    << "\ncomponents: " << cover.components.size()
                    << "\ntotal_length: " << detail::ratio_line(cover.total_length) << "\n";
                const size_t emit = std::min<size_t>(cover.components.size(), 20);
                for (size_t i = 0; i < emit; ++i)
                    out << "  [" << ratio_str(cover.components[i].lo) << ", "
                        << ratio_str(cover.components[i].hi) << "]\n";
                if (emit < cover.components.size())
                    out << "  ... " << cover.components.size() - emit << " more\n";
                out << render_cover_ascii(cover, 80);
            }
        } else if (c_oracle->parsed()) {
            const MultigeometricSeq x =
                canonicalize(detail::parse_block_arg(seq_arg), detail::parse_ratio_arg(q_arg));
            const OracleSet oracle = oracle_subsums(x, terms, force, budget);
            if (json) {
                out << oracle_json(x, oracle).dump(2) << "\n";
            } else {
                out << "terms: " << oracle.n_terms << "\nsums: " << oracle.count() << "\n";
                const size_t emit = std::min<size_t>(oracle.count(), 20);
                for (size_t i = 0; i < emit; ++i) out << "  " << ratio_str(oracle.sum(i)) << "\n";
                if (emit < oracle.count()) out << "  ... " << oracle.count() - emit << " more\n";
                if (const auto gap = oracle.largest_gap())
                    out << "largest_gap: (" << ratio_str(gap->lo) << ", " << ratio_str(gap->hi)
                        << ") length " << ratio_str(gap->length()) << "\n";
                if (oracle.gaps_elided) out << "gap list elided, too many sums\n";
            }
        } else if (c_certify->parsed()) {
            const MultigeometricSeq x =
                canonicalize(detail::parse_block_arg(seq_arg), detail::parse_ratio_arg(q_arg));
            if (method == "th2") {
                const auto cert = certificate_theorem2(x);
                if (!cert)
                    throw InapplicableCertificate(
                        "no run certificate: the subset-sum runs are too short for this ratio");
                const bool mid_ok = theorem2_realizes(x, (cert->lo + cert->hi) / 2);
                if (json) {
                    out << certificate_json(x, *cert).dump(2) << "\n";
                } else {
                    out << "method: " << certificate_method_name(cert->method) << "\ninterval: ["
                        << ratio_str(cert->lo) << ", " << ratio_str(cert->hi) << "]\n"
                        << "midpoint digit check: " << (mid_ok ? "ok" : "failed") << "\n";
                }
            } else {
                const auto kappa = theorem7_kappa(x.k);
                if (!kappa || *kappa < 1 || x.q != Ratio(1, 2 * *kappa + 2))
                    throw InapplicableCertificate(
                        "digit certificate needs block 3,2,...,2 at ratio 1/(2*kappa+2)");
                const size_t grid_budget =
                    budget_opt->count() ? budget : kTheorem7GridBudget;
                const Theorem7Report report = certificate_theorem7(*kappa, depth, grid_budget);
                if (json) {
                    out << certificate_json(x, report).dump(2) << "\n";
                } else {
                    out << "method: " << certificate_method_name(report.certificate.method)
                        << "\ninterval: [" << ratio_str(report.certificate.lo) << ", "
                        << ratio_str(report.certificate.hi) << "]\nkappa: " << report.kappa
                        << "\ndepth: " << report.depth << "\ngrid_points: " << report.grid_points
                        << " (all re-summed exactly)\n";
                }
            }
        }
    } catch (const BudgetExceeded& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 3;
        result.out = out.str();
        return result;
    } catch (const InapplicableCertificate& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 4;
        result.out = out.str();
        return result;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
        result.out = out.str();
        return result;
    }

    result.out = out.str();
    return result;
}

} // namespace cantorval
