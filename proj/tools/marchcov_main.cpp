// marchcov: analyzes which static memory fault primitives a March algorithm
// is guaranteed to detect, with a state-tuple matcher cross-checked by a
// brute-force fault-injection simulator.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "marchcov/coverage_matcher.hpp"
#include "marchcov/fault_model.hpp"
#include "marchcov/fault_sim_oracle.hpp"
#include "marchcov/march_lang.hpp"
#include "marchcov/report.hpp"
#include "marchcov/state_annotator.hpp"
#include "marchcov/test_primitive.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;
constexpr int kExitDisagreement = 5;

using namespace marchcov;

MarchAlgorithm load_march(const std::string& source) {
    std::string text = source;
    std::string name;
    if (std::filesystem::exists(source)) {
        std::ifstream in(source);
        if (!in) throw std::ios_base::failure("cannot open " + source);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        name = std::filesystem::path(source).stem().string();
    }
    return parse_march(text, name);
}

std::vector<FaultPrimitive> select_faults(const std::string& spec) {
    if (spec.empty() || spec == "all") return enumerate_static_faults();
    if (spec.front() == '<' || spec.substr(0, 3) == "\xe2\x9f\xa8") {
        return {parse_fault_primitive(spec)};
    }
    // comma-separated class names
    std::vector<FaultPrimitive> out;
    std::stringstream ss(spec);
    std::string token;
    std::vector<FaultClass> classes;
    while (std::getline(ss, token, ',')) {
        auto cls = class_from_name(token);
        if (!cls) throw std::invalid_argument("unknown fault class: " + token);
        classes.push_back(*cls);
    }
    for (const auto& fp : enumerate_static_faults()) {
        for (FaultClass c : classes) {
            if (fp.cls == c) { out.push_back(fp); break; }
        }
    }
    return out;
}

Tri parse_preset(const std::string& s) {
    if (s.empty() || s == "x") return Tri::X;
    if (s == "0") return Tri::Zero;
    if (s == "1") return Tri::One;
    throw std::invalid_argument("initial state must be 0, 1 or x");
}

int report_validation(const MarchAlgorithm& m, const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        std::cerr << (m.name.empty() ? "march" : m.name) << ": element " << d.element + 1;
        if (d.op >= 0) std::cerr << ", op " << d.op + 1;
        std::cerr << ": " << d.message << "\n";
    }
    return kExitValidation;
}

int cmd_analyze(const std::string& source, const std::string& fault_filter,
                const std::string& engine, int cells, bool as_json, const std::string& init,
                bool quiet) {
    const Tri preset = parse_preset(init);
    MarchAlgorithm m = load_march(source);
    auto diags = validate_march(m, preset);
    if (!diags.empty()) return report_validation(m, diags);
    const auto faults = select_faults(fault_filter);

    std::optional<CoverageReport> matcher, oracle;
    if (engine == "matcher" || engine == "both") matcher = coverage(m, faults, preset);
    if (engine == "oracle" || engine == "both") oracle = oracle_coverage(m, faults, cells, preset);
    const CoverageReport& main = matcher ? *matcher : *oracle;

    std::vector<FaultPrimitive> disagree;
    if (matcher && oracle) disagree = verdict_disagreements(*matcher, *oracle);

    if (as_json) {
        if (matcher && oracle) {
            std::cout << "{\"matcher\":" << render_coverage_json(*matcher)
                      << ",\"oracle\":" << render_coverage_json(*oracle) << ",\"disagreements\":[";
            for (std::size_t i = 0; i < disagree.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << "\"" << format_fault_primitive(disagree[i]) << "\"";
            }
            std::cout << "]}\n";
        } else {
            std::cout << render_coverage_json(main) << "\n";
        }
    } else if (!quiet) {
        std::cout << render_coverage_text(main);
    } else {
        std::cout << main.detected << "/" << main.total << "\n";
    }
    if (matcher && oracle) {
        if (!disagree.empty()) {
            std::cerr << "engine disagreement on " << disagree.size() << " primitive(s):";
            for (const auto& fp : disagree) std::cerr << " " << format_fault_primitive(fp);
            std::cerr << "\n";
            return kExitDisagreement;
        }
        if (!as_json && !quiet) std::cout << "\nmatcher and oracle agree on all verdicts\n";
    }
    return 0;
}

int cmd_annotate(const std::string& source, bool as_json, bool candidates,
                 const std::string& init) {
    const Tri preset = parse_preset(init);
    MarchAlgorithm m = load_march(source);
    auto diags = validate_march(m, preset);
    if (!diags.empty()) return report_validation(m, diags);
    const AnnotatedMarch am = annotate(m, preset);
    if (as_json) std::cout << render_annotated_json(am) << "\n";
    else std::cout << render_annotated(am, candidates) << "\n";
    return 0;
}

int cmd_library(bool expand, const std::string& cls_filter, bool as_json) {
    std::optional<FaultClass> only;
    if (!cls_filter.empty()) {
        only = class_from_name(cls_filter);
        if (!only) throw std::invalid_argument("unknown fault class: " + cls_filter);
    }
    if (!expand) {
        for (const auto& row : test_primitive_library()) {
            if (only && row.cls != *only) continue;
            std::string name(class_name(row.cls));
            name.resize(10, ' ');
            std::cout << name << row.fault_template << "  =>  " << row.test_template << "\n";
        }
        if (!only) {
            for (const auto& note : library_footnotes()) std::cout << "note: " << note << "\n";
        }
        return 0;
    }
    int count = 0;
    for (const auto& fp : enumerate_static_faults()) {
        if (only && fp.cls != *only) continue;
        const TestPrimitive tp = derive_test_primitive(fp);
        std::cout << format_fault_primitive(fp) << "  =>  " << format_test_primitive(tp);
        for (const auto& req : state_tuples_for_test_primitive(tp, fp.orientation)) {
            std::cout << "  |  " << format_requirement(req);
        }
        std::cout << "\n";
        ++count;
    }
    if (!as_json) std::cout << count << " test primitives\n";
    return 0;
}

int cmd_oracle(const std::string& source, const std::string& fault_filter, int cells,
               bool as_json, const std::string& init) {
    const Tri preset = parse_preset(init);
    MarchAlgorithm m = load_march(source);
    auto diags = validate_march(m, preset);
    if (!diags.empty()) return report_validation(m, diags);
    const auto faults = select_faults(fault_filter);
    const CoverageReport report = oracle_coverage(m, faults, cells, preset);
    if (as_json) std::cout << render_coverage_json(report) << "\n";
    else std::cout << render_coverage_text(report);
    // mismatch log for single-primitive queries
    if (faults.size() == 1 && report.results.front().detected) {
        const auto& fp = faults.front();
        const auto placements = legal_placements(fp, cells);
        if (!placements.empty()) {
            std::vector<AddressOrder> orders = report.results.front().witness->order_used;
            for (const auto& mm :
                 run_with_orders(m, orders, fp, placements.front(), cells, Bit::Zero)) {
                std::cout << "element " << mm.element + 1 << ", op " << mm.op + 1 << ", addr "
                          << mm.address << ": expected " << to_char(mm.expected) << ", observed "
                          << to_char(mm.observed) << "\n";
            }
        }
    }
    return 0;
}

int cmd_diff(const std::string& left_src, const std::string& right_src,
             const std::string& engine, int cells, bool as_json) {
    MarchAlgorithm left = load_march(left_src);
    MarchAlgorithm right = load_march(right_src);
    for (const auto* m : {&left, &right}) {
        auto diags = validate_march(*m);
        if (!diags.empty()) return report_validation(*m, diags);
    }
    const auto faults = enumerate_static_faults();
    auto run = [&](const MarchAlgorithm& m) {
        return engine == "oracle" ? oracle_coverage(m, faults, cells) : coverage(m, faults);
    };
    const CoverageReport a = run(left);
    const CoverageReport b = run(right);
    if (as_json) {
        const CoverageDiff d = diff_reports(a, b);
        std::cout << "{\"left\":\"" << a.algorithm << "\",\"right\":\"" << b.algorithm
                  << "\",\"gained\":[";
        for (std::size_t i = 0; i < d.gained.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "\"" << format_fault_primitive(d.gained[i]) << "\"";
        }
        std::cout << "],\"lost\":[";
        for (std::size_t i = 0; i < d.lost.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << "\"" << format_fault_primitive(d.lost[i]) << "\"";
        }
        std::cout << "]}\n";
    } else {
        std::cout << render_diff_text(a, b);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"March algorithm fault-coverage analyzer"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "emit JSON");
    app.add_flag("--quiet", quiet, "counts only");

    std::string march_src, fault_filter = "all", engine = "both", init = "x";
    int cells = 4;

    auto* analyze = app.add_subcommand("analyze", "coverage of a March algorithm");
    analyze->add_option("march", march_src, "march expression or .march file")->required();
    analyze->add_option("--faults", fault_filter, "all | class list | fp string");
    analyze->add_option("--engine", engine, "matcher | oracle | both")
        ->check(CLI::IsMember({"matcher", "oracle", "both"}));
    analyze->add_option("--cells", cells, "memory size for the simulator");
    analyze->add_option("--init", init, "preset initial state (0, 1 or x)");

    auto* annotate_cmd = app.add_subcommand("annotate", "state tuples of a March algorithm");
    bool candidates = false;
    annotate_cmd->add_option("march", march_src, "march expression or .march file")->required();
    annotate_cmd->add_flag("--candidates", candidates, "show both tuples for either-order elements");
    annotate_cmd->add_option("--init", init, "preset initial state (0, 1 or x)");

    auto* library = app.add_subcommand("library", "test primitive library");
    bool expand = false;
    std::string cls_filter;
    library->add_flag("--expand", expand, "all concrete primitives with state tuples");
    library->add_option("--class", cls_filter, "restrict to one fault class");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force fault simulation");
    oracle_cmd->add_option("--march", march_src, "march expression or .march file")->required();
    oracle_cmd->add_option("--cells", cells, "memory size");
    oracle_cmd->add_option("--faults", fault_filter, "all | class list | fp string");
    oracle_cmd->add_option("--init", init, "preset initial state (0, 1 or x)");

    auto* diff = app.add_subcommand("diff", "coverage difference of two algorithms");
    std::string right_src;
    diff->add_option("left", march_src, "march expression or .march file")->required();
    diff->add_option("right", right_src, "march expression or .march file")->required();
    diff->add_option("--engine", engine, "matcher | oracle | both")
        ->check(CLI::IsMember({"matcher", "oracle", "both"}));
    diff->add_option("--cells", cells, "memory size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(march_src, fault_filter, engine, cells, as_json, init, quiet);
        if (annotate_cmd->parsed()) return cmd_annotate(march_src, as_json, candidates, init);
        if (library->parsed()) return cmd_library(expand, cls_filter, as_json);
        if (oracle_cmd->parsed())
            return cmd_oracle(march_src, fault_filter, cells, as_json, init);
        if (diff->parsed()) return cmd_diff(march_src, right_src, engine, cells, as_json);
    } catch (const MarchParseError& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return kExitParse;
    } catch (const FaultParseError& e) {
        std::cerr << "fault primitive parse error at offset " << e.position << ": " << e.what()
                  << "\n";
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
