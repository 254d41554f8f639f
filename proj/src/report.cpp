#include "marchcov/report.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace marchcov {

namespace {

using nlohmann::json;

std::string base_text(const FaultPrimitive& fp) {
    std::string s = format_fault_primitive(fp);
    if (fp.orientation) s.erase(s.size() - 3);  // strip the a<v / a>v suffix
    return s;
}

std::string orders_string(const std::vector<AddressOrder>& orders) {
    std::string s;
    for (AddressOrder o : orders) s += to_char(o);
    return s;
}

json witness_json(const MatchWitness& w) {
    json j;
    j["sens"] = json::array();
    for (const OpRef& r : w.sensitization_ops) j["sens"].push_back({r.element, r.op});
    if (w.detection_op) j["det"] = {w.detection_op->element, w.detection_op->op};
    j["order"] = orders_string(w.order_used);
    switch (w.relation) {
        case MatchRelation::SameElementAdjacent: j["relation"] = "same-element"; break;
        case MatchRelation::SplitNextElement: j["relation"] = "split"; break;
        case MatchRelation::DetectionFirstThenSensitize: j["relation"] = "first-position"; break;
    }
    return j;
}

}  // namespace

std::string render_coverage_text(const CoverageReport& report) {
    std::string out;
    out += "algorithm: " + report.algorithm + "\n";
    out += "engine:    " + report.engine + "\n";
    out += "detected:  " + std::to_string(report.detected) + "/" + std::to_string(report.total) +
           "\n\n";
    // group per class, merging orientations detected both ways
    std::map<int, std::vector<std::string>> rows;
    std::map<std::string, int> two_cell_seen;  // base text -> count of detected orientations
    for (const MatchResult& r : report.results) {
        if (!r.detected) continue;
        if (r.primitive.orientation) ++two_cell_seen[base_text(r.primitive)];
    }
    for (const MatchResult& r : report.results) {
        if (!r.detected) continue;
        const int cls = static_cast<int>(r.primitive.cls);
        if (!r.primitive.orientation) {
            rows[cls].push_back(format_fault_primitive(r.primitive));
            continue;
        }
        const std::string base = base_text(r.primitive);
        if (two_cell_seen[base] == 2) {
            if (*r.primitive.orientation == Orientation::AggressorLow) {
                rows[cls].push_back(base + " ↕");  // both orientations
            }
        } else {
            rows[cls].push_back(format_fault_primitive(r.primitive));
        }
    }
    for (const auto& [cls, entries] : rows) {
        std::string line = std::string(class_name(static_cast<FaultClass>(cls)));
        line.resize(std::max<std::size_t>(line.size(), 10), ' ');
        for (const auto& e : entries) line += " " + e;
        out += line + "\n";
    }
    return out;
}

std::string render_coverage_json(const CoverageReport& report) {
    json j;
    j["algorithm"] = report.algorithm;
    j["engine"] = report.engine;
    j["total"] = report.total;
    j["detected"] = report.detected;
    j["results"] = json::array();
    for (const MatchResult& r : report.results) {
        json e;
        e["primitive"] = format_fault_primitive(r.primitive);
        e["class"] = std::string(class_name(r.primitive.cls));
        e["detected"] = r.detected;
        if (r.witness) e["witness"] = witness_json(*r.witness);
        j["results"].push_back(std::move(e));
    }
    return j.dump(2);
}

CoverageDiff diff_reports(const CoverageReport& left, const CoverageReport& right) {
    CoverageDiff d;
    for (std::size_t i = 0; i < left.results.size() && i < right.results.size(); ++i) {
        const bool l = left.results[i].detected;
        const bool r = right.results[i].detected;
        if (!l && r) d.gained.push_back(right.results[i].primitive);
        if (l && !r) d.lost.push_back(left.results[i].primitive);
    }
    return d;
}

std::string render_diff_text(const CoverageReport& left, const CoverageReport& right) {
    const CoverageDiff d = diff_reports(left, right);
    std::string out;
    out += left.algorithm + ": " + std::to_string(left.detected) + "/" +
           std::to_string(left.total) + "\n";
    out += right.algorithm + ": " + std::to_string(right.detected) + "/" +
           std::to_string(right.total) + "\n";
    out += "gained (" + std::to_string(d.gained.size()) + "):";
    for (const auto& fp : d.gained) out += " " + format_fault_primitive(fp);
    out += "\nlost (" + std::to_string(d.lost.size()) + "):";
    for (const auto& fp : d.lost) out += " " + format_fault_primitive(fp);
    out += "\n";
    return out;
}

std::vector<FaultPrimitive> verdict_disagreements(const CoverageReport& a,
                                                  const CoverageReport& b) {
    std::vector<FaultPrimitive> out;
    for (std::size_t i = 0; i < a.results.size() && i < b.results.size(); ++i) {
        if (a.results[i].detected != b.results[i].detected) out.push_back(a.results[i].primitive);
    }
    return out;
}

std::string render_annotated_json(const AnnotatedMarch& am) {
    json j;
    j["algorithm"] = am.algorithm.name.empty() ? format_march(am.algorithm) : am.algorithm.name;
    j["march"] = format_march(am.algorithm);
    j["elements"] = json::array();
    for (std::size_t e = 0; e < am.algorithm.elements.size(); ++e) {
        json el;
        el["order"] = std::string(1, to_char(am.algorithm.elements[e].order));
        el["initial"] = std::string(1, to_char(am.states[e].initial));
        el["end"] = std::string(1, to_char(am.states[e].end));
        el["ops"] = json::array();
        for (std::size_t k = 0; k < am.algorithm.elements[e].ops.size(); ++k) {
            json op;
            op["op"] = to_string(am.algorithm.elements[e].ops[k]);
            op["tuple"] = to_string(am.tuples[e][k].primary);
            if (am.tuples[e][k].alternate) op["tuple_alt"] = to_string(*am.tuples[e][k].alternate);
            el["ops"].push_back(std::move(op));
        }
        j["elements"].push_back(std::move(el));
    }
    return j.dump(2);
}

}  // namespace marchcov
