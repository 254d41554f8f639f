#pragma once

#include <string>
#include <vector>

#include "marchcov/coverage_matcher.hpp"
#include "marchcov/state_annotator.hpp"

namespace marchcov {

/// Per-class rollup line: two-cell primitives detected in both orientations
/// collapse into one entry annotated with an up-down arrow.
std::string render_coverage_text(const CoverageReport& report);
std::string render_coverage_json(const CoverageReport& report);

struct CoverageDiff {
    std::vector<FaultPrimitive> gained;  // detected by right, not left
    std::vector<FaultPrimitive> lost;    // detected by left, not right
};

/// Both reports must cover the same fault list in the same order.
CoverageDiff diff_reports(const CoverageReport& left, const CoverageReport& right);
std::string render_diff_text(const CoverageReport& left, const CoverageReport& right);

/// Matcher/oracle cross-check: primitives whose verdicts differ.
std::vector<FaultPrimitive> verdict_disagreements(const CoverageReport& a,
                                                  const CoverageReport& b);

std::string render_annotated_json(const AnnotatedMarch& am);

}  // namespace marchcov
