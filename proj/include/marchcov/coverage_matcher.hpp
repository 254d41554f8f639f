#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marchcov/fault_model.hpp"
#include "marchcov/march_lang.hpp"
#include "marchcov/state_annotator.hpp"
#include "marchcov/test_primitive.hpp"

namespace marchcov {

/// Position of one operation inside a March algorithm.
struct OpRef {
    int element = 0;
    int op = 0;

    friend bool operator==(const OpRef&, const OpRef&) = default;
};

enum class MatchRelation : std::uint8_t {
    SameElementAdjacent,        // sensitization directly followed by detection
    SplitNextElement,           // detection opens a later element
    DetectionFirstThenSensitize // first-position read, sensitization later in traversal
};

struct MatchWitness {
    std::vector<OpRef> sensitization_ops;
    std::optional<OpRef> detection_op;
    std::vector<AddressOrder> order_used;  // concrete order per element
    MatchRelation relation = MatchRelation::SameElementAdjacent;
};

struct MatchResult {
    bool detected = false;
    std::optional<MatchWitness> witness;
    FaultPrimitive primitive;
};

struct CoverageReport {
    std::string algorithm;
    std::string engine;  // "matcher" or "oracle"
    int total = 0;
    int detected = 0;
    std::vector<MatchResult> results;
};

/// Matches one state-tupled requirement against an annotated March.
///
/// Either-order elements are resolved existentially: each concrete order
/// assignment is tried and the first detecting one is reported. For
/// state-state primitives the latch analysis decides all CAC variants at
/// once, so every requirement of such a primitive yields the same verdict.
MatchResult match_tp(const AnnotatedMarch& am, const SequencedRequirement& req,
                     const FaultPrimitive& fp);

/// Runs every requirement variant of every fault primitive; detected when any
/// variant matches.
CoverageReport coverage(const MarchAlgorithm& m, const std::vector<FaultPrimitive>& faults,
                        Tri preset = Tri::X);

}  // namespace marchcov
