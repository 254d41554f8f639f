#pragma once

#include <optional>
#include <vector>

#include "marchcov/coverage_matcher.hpp"
#include "marchcov/fault_model.hpp"
#include "marchcov/march_lang.hpp"

namespace marchcov {

/// Fixed-size word-per-bit memory.
struct MemoryImage {
    std::vector<Bit> cells;
};

struct FaultPlacement {
    int victim = 0;
    std::optional<int> aggressor;  // present iff two-cell
};

struct Mismatch {
    int element = 0;
    int op = 0;
    int address = 0;
    Bit expected = Bit::Zero;  // golden run's returned value
    Bit observed = Bit::Zero;  // faulty run's returned value
};

struct DetectionVerdict {
    bool detected = false;
    std::optional<Mismatch> first_mismatch;
};

/// All placements of a primitive in an n-cell memory (orientation respected).
std::vector<FaultPlacement> legal_placements(const FaultPrimitive& fp, int cells);

/// Runs golden and faulty machines under one concrete order assignment and
/// one initial fill; returns every read whose value differs between them.
std::vector<Mismatch> run_with_orders(const MarchAlgorithm& m,
                                      const std::vector<AddressOrder>& orders,
                                      const FaultPrimitive& fp, const FaultPlacement& placement,
                                      int cells, Bit fill);

/// Fault-free read-back values in execution order.
std::vector<Bit> golden_reads(const MarchAlgorithm& m, const std::vector<AddressOrder>& orders,
                              int cells, Bit fill);

/// Detection guaranteed for one placement: a mismatching read in every
/// initial fill under every resolution of Either-order elements.
DetectionVerdict simulate_fault(const MarchAlgorithm& m, const FaultPrimitive& fp,
                                const FaultPlacement& placement, int cells);

/// Coverage sweep. A primitive counts as detected when some one resolution
/// of the Either-order elements guarantees a mismatch for every legal
/// placement and every initial fill; this is the same existential-order
/// contract the matcher uses. With a concrete `preset` only that fill is run.
CoverageReport oracle_coverage(const MarchAlgorithm& m, const std::vector<FaultPrimitive>& faults,
                               int cells = 4, Tri preset = Tri::X);

}  // namespace marchcov
