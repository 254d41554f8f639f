#include "marchcov/fault_sim_oracle.hpp"

#include <stdexcept>

namespace marchcov {

namespace {

/// Faulty-machine cell array with the injected fault's behavior applied to
/// reads and writes at the victim (and triggers at the aggressor). The
/// golden machine is the same code with no fault installed.
struct FaultyMemory {
    std::vector<Bit> cells;
    const FaultPrimitive* fp = nullptr;  // nullptr: golden
    int victim = -1;
    int aggressor = -1;

    void fill(Bit v) {
        for (auto& c : cells) c = v;
        if (!fp) return;
        // a stuck-at cell is pinned from power-up, and a state-fault cell
        // cannot rest in its sensitive state at all; write-edge-triggered
        // coupling leaves the power-up content alone until the first write
        if (fp->cls == FaultClass::SAF) cells[victim] = fp->faulty_value;
        if (fp->cls == FaultClass::SF && cells[victim] == fp->victim.state) {
            cells[victim] = fp->faulty_value;
        }
    }

    void write(int addr, Bit v) {
        if (!fp) { cells[addr] = v; return; }
        const Bit pre = cells[addr];
        if (addr == victim) {
            switch (fp->cls) {
                case FaultClass::SAF:
                    return;  // pinned
                case FaultClass::SF:
                    cells[addr] = v == fp->victim.state ? fp->faulty_value : v;
                    return;
                case FaultClass::TF:
                    if (pre == fp->victim.state && v == fp->victim.write_to) return;  // write fails
                    break;
                case FaultClass::WDF:
                    if (pre == fp->victim.state && v == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return;
                    }
                    break;
                case FaultClass::CFtr:
                    if (cells[aggressor] == fp->aggressor->state && pre == fp->victim.state &&
                        v == fp->victim.write_to) {
                        return;
                    }
                    break;
                case FaultClass::CFwd:
                    if (cells[aggressor] == fp->aggressor->state && pre == fp->victim.state &&
                        v == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return;
                    }
                    break;
                case FaultClass::CFst:
                    cells[addr] = v;
                    if (cells[aggressor] == fp->aggressor->state && v == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                    }
                    return;
                default:
                    break;
            }
            cells[addr] = v;
            return;
        }
        cells[addr] = v;
        if (addr == aggressor) {
            const auto& a = *fp->aggressor;
            const bool aggr_write_sens =
                fp->cls == FaultClass::CFdsxwx || fp->cls == FaultClass::CFdsxwnx;
            if (aggr_write_sens && pre == a.state && v == a.write_to &&
                cells[victim] == fp->victim.state) {
                cells[victim] = fp->faulty_value;
            }
        }
    }

    Bit read(int addr) {
        if (!fp) return cells[addr];
        if (addr == victim) {
            const Bit cur = cells[addr];
            switch (fp->cls) {
                case FaultClass::RDF:
                    if (cur == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return fp->faulty_value;
                    }
                    break;
                case FaultClass::DRDF:
                    if (cur == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return cur;
                    }
                    break;
                case FaultClass::IRF:
                    if (cur == fp->victim.state) return complement(cur);
                    break;
                case FaultClass::CFrd:
                    if (cells[aggressor] == fp->aggressor->state && cur == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return fp->faulty_value;
                    }
                    break;
                case FaultClass::CFdrd:
                    if (cells[aggressor] == fp->aggressor->state && cur == fp->victim.state) {
                        cells[addr] = fp->faulty_value;
                        return cur;
                    }
                    break;
                case FaultClass::CFir:
                    if (cells[aggressor] == fp->aggressor->state && cur == fp->victim.state) {
                        return complement(cur);
                    }
                    break;
                default:
                    break;
            }
            return cells[addr];
        }
        if (addr == aggressor && fp->cls == FaultClass::CFdsrx &&
            cells[addr] == fp->aggressor->state && cells[victim] == fp->victim.state) {
            cells[victim] = fp->faulty_value;
        }
        return cells[addr];
    }
};

std::vector<int> either_elements(const MarchAlgorithm& m) {
    std::vector<int> idx;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        if (m.elements[e].order == AddressOrder::Either) idx.push_back(static_cast<int>(e));
    }
    if (idx.size() > 20) {
        throw std::invalid_argument("march has too many either-order elements to resolve");
    }
    return idx;
}

std::vector<Bit> fills_for(Tri preset) {
    if (preset == Tri::X) return {Bit::Zero, Bit::One};
    return {*tri_to_bit(preset)};
}

}  // namespace

std::vector<FaultPlacement> legal_placements(const FaultPrimitive& fp, int cells) {
    std::vector<FaultPlacement> out;
    if (!fp.two_cell()) {
        for (int v = 0; v < cells; ++v) out.push_back({v, std::nullopt});
        return out;
    }
    for (int v = 0; v < cells; ++v) {
        for (int a = 0; a < cells; ++a) {
            if (a == v) continue;
            const bool low = a < v;
            if ((fp.orientation == Orientation::AggressorLow) == low) out.push_back({v, a});
        }
    }
    return out;
}

std::vector<Mismatch> run_with_orders(const MarchAlgorithm& m,
                                      const std::vector<AddressOrder>& orders,
                                      const FaultPrimitive& fp, const FaultPlacement& placement,
                                      int cells, Bit fill) {
    if (cells < 2 || (fp.two_cell() && !placement.aggressor)) {
        throw std::invalid_argument("invalid fault placement");
    }
    FaultyMemory golden{std::vector<Bit>(cells), nullptr, -1, -1};
    FaultyMemory faulty{std::vector<Bit>(cells), &fp, placement.victim,
                        placement.aggressor.value_or(-1)};
    golden.fill(fill);
    faulty.fill(fill);
    std::vector<Mismatch> mismatches;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const auto& el = m.elements[e];
        const bool up = orders[e] != AddressOrder::Down;
        for (int i = 0; i < cells; ++i) {
            const int addr = up ? i : cells - 1 - i;
            for (std::size_t k = 0; k < el.ops.size(); ++k) {
                const MemOp& op = el.ops[k];
                if (op.read) {
                    const Bit g = golden.read(addr);
                    const Bit f = faulty.read(addr);
                    if (g != f) {
                        mismatches.push_back({static_cast<int>(e), static_cast<int>(k), addr, g, f});
                    }
                } else {
                    golden.write(addr, op.value);
                    faulty.write(addr, op.value);
                }
            }
        }
    }
    return mismatches;
}

std::vector<Bit> golden_reads(const MarchAlgorithm& m, const std::vector<AddressOrder>& orders,
                              int cells, Bit fill) {
    FaultyMemory golden{std::vector<Bit>(cells), nullptr, -1, -1};
    golden.fill(fill);
    std::vector<Bit> out;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const bool up = orders[e] != AddressOrder::Down;
        for (int i = 0; i < cells; ++i) {
            const int addr = up ? i : cells - 1 - i;
            for (const MemOp& op : m.elements[e].ops) {
                if (op.read) out.push_back(golden.read(addr));
                else golden.write(addr, op.value);
            }
        }
    }
    return out;
}

DetectionVerdict simulate_fault(const MarchAlgorithm& m, const FaultPrimitive& fp,
                                const FaultPlacement& placement, int cells) {
    const std::vector<int> either = either_elements(m);
    std::vector<AddressOrder> orders;
    for (const auto& el : m.elements) {
        orders.push_back(el.order == AddressOrder::Either ? AddressOrder::Up : el.order);
    }
    DetectionVerdict verdict;
    verdict.detected = true;
    const std::uint64_t combos = std::uint64_t{1} << either.size();
    for (std::uint64_t mask = 0; mask < combos && verdict.detected; ++mask) {
        for (std::size_t i = 0; i < either.size(); ++i) {
            orders[either[i]] = (mask >> i) & 1 ? AddressOrder::Down : AddressOrder::Up;
        }
        for (Bit fill : {Bit::Zero, Bit::One}) {
            auto mm = run_with_orders(m, orders, fp, placement, cells, fill);
            if (mm.empty()) {
                verdict.detected = false;
                break;
            }
            if (!verdict.first_mismatch) verdict.first_mismatch = mm.front();
        }
    }
    if (!verdict.detected) verdict.first_mismatch.reset();
    return verdict;
}

CoverageReport oracle_coverage(const MarchAlgorithm& m, const std::vector<FaultPrimitive>& faults,
                               int cells, Tri preset) {
    CoverageReport report;
    report.algorithm = m.name.empty() ? format_march(m) : m.name;
    report.engine = "oracle";
    report.total = static_cast<int>(faults.size());
    const std::vector<int> either = either_elements(m);
    const std::vector<Bit> fills = fills_for(preset);
    std::vector<AddressOrder> orders;
    for (const auto& el : m.elements) {
        orders.push_back(el.order == AddressOrder::Either ? AddressOrder::Up : el.order);
    }
    for (const FaultPrimitive& fp : faults) {
        MatchResult result;
        result.primitive = fp;
        const auto placements = legal_placements(fp, cells);
        const std::uint64_t combos = std::uint64_t{1} << either.size();
        for (std::uint64_t mask = 0; mask < combos && !result.detected; ++mask) {
            for (std::size_t i = 0; i < either.size(); ++i) {
                orders[either[i]] = (mask >> i) & 1 ? AddressOrder::Down : AddressOrder::Up;
            }
            bool all = !placements.empty();
            std::optional<Mismatch> first;
            for (const auto& p : placements) {
                for (Bit fill : fills) {
                    auto mm = run_with_orders(m, orders, fp, p, cells, fill);
                    if (mm.empty()) { all = false; break; }
                    if (!first) first = mm.front();
                }
                if (!all) break;
            }
            if (all) {
                result.detected = true;
                MatchWitness w;
                w.detection_op = OpRef{first->element, first->op};
                w.order_used = orders;
                result.witness = std::move(w);
            }
        }
        if (result.detected) ++report.detected;
        report.results.push_back(std::move(result));
    }
    return report;
}

}  // namespace marchcov
