#include "marchcov/coverage_matcher.hpp"

#include <functional>

namespace marchcov {

namespace {

// Matching works on one concrete order assignment at a time. Requirement
// tuples are checked against the annotation; victim-trace walks decide
// whether a sensitized fault survives until a read observes it. Survival
// under an intervening write is class-specific: a write can re-trigger the
// fault (transition faults), heal it, or toggle it (non-transition write
// faults, handled by a per-fill divergence parity chain).

struct Engine {
    const MarchAlgorithm& m;
    const std::vector<std::vector<StateTuple>>& ann;
    const std::vector<AddressOrder>& orders;

    using Survive = std::function<bool(Bit written, const StateTuple& at)>;

    int elements() const { return static_cast<int>(m.elements.size()); }
    const std::vector<MemOp>& ops(int e) const { return m.elements[e].ops; }

    /// Scans the victim's remaining operations starting at (e, k0): the
    /// first read detects; a write ends the scan unless `survive` says the
    /// fault re-triggers through it.
    std::optional<OpRef> walk(int e, int k0, const Survive& survive) const {
        for (; e < elements(); ++e, k0 = 0) {
            const auto& os = ops(e);
            for (int k = k0; k < static_cast<int>(os.size()); ++k) {
                if (os[k].read) return OpRef{e, k};
                if (!survive(os[k].value, ann[e][k])) return std::nullopt;
            }
        }
        return std::nullopt;
    }

    Tri aggr_slot(const StateTuple& t, Orientation o) const {
        return o == Orientation::AggressorLow ? t.las : t.has;
    }
    Tri victim_slot(const StateTuple& t, Orientation o) const {
        return o == Orientation::AggressorLow ? t.has : t.las;
    }

    /// True when the element's traversal reaches the victim after the
    /// current (aggressor) address.
    bool victim_unvisited(int e, Orientation o) const {
        const bool victim_higher = o == Orientation::AggressorLow;
        return orders[e] == AddressOrder::Up ? victim_higher : !victim_higher;
    }

    MatchWitness witness(std::vector<OpRef> sens, std::optional<OpRef> det,
                         MatchRelation rel) const {
        MatchWitness w;
        w.sensitization_ops = std::move(sens);
        w.detection_op = det;
        w.order_used = orders;
        w.relation = rel;
        return w;
    }

    MatchRelation split_relation(const OpRef& sens, const OpRef& det) const {
        return sens.element == det.element ? MatchRelation::SameElementAdjacent
                                           : MatchRelation::SplitNextElement;
    }

    std::optional<MatchWitness> match(const SequencedRequirement& req, const FaultPrimitive& fp) {
        switch (fp.cls) {
            case FaultClass::SF:
            case FaultClass::SAF: {
                const Bit want = fp.cls == FaultClass::SF ? fp.victim.state
                                                          : complement(fp.faulty_value);
                return find_read(want, req.tuple);
            }
            case FaultClass::RDF:
            case FaultClass::IRF:
                return find_read(fp.victim.state, req.tuple);
            case FaultClass::CFrd:
            case FaultClass::CFir:
                return find_read(fp.victim.state, req.tuple);
            case FaultClass::DRDF:
            case FaultClass::CFdrd:
                return read_then_read(fp, req);
            case FaultClass::TF:
            case FaultClass::CFtr:
                return failing_transition_write(fp, req);
            case FaultClass::WDF:
            case FaultClass::CFwd:
                return parity_chain(fp, req);
            case FaultClass::CFst:
                return state_coupling(fp, req);
            case FaultClass::CFdsrx:
            case FaultClass::CFdsxwx:
            case FaultClass::CFdsxwnx:
                return aggressor_disturb(fp, req);
        }
        return std::nullopt;
    }

    /// Classes whose sensitizing read is itself the detection: find one read
    /// of the wanted value under a compatible tuple.
    std::optional<MatchWitness> find_read(Bit want, const StateTuple& reqt) {
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (os[k].read && os[k].value == want && tuple_compatible(reqt, ann[e][k])) {
                    OpRef r{e, k};
                    return witness({r}, r, MatchRelation::SameElementAdjacent);
                }
            }
        }
        return std::nullopt;
    }

    /// Deceptive reads: the sensitizing read reports the right value but
    /// corrupts the cell; any following write restores it.
    std::optional<MatchWitness> read_then_read(const FaultPrimitive& fp,
                                               const SequencedRequirement& req) {
        const Bit want = fp.victim.state;
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (!os[k].read || os[k].value != want) continue;
                if (!tuple_compatible(req.tuple, ann[e][k])) continue;
                auto det = walk(e, k + 1, [](Bit, const StateTuple&) { return false; });
                if (det) return witness({{e, k}}, det, split_relation({e, k}, *det));
            }
        }
        return std::nullopt;
    }

    /// Transition writes that fail and keep the old value. Rewriting the
    /// same target value fails again (the cell still holds the old value),
    /// so it does not end the detection window; writing the old value heals.
    /// For the coupled variant the re-trigger also needs the aggressor
    /// region at its sensitizing state at that moment.
    std::optional<MatchWitness> failing_transition_write(const FaultPrimitive& fp,
                                                         const SequencedRequirement& req) {
        const Bit from = fp.victim.state;
        const Bit to = fp.victim.write_to;
        const bool coupled = fp.cls == FaultClass::CFtr;
        const Orientation orient = fp.orientation.value_or(Orientation::AggressorLow);
        const Bit aggr_state = coupled ? fp.aggressor->state : Bit::Zero;
        Survive survive = [&](Bit w, const StateTuple& at) {
            if (w != to) return false;
            return !coupled || tri_is(aggr_slot(at, orient), aggr_state);
        };
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (os[k].read || os[k].value != to) continue;
                if (!tri_is(ann[e][k].cas, from)) continue;
                if (!tuple_compatible(req.tuple, ann[e][k])) continue;
                auto det = walk(e, k + 1, survive);
                if (det) return witness({{e, k}}, det, split_relation({e, k}, *det));
            }
        }
        return std::nullopt;
    }

    /// Non-transition-write faults toggle: a second identical write performs
    /// a transition on the corrupted cell and heals it. The divergence state
    /// is therefore tracked along the whole run, per initial fill (unknown
    /// pre-states resolve to the fill value), and the fault counts as
    /// detected only when both fills reach a read while diverged.
    std::optional<MatchWitness> parity_chain(const FaultPrimitive& fp,
                                             const SequencedRequirement&) {
        const bool coupled = fp.cls == FaultClass::CFwd;
        const Bit tv = fp.victim.required_state().value();  // value written and held
        const Orientation orient = fp.orientation.value_or(Orientation::AggressorLow);
        const Bit aggr_state = coupled ? fp.aggressor->state : Bit::Zero;
        bool diverged[2] = {false, false};
        bool fill_done[2] = {false, false};
        std::optional<MatchWitness> first;
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (os[k].read) continue;
                const StateTuple& t = ann[e][k];
                for (int fill = 0; fill < 2; ++fill) {
                    const Bit fb = fill ? Bit::One : Bit::Zero;
                    bool trig = os[k].value == tv &&
                                (tri_is(t.cas, tv) || (t.cas == Tri::X && fb == tv));
                    if (trig && coupled) {
                        const Tri a = aggr_slot(t, orient);
                        trig = tri_is(a, aggr_state) || (a == Tri::X && fb == aggr_state);
                    }
                    diverged[fill] = trig && !diverged[fill];
                }
                if (diverged[0] || diverged[1]) {
                    auto det = walk(e, k + 1, [](Bit, const StateTuple&) { return false; });
                    if (det) {
                        for (int fill = 0; fill < 2; ++fill) {
                            if (diverged[fill]) fill_done[fill] = true;
                        }
                        if (!first) first = witness({{e, k}}, det, split_relation({e, k}, *det));
                    }
                }
            }
        }
        if (fill_done[0] && fill_done[1]) return first;
        return std::nullopt;
    }

    /// State coupling latches when a write leaves the victim at its
    /// sensitive state while the aggressor region holds its own; a later
    /// identical write under the same condition re-latches.
    std::optional<MatchWitness> state_coupling(const FaultPrimitive& fp,
                                               const SequencedRequirement&) {
        const Bit x = fp.aggressor->state;
        const Bit y = fp.victim.state;
        const Orientation orient = fp.orientation.value_or(Orientation::AggressorLow);
        Survive survive = [&](Bit w, const StateTuple& at) {
            return w == y && tri_is(aggr_slot(at, orient), x);
        };
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (os[k].read || os[k].value != y) continue;
                if (!tri_is(aggr_slot(ann[e][k], orient), x)) continue;
                auto det = walk(e, k + 1, survive);
                if (det) return witness({{e, k}}, det, split_relation({e, k}, *det));
            }
        }
        return std::nullopt;
    }

    /// Disturb faults sensitized by an operation at the aggressor. In the
    /// aggressor-to-victim direction the victim is still ahead of the
    /// traversal, so the element's own first operation must be the read; in
    /// the opposite direction the victim was already passed and the next
    /// element must open with it.
    std::optional<MatchWitness> aggressor_disturb(const FaultPrimitive& fp,
                                                  const SequencedRequirement& req) {
        const MemOp sens = *fp.aggressor->operation();
        const Bit pre = *fp.aggressor->required_state();
        const Orientation orient = fp.orientation.value_or(Orientation::AggressorLow);
        const bool want_a_to_v = req.variant.guard != Guard::VictimToAggressor;
        const bool want_v_to_a = req.variant.guard != Guard::AggressorToVictim;
        for (int e = 0; e < elements(); ++e) {
            const auto& os = ops(e);
            for (int k = 0; k < static_cast<int>(os.size()); ++k) {
                if (!(os[k] == sens)) continue;
                if (!tri_is(ann[e][k].cas, pre)) continue;
                if (!tuple_compatible(req.tuple, ann[e][k])) continue;
                if (victim_unvisited(e, orient)) {
                    if (want_a_to_v && ops(e)[0].read) {
                        OpRef det{e, 0};
                        return witness({{e, k}}, det,
                                       k == 0 ? MatchRelation::SameElementAdjacent
                                              : MatchRelation::DetectionFirstThenSensitize);
                    }
                } else {
                    if (want_v_to_a && e + 1 < elements() && ops(e + 1)[0].read) {
                        return witness({{e, k}}, OpRef{e + 1, 0}, MatchRelation::SplitNextElement);
                    }
                }
            }
        }
        return std::nullopt;
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

}  // namespace

MatchResult match_tp(const AnnotatedMarch& am, const SequencedRequirement& req,
                     const FaultPrimitive& fp) {
    MatchResult result;
    result.primitive = fp;
    const auto& m = am.algorithm;
    const std::vector<int> either = either_elements(m);
    std::vector<AddressOrder> orders;
    orders.reserve(m.elements.size());
    for (const auto& el : m.elements) {
        orders.push_back(el.order == AddressOrder::Either ? AddressOrder::Up : el.order);
    }
    const std::uint64_t combos = std::uint64_t{1} << either.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        for (std::size_t i = 0; i < either.size(); ++i) {
            orders[either[i]] = (mask >> i) & 1 ? AddressOrder::Down : AddressOrder::Up;
        }
        const auto tuples = tuples_for_orders(am, orders);
        Engine engine{m, tuples, orders};
        if (auto w = engine.match(req, fp)) {
            result.detected = true;
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

CoverageReport coverage(const MarchAlgorithm& m, const std::vector<FaultPrimitive>& faults,
                        Tri preset) {
    CoverageReport report;
    report.algorithm = m.name.empty() ? format_march(m) : m.name;
    report.engine = "matcher";
    report.total = static_cast<int>(faults.size());
    const AnnotatedMarch am = annotate(m, preset);
    for (const FaultPrimitive& fp : faults) {
        const TestPrimitive tp = derive_test_primitive(fp);
        MatchResult best;
        best.primitive = fp;
        for (const auto& req : state_tuples_for_test_primitive(tp, fp.orientation)) {
            MatchResult r = match_tp(am, req, fp);
            if (r.detected) { best = std::move(r); break; }
        }
        if (best.detected) ++report.detected;
        report.results.push_back(std::move(best));
    }
    return report;
}

}  // namespace marchcov
