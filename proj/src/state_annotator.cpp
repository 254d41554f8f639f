#include "marchcov/state_annotator.hpp"

namespace marchcov {

namespace {

std::vector<StateTuple> propagate(const MarchElement& el, StateTuple first) {
    std::vector<StateTuple> seq;
    seq.reserve(el.ops.size());
    StateTuple cur = first;
    for (const MemOp& op : el.ops) {
        seq.push_back(cur);
        if (!op.read) cur.cas = to_tri(op.value);
    }
    return seq;
}

}  // namespace

AnnotatedMarch annotate(const MarchAlgorithm& m, Tri preset) {
    AnnotatedMarch am;
    am.algorithm = m;
    am.states = element_states(m, preset);
    am.tuples.resize(m.elements.size());
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const auto& el = m.elements[e];
        const Tri init = am.states[e].initial;
        const Tri end = am.states[e].end;
        const StateTuple up_first{end, init, init};
        const StateTuple down_first{init, init, end};
        const std::vector<StateTuple> primary =
            propagate(el, el.order == AddressOrder::Down ? down_first : up_first);
        std::vector<StateTuple> alternate;
        if (el.order == AddressOrder::Either) alternate = propagate(el, down_first);
        auto& out = am.tuples[e];
        out.resize(el.ops.size());
        for (std::size_t k = 0; k < el.ops.size(); ++k) {
            out[k].primary = primary[k];
            if (el.order == AddressOrder::Either) out[k].alternate = alternate[k];
        }
    }
    return am;
}

std::vector<std::vector<StateTuple>> tuples_for_orders(const AnnotatedMarch& am,
                                                       const std::vector<AddressOrder>& orders) {
    std::vector<std::vector<StateTuple>> out(am.tuples.size());
    for (std::size_t e = 0; e < am.tuples.size(); ++e) {
        const bool use_alternate = orders[e] == AddressOrder::Down &&
                                   am.algorithm.elements[e].order == AddressOrder::Either;
        out[e].reserve(am.tuples[e].size());
        for (const AnnotatedOp& a : am.tuples[e]) {
            out[e].push_back(use_alternate ? *a.alternate : a.primary);
        }
    }
    return out;
}

std::string render_annotated(const AnnotatedMarch& am, bool both_candidates) {
    std::string s;
    for (std::size_t e = 0; e < am.tuples.size(); ++e) {
        if (e) s += " ; ";
        const auto& el = am.algorithm.elements[e];
        for (std::size_t k = 0; k < el.ops.size(); ++k) {
            if (k) s += ' ';
            const AnnotatedOp& a = am.tuples[e][k];
            s += to_string(a.primary);
            if (both_candidates && a.alternate && *a.alternate != a.primary) {
                s += " | ";
                s += to_string(*a.alternate);
            }
            s += ' ';
            s += to_char(el.order);
            s += ' ';
            s += to_string(el.ops[k]);
        }
    }
    return s;
}

}  // namespace marchcov
