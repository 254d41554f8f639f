#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marchcov/march_lang.hpp"
#include "marchcov/types.hpp"

namespace marchcov {

/// State tuple(s) holding before one operation. Fixed-order elements carry
/// one tuple; Either elements carry the ascending tuple as primary and the
/// descending one as alternate.
struct AnnotatedOp {
    StateTuple primary;
    std::optional<StateTuple> alternate;
};

struct AnnotatedMarch {
    MarchAlgorithm algorithm;
    std::vector<ElementStates> states;              // per element
    std::vector<std::vector<AnnotatedOp>> tuples;   // [element][op]
};

/// Computes the state tuple before every operation. First-op tuples follow
/// the traversal direction: ascending <end,init,init>, descending
/// <init,init,end>; later tuples propagate (reads keep, writes set CAS).
AnnotatedMarch annotate(const MarchAlgorithm& m, Tri preset = Tri::X);

/// Tuple sequence for one concrete order assignment (orders has one concrete
/// Up/Down entry per element; Either elements resolve to the given order).
std::vector<std::vector<StateTuple>> tuples_for_orders(const AnnotatedMarch& am,
                                                       const std::vector<AddressOrder>& orders);

/// Canonical text, e.g. "<0,x,x> b w0 ; <1,0,0> u r0 <1,0,0> u w1 ...".
/// With `both_candidates`, Either-element tuples print as "<a> | <b>".
std::string render_annotated(const AnnotatedMarch& am, bool both_candidates = false);

}  // namespace marchcov
