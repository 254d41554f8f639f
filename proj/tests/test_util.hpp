#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "marchcov/march_lang.hpp"

namespace testutil {

inline marchcov::MarchAlgorithm march_a() {
    return marchcov::parse_march(
        "b(w0); u(r0,w1,w0,w1); u(r1,w0,w1); d(r1,w0,w1,w0); d(r0,w1,w0)", "March A");
}

inline marchcov::MarchAlgorithm march_b() {
    return marchcov::parse_march(
        "b(w0); u(r0,w1,r1,w0,r0,w1); u(r1,w0,w1); d(r1,w0,w1,w0); d(r0,w1,w0)", "March B");
}

inline marchcov::MarchAlgorithm march_sr() {
    return marchcov::parse_march(
        "b(w0); u(r0,w1,r1,w0); u(r0,r0); u(w1); d(r1,w0,r0,w1); d(r1,r1)", "March SR");
}

inline marchcov::MarchAlgorithm mats_plus() {
    return marchcov::parse_march("b(w0); u(r0,w1); d(r1,w0)", "MATS+");
}

inline marchcov::MarchAlgorithm march_cminus() {
    return marchcov::parse_march("b(w0); u(r0,w1); u(r1,w0); d(r0,w1); d(r1,w0); b(r0)",
                                 "March C-");
}

inline std::vector<marchcov::MarchAlgorithm> corpus() {
    return {mats_plus(), march_cminus(), march_a(), march_b(), march_sr()};
}

/// Builds a valid march by construction: reads only target the known
/// propagated state, so validate_march always accepts the result. With a
/// concrete `preset` the march may open with reads of the preset value.
inline marchcov::MarchAlgorithm random_valid_march(std::mt19937& rng, int max_elements = 6,
                                                   int max_ops = 6,
                                                   marchcov::Tri preset = marchcov::Tri::X) {
    using namespace marchcov;
    std::uniform_int_distribution<int> nel(1, max_elements);
    std::uniform_int_distribution<int> nop(1, max_ops);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> ord(0, 2);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    MarchAlgorithm m;
    Tri state = preset;
    const int elements = nel(rng);
    for (int e = 0; e < elements; ++e) {
        MarchElement el;
        switch (ord(rng)) {
            case 0: el.order = AddressOrder::Up; break;
            case 1: el.order = AddressOrder::Down; break;
            default: el.order = AddressOrder::Either; break;
        }
        const int ops = nop(rng);
        for (int k = 0; k < ops; ++k) {
            if (state == Tri::X || frac(rng) < 0.55) {
                const Bit v = bit(rng) ? Bit::One : Bit::Zero;
                el.ops.push_back(write_op(v));
                state = to_tri(v);
            } else {
                el.ops.push_back(read_op(*tri_to_bit(state)));
            }
        }
        m.elements.push_back(std::move(el));
    }
    return m;
}

}  // namespace testutil
