#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "marchcov/types.hpp"

namespace marchcov {

struct MarchElement {
    AddressOrder order = AddressOrder::Up;
    std::vector<MemOp> ops;  // non-empty
};

struct MarchAlgorithm {
    std::vector<MarchElement> elements;  // non-empty
    std::string name;
};

struct MarchParseError : std::runtime_error {
    int line;
    int column;
    MarchParseError(const std::string& what, int line_, int col)
        : std::runtime_error(what), line(line_), column(col) {}
};

/// A validation finding, anchored to an operation (op == -1: whole element).
struct Diagnostic {
    int element = 0;
    int op = -1;
    std::string message;
};

struct ElementStates {
    Tri initial = Tri::X;
    Tri end = Tri::X;
};

/// Parses the March DSL: elements separated by ';', each `order(op,op,...)`
/// with order in u/d/b (Unicode arrows accepted) and ops r0/r1/w0/w1.
MarchAlgorithm parse_march(std::string_view text, std::string name = "");

/// Canonical text; parse(format(m)) reproduces m.
std::string format_march(const MarchAlgorithm& m);

/// Propagates cell state through every element; reports reads whose expected
/// value contradicts the propagated state and reads of unknown state.
std::vector<Diagnostic> validate_march(const MarchAlgorithm& m, Tri preset = Tri::X);

/// Initial/end state per element; `preset` seeds the first element.
std::vector<ElementStates> element_states(const MarchAlgorithm& m, Tri preset = Tri::X);

int op_count(const MarchAlgorithm& m);

/// Swaps Up and Down in every element (Either kept).
MarchAlgorithm mirrored(const MarchAlgorithm& m);

}  // namespace marchcov
