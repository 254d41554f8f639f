#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "marchcov/types.hpp"

namespace marchcov {

/// The sixteen non-connectivity static fault classes.
enum class FaultClass : std::uint8_t {
    SF, SAF, TF, WDF, RDF, DRDF, IRF,
    CFst, CFdsrx, CFdsxwx, CFdsxwnx, CFtr, CFwd, CFrd, CFdrd, CFir,
};

inline constexpr int kFaultClassCount = 16;

std::string_view class_name(FaultClass cls);
std::optional<FaultClass> class_from_name(std::string_view name);
bool is_two_cell(FaultClass cls);

/// What puts a cell into the condition that triggers a fault: resting in a
/// state, a read of an expected value, a write (transition or not), or,
/// for stuck-at faults only, anything at all.
struct SensitizingCondition {
    enum class Form : std::uint8_t { State, ReadOf, WriteTransition, Always };

    Form form = Form::State;
    Bit state = Bit::Zero;     // State: the state; ReadOf: expected value; WriteTransition: value before
    Bit write_to = Bit::Zero;  // WriteTransition: written value

    bool is_operation() const { return form == Form::ReadOf || form == Form::WriteTransition; }

    /// Cell state that must hold before the condition applies (the read's
    /// expected value, the write's previous value, or the state itself).
    std::optional<Bit> required_state() const {
        if (form == Form::Always) return std::nullopt;
        return state;
    }

    std::optional<MemOp> operation() const {
        if (form == Form::ReadOf) return read_op(state);
        if (form == Form::WriteTransition) return write_op(write_to);
        return std::nullopt;
    }

    friend bool operator==(const SensitizingCondition&, const SensitizingCondition&) = default;
};

inline SensitizingCondition state_cond(Bit s) { return {SensitizingCondition::Form::State, s, Bit::Zero}; }
inline SensitizingCondition read_cond(Bit s) { return {SensitizingCondition::Form::ReadOf, s, Bit::Zero}; }
inline SensitizingCondition write_cond(Bit from, Bit to) { return {SensitizingCondition::Form::WriteTransition, from, to}; }
inline SensitizingCondition always_cond() { return {SensitizingCondition::Form::Always, Bit::Zero, Bit::Zero}; }

enum class ReadOut : std::uint8_t { Zero, One, DontCare };

inline std::optional<Bit> readout_bit(ReadOut r) {
    if (r == ReadOut::DontCare) return std::nullopt;
    return r == ReadOut::Zero ? Bit::Zero : Bit::One;
}

/// Relative address of the aggressor for a two-cell fault.
enum class Orientation : std::uint8_t { AggressorLow, AggressorHigh };  // a<v, a>v

inline Orientation mirrored(Orientation o) {
    return o == Orientation::AggressorLow ? Orientation::AggressorHigh : Orientation::AggressorLow;
}

/// One behavioral fault: sensitization, faulty value, read output.
struct FaultPrimitive {
    FaultClass cls = FaultClass::SF;
    SensitizingCondition victim;
    std::optional<SensitizingCondition> aggressor;  // present iff two-cell
    Bit faulty_value = Bit::Zero;
    ReadOut read_output = ReadOut::DontCare;
    std::optional<Orientation> orientation;  // present iff two-cell

    bool two_cell() const { return aggressor.has_value(); }

    friend bool operator==(const FaultPrimitive&, const FaultPrimitive&) = default;
};

struct FaultParseError : std::runtime_error {
    std::size_t position;
    FaultParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

/// All 86 concrete non-connectivity static fault primitives, in stable order:
/// class, then template variables ascending, then a<v before a>v.
std::vector<FaultPrimitive> enumerate_static_faults();

FaultPrimitive parse_fault_primitive(std::string_view text);
std::string format_fault_primitive(const FaultPrimitive& fp);

/// Canonical text of one sensitizing condition ("0", "r1", "0w1", "forall").
std::string condition_text(const SensitizingCondition& c);

/// Machine check of the type invariants; empty when the primitive is well formed.
std::vector<std::string> check_fault_invariants(const FaultPrimitive& fp);

}  // namespace marchcov
