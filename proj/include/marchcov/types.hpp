#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace marchcov {

/// A memory cell value.
enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit complement(Bit b) { return b == Bit::Zero ? Bit::One : Bit::Zero; }
constexpr char to_char(Bit b) { return b == Bit::Zero ? '0' : '1'; }
constexpr int to_int(Bit b) { return b == Bit::One ? 1 : 0; }

inline std::optional<Bit> bit_from_char(char c) {
    if (c == '0') return Bit::Zero;
    if (c == '1') return Bit::One;
    return std::nullopt;
}

/// Three-valued cell state: 0, 1, or X. X means "don't care" in requirements
/// and "unknown content" in annotations of a running algorithm.
enum class Tri : std::uint8_t { Zero = 0, One = 1, X = 2 };

constexpr Tri to_tri(Bit b) { return b == Bit::Zero ? Tri::Zero : Tri::One; }
constexpr bool is_concrete(Tri t) { return t != Tri::X; }
constexpr bool tri_is(Tri t, Bit b) { return t == to_tri(b); }
constexpr char to_char(Tri t) { return t == Tri::Zero ? '0' : t == Tri::One ? '1' : 'x'; }

inline std::optional<Bit> tri_to_bit(Tri t) {
    if (t == Tri::X) return std::nullopt;
    return t == Tri::Zero ? Bit::Zero : Bit::One;
}

/// One memory access operation: R0, R1, W0 or W1.
struct MemOp {
    bool read = false;
    Bit value = Bit::Zero;

    friend bool operator==(const MemOp&, const MemOp&) = default;
};

inline MemOp read_op(Bit v) { return MemOp{true, v}; }
inline MemOp write_op(Bit v) { return MemOp{false, v}; }

inline std::string to_string(const MemOp& op) {
    return std::string(1, op.read ? 'r' : 'w') + to_char(op.value);
}

/// Address traversal order of a March element.
enum class AddressOrder : std::uint8_t { Up, Down, Either };

constexpr char to_char(AddressOrder o) {
    return o == AddressOrder::Up ? 'u' : o == AddressOrder::Down ? 'd' : 'b';
}

/// Memory state abstraction before one operation: lower address region,
/// current address cell, higher address region.
struct StateTuple {
    Tri las = Tri::X;
    Tri cas = Tri::X;
    Tri has = Tri::X;

    friend bool operator==(const StateTuple&, const StateTuple&) = default;
};

inline std::string to_string(const StateTuple& t) {
    std::string s = "<";
    s += to_char(t.las);
    s += ',';
    s += to_char(t.cas);
    s += ',';
    s += to_char(t.has);
    s += '>';
    return s;
}

/// Requirement compatibility: every concrete slot of `req` must equal the
/// annotated slot exactly; X in the requirement accepts anything.
inline bool tuple_compatible(const StateTuple& req, const StateTuple& annotated) {
    auto slot_ok = [](Tri r, Tri a) { return r == Tri::X || r == a; };
    return slot_ok(req.las, annotated.las) && slot_ok(req.cas, annotated.cas) &&
           slot_ok(req.has, annotated.has);
}

}  // namespace marchcov
