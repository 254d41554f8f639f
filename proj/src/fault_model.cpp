#include "marchcov/fault_model.hpp"

#include <array>
#include <cctype>

namespace marchcov {

namespace {

constexpr std::array<std::string_view, kFaultClassCount> kClassNames = {
    "SF", "SAF", "TF", "WDF", "RDF", "DRDF", "IRF",
    "CFst", "CFdsrx", "CFdsxwx", "CFdsxw!x", "CFtr", "CFwd", "CFrd", "CFdrd", "CFir",
};

FaultPrimitive single(FaultClass cls, SensitizingCondition victim, Bit f, ReadOut r) {
    FaultPrimitive fp;
    fp.cls = cls;
    fp.victim = victim;
    fp.faulty_value = f;
    fp.read_output = r;
    return fp;
}

FaultPrimitive coupled(FaultClass cls, SensitizingCondition aggr, SensitizingCondition victim,
                       Bit f, ReadOut r, Orientation o) {
    FaultPrimitive fp;
    fp.cls = cls;
    fp.victim = victim;
    fp.aggressor = aggr;
    fp.faulty_value = f;
    fp.read_output = r;
    fp.orientation = o;
    return fp;
}

ReadOut out(Bit b) { return b == Bit::Zero ? ReadOut::Zero : ReadOut::One; }

/// Instantiates one class for concrete template values; nullopt for invalid combos.
FaultPrimitive instantiate(FaultClass cls, Bit x, Bit y, Orientation o) {
    const Bit nx = complement(x);
    const Bit ny = complement(y);
    switch (cls) {
        case FaultClass::SF:   return single(cls, state_cond(x), nx, ReadOut::DontCare);
        case FaultClass::SAF:  return single(cls, always_cond(), x, ReadOut::DontCare);
        case FaultClass::TF:   return single(cls, write_cond(x, nx), x, ReadOut::DontCare);
        case FaultClass::WDF:  return single(cls, write_cond(x, x), nx, ReadOut::DontCare);
        case FaultClass::RDF:  return single(cls, read_cond(x), nx, out(nx));
        case FaultClass::DRDF: return single(cls, read_cond(x), nx, out(x));
        case FaultClass::IRF:  return single(cls, read_cond(x), x, out(nx));
        case FaultClass::CFst:    return coupled(cls, state_cond(x), state_cond(y), ny, ReadOut::DontCare, o);
        case FaultClass::CFdsrx:  return coupled(cls, read_cond(x), state_cond(y), ny, ReadOut::DontCare, o);
        case FaultClass::CFdsxwx: return coupled(cls, write_cond(x, x), state_cond(y), ny, ReadOut::DontCare, o);
        case FaultClass::CFdsxwnx:return coupled(cls, write_cond(x, nx), state_cond(y), ny, ReadOut::DontCare, o);
        case FaultClass::CFtr:    return coupled(cls, state_cond(x), write_cond(y, ny), y, ReadOut::DontCare, o);
        case FaultClass::CFwd:    return coupled(cls, state_cond(x), write_cond(y, y), ny, ReadOut::DontCare, o);
        case FaultClass::CFrd:    return coupled(cls, state_cond(x), read_cond(y), ny, out(ny), o);
        case FaultClass::CFdrd:   return coupled(cls, state_cond(x), read_cond(y), ny, out(y), o);
        case FaultClass::CFir:    return coupled(cls, state_cond(x), read_cond(y), y, out(ny), o);
    }
    throw std::logic_error("unreachable fault class");
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const { throw FaultParseError(msg, pos); }
};

SensitizingCondition parse_condition(Cursor& cur) {
    cur.skip_ws();
    const std::string_view rest = cur.text.substr(cur.pos);
    auto starts = [&](std::string_view s) {
        if (rest.size() < s.size()) return false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(rest[i])) !=
                static_cast<int>(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    if (starts("forall")) { cur.pos += 6; return always_cond(); }
    if (starts("\xe2\x88\x80")) { cur.pos += 3; return always_cond(); }  // U+2200
    char c = cur.peek();
    if (c == 'r' || c == 'R') {
        ++cur.pos;
        auto v = bit_from_char(cur.peek());
        if (!v) cur.fail("expected 0 or 1 after 'r'");
        ++cur.pos;
        return read_cond(*v);
    }
    auto v = bit_from_char(c);
    if (!v) cur.fail("expected sensitizing condition (0, 1, r0, r1, 0w0, 0w1, 1w0, 1w1 or forall)");
    ++cur.pos;
    char n = cur.peek();
    if (n == 'w' || n == 'W') {
        ++cur.pos;
        auto t = bit_from_char(cur.peek());
        if (!t) cur.fail("expected 0 or 1 after 'w'");
        ++cur.pos;
        return write_cond(*v, *t);
    }
    return state_cond(*v);
}

/// Recognizes the fault class from the parsed shape; nullopt when the
/// combination does not correspond to any static class.
std::optional<FaultClass> classify(const std::optional<SensitizingCondition>& aggr,
                                   const SensitizingCondition& victim, Bit f, ReadOut r) {
    using Form = SensitizingCondition::Form;
    if (!aggr) {
        switch (victim.form) {
            case Form::Always:
                return r == ReadOut::DontCare ? std::optional<FaultClass>(FaultClass::SAF) : std::nullopt;
            case Form::State:
                return (r == ReadOut::DontCare && f == complement(victim.state))
                           ? std::optional<FaultClass>(FaultClass::SF) : std::nullopt;
            case Form::WriteTransition: {
                if (r != ReadOut::DontCare) return std::nullopt;
                const bool transition = victim.state != victim.write_to;
                if (transition && f == victim.state) return FaultClass::TF;
                if (!transition && f == complement(victim.state)) return FaultClass::WDF;
                return std::nullopt;
            }
            case Form::ReadOf: {
                auto rb = readout_bit(r);
                if (!rb) return std::nullopt;
                const Bit x = victim.state;
                if (f == complement(x) && *rb == complement(x)) return FaultClass::RDF;
                if (f == complement(x) && *rb == x) return FaultClass::DRDF;
                if (f == x && *rb == complement(x)) return FaultClass::IRF;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
    if (aggr->form == Form::Always || victim.form == Form::Always) return std::nullopt;
    if (aggr->is_operation() && victim.is_operation()) return std::nullopt;
    if (aggr->is_operation()) {
        if (victim.form != Form::State) return std::nullopt;
        const Bit y = victim.state;
        if (r != ReadOut::DontCare || f != complement(y)) return std::nullopt;
        if (aggr->form == Form::ReadOf) return FaultClass::CFdsrx;
        return aggr->state == aggr->write_to ? FaultClass::CFdsxwx : FaultClass::CFdsxwnx;
    }
    // aggressor is a state
    switch (victim.form) {
        case Form::State:
            return (r == ReadOut::DontCare && f == complement(victim.state))
                       ? std::optional<FaultClass>(FaultClass::CFst) : std::nullopt;
        case Form::WriteTransition: {
            if (r != ReadOut::DontCare) return std::nullopt;
            const bool transition = victim.state != victim.write_to;
            if (transition && f == victim.state) return FaultClass::CFtr;
            if (!transition && f == complement(victim.state)) return FaultClass::CFwd;
            return std::nullopt;
        }
        case Form::ReadOf: {
            auto rb = readout_bit(r);
            if (!rb) return std::nullopt;
            const Bit y = victim.state;
            if (f == complement(y) && *rb == complement(y)) return FaultClass::CFrd;
            if (f == complement(y) && *rb == y) return FaultClass::CFdrd;
            if (f == y && *rb == complement(y)) return FaultClass::CFir;
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

std::string condition_text(const SensitizingCondition& c) {
    switch (c.form) {
        case SensitizingCondition::Form::Always: return "forall";
        case SensitizingCondition::Form::State:  return std::string(1, to_char(c.state));
        case SensitizingCondition::Form::ReadOf: return std::string("r") + to_char(c.state);
        case SensitizingCondition::Form::WriteTransition:
            return std::string(1, to_char(c.state)) + "w" + to_char(c.write_to);
    }
    return {};
}

std::string_view class_name(FaultClass cls) { return kClassNames[static_cast<int>(cls)]; }

std::optional<FaultClass> class_from_name(std::string_view name) {
    for (int i = 0; i < kFaultClassCount; ++i) {
        const std::string_view cand = kClassNames[i];
        if (cand.size() != name.size()) continue;
        bool eq = true;
        for (std::size_t j = 0; j < cand.size(); ++j) {
            if (std::tolower(static_cast<unsigned char>(cand[j])) !=
                std::tolower(static_cast<unsigned char>(name[j]))) { eq = false; break; }
        }
        if (eq) return static_cast<FaultClass>(i);
    }
    return std::nullopt;
}

bool is_two_cell(FaultClass cls) { return static_cast<int>(cls) >= static_cast<int>(FaultClass::CFst); }

std::vector<FaultPrimitive> enumerate_static_faults() {
    std::vector<FaultPrimitive> out;
    out.reserve(86);
    for (int c = 0; c < kFaultClassCount; ++c) {
        const auto cls = static_cast<FaultClass>(c);
        if (!is_two_cell(cls)) {
            for (Bit x : {Bit::Zero, Bit::One}) {
                out.push_back(instantiate(cls, x, Bit::Zero, Orientation::AggressorLow));
            }
        } else {
            for (Bit x : {Bit::Zero, Bit::One}) {
                for (Bit y : {Bit::Zero, Bit::One}) {
                    for (Orientation o : {Orientation::AggressorLow, Orientation::AggressorHigh}) {
                        out.push_back(instantiate(cls, x, y, o));
                    }
                }
            }
        }
    }
    return out;
}

FaultPrimitive parse_fault_primitive(std::string_view text) {
    Cursor cur{text};
    cur.skip_ws();
    if (!cur.eat('<')) {
        // accept U+27E8 as alias
        if (cur.text.substr(cur.pos, 3) == "\xe2\x9f\xa8") cur.pos += 3;
        else cur.fail("expected '<'");
    }
    SensitizingCondition first = parse_condition(cur);
    std::optional<SensitizingCondition> aggr;
    SensitizingCondition victim = first;
    if (cur.eat(';')) {
        aggr = first;
        victim = parse_condition(cur);
        if (aggr->is_operation() && victim.is_operation()) {
            cur.fail("aggressor and victim sensitizations cannot both be operations");
        }
    }
    if (!cur.eat('/')) cur.fail("expected '/' before faulty value");
    auto f = bit_from_char(cur.peek());
    if (!f) cur.fail("expected faulty value 0 or 1");
    ++cur.pos;
    if (!cur.eat('/')) cur.fail("expected '/' before read output");
    ReadOut r;
    char rc = cur.peek();
    if (rc == '-') { r = ReadOut::DontCare; ++cur.pos; }
    else if (auto rb = bit_from_char(rc)) { r = *rb == Bit::Zero ? ReadOut::Zero : ReadOut::One; ++cur.pos; }
    else cur.fail("expected read output 0, 1 or -");
    if (!cur.eat('>')) {
        if (cur.text.substr(cur.pos, 3) == "\xe2\x9f\xa9") cur.pos += 3;
        else cur.fail("expected '>'");
    }
    std::optional<Orientation> orient;
    cur.skip_ws();
    if (cur.pos < cur.text.size()) {
        char a = cur.peek();
        if (a == 'a' || a == 'A') {
            ++cur.pos;
            char rel = cur.peek();
            ++cur.pos;
            char v = cur.peek();
            if ((rel != '<' && rel != '>') || (v != 'v' && v != 'V')) cur.fail("expected orientation a<v or a>v");
            ++cur.pos;
            orient = rel == '<' ? Orientation::AggressorLow : Orientation::AggressorHigh;
        }
        cur.skip_ws();
        if (cur.pos < cur.text.size()) cur.fail("trailing input after fault primitive");
    }

    auto cls = classify(aggr, victim, *f, r);
    if (!cls) cur.fail("sensitization/faulty-value/read-output combination matches no static fault class");
    if (aggr && !orient) cur.fail("two-cell primitive requires orientation a<v or a>v");
    if (!aggr && orient) cur.fail("orientation is only meaningful for two-cell primitives");

    FaultPrimitive fp;
    fp.cls = *cls;
    fp.victim = victim;
    fp.aggressor = aggr;
    fp.faulty_value = *f;
    fp.read_output = r;
    fp.orientation = orient;
    return fp;
}

std::string format_fault_primitive(const FaultPrimitive& fp) {
    std::string s = "<";
    if (fp.aggressor) {
        s += condition_text(*fp.aggressor);
        s += ';';
    }
    s += condition_text(fp.victim);
    s += '/';
    s += to_char(fp.faulty_value);
    s += '/';
    if (fp.read_output == ReadOut::DontCare) s += '-';
    else s += to_char(*readout_bit(fp.read_output));
    s += '>';
    if (fp.orientation) s += *fp.orientation == Orientation::AggressorLow ? "a<v" : "a>v";
    return s;
}

std::vector<std::string> check_fault_invariants(const FaultPrimitive& fp) {
    using Form = SensitizingCondition::Form;
    std::vector<std::string> issues;
    if (fp.two_cell() != fp.orientation.has_value()) {
        issues.push_back("orientation must be present exactly for two-cell primitives");
    }
    if (fp.aggressor && fp.aggressor->is_operation() && fp.victim.is_operation()) {
        issues.push_back("aggressor and victim sensitizations are both operations");
    }
    if (fp.victim.form != Form::ReadOf && fp.read_output != ReadOut::DontCare) {
        issues.push_back("read output must be don't-care unless the victim sensitization is a read");
    }
    if (fp.victim.form == Form::State && fp.faulty_value == fp.victim.state) {
        issues.push_back("faulty value equals the sensitizing state; no fault");
    }
    if (fp.victim.form == Form::WriteTransition && fp.faulty_value == fp.victim.write_to) {
        issues.push_back("faulty value equals the fault-free post-write state; no fault");
    }
    if (fp.victim.form == Form::Always && fp.cls != FaultClass::SAF) {
        issues.push_back("'forall' sensitization is legal only for stuck-at faults");
    }
    if (fp.aggressor && fp.aggressor->form == Form::Always) {
        issues.push_back("'forall' is not a legal aggressor sensitization");
    }
    return issues;
}

}  // namespace marchcov
