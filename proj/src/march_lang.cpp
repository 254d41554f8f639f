#include "marchcov/march_lang.hpp"

#include <cctype>

namespace marchcov {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; }
            else if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; }
            else break;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') { ++line_; col_ = 1; } else ++col_;
            ++pos_;
        }
    }

    bool eat(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }

    bool eat_utf8(std::string_view seq) {
        skip_ws();
        if (text_.substr(pos_, seq.size()) == seq) { advance(seq.size()); return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw MarchParseError(msg, line_, col_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

MemOp parse_op(Scanner& sc) {
    char c = sc.peek();
    bool read;
    if (c == 'r' || c == 'R') read = true;
    else if (c == 'w' || c == 'W') read = false;
    else sc.fail("expected operation r0, r1, w0 or w1");
    sc.advance();
    auto v = bit_from_char(sc.peek());
    if (!v) sc.fail("expected 0 or 1 after operation letter");
    sc.advance();
    return MemOp{read, *v};
}

}  // namespace

MarchAlgorithm parse_march(std::string_view text, std::string name) {
    Scanner sc(text);
    MarchAlgorithm m;
    m.name = std::move(name);
    while (true) {
        AddressOrder order;
        char c = sc.peek();
        if (c == 'u' || c == 'U') { order = AddressOrder::Up; sc.advance(); }
        else if (c == 'd' || c == 'D') { order = AddressOrder::Down; sc.advance(); }
        else if (c == 'b' || c == 'B') { order = AddressOrder::Either; sc.advance(); }
        else if (sc.eat_utf8("\xe2\x87\x91")) { order = AddressOrder::Up; }       // U+21D1
        else if (sc.eat_utf8("\xe2\x87\x93")) { order = AddressOrder::Down; }     // U+21D3
        else if (sc.eat_utf8("\xe2\x87\x95")) { order = AddressOrder::Either; }   // U+21D5
        else sc.fail("expected address order u, d or b");
        if (!sc.eat('(')) sc.fail("expected '(' after address order");
        MarchElement el;
        el.order = order;
        if (sc.peek() == ')') sc.fail("march element must contain at least one operation");
        el.ops.push_back(parse_op(sc));
        while (sc.eat(',')) el.ops.push_back(parse_op(sc));
        if (!sc.eat(')')) sc.fail("expected ')' or ','");
        m.elements.push_back(std::move(el));
        if (!sc.eat(';')) break;
        if (sc.at_end()) break;  // trailing ';'
    }
    if (!sc.at_end()) sc.fail("trailing input after march expression");
    if (m.elements.empty()) sc.fail("march algorithm must contain at least one element");
    return m;
}

std::string format_march(const MarchAlgorithm& m) {
    std::string s;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        if (e) s += "; ";
        const auto& el = m.elements[e];
        s += to_char(el.order);
        s += '(';
        for (std::size_t k = 0; k < el.ops.size(); ++k) {
            if (k) s += ',';
            s += to_string(el.ops[k]);
        }
        s += ')';
    }
    return s;
}

std::vector<Diagnostic> validate_march(const MarchAlgorithm& m, Tri preset) {
    std::vector<Diagnostic> out;
    Tri state = preset;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const auto& el = m.elements[e];
        if (el.ops.empty()) {
            out.push_back({static_cast<int>(e), -1, "element has no operations"});
            continue;
        }
        for (std::size_t k = 0; k < el.ops.size(); ++k) {
            const MemOp& op = el.ops[k];
            if (op.read) {
                if (state == Tri::X) {
                    out.push_back({static_cast<int>(e), static_cast<int>(k),
                                   "read " + to_string(op) + " before any initialization (cell state unknown)"});
                } else if (!tri_is(state, op.value)) {
                    out.push_back({static_cast<int>(e), static_cast<int>(k),
                                   "read expects " + std::string(1, to_char(op.value)) +
                                       " but cell holds " + std::string(1, to_char(state))});
                }
            } else {
                state = to_tri(op.value);
            }
        }
    }
    return out;
}

std::vector<ElementStates> element_states(const MarchAlgorithm& m, Tri preset) {
    std::vector<ElementStates> out;
    out.reserve(m.elements.size());
    Tri state = preset;
    for (const auto& el : m.elements) {
        ElementStates es;
        es.initial = state;
        for (const MemOp& op : el.ops) {
            if (!op.read) state = to_tri(op.value);
        }
        es.end = state;
        out.push_back(es);
    }
    return out;
}

int op_count(const MarchAlgorithm& m) {
    int n = 0;
    for (const auto& el : m.elements) n += static_cast<int>(el.ops.size());
    return n;
}

MarchAlgorithm mirrored(const MarchAlgorithm& m) {
    MarchAlgorithm out = m;
    for (auto& el : out.elements) {
        if (el.order == AddressOrder::Up) el.order = AddressOrder::Down;
        else if (el.order == AddressOrder::Down) el.order = AddressOrder::Up;
    }
    return out;
}

}  // namespace marchcov
