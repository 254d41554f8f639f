#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "marchcov/fault_model.hpp"

using namespace marchcov;

TEST_CASE("enumeration yields 86 primitives, 14 single-cell plus 72 two-cell") {
    const auto all = enumerate_static_faults();
    CHECK(all.size() == 86);
    int single = 0, two = 0;
    for (const auto& fp : all) (fp.two_cell() ? two : single)++;
    CHECK(single == 14);
    CHECK(two == 72);
}

TEST_CASE("enumeration is duplicate-free and stable") {
    const auto a = enumerate_static_faults();
    const auto b = enumerate_static_faults();
    CHECK(a == b);
    std::set<std::string> texts;
    for (const auto& fp : a) texts.insert(format_fault_primitive(fp));
    CHECK(texts.size() == 86);
}

TEST_CASE("enumeration contains the transition fault <1w0/1/->") {
    const auto all = enumerate_static_faults();
    bool found = false;
    for (const auto& fp : all) {
        if (format_fault_primitive(fp) == "<1w0/1/->") {
            found = true;
            CHECK(fp.cls == FaultClass::TF);
        }
    }
    CHECK(found);
}

TEST_CASE("every enumerated primitive satisfies the model invariants") {
    for (const auto& fp : enumerate_static_faults()) {
        const auto issues = check_fault_invariants(fp);
        CAPTURE(format_fault_primitive(fp));
        CHECK(issues.empty());
    }
}

TEST_CASE("two-cell subset is closed under orientation swap") {
    const auto all = enumerate_static_faults();
    std::set<std::string> texts;
    for (const auto& fp : all) texts.insert(format_fault_primitive(fp));
    for (const auto& fp : all) {
        if (!fp.two_cell()) continue;
        FaultPrimitive swapped = fp;
        swapped.orientation = mirrored(*fp.orientation);
        CHECK(texts.count(format_fault_primitive(swapped)) == 1);
    }
}

TEST_CASE("parse recognizes a read destructive fault") {
    const auto fp = parse_fault_primitive("<r0/1/1>");
    CHECK(fp.cls == FaultClass::RDF);
    CHECK(fp.victim.form == SensitizingCondition::Form::ReadOf);
    CHECK(fp.victim.state == Bit::Zero);
    CHECK(fp.faulty_value == Bit::One);
    CHECK(fp.read_output == ReadOut::One);
    CHECK(!fp.two_cell());
}

TEST_CASE("parse recognizes a state coupling fault with orientation") {
    const auto fp = parse_fault_primitive("<0;0/1/->a<v");
    CHECK(fp.cls == FaultClass::CFst);
    CHECK(fp.orientation == Orientation::AggressorLow);
    CHECK(fp.aggressor->form == SensitizingCondition::Form::State);
}

TEST_CASE("parse rejects two simultaneous sensitizing operations") {
    CHECK_THROWS_AS(parse_fault_primitive("<r0;1w0/0/->"), FaultParseError);
}

TEST_CASE("parse reports syntax errors with a position") {
    try {
        parse_fault_primitive("<q0/1/->");
        FAIL("expected parse error");
    } catch (const FaultParseError& e) {
        CHECK(e.position == 1);
    }
}

TEST_CASE("parse rejects a two-cell primitive without orientation") {
    CHECK_THROWS_AS(parse_fault_primitive("<0;1/0/->"), FaultParseError);
}

TEST_CASE("parse rejects combinations outside the static classes") {
    // a read with don't-care output is no recognizable read fault
    CHECK_THROWS_AS(parse_fault_primitive("<r0/1/->"), FaultParseError);
    // state fault whose faulty value equals the state is no fault
    CHECK_THROWS_AS(parse_fault_primitive("<0/0/->"), FaultParseError);
}

TEST_CASE("stuck-at faults format with the forall token") {
    FaultPrimitive saf;
    saf.cls = FaultClass::SAF;
    saf.victim = always_cond();
    saf.faulty_value = Bit::Zero;
    CHECK(format_fault_primitive(saf) == "<forall/0/->");
}

TEST_CASE("unicode input aliases are accepted") {
    const auto fp = parse_fault_primitive("\xe2\x9f\xa8\xe2\x88\x80/0/-\xe2\x9f\xa9");
    CHECK(fp.cls == FaultClass::SAF);
    CHECK(format_fault_primitive(fp) == "<forall/0/->");
}

TEST_CASE("parse and format are mutually inverse on the enumerated set") {
    for (const auto& fp : enumerate_static_faults()) {
        const std::string text = format_fault_primitive(fp);
        const auto back = parse_fault_primitive(text);
        CAPTURE(text);
        CHECK(back == fp);
        CHECK(format_fault_primitive(back) == text);
    }
}

TEST_CASE("whitespace between tokens is ignored") {
    const auto fp = parse_fault_primitive("  < r0 ; 1 / 0 / - > a>v ");
    CHECK(fp.cls == FaultClass::CFdsrx);
    CHECK(format_fault_primitive(fp) == "<r0;1/0/->a>v");
}
