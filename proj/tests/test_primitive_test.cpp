#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "marchcov/test_primitive.hpp"

using namespace marchcov;

namespace {

TestPrimitive derive(const std::string& text) {
    return derive_test_primitive(parse_fault_primitive(text));
}

}  // namespace

TEST_CASE("library has sixteen rows in class order") {
    const auto rows = test_primitive_library();
    REQUIRE(rows.size() == 16);
    for (int i = 0; i < 16; ++i) CHECK(rows[i].cls == static_cast<FaultClass>(i));
}

TEST_CASE("library template strings") {
    const auto rows = test_primitive_library();
    CHECK(rows[2].fault_template == "<xw!x/x/->");
    CHECK(rows[2].test_template == "<xw!x> #r!x");         // transition fault
    CHECK(rows[7].test_template == "<x;y>{ry (v in cac) | ^ry (a in cac)}");
    CHECK(rows[8].test_template == "<rx;y>{^ry* (a=>v) | *;ry (v=>a)}");
    CHECK(rows[11].test_template == "<x;yw!y> #r!y");      // transition coupling
    CHECK(library_footnotes().size() == 2);
}

TEST_CASE("incorrect read fault needs no separate detection") {
    const auto tp = derive("<r0/0/1>");
    CHECK(tp.descriptor.empty());
    CHECK(format_test_primitive(tp) == "<r0>");
}

TEST_CASE("state fault detects through an optional split read") {
    const auto tp = derive("<0/1/->");
    CHECK(format_test_primitive(tp) == "<0> #r0");
}

TEST_CASE("stuck-at fault instantiates with the complementary state") {
    CHECK(format_test_primitive(derive("<forall/0/->")) == "<1> #r1");
    CHECK(format_test_primitive(derive("<forall/1/->")) == "<0> #r0");
}

TEST_CASE("read disturb coupling splits by traversal direction") {
    const auto tp = derive("<r0;1/0/->a<v");
    CHECK(format_test_primitive(tp) == "<r0;1>{^r1* (a=>v) | *;r1 (v=>a)}");
}

TEST_CASE("read disturb coupling with equal states self-detects in first position") {
    const auto tp = derive("<r0;0/1/->a<v");
    CHECK(format_test_primitive(tp) == "<r0;0>{^ (a=>v) | *;r0 (v=>a)}");
    REQUIRE(tp.descriptor.variants.size() == 2);
    CHECK(!tp.descriptor.variants[0].detection_read().has_value());
}

TEST_CASE("state coupling with equal states gains the split variant") {
    CHECK(format_test_primitive(derive("<0;1/0/->a<v")) ==
          "<0;1>{r1 (v in cac) | ^r1 (a in cac)}");
    CHECK(format_test_primitive(derive("<0;0/1/->a<v")) ==
          "<0;0>{r0 (v in cac) | ;r0 (v in cac) | ^r0 (a in cac)}");
}

TEST_CASE("detection is empty exactly for the misreading classes") {
    for (const auto& fp : enumerate_static_faults()) {
        const auto tp = derive_test_primitive(fp);
        const bool expect_empty = fp.cls == FaultClass::RDF || fp.cls == FaultClass::IRF ||
                                  fp.cls == FaultClass::CFrd || fp.cls == FaultClass::CFir;
        CAPTURE(format_fault_primitive(fp));
        CHECK(tp.descriptor.empty() == expect_empty);
    }
}

TEST_CASE("sensitization set always equals the fault primitive's") {
    for (const auto& fp : enumerate_static_faults()) {
        const auto tp = derive_test_primitive(fp);
        std::vector<MemOp> expected;
        if (fp.aggressor) {
            if (auto op = fp.aggressor->operation()) expected.push_back(*op);
        }
        if (auto op = fp.victim.operation()) expected.push_back(*op);
        CHECK(tp.sensitization_ops() == expected);
    }
}

TEST_CASE("detection reads expect the victim's post-sensitization state") {
    for (const auto& fp : enumerate_static_faults()) {
        const auto tp = derive_test_primitive(fp);
        Bit expected = Bit::Zero;
        switch (fp.victim.form) {
            case SensitizingCondition::Form::State: expected = fp.victim.state; break;
            case SensitizingCondition::Form::ReadOf: expected = fp.victim.state; break;
            case SensitizingCondition::Form::WriteTransition: expected = fp.victim.write_to; break;
            case SensitizingCondition::Form::Always: expected = complement(fp.faulty_value); break;
        }
        for (const auto& var : tp.descriptor.variants) {
            if (auto read = var.detection_read()) {
                CAPTURE(format_fault_primitive(fp));
                CHECK(read->value == expected);
            }
        }
    }
}

TEST_CASE("concrete renderings equal the library template after substitution") {
    // substitute the template variables with the primitive's values; the two
    // footnote cases change shape and are asserted separately above
    auto substitute = [](const std::string& tpl, Bit x, std::optional<Bit> y) {
        std::string out;
        for (std::size_t i = 0; i < tpl.size(); ++i) {
            char c = tpl[i];
            if (c == '!') {
                const char var = tpl[++i];
                out += to_char(complement(var == 'x' ? x : *y));
            } else if (c == 'x') {
                out += to_char(x);
            } else if (c == 'y') {
                out += to_char(*y);
            } else {
                out += c;
            }
        }
        return out;
    };
    const auto rows = test_primitive_library();
    for (const auto& fp : enumerate_static_faults()) {
        const bool special =
            (fp.cls == FaultClass::CFdsrx || fp.cls == FaultClass::CFst) &&
            fp.aggressor->state == fp.victim.state;
        if (special) continue;
        Bit x;
        std::optional<Bit> y;
        if (!fp.two_cell()) {
            x = fp.cls == FaultClass::SAF ? complement(fp.faulty_value)
                                          : *fp.victim.required_state();
        } else {
            x = *fp.aggressor->required_state();
            y = *fp.victim.required_state();
        }
        const auto& tpl = rows[static_cast<int>(fp.cls)].test_template;
        CAPTURE(format_fault_primitive(fp));
        CHECK(format_test_primitive(derive_test_primitive(fp)) == substitute(tpl, x, y));
    }
}

TEST_CASE("derivation is total and deterministic on the static set") {
    const auto all = enumerate_static_faults();
    for (const auto& fp : all) {
        const auto a = format_test_primitive(derive_test_primitive(fp));
        const auto b = format_test_primitive(derive_test_primitive(fp));
        CHECK(a == b);
        CHECK(!a.empty());
    }
}

TEST_CASE("transition coupling tuple puts the aggressor state in its slot") {
    // aggressor below the victim
    const auto low = state_tuples_for_test_primitive(derive("<1;1w0/1/->a<v"));
    REQUIRE(low.size() == 1);
    CHECK(low[0].tuple == StateTuple{Tri::One, Tri::One, Tri::X});
    CHECK(low[0].sens_ops == std::vector<MemOp>{write_op(Bit::Zero)});
    CHECK(format_requirement(low[0]) == "<1,1,x> w0 #r0");

    // aggressor above the victim: the slot takes the aggressor's own state
    const auto high = state_tuples_for_test_primitive(derive("<0;1w0/1/->a>v"));
    REQUIRE(high.size() == 1);
    CHECK(high[0].tuple == StateTuple{Tri::X, Tri::One, Tri::Zero});
}

TEST_CASE("single-cell requirements leave the regions unconstrained") {
    const auto reqs = state_tuples_for_test_primitive(derive("<0/1/->"));
    REQUIRE(reqs.size() == 1);
    CHECK(reqs[0].tuple == StateTuple{Tri::X, Tri::Zero, Tri::X});
    CHECK(reqs[0].sens_ops.empty());
}

TEST_CASE("state coupling yields one requirement per cac occupancy") {
    const auto reqs = state_tuples_for_test_primitive(derive("<0;1/0/->a>v"));
    REQUIRE(reqs.size() == 2);
    CHECK(reqs[0].tuple == StateTuple{Tri::X, Tri::One, Tri::Zero});   // victim in cac
    CHECK(reqs[0].sens_at_victim);
    CHECK(reqs[1].tuple == StateTuple{Tri::One, Tri::Zero, Tri::X});   // aggressor in cac
    CHECK(!reqs[1].sens_at_victim);
}

TEST_CASE("aggressor-op requirements place the victim state by orientation") {
    const auto reqs = state_tuples_for_test_primitive(derive("<r0;1/0/->a>v"));
    REQUIRE(reqs.size() == 2);  // one per direction variant
    for (const auto& req : reqs) {
        CHECK(req.tuple == StateTuple{Tri::One, Tri::Zero, Tri::X});
        CHECK(req.sens_ops == std::vector<MemOp>{read_op(Bit::Zero)});
        CHECK(!req.sens_at_victim);
    }
}
