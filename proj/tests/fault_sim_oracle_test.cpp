#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "marchcov/fault_sim_oracle.hpp"
#include "test_util.hpp"

using namespace marchcov;

TEST_CASE("march sr detects a deceptive read destructive fault at operations 6 and 7") {
    const auto fp = parse_fault_primitive("<r0/1/0>");
    const auto verdict = simulate_fault(testutil::march_sr(), fp, {1, std::nullopt}, 4);
    REQUIRE(verdict.detected);
    REQUIRE(verdict.first_mismatch.has_value());
    CHECK(verdict.first_mismatch->element == 2);
    CHECK(verdict.first_mismatch->op == 1);  // the second of the paired reads misreads
}

TEST_CASE("march sr cannot sensitize write destructive faults") {
    for (const char* text : {"<0w0/1/->", "<1w1/0/->"}) {
        const auto fp = parse_fault_primitive(text);
        for (const auto& p : legal_placements(fp, 4)) {
            CHECK(!simulate_fault(testutil::march_sr(), fp, p, 4).detected);
        }
    }
}

TEST_CASE("any march with a one-read fails a stuck-at-zero cell") {
    const auto fp = parse_fault_primitive("<forall/0/->");
    for (const auto& m : testutil::corpus()) {
        CAPTURE(m.name);
        for (const auto& p : legal_placements(fp, 4)) {
            CHECK(simulate_fault(m, fp, p, 4).detected);
        }
    }
}

TEST_CASE("golden runs return exactly the expected values") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto m = testutil::random_valid_march(rng);
        std::vector<AddressOrder> orders;
        for (const auto& el : m.elements) {
            orders.push_back(el.order == AddressOrder::Either
                                 ? (i % 2 ? AddressOrder::Down : AddressOrder::Up)
                                 : el.order);
        }
        for (Bit fill : {Bit::Zero, Bit::One}) {
            const auto reads = golden_reads(m, orders, 4, fill);
            std::size_t pos = 0;
            for (const auto& el : m.elements) {
                for (int a = 0; a < 4; ++a) {
                    for (const MemOp& op : el.ops) {
                        if (!op.read) continue;
                        REQUIRE(pos < reads.size());
                        CHECK(reads[pos] == op.value);
                        ++pos;
                    }
                }
            }
            CHECK(pos == reads.size());
        }
    }
}

TEST_CASE("verdicts are placement independent for three to five cells") {
    std::mt19937 rng(32);
    const auto faults = enumerate_static_faults();
    std::vector<MarchAlgorithm> marches = {testutil::march_a(), testutil::march_sr()};
    for (int i = 0; i < 6; ++i) marches.push_back(testutil::random_valid_march(rng));
    for (const auto& m : marches) {
        const auto r3 = oracle_coverage(m, faults, 3);
        const auto r4 = oracle_coverage(m, faults, 4);
        const auto r5 = oracle_coverage(m, faults, 5);
        for (std::size_t f = 0; f < faults.size(); ++f) {
            CAPTURE(format_march(m));
            CAPTURE(format_fault_primitive(faults[f]));
            CHECK(r3.results[f].detected == r4.results[f].detected);
            CHECK(r4.results[f].detected == r5.results[f].detected);
        }
    }
}

TEST_CASE("appending an element never loses an oracle detection") {
    std::mt19937 rng(33);
    const auto faults = enumerate_static_faults();
    for (int i = 0; i < 10; ++i) {
        auto m = testutil::random_valid_march(rng, 4, 4);
        const auto before = oracle_coverage(m, faults, 4);
        // extend with a valid element starting from the march's end state
        const Tri end = element_states(m).back().end;
        MarchElement extra;
        extra.order = i % 2 ? AddressOrder::Down : AddressOrder::Up;
        if (end != Tri::X) extra.ops.push_back(read_op(*tri_to_bit(end)));
        extra.ops.push_back(write_op(i % 2 ? Bit::One : Bit::Zero));
        m.elements.push_back(extra);
        REQUIRE(validate_march(m).empty());
        const auto after = oracle_coverage(m, faults, 4);
        for (std::size_t f = 0; f < faults.size(); ++f) {
            if (before.results[f].detected) {
                CAPTURE(format_fault_primitive(faults[f]));
                CHECK(after.results[f].detected);
            }
        }
    }
}

TEST_CASE("invalid placements are rejected") {
    const auto fp = parse_fault_primitive("<0;1/0/->a<v");
    CHECK_THROWS_AS(run_with_orders(testutil::march_a(),
                                    {AddressOrder::Up, AddressOrder::Up, AddressOrder::Up,
                                     AddressOrder::Down, AddressOrder::Down},
                                    fp, {1, std::nullopt}, 4, Bit::Zero),
                    std::invalid_argument);
}

TEST_CASE("march a oracle headline") {
    const auto report = oracle_coverage(testutil::march_a(), enumerate_static_faults(), 4);
    CHECK(report.detected == 47);
}
