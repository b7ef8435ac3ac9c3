#include "doctest.h"

#include "qbethe/sample.hpp"

#include <cstdlib>

using namespace qbethe;

namespace {

std::vector<Slot> demoSlots() {
    std::vector<Slot> slots = indexedSlots("u", 3);
    slots.push_back(Slot{"q", SlotKind::Ratio});
    slots.push_back(Slot{"h", SlotKind::Integer});
    return slots;
}

} // namespace

TEST_CASE("sampling is deterministic in seed and slots") {
    SampleStream a(42);
    SampleStream b(42);
    const auto slots = demoSlots();
    for (int k = 0; k < 5; ++k) {
        CHECK(a.next(slots) == b.next(slots));
    }
    SampleStream c(43);
    CHECK(a.next(slots) != c.next(slots));
}

TEST_CASE("sampled values satisfy the constraints") {
    SampleStream stream(7);
    const auto slots = demoSlots();
    const Rat bound(1000000);
    for (int k = 0; k < 20; ++k) {
        const Assignment point = stream.next(slots);
        REQUIRE(point.size() == slots.size());
        // Nonzero and pairwise distinct.
        for (auto it = point.begin(); it != point.end(); ++it) {
            CHECK(!it->second.isZero());
            for (auto jt = std::next(it); jt != point.end(); ++jt) {
                CHECK(it->second != jt->second);
            }
        }
        // Integer slots stay in range.
        for (const char* name : {"u1", "u2", "u3", "h"}) {
            const Rat& v = point.at(name);
            CHECK(v >= -bound);
            CHECK(v <= bound);
            CHECK(v.toString().find('/') != std::string::npos); // "n/1"
            CHECK(v.toString().substr(v.toString().find('/')) == "/1");
        }
        // Ratio slots avoid |q| = 1 (and zero, like everything else).
        const Rat& q = point.at("q");
        CHECK(q != Rat(1));
        CHECK(q != Rat(-1));
        CHECK(!q.isZero());
    }
}

TEST_CASE("verifyEqualAtSamples passes checks and counts samples") {
    const auto slots = indexedSlots("x", 2);
    const SampleCheck result = verifyEqualAtSamples(
        11, slots, 5, [](const Assignment& a) {
            const Rat& x1 = a.at("x1");
            const Rat& x2 = a.at("x2");
            return (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2;
        });
    CHECK(result.pass);
    CHECK(result.samplesUsed == 5);
    CHECK(result.points.size() == 5);
    CHECK(!result.counterexample.has_value());
}

TEST_CASE("verifyEqualAtSamples reports counterexamples") {
    const auto slots = indexedSlots("x", 1);
    const SampleCheck result = verifyEqualAtSamples(
        3, slots, 5, [](const Assignment& a) { return a.at("x1") == Rat(2); });
    CHECK(!result.pass);
    CHECK(result.counterexample.has_value());
    CHECK(result.samplesUsed <= 5);
}

TEST_CASE("domain errors replace the sample deterministically") {
    const auto slots = indexedSlots("x", 1);
    int thrown = 0;
    const SampleCheck result = verifyEqualAtSamples(
        5, slots, 4, [&](const Assignment& a) {
            if (thrown < 2) {
                ++thrown;
                throw DomainError("synthetic pole");
            }
            return !a.at("x1").isZero();
        });
    CHECK(result.pass);
    CHECK(result.samplesUsed == 4);
    CHECK(result.samplesReplaced == 2);

    // Two runs with the same seed see the same replacement stream.
    int thrownAgain = 0;
    const SampleCheck rerun = verifyEqualAtSamples(
        5, slots, 4, [&](const Assignment& a) {
            if (thrownAgain < 2) {
                ++thrownAgain;
                throw DomainError("synthetic pole");
            }
            return !a.at("x1").isZero();
        });
    CHECK(rerun.points == result.points);
}

TEST_CASE("a structural singularity eventually rethrows") {
    const auto slots = indexedSlots("x", 1);
    CHECK_THROWS_AS(
        verifyEqualAtSamples(1, slots, 1,
                             [](const Assignment&) -> bool {
                                 throw DomainError("always singular");
                             }),
        DomainError);
}
