#include "doctest.h"

#include "qbethe/commutation.hpp"
#include "qbethe/sample.hpp"

using namespace qbethe;

namespace {
const Rat q(2);
const Rat h(7);

std::vector<Rat> rats(std::initializer_list<long long> xs) {
    std::vector<Rat> out;
    for (long long x : xs) {
        out.emplace_back(x);
    }
    return out;
}
} // namespace

TEST_CASE("partition enumeration") {
    const std::vector<std::vector<Rat>> sources{rats({2}), rats({3, 5})};

    SUBCASE("sizes one and two") {
        const auto parts = enumeratePartitions(sources, {1, 2});
        REQUIRE(parts.size() == 3);
        // Lexicographic in the indices picked by the first family.
        CHECK(parts[0][0] == rats({2}));
        CHECK(parts[0][1] == rats({3, 5}));
        CHECK(parts[1][0] == rats({3}));
        CHECK(parts[1][1] == rats({2, 5}));
        CHECK(parts[2][0] == rats({5}));
        CHECK(parts[2][1] == rats({2, 3}));
    }

    SUBCASE("three singletons") {
        const auto parts = enumeratePartitions(sources, {1, 1, 1});
        REQUIRE(parts.size() == 6);
        CHECK(parts[0][0] == rats({2}));
        CHECK(parts[0][1] == rats({3}));
        CHECK(parts[0][2] == rats({5}));
        CHECK(parts[5][0] == rats({5}));
        CHECK(parts[5][1] == rats({3}));
        CHECK(parts[5][2] == rats({2}));
    }

    SUBCASE("pool order is kept inside each family") {
        const auto parts =
            enumeratePartitions({rats({2, 3}), rats({5, 7})}, {2, 2});
        REQUIRE(parts.size() == 6);
        CHECK(parts[0][0] == rats({2, 3}));
        CHECK(parts[0][1] == rats({5, 7}));
        CHECK(parts[5][0] == rats({5, 7}));
        CHECK(parts[5][1] == rats({2, 3}));
        for (const auto& p : parts) {
            for (const auto& fam : p) {
                for (std::size_t i = 1; i < fam.size(); ++i) {
                    CHECK(fam[i - 1] < fam[i]);
                }
            }
        }
    }

    SUBCASE("sizes must add up") {
        CHECK_THROWS_AS(enumeratePartitions(sources, {1, 1}), InvalidArgError);
    }
}

// Rank two with singleton families: eliminating the reversed product
// between the two exchange relations gives
//   T_21(u1) T_22(u2) = (q u2 - q^-1 u1)/(u2 - u1) T_22(u2) T_21(u1)
//                       + (q - q^-1) u1/(u1 - u2) T_22(u1) T_21(u2)
// in the trigonometric case and
//   T_21(x1) T_22(x2) = (x2 - x1 + h)/(x2 - x1) T_22(x2) T_21(x1)
//                       + h/(x1 - x2) T_22(x1) T_21(x2)
// in the rational case.  At q = 2, u = (3, 5) the coefficients are
// 17/4 and -9/4; at h = 7, x = (3, 5) they are 9/2 and -7/2.
TEST_CASE("repartition coefficients, rank two") {
    const std::vector<std::vector<Rat>> uFam{rats({3}), rats({5})};
    const std::vector<std::vector<Rat>> keep = uFam;
    const std::vector<std::vector<Rat>> swap{rats({5}), rats({3})};
    for (CoeffRoute route :
         {CoeffRoute::WeightFunction, CoeffRoute::BandContraction,
          CoeffRoute::LemmaComposition}) {
        CHECK(commutationCoefficient(RFlavor::TrigA, q, uFam, keep, route) ==
              Rat(17, 4));
        CHECK(commutationCoefficient(RFlavor::TrigA, q, uFam, swap, route) ==
              Rat(-9, 4));
        CHECK(commutationCoefficient(RFlavor::Rational, h, uFam, keep, route) ==
              Rat(9, 2));
        CHECK(commutationCoefficient(RFlavor::Rational, h, uFam, swap, route) ==
              Rat(-7, 2));
    }
}

TEST_CASE("coefficient routes agree, rank three") {
    const std::vector<std::vector<Rat>> uFam{rats({2}), rats({3}), rats({5})};
    const Rat qq(7, 3);
    for (const auto& vFam : enumeratePartitions(uFam, {1, 1, 1})) {
        const Rat a = commutationCoefficient(RFlavor::TrigA, qq, uFam, vFam,
                                             CoeffRoute::WeightFunction);
        const Rat b = commutationCoefficient(RFlavor::TrigA, qq, uFam, vFam,
                                             CoeffRoute::BandContraction);
        const Rat c = commutationCoefficient(RFlavor::TrigA, qq, uFam, vFam,
                                             CoeffRoute::LemmaComposition);
        CHECK(a == b);
        CHECK(a == c);
        const Rat ra = commutationCoefficient(RFlavor::Rational, h, uFam, vFam,
                                              CoeffRoute::WeightFunction);
        const Rat rb = commutationCoefficient(RFlavor::Rational, h, uFam, vFam,
                                              CoeffRoute::BandContraction);
        const Rat rc = commutationCoefficient(RFlavor::Rational, h, uFam, vFam,
                                              CoeffRoute::LemmaComposition);
        CHECK(ra == rb);
        CHECK(ra == rc);
    }
}

TEST_CASE("multiple exchange, rank two, full matrix") {
    const std::vector<std::vector<Rat>> uFam{rats({3}), rats({5})};
    SUBCASE("as many sites as parameters") {
        const std::vector<Rat> xi = rats({7, 11});
        CHECK(verifyTheoremCommutation(RFlavor::TrigA, q, uFam, xi));
        CHECK(verifyTheoremCommutation(RFlavor::Rational, h, uFam, xi));
        CHECK(verifyPropCommutation(RFlavor::TrigA, q, uFam, xi));
        CHECK(verifyPropCommutation(RFlavor::Rational, h, uFam, xi));
    }
    SUBCASE("one extra site") {
        const std::vector<Rat> xi = rats({7, 11, 13});
        CHECK(verifyTheoremCommutation(RFlavor::TrigA, q, uFam, xi));
        CHECK(verifyTheoremCommutation(RFlavor::Rational, h, uFam, xi));
    }
    SUBCASE("two-element first family") {
        const std::vector<std::vector<Rat>> wide{rats({3, 5}), rats({7})};
        const std::vector<Rat> xi = rats({11, 13, 17});
        CHECK(verifyTheoremCommutation(RFlavor::TrigA, q, wide, xi));
        CHECK(verifyTheoremCommutation(RFlavor::Rational, h, wide, xi));
        CHECK(verifyPropCommutation(RFlavor::Rational, h, wide, xi));
    }
}

TEST_CASE("multiple exchange, rank three, full matrix") {
    const std::vector<std::vector<Rat>> uFam{rats({2}), rats({3}), rats({5})};
    const std::vector<Rat> xi = rats({7, 11, 13});
    const Rat qq(7, 3);
    CHECK(verifyTheoremCommutation(RFlavor::TrigA, qq, uFam, xi));
    CHECK(verifyTheoremCommutation(RFlavor::Rational, h, uFam, xi));
    CHECK(verifyPropCommutation(RFlavor::TrigA, qq, uFam, xi));
    CHECK(verifyPropCommutation(RFlavor::Rational, h, uFam, xi));
}

TEST_CASE("rank two determinant coefficient form") {
    SUBCASE("singleton families") {
        CHECK(verifyRankOneIKForm(RFlavor::TrigA, q, rats({3}), rats({5}),
                                  rats({7, 11})));
        CHECK(verifyRankOneIKForm(RFlavor::Rational, h, rats({3}), rats({5}),
                                  rats({7, 11})));
    }
    SUBCASE("two-element first family") {
        CHECK(verifyRankOneIKForm(RFlavor::TrigA, q, rats({3, 5}), rats({7}),
                                  rats({11, 13, 17})));
        CHECK(verifyRankOneIKForm(RFlavor::Rational, h, rats({3, 5}), rats({7}),
                                  rats({11, 13, 17})));
    }
}

TEST_CASE("enlargement of the band contraction") {
    SUBCASE("rank two") {
        const std::vector<std::vector<Rat>> uFam{rats({3})};
        const std::vector<std::vector<Rat>> vPlus{rats({5}), rats({7})};
        CHECK(verifyEnlargementLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifyEnlargementLemma(RFlavor::Rational, h, uFam, vPlus));
    }
    SUBCASE("rank three") {
        const std::vector<std::vector<Rat>> uFam{rats({3}), rats({5})};
        const std::vector<std::vector<Rat>> vPlus{rats({11}), rats({13}),
                                                  rats({17})};
        CHECK(verifyEnlargementLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifyEnlargementLemma(RFlavor::Rational, h, uFam, vPlus));
    }
    SUBCASE("rank three, uneven block sizes") {
        const std::vector<std::vector<Rat>> uFam{rats({3, 5}), rats({7})};
        const std::vector<std::vector<Rat>> vPlus{rats({11}), rats({13, 17}),
                                                  rats({19, 23})};
        CHECK(verifyEnlargementLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifyEnlargementLemma(RFlavor::Rational, h, uFam, vPlus));
    }
}

TEST_CASE("specialization of the weight function") {
    SUBCASE("rank two") {
        const std::vector<std::vector<Rat>> uFam{rats({3})};
        const std::vector<std::vector<Rat>> vPlus{rats({5}), rats({7})};
        CHECK(verifySpecializationLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifySpecializationLemma(RFlavor::Rational, h, uFam, vPlus));
    }
    SUBCASE("rank three") {
        const std::vector<std::vector<Rat>> uFam{rats({3}), rats({5})};
        const std::vector<std::vector<Rat>> vPlus{rats({11}), rats({13}),
                                                  rats({17})};
        CHECK(verifySpecializationLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifySpecializationLemma(RFlavor::Rational, h, uFam, vPlus));
    }
    SUBCASE("rank three, uneven block sizes") {
        const std::vector<std::vector<Rat>> uFam{rats({3, 5}), rats({7})};
        const std::vector<std::vector<Rat>> vPlus{rats({11}), rats({13, 17}),
                                                  rats({19, 23})};
        CHECK(verifySpecializationLemma(RFlavor::TrigA, q, uFam, vPlus));
        CHECK(verifySpecializationLemma(RFlavor::Rational, h, uFam, vPlus));
    }
}

TEST_CASE("colored band relation") {
    const std::vector<Rat> w = rats({3, 5, 7});
    const std::vector<ColorTuple> colorings{
        {1, 2, 3}, {2, 1, 3}, {1, 1, 2}, {3, 2, 1}, {2, 3, 1}, {1, 2, 1},
    };
    for (const ColorTuple& I : colorings) {
        CHECK(verifyColoredRelation(RFlavor::TrigA, q, 3, w, I));
        CHECK(verifyColoredRelation(RFlavor::Rational, h, 3, w, I));
    }
    CHECK(verifyColoredRelation(RFlavor::TrigA, q, 2, rats({3, 5}), {2, 1}));
    CHECK(verifyColoredRelation(RFlavor::Rational, h, 2, rats({3, 5}), {1, 1}));
}

TEST_CASE("multiple exchange at sampled points") {
    std::vector<Slot> slots = indexedSlots("u", 2);
    for (const Slot& s : indexedSlots("x", 2)) {
        slots.push_back(s);
    }
    slots.push_back(Slot{"q", SlotKind::Ratio});

    const auto trig = verifyEqualAtSamples(11, slots, 3, [](const Assignment& a) {
        const std::vector<std::vector<Rat>> uFam{{a.at("u1")}, {a.at("u2")}};
        return verifyTheoremCommutation(RFlavor::TrigA, a.at("q"), uFam,
                                        {a.at("x1"), a.at("x2")});
    });
    CHECK(trig.pass);
    CHECK(trig.samplesUsed == 3);

    const auto rat = verifyEqualAtSamples(13, slots, 3, [](const Assignment& a) {
        const std::vector<std::vector<Rat>> uFam{{a.at("u1")}, {a.at("u2")}};
        return verifyTheoremCommutation(RFlavor::Rational, a.at("q"), uFam,
                                        {a.at("x1"), a.at("x2")});
    });
    CHECK(rat.pass);
    CHECK(rat.samplesUsed == 3);
}
