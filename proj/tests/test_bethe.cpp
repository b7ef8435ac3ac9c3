#include "doctest.h"

#include "qbethe/bethe.hpp"

#include <algorithm>

using namespace qbethe;

namespace {
const Rat q(7, 3);
const Rat h(5, 2);

std::vector<Rat> rats(std::initializer_list<long long> xs) {
    std::vector<Rat> out;
    for (long long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<std::vector<Rat>> levels(std::vector<std::vector<Rat>> ls) {
    return ls;
}

// Same-level parameter pools used across the rank-3 tests.
const std::vector<Rat> w3 = rats({2, 9, 4});
const std::vector<Rat> w4 = rats({2, 9, 4, 7});
const std::vector<Rat> pool1 = rats({5, 11});
const std::vector<Rat> pool2 = rats({6, 13});

std::vector<Rat> take(const std::vector<Rat>& pool, int k) {
    return std::vector<Rat>(pool.begin(), pool.begin() + k);
}
} // namespace

TEST_CASE("triangular cells per level") {
    CHECK(cellsAtLevel(2, 1) == std::vector<Cell>{{1, 1}});
    CHECK(cellsAtLevel(3, 1) == std::vector<Cell>{{1, 1}, {1, 2}});
    CHECK(cellsAtLevel(3, 2) == std::vector<Cell>{{1, 2}, {2, 2}});
    CHECK(cellsAtLevel(4, 2) ==
          std::vector<Cell>{{1, 2}, {1, 3}, {2, 2}, {2, 3}});
    CHECK_THROWS_AS(cellsAtLevel(3, 3), InvalidArgError);
}

TEST_CASE("nested partition enumeration") {
    SUBCASE("rank 3, level sizes (2,2)") {
        const auto parts = enumerateNestedPartitions(3, {2, 2});
        REQUIRE(parts.size() == 6);
        // First: all of both levels in the spanning cell (1,2).
        const auto& first = parts[0];
        CHECK(first.byLevel[0].at({1, 1}).empty());
        CHECK(first.byLevel[0].at({1, 2}) == std::vector<int>{0, 1});
        CHECK(first.byLevel[1].at({1, 2}) == std::vector<int>{0, 1});
        CHECK(first.byLevel[1].at({2, 2}).empty());
        // Cell sizes are shared across the two levels of cell (1,2).
        int splitCount = 0;
        for (const auto& p : parts) {
            const std::size_t shared = p.byLevel[0].at({1, 2}).size();
            CHECK(p.byLevel[1].at({1, 2}).size() == shared);
            CHECK(p.byLevel[0].at({1, 1}).size() + shared == 2);
            CHECK(p.byLevel[1].at({2, 2}).size() + shared == 2);
            if (shared == 1) {
                ++splitCount;
            }
        }
        CHECK(splitCount == 4);
    }

    SUBCASE("rank 3, level sizes (2,1)") {
        CHECK(enumerateNestedPartitions(3, {2, 1}).size() == 3);
    }

    SUBCASE("rank 2") {
        const auto parts = enumerateNestedPartitions(2, {3});
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].byLevel[0].at({1, 1}) == std::vector<int>{0, 1, 2});
    }

    SUBCASE("empty levels") {
        const auto parts = enumerateNestedPartitions(3, {0, 0});
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].byLevel[0].at({1, 1}).empty());
    }

    SUBCASE("cap and shape validation") {
        CHECK_THROWS_AS(enumerateNestedPartitions(2, {4}), InvalidArgError);
        CHECK_THROWS_AS(enumerateNestedPartitions(3, {1}), InvalidArgError);
        CHECK_THROWS_AS(enumerateNestedPartitions(1, {}), InvalidArgError);
    }
}

TEST_CASE("universal vector variants agree at rank 2") {
    const std::vector<Rat> w = rats({2, 9});
    const std::vector<Rat> t = rats({5, 11});
    const auto first = universalBetheVector(BetheVariant::First, q,
                                            levels({t}), w);
    const auto second = universalBetheVector(BetheVariant::Second, q,
                                             levels({t}), w);
    CHECK(first == second);

    // At rank 2 the sum collapses to one normalized creation multiset.
    MonodromyContext<Rat> ctx;
    ctx.flavor = RFlavor::TrigB;
    ctx.N = 2;
    ctx.qh = q;
    ctx.xi = w;
    SparseState expected = applyMultiset(
        ctx, 1, 2, t, basisState<Rat>(2, ColorTuple(2, 1)));
    Rat den(1);
    for (const Rat& u : t) {
        for (const Rat& x : w) {
            den *= u - x;
        }
    }
    expected *= den.inverse();
    CHECK(first == expected);
    CHECK_FALSE(first.isZero());
}

TEST_CASE("universal vector variants agree at rank 3") {
    for (int n1 = 0; n1 <= 2; ++n1) {
        for (int n2 = 0; n2 <= 2; ++n2) {
            CAPTURE(n1);
            CAPTURE(n2);
            const auto tl = levels({take(pool1, n1), take(pool2, n2)});
            const auto first =
                universalBetheVector(BetheVariant::First, q, tl, w3);
            const auto second =
                universalBetheVector(BetheVariant::Second, q, tl, w3);
            CHECK(first == second);
            if (n1 >= n2) {
                CHECK_FALSE(first.isZero());
            } else {
                // More second-level than first-level parameters leaves
                // no admissible color content.
                CHECK(first.isZero());
            }
        }
    }
}

TEST_CASE("universal vector rejects coinciding level parameters") {
    CHECK_THROWS_AS(universalBetheVector(BetheVariant::First, q,
                                         levels({rats({5, 5}), rats({6})}),
                                         w3),
                    DomainError);
}

TEST_CASE("index partitions") {
    SUBCASE("validation") {
        CHECK_NOTHROW(checkGTPartition(3, 3, {{2}, {3}, {1}}));
        CHECK_THROWS_AS(checkGTPartition(3, 3, {{2}, {3}}), InvalidArgError);
        CHECK_THROWS_AS(checkGTPartition(3, 3, {{2}, {3}, {3}}),
                        InvalidArgError);
        CHECK_THROWS_AS(checkGTPartition(3, 3, {{2}, {3}, {}}),
                        InvalidArgError);
        CHECK_THROWS_AS(checkGTPartition(3, 3, {{2}, {3}, {1, 4}}),
                        InvalidArgError);
    }

    SUBCASE("enumeration order follows color words") {
        const auto all = allGTPartitions(2, 2);
        REQUIRE(all.size() == 4);
        CHECK(all[0] == GTPartition{{1, 2}, {}});
        CHECK(all[1] == GTPartition{{2}, {1}});
        CHECK(all[2] == GTPartition{{1}, {2}});
        CHECK(all[3] == GTPartition{{}, {1, 2}});
        CHECK(allGTPartitions(3, 3).size() == 27);
    }

    SUBCASE("value extraction") {
        CHECK(partValues(w3, {3, 1}) == rats({4, 2}));
        const GTPartition I{{2}, {3}, {1}};
        CHECK(unionValues(w3, I, 2, 3) == rats({4, 2}));
        CHECK(unionValues(w3, I, 1, 0).empty());
        CHECK(unionValues(w3, I, 4, 9).empty());
    }
}

TEST_CASE("specialized vector routes agree at rank 2") {
    const std::vector<Rat> w = rats({2, 9});
    const GTPartition I{{2}, {1}};
    const SparseState direct = psiFirst(q, 2, I, w);
    CHECK_FALSE(direct.isZero());
    CHECK(direct == psiFirstClosed(q, 2, I, w));
    CHECK(direct == psiSecondClosed(q, 2, I, w));
    CHECK(direct == psiViaLimit(BetheVariant::First, q, 2, I, w));
    CHECK(direct == psiViaLimit(BetheVariant::Second, q, 2, I, w));
}

TEST_CASE("specialized vector routes agree at rank 3") {
    SUBCASE("three sites, singleton parts") {
        const GTPartition I{{2}, {3}, {1}};
        const SparseState direct = psiFirst(q, 3, I, w3);
        CHECK_FALSE(direct.isZero());
        CHECK(direct == psiFirstClosed(q, 3, I, w3));
        CHECK(direct == psiSecondClosed(q, 3, I, w3));
        CHECK(direct == psiViaLimit(BetheVariant::First, q, 3, I, w3));
        CHECK(direct == psiViaLimit(BetheVariant::Second, q, 3, I, w3));
    }

    SUBCASE("four sites, part sizes (2,1,1)") {
        const GTPartition I{{1, 4}, {3}, {2}};
        const SparseState direct = psiFirst(q, 3, I, w4);
        CHECK_FALSE(direct.isZero());
        CHECK(direct == psiFirstClosed(q, 3, I, w4));
        CHECK(direct == psiSecondClosed(q, 3, I, w4));
        CHECK(direct == psiViaLimit(BetheVariant::First, q, 3, I, w4));
        CHECK(direct == psiViaLimit(BetheVariant::Second, q, 3, I, w4));
    }

    SUBCASE("four sites, doubleton last part") {
        // A two-element part exercises the determinant kernel at
        // coinciding argument sets inside the direct route.
        const GTPartition I{{4}, {3}, {1, 2}};
        const SparseState direct = psiFirst(q, 3, I, w4);
        CHECK_FALSE(direct.isZero());
        CHECK(direct == psiFirstClosed(q, 3, I, w4));
        CHECK(direct == psiSecondClosed(q, 3, I, w4));
        CHECK(direct == psiViaLimit(BetheVariant::First, q, 3, I, w4));
        CHECK(direct == psiViaLimit(BetheVariant::Second, q, 3, I, w4));
    }
}

TEST_CASE("specialized vector routes agree at rank 4") {
    const GTPartition I{{4}, {3}, {2}, {1}};
    const SparseState direct = psiFirst(q, 4, I, w4);
    CHECK_FALSE(direct.isZero());
    CHECK(direct == psiFirstClosed(q, 4, I, w4));
    CHECK(direct == psiSecondClosed(q, 4, I, w4));
}

TEST_CASE("tower vectors: chain equals product times prefactor") {
    const std::vector<GTPartition> js{{{2}, {3}, {1}},
                                      {{1, 2}, {3}, {}},
                                      {{}, {1}, {2, 3}},
                                      {{1, 2, 3}, {}, {}}};
    for (RFlavor flavor : {RFlavor::TrigA, RFlavor::Rational}) {
        const Rat qh = flavor == RFlavor::TrigA ? q : h;
        for (const GTPartition& J : js) {
            CAPTURE(static_cast<int>(flavor));
            CHECK(verifyGtProportionality(flavor, qh, 3, J, w3));
            CHECK_FALSE(gtVectorProduct(flavor, qh, 3, J, w3).isZero());
        }
    }

    SUBCASE("rank 2 has unit prefactor") {
        const std::vector<Rat> w = rats({2, 9});
        const GTPartition J{{2}, {1}};
        CHECK(gtProportionality(RFlavor::TrigA, q, 2, J, w) == Rat(1));
        CHECK(gtVectorChain(RFlavor::TrigA, q, 2, J, w) ==
              gtVectorProduct(RFlavor::TrigA, q, 2, J, w));
    }

    SUBCASE("convention B is rejected") {
        CHECK_THROWS_AS(gtVectorChain(RFlavor::TrigB, q, 3, {{2}, {3}, {1}}, w3),
                        InvalidArgError);
    }
}

TEST_CASE("dual tower vectors") {
    const std::vector<GTPartition> is{{{2}, {3}, {1}},
                                      {{3}, {}, {1, 2}},
                                      {{}, {2, 3}, {1}}};
    for (RFlavor flavor : {RFlavor::TrigB, RFlavor::Rational}) {
        const Rat qh = flavor == RFlavor::TrigB ? q : h;
        for (const GTPartition& I : is) {
            CAPTURE(static_cast<int>(flavor));
            CHECK(verifyGtProportionalityDual(flavor, qh, 3, I, w3));
            CHECK_FALSE(gtVectorProductDual(flavor, qh, 3, I, w3).isZero());
        }
    }

    SUBCASE("rational prefactor, singleton parts") {
        // (wbar_{I3} - wbar_{I1}) (wbar_{I3} - wbar_{I2} + h) h at
        // I = ({2},{3},{1}): (2-9)(2-4+5/2)(5/2).
        CHECK(gtProportionalityDual(RFlavor::Rational, h, 3, {{2}, {3}, {1}},
                                    w3) == Rat(-35, 4));
    }

    SUBCASE("convention A is rejected") {
        CHECK_THROWS_AS(
            gtVectorChainDual(RFlavor::TrigA, q, 3, {{2}, {3}, {1}}, w3),
            InvalidArgError);
    }
}

TEST_CASE("quantum minor expansion") {
    MonodromyContext<Rat> ctx;
    ctx.flavor = RFlavor::TrigA;
    ctx.N = 3;
    ctx.qh = q;
    ctx.xi = w3;
    const Rat u(6);
    const SparseState st = basisState<Rat>(3, {1, 2, 3});

    SUBCASE("size one is a single element") {
        CHECK(quantumMinorApply(ctx, {2}, {3}, u, st) ==
              applyElement(ctx, 2, 3, u, st));
    }

    SUBCASE("size two expands into two terms") {
        const Rat u2 = q * q * u;
        const SparseState expected =
            applyElement(ctx, 2, 2, u2, applyElement(ctx, 1, 1, u, st)) -
            applyElement(ctx, 2, 1, u2, applyElement(ctx, 1, 2, u, st)) *
                q.inverse();
        CHECK(quantumMinorApply(ctx, {1, 2}, {1, 2}, u, st) == expected);
    }

    SUBCASE("column indices must increase") {
        CHECK_THROWS_AS(quantumMinorApply(ctx, {1, 2}, {2, 1}, u, st),
                        InvalidArgError);
    }

    SUBCASE("antisymmetry in repeated rows") {
        // Equal row indices with distinct columns annihilate any state.
        CHECK(quantumMinorApply(ctx, {1, 1}, {1, 2}, u, st).isZero());
        CHECK(quantumMinorApply(ctx, {2, 2}, {1, 3}, u, st).isZero());
    }
}

TEST_CASE("principal minors diagonalize tower vectors") {
    const Rat u(6);

    SUBCASE("rank 2, all partitions, both constructions") {
        const std::vector<Rat> w = rats({2, 9});
        for (const GTPartition& J : allGTPartitions(2, 2)) {
            CHECK(verifyQdetDiagonalization(q, 2, J, w, u, true));
            CHECK(verifyQdetDiagonalization(q, 2, J, w, u, false));
        }
    }

    SUBCASE("rank 3 instances") {
        const std::vector<GTPartition> js{
            {{2}, {3}, {1}}, {{1, 2}, {3}, {}}, {{}, {}, {1, 2, 3}}};
        for (const GTPartition& J : js) {
            CHECK(verifyQdetDiagonalization(q, 3, J, w3, u, true));
            CHECK(verifyQdetDiagonalization(q, 3, J, w3, u, false));
        }
    }

    SUBCASE("empty leading parts give the reference eigenvalues") {
        MonodromyContext<Rat> ctx;
        ctx.flavor = RFlavor::TrigA;
        ctx.N = 3;
        ctx.qh = q;
        ctx.xi = w3;
        const GTPartition J{{}, {}, {1, 2, 3}};
        const SparseState xi =
            gtVectorChain(RFlavor::TrigA, q, 3, J, w3);
        CHECK(xi == basisState<Rat>(3, {3, 3, 3}));
        Rat eig(1);
        for (const Rat& x : w3) {
            eig *= (u - x) * (q * q * u - x);
        }
        CHECK(qdetApply(ctx, 2, u, xi) == xi * eig);
    }
}

TEST_CASE("minor commutes with its members") {
    MonodromyContext<Rat> ctx;
    ctx.flavor = RFlavor::TrigA;
    ctx.N = 3;
    ctx.qh = q;
    ctx.xi = w3;
    const Rat u(6);
    const Rat v(11, 2);
    SparseState st = basisState<Rat>(3, {1, 2, 3});
    st += basisState<Rat>(3, {3, 1, 2}) * Rat(2);
    for (int m : {0, 1}) {
        CHECK(verifyMinorElementCommute(ctx, {1, 2}, {1, 2}, m, u, v, st));
        CHECK(verifyMinorElementCommute(ctx, {1, 2}, {1, 3}, m, u, v, st));
        CHECK(verifyMinorElementCommute(ctx, {2, 3}, {1, 2}, m, u, v,
                                        basisState<Rat>(3, {2, 3, 3})));
    }
}

TEST_CASE("singular vector step") {
    MonodromyContext<Rat> ctx;
    ctx.flavor = RFlavor::TrigA;
    ctx.qh = q;
    const Rat u(6);

    SUBCASE("reference state at rank 2") {
        ctx.N = 2;
        ctx.xi = rats({2, 9});
        const SparseState eta = basisState<Rat>(2, {2, 2});
        // alpha at an inhomogeneity kills the corner diagonal entry.
        const auto res = singularVectorStep(ctx, eta, 1, Rat(2), u);
        CHECK(res.preconditionHeld);
        CHECK(res.conclusionHeld);
        CHECK(res.resultNonzero);
        // A generic alpha does not.
        CHECK_FALSE(singularVectorStep(ctx, eta, 1, Rat(5), u)
                        .preconditionHeld);
    }

    SUBCASE("reference state at rank 3") {
        ctx.N = 3;
        ctx.xi = w3;
        const SparseState eta = basisState<Rat>(3, {3, 3, 3});
        // Lowering into row 2 annihilates the reference state outright,
        // so the step at k=1 holds vacuously.
        const auto low = singularVectorStep(ctx, eta, 1, Rat(9), u);
        CHECK(low.preconditionHeld);
        CHECK(low.conclusionHeld);
        CHECK_FALSE(low.resultNonzero);
        // The step at k=2 produces a genuine new singular vector.
        const auto res = singularVectorStep(ctx, eta, 2, Rat(9), u);
        CHECK(res.preconditionHeld);
        CHECK(res.conclusionHeld);
        CHECK(res.resultNonzero);
    }
}

TEST_CASE("singular ladder") {
    const Rat u(6);
    CHECK(verifySingularLadder(q, 3, {{2}, {3}, {1}}, w3, u));
    CHECK(verifySingularLadder(q, 3, {{1, 3}, {2}, {}}, w3, u));
    CHECK(verifySingularLadder(q, 2, {{2}, {1}}, rats({2, 9}), u));
}

TEST_CASE("tower vectors span each weight space") {
    for (bool chain : {true, false}) {
        CAPTURE(chain);
        CHECK(verifyGtIndependence(q, 2, 1, rats({2}), chain));
        CHECK(verifyGtIndependence(q, 2, 2, rats({2, 9}), chain));
        CHECK(verifyGtIndependence(q, 2, 3, w3, chain));
        CHECK(verifyGtIndependence(q, 3, 2, rats({2, 9}), chain));
        CHECK(verifyGtIndependence(q, 3, 3, w3, chain));
    }
}
