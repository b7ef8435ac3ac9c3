#include "doctest.h"

#include "qbethe/monodromy.hpp"
#include "qbethe/rational.hpp"

using namespace qbethe;

namespace {

MonodromyContext<Rat> trigCtx(RFlavor flavor, int N, std::vector<Rat> xi) {
    MonodromyContext<Rat> ctx;
    ctx.flavor = flavor;
    ctx.N = N;
    ctx.qh = Rat(2);
    ctx.xi = std::move(xi);
    return ctx;
}

MonodromyContext<Rat> ratCtx(int N, std::vector<Rat> xi) {
    MonodromyContext<Rat> ctx;
    ctx.flavor = RFlavor::Rational;
    ctx.N = N;
    ctx.qh = Rat(7);
    ctx.xi = std::move(xi);
    return ctx;
}

} // namespace

TEST_CASE("monodromy element on a two-site reference state") {
    // T_21(u) applied to e_22 with inhomogeneities (v1, v2) has exactly
    // the two ice-rule configurations:
    //   (q-q^-1)u (qu - q^-1 v2) e_12  +  (u - v1)(q-q^-1)u e_21.
    const Rat q(2), u(3), v1(5), v2(11);
    auto ctx = trigCtx(RFlavor::TrigA, 2, {v1, v2});
    const SparseState out =
        applyElement(ctx, 2, 1, u, basisState<Rat>(2, {2, 2}));
    const Rat qmqi = q - q.inverse();
    CHECK(out.coeff({1, 2}) == qmqi * u * (q * u - q.inverse() * v2));
    CHECK(out.coeff({2, 1}) == (u - v1) * qmqi * u);
    CHECK(out.entries().size() == 2);
}

TEST_CASE("element action shifts color content") {
    const Rat u(13);
    auto ctx = trigCtx(RFlavor::TrigB, 3, {Rat(3), Rat(5), Rat(11)});
    const SparseState in = basisState<Rat>(3, {3, 1, 3});
    const SparseState out = applyElement(ctx, 3, 2, u, in);
    for (const auto& [key, c] : out.entries()) {
        const auto counts = colorContent(key, 3);
        CHECK(counts[0] == 1); // unchanged
        CHECK(counts[1] == 1); // j = 2 gained one
        CHECK(counts[2] == 1); // i = 3 lost one
    }
    CHECK(!out.isZero());
}

TEST_CASE("defining exchange relation for all index choices") {
    // sum_{a,b} [R(u,v)]_{ab}^{cd} T_{ak}(u) T_{bl}(v)
    //   == sum_{a,b} [R(u,v)]_{kl}^{ab} T_{ca}(u) T_{db}(v)
    // checked as operators on every basis vector of a two-site space.
    const Rat u(3), v(5);
    for (int N : {2, 3}) {
        std::vector<MonodromyContext<Rat>> ctxs = {
            trigCtx(RFlavor::TrigA, N, {Rat(11), Rat(13)}),
            trigCtx(RFlavor::TrigB, N, {Rat(11), Rat(13)}),
            ratCtx(N, {Rat(11), Rat(13)})};
        for (const auto& ctx : ctxs) {
            for (int c = 1; c <= N; ++c)
            for (int d = 1; d <= N; ++d)
            for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
                for (const ColorTuple& key : allColorTuples(N, 2)) {
                    const SparseState base = basisState<Rat>(N, key);
                    SparseState lhs(N, 2), rhs(N, 2);
                    for (int a = 1; a <= N; ++a)
                    for (int b = 1; b <= N; ++b) {
                        const Rat wl =
                            rElement(ctx.flavor, ctx.qh, u, v, a, b, c, d);
                        if (!wl.isZero()) {
                            SparseState t =
                                applyElement(ctx, b, l, v, base);
                            t = applyElement(ctx, a, k, u, t);
                            t *= wl;
                            lhs += t;
                        }
                        const Rat wr =
                            rElement(ctx.flavor, ctx.qh, u, v, k, l, a, b);
                        if (!wr.isZero()) {
                            SparseState t =
                                applyElement(ctx, c, a, u, base);
                            t = applyElement(ctx, d, b, v, t);
                            t *= wr;
                            rhs += t;
                        }
                    }
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("equal-index elements commute") {
    const Rat x(3), y(5);
    auto ctx = ratCtx(3, {Rat(11), Rat(13), Rat(17)});
    for (const ColorTuple& key : allColorTuples(3, 3)) {
        const SparseState base = basisState<Rat>(3, key);
        const SparseState xy =
            applyElement(ctx, 1, 2, x, applyElement(ctx, 1, 2, y, base));
        const SparseState yx =
            applyElement(ctx, 1, 2, y, applyElement(ctx, 1, 2, x, base));
        CHECK(xy == yx);
    }
}

TEST_CASE("rational exchange relation with a shared first index") {
    // T_13(x) T_12(y) = (y-x+h)/(y-x) T_12(y) T_13(x)
    //                   - h/(y-x)     T_12(x) T_13(y).
    const Rat x(3), y(5), h(7);
    auto ctx = ratCtx(3, {Rat(11), Rat(13)});
    for (const ColorTuple& key : allColorTuples(3, 2)) {
        const SparseState base = basisState<Rat>(3, key);
        const SparseState lhs =
            applyElement(ctx, 1, 3, x, applyElement(ctx, 1, 2, y, base));
        SparseState a =
            applyElement(ctx, 1, 2, y, applyElement(ctx, 1, 3, x, base));
        a *= (y - x + h) / (y - x);
        SparseState b =
            applyElement(ctx, 1, 2, x, applyElement(ctx, 1, 3, y, base));
        b *= h / (y - x);
        CHECK(lhs == a - b);
    }
}

TEST_CASE("dual application is the transpose") {
    const Rat u(3);
    for (int N : {2, 3}) {
        auto ctx = trigCtx(RFlavor::TrigB, N, {Rat(5), Rat(11)});
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                for (const ColorTuple& dk : allColorTuples(N, 2)) {
                    const SparseState dual = basisState<Rat>(N, dk);
                    const SparseState dT =
                        applyDualElement(ctx, i, j, u, dual);
                    for (const ColorTuple& sk : allColorTuples(N, 2)) {
                        const SparseState state = basisState<Rat>(N, sk);
                        const Rat direct = pairStates(
                            dual, applyElement(ctx, i, j, u, state));
                        CHECK(pairStates(dT, state) == direct);
                    }
                }
            }
        }
    }
}

TEST_CASE("multiset application is order independent") {
    auto ctx = trigCtx(RFlavor::TrigA, 2, {Rat(5), Rat(11), Rat(13)});
    const SparseState base = basisState<Rat>(2, {2, 2, 2});
    const SparseState ab =
        applyMultiset(ctx, 2, 1, {Rat(3), Rat(17)}, base);
    const SparseState ba =
        applyMultiset(ctx, 2, 1, {Rat(17), Rat(3)}, base);
    CHECK(ab == ba);
    CHECK(!ab.isZero());
}

TEST_CASE("word matrices multiply rightmost factor first") {
    auto ctx = trigCtx(RFlavor::TrigA, 2, {Rat(5), Rat(11)});
    OperatorWord<Rat> word;
    word.push_back(WordFactor<Rat>{1, 2, {Rat(3)}});
    word.push_back(WordFactor<Rat>{2, 1, {Rat(13)}});
    const auto matrix = wordMatrix(ctx, word);
    REQUIRE(matrix.size() == 4);
    for (const ColorTuple& key : allColorTuples(2, 2)) {
        const SparseState direct = applyElement(
            ctx, 1, 2, Rat(3),
            applyElement(ctx, 2, 1, Rat(13), basisState<Rat>(2, key)));
        CHECK(matrix.at(key) == direct);
    }
}

TEST_CASE("basis tuple enumeration is complete and ordered") {
    const auto tuples = allColorTuples(2, 3);
    CHECK(tuples.size() == 8);
    CHECK(tuples.front() == ColorTuple{1, 1, 1});
    CHECK(tuples.back() == ColorTuple{2, 2, 2});
    CHECK(allColorTuples(3, 0).size() == 1);
}
