#include "doctest.h"

#include "qbethe/rational.hpp"
#include "qbethe/weights.hpp"

using namespace qbethe;

namespace {
const Rat q(2);
const Rat h(7);
} // namespace

TEST_CASE("set products") {
    const std::vector<Rat> A{Rat(3), Rat(5)};
    const std::vector<Rat> B{Rat(2)};
    CHECK(setDiff(A, B) == Rat(3));
    CHECK(setQDiff(q, A, B) == Rat(5) * Rat(9));
    CHECK(setShiftDiff(A, B, h) == Rat(8) * Rat(10));
    CHECK(setDiff(A, {}) == Rat(1));
    CHECK(setDiff({}, B) == Rat(1));
}

TEST_CASE("f function") {
    CHECK(fFunction(RFlavor::TrigA, q, Rat(5), Rat(0)) == q);
    CHECK(fFunction(RFlavor::TrigA, q, Rat(3), Rat(5)) ==
          (q * Rat(3) - q.inverse() * Rat(5)) / Rat(-2));
    CHECK(fFunction(RFlavor::Rational, h, Rat(3), Rat(5)) == Rat(-5, 2));
    CHECK_THROWS_AS(fFunction(RFlavor::TrigA, q, Rat(4), Rat(4)), DomainError);
}

TEST_CASE("determinants by elimination match cofactor expansion") {
    CHECK(determinant<Rat>({}) == Rat(1));
    CHECK(determinant<Rat>({{Rat(5)}}) == Rat(5));
    CHECK(determinant<Rat>({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
    // Singular matrix.
    CHECK(determinant<Rat>({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
    // Permutation matrix needing a row swap.
    CHECK(determinant<Rat>({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));

    // 4x4 with fixed rational entries, against a cofactor oracle.
    std::vector<std::vector<Rat>> m = {
        {Rat(1, 2), Rat(3), Rat(-1), Rat(2)},
        {Rat(0), Rat(5, 3), Rat(4), Rat(-2)},
        {Rat(7), Rat(0), Rat(2, 5), Rat(1)},
        {Rat(-3), Rat(1), Rat(0), Rat(6)},
    };
    std::function<Rat(const std::vector<std::vector<Rat>>&)> cofactor =
        [&](const std::vector<std::vector<Rat>>& a) -> Rat {
        const std::size_t n = a.size();
        if (n == 0) {
            return Rat(1);
        }
        Rat acc;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> minor;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<Rat> row;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != j) {
                        row.push_back(a[i][k]);
                    }
                }
                minor.push_back(std::move(row));
            }
            const Rat term = a[0][j] * cofactor(minor);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    CHECK(determinant(m) == cofactor(m));
}

TEST_CASE("rank one determinant forms") {
    const std::vector<Rat> u{Rat(3)};
    const std::vector<Rat> v{Rat(5)};
    CHECK(ikDeterminant(RFlavor::TrigA, q, u, v) == Rat(9, 2));
    CHECK(ikLeft(q, u, v) == (q - q.inverse()) * Rat(3));
    CHECK(ikRight(q, u, v) == (q - q.inverse()) * Rat(5));
    CHECK(ikDeterminant(RFlavor::Rational, h, u, v) == h);
}

TEST_CASE("determinant forms at coinciding argument lists factorize") {
    const std::vector<Rat> u{Rat(3), Rat(5), Rat(-2)};
    Rat expected(1);
    for (const Rat& a : u) {
        for (const Rat& b : u) {
            expected *= q * a - q.inverse() * b;
        }
    }
    CHECK(ikLeft(q, u, u) == expected);
    CHECK(ikRight(q, u, u) == expected);
}

TEST_CASE("left and right forms are proportional") {
    const std::vector<Rat> u{Rat(3), Rat(-4), Rat(9)};
    const std::vector<Rat> v{Rat(5), Rat(2), Rat(-7)};
    Rat pu(1), pv(1);
    for (const Rat& a : u) {
        pu *= a;
    }
    for (const Rat& b : v) {
        pv *= b;
    }
    CHECK(ikLeft(q, u, v) * pv == ikRight(q, u, v) * pu);
}

TEST_CASE("normalized determinant forms divide out the pair product") {
    const std::vector<Rat> u{Rat(3), Rat(-4)};
    const std::vector<Rat> v{Rat(5), Rat(2)};
    CHECK(ikLeftNormalized(q, u, v) * setDiff(u, v) == ikLeft(q, u, v));
    CHECK(ikRightNormalized(q, u, v) * setDiff(u, v) == ikRight(q, u, v));
    CHECK_THROWS_AS(ikLeftNormalized(q, u, std::vector<Rat>{Rat(3), Rat(9)}),
                    DomainError);
}

TEST_CASE("degenerate parameter lists are a domain error") {
    const std::vector<Rat> u{Rat(3), Rat(3)};
    const std::vector<Rat> v{Rat(5), Rat(2)};
    CHECK_THROWS_AS(ikLeft(q, u, v), DomainError);
    CHECK_THROWS_AS(ikRational(h, u, v), DomainError);
}

TEST_CASE("weight function reference values at rank two") {
    const Rat u(3), v1(5), v2(11);
    const std::vector<std::vector<Rat>> layers{{u}};
    const std::vector<Rat> v{v1, v2};
    const Rat qmqi = q - q.inverse();
    CHECK(weightW(RFlavor::TrigA, q, layers, v, {1, 2}) ==
          qmqi * u * (q * u - q.inverse() * v2));
    CHECK(weightW(RFlavor::TrigA, q, layers, v, {2, 1}) ==
          (u - v1) * qmqi * u);
    CHECK(weightW(RFlavor::Rational, h, layers, v, {1, 2}) ==
          h * (u - v2 + h));
    CHECK(weightW(RFlavor::Rational, h, layers, v, {2, 1}) == (u - v1) * h);
}

TEST_CASE("weight function with no colored sites is one") {
    const std::vector<std::vector<Rat>> layers{{}, {}};
    const std::vector<Rat> v{Rat(3), Rat(5)};
    CHECK(weightW(RFlavor::TrigA, q, layers, v, {3, 3}) == Rat(1));
    CHECK(weightW(RFlavor::Rational, h, layers, v, {3, 3}) == Rat(1));
    CHECK(weightW(RFlavor::TrigA, q, {}, {}, {}) == Rat(1));
}

TEST_CASE("weight function is symmetric in each layer") {
    const std::vector<Rat> v{Rat(3), Rat(5), Rat(11)};
    const ColorTuple I{2, 1, 1};
    const std::vector<std::vector<Rat>> layers{{Rat(-2), Rat(13)}, {}};
    // Rank 3 with layer sizes (2, 3): colors <= 2 fill all of I.
    const std::vector<std::vector<Rat>> layers3{{Rat(-2), Rat(13)},
                                                {Rat(7), Rat(-9), Rat(17)}};
    const Rat a = weightW(RFlavor::TrigA, q, layers3, v, I);
    const std::vector<std::vector<Rat>> swapped{{Rat(13), Rat(-2)},
                                                {Rat(-9), Rat(17), Rat(7)}};
    CHECK(weightW(RFlavor::TrigA, q, swapped, v, I) == a);
    const Rat b = weightW(RFlavor::Rational, h, layers3, v, I);
    CHECK(weightW(RFlavor::Rational, h, swapped, v, I) == b);
}

TEST_CASE("weight function validates shapes") {
    CHECK_THROWS_AS(
        weightW(RFlavor::TrigA, q, {{Rat(3)}}, {Rat(5)}, {2}),
        InvalidArgError); // k_1 = 1 but no color-1 site
    CHECK_THROWS_AS(
        weightW(RFlavor::TrigA, q, {{Rat(3)}}, {Rat(5), Rat(7)}, {1}),
        InvalidArgError); // coloring shorter than v
    CHECK_THROWS_AS(
        weightW(RFlavor::TrigA, q, {{Rat(3)}}, {Rat(5)}, {7}),
        InvalidArgError); // color out of range
}
