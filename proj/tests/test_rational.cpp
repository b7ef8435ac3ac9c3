#include "doctest.h"

#include "qbethe/rational.hpp"

using qbethe::DomainError;
using qbethe::InvalidArgError;
using qbethe::Rat;

TEST_CASE("rational construction and canonical text form") {
    CHECK(Rat(5).toString() == "5/1");
    CHECK(Rat(-3, 6).toString() == "-1/2");
    CHECK(Rat(4, -6).toString() == "-2/3");
    CHECK(Rat(0).toString() == "0/1");
    CHECK(Rat(0).isZero());
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("rational parsing") {
    CHECK(Rat::fromString("22/7") == Rat(22, 7));
    CHECK(Rat::fromString("-9") == Rat(-9));
    CHECK(Rat::fromString("6/-4") == Rat(-3, 2));
    CHECK(Rat::fromString("10/5").toString() == "2/1");
    CHECK_THROWS_AS(Rat::fromString(""), InvalidArgError);
    CHECK_THROWS_AS(Rat::fromString("1.5"), InvalidArgError);
    CHECK_THROWS_AS(Rat::fromString("x"), InvalidArgError);
    CHECK_THROWS_AS(Rat::fromString("3/0"), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
    const Rat a(2, 3);
    const Rat b(-5, 7);
    CHECK(a + b == Rat(-1, 21));
    CHECK(a - b == Rat(29, 21));
    CHECK(a * b == Rat(-10, 21));
    CHECK(a / b == Rat(-14, 15));
    CHECK(-a == Rat(-2, 3));
    CHECK_THROWS_AS(a / Rat(0), DomainError);
    CHECK_THROWS_AS(Rat(0).inverse(), DomainError);

    // Field axioms at a fixed triple.
    const Rat c(9, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rat(0) == a);
    CHECK(a * Rat(1) == a);
    CHECK(a * a.inverse() == Rat(1));
}

TEST_CASE("rational powers") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(0) == Rat(1));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK_THROWS_AS(Rat(0).pow(-1), DomainError);
}

TEST_CASE("rational comparisons") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 1) == Rat(14, 2));
    CHECK(Rat(2) != Rat(3));
    CHECK(Rat(5, 3) >= Rat(5, 3));
}

TEST_CASE("rational value semantics") {
    Rat a(3, 5);
    Rat b = a;
    b += Rat(1);
    CHECK(a == Rat(3, 5));
    CHECK(b == Rat(8, 5));
    Rat c = std::move(b);
    CHECK(c == Rat(8, 5));
}
