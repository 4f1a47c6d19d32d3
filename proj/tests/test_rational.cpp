#include "doctest.h"
#include "mvdual/rational.hpp"

using namespace mvd;

TEST_CASE("rationals are canonical") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rat b(-3, -6);
    CHECK(b == Rat(1, 2));
    Rat c(3, -6);
    CHECK(c == Rat(-1, 2));
    CHECK(c.den() == 2);
    CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rat::from_string("3/9") == Rat(1, 3));
    CHECK(Rat::from_string("-2/4").str() == "-1/2");
    CHECK(Rat::from_string("7").str() == "7");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat::from_string(Rat(22, 7).str()) == Rat(22, 7));
    CHECK_THROWS_AS(Rat::from_string("1/"), parse_error);
    CHECK_THROWS_AS(Rat::from_string("x"), parse_error);
    CHECK_THROWS_AS(Rat::from_string("1/0"), parse_error);
    CHECK_THROWS_AS(Rat::from_string(""), parse_error);
}

TEST_CASE("arithmetic and order") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
    CHECK(Rat(1, 2) - Rat(2, 3) == Rat(-1, 6));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(abs(Rat(-5, 7)) == Rat(5, 7));
    CHECK_THROWS_AS(Rat(1) / Rat(0), domain_error);
}

TEST_CASE("mv operations on the unit interval") {
    CHECK(mv_oplus(Rat(1, 3), Rat(1, 3)) == Rat(2, 3));
    CHECK(mv_oplus(Rat(3, 4), Rat(3, 4)) == Rat(1));
    CHECK(mv_neg(Rat(1, 4)) == Rat(3, 4));
    CHECK(mv_odot(Rat(3, 4), Rat(1, 2)) == Rat(1, 4));
    CHECK(mv_odot(Rat(1, 4), Rat(1, 2)) == Rat(0));
    CHECK(mv_vee(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
    CHECK(mv_wedge(Rat(1, 3), Rat(1, 2)) == Rat(1, 3));
}
