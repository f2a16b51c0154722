#include <catch2/catch_amalgamated.hpp>

#include "lts/rational.hpp"

using lts::Rat;

TEST_CASE("rationals are canonical", "[rational]") {
    REQUIRE(Rat(2, 4) == Rat(1, 2));
    REQUIRE(Rat(-2, -4) == Rat(1, 2));
    REQUIRE(Rat(2, -4) == Rat(-1, 2));
    REQUIRE(Rat(2, -4).den() == 2);
    REQUIRE(Rat(0, 5) == Rat(0));
    REQUIRE(Rat(7, 1).is_integer());
}

TEST_CASE("rational arithmetic", "[rational]") {
    REQUIRE(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    REQUIRE(Rat(1, 3) - Rat(1, 3) == Rat(0));
    REQUIRE(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    REQUIRE(Rat(1, 2) / Rat(1, 4) == Rat(2));
    REQUIRE(-Rat(1, 2) == Rat(-1, 2));
    REQUIRE(Rat(1, 3) < Rat(1, 2));
    REQUIRE_THROWS_AS(Rat(1) / Rat(0), lts::usage_error);
    REQUIRE_THROWS_AS(Rat(1, 0), lts::usage_error);
}

TEST_CASE("rational parsing and formatting", "[rational]") {
    REQUIRE(Rat::parse("3/6") == Rat(1, 2));
    REQUIRE(Rat::parse("-4/2") == Rat(-2));
    REQUIRE(Rat::parse("17") == Rat(17));
    REQUIRE(Rat(5, 3).str() == "5/3");
    REQUIRE(Rat(-7).str() == "-7");
    REQUIRE_THROWS_AS(Rat::parse("1/0"), lts::usage_error);
    REQUIRE_THROWS_AS(Rat::parse("abc"), lts::usage_error);
}

TEST_CASE("no-tolerance exactness survives long chains", "[rational]") {
    Rat x(1, 3);
    Rat acc(0);
    for (int i = 0; i < 3000; ++i) acc += x;
    REQUIRE(acc == Rat(1000));
}
