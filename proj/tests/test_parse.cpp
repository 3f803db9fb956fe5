#include <doctest.h>

#include "polarix/core.hpp"
#include "polarix/parse.hpp"

using namespace polarix;

TEST_CASE("numbers parse without locale") {
    CHECK(parse_double("1.5", "v") == 1.5);
    CHECK(parse_double("+2", "v") == 2.0);
    CHECK(parse_double("-1e-3", "v") == -1e-3);
    CHECK(parse_double(" 0.25 ", "v") == 0.25);
    CHECK_THROWS_AS(parse_double("1,5", "v"), InvalidArgument);
    CHECK_THROWS_AS(parse_double("", "v"), InvalidArgument);
    CHECK_THROWS_AS(parse_double("nan", "v"), InvalidArgument);
    CHECK_THROWS_AS(parse_double("inf", "v"), InvalidArgument);
    CHECK_THROWS_AS(parse_double("2x", "v"), InvalidArgument);
}

TEST_CASE("angles accept deg and rad suffixes") {
    CHECK(parse_angle("45deg", "t") == doctest::Approx(kPi / 4.0));
    CHECK(parse_angle("0.5rad", "t") == 0.5);
    CHECK(parse_angle("0.5", "t") == 0.5);
    CHECK_THROWS_AS(parse_angle("45grad", "t"), InvalidArgument);
}

TEST_CASE("doubles format with 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    CHECK(parse_double(format_double(0.98761669624257353), "v") == 0.98761669624257353);
}

TEST_CASE("wrap_angle") {
    CHECK(wrap_angle(kPi, -kPi, 2.0 * kPi) == doctest::Approx(-kPi));
    CHECK(wrap_angle(-0.1, 0.0, kPi) == doctest::Approx(kPi - 0.1));
    CHECK(wrap_angle(3.5 * kPi, 0.0, kPi) == doctest::Approx(0.5 * kPi));
}
