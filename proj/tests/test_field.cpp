#include "doctest.h"

#include <set>
#include <stdexcept>

#include "toyqm/field.hpp"

using toyqm::F5;
using toyqm::abs_norm;

TEST_CASE("balanced representatives") {
    CHECK(F5(0).value() == 0);
    CHECK(F5(3).value() == -2);
    CHECK(F5(4).value() == -1);
    CHECK(F5(-3).value() == 2);
    CHECK(F5(7).value() == 2);
    CHECK(F5(-7).value() == -2);
    CHECK(F5(125).value() == 0);
    static_assert(F5(3) == F5(-2));
    static_assert(F5(2) * F5(2) == F5(-1));
}

TEST_CASE("arithmetic") {
    CHECK(F5(2) + F5(2) == F5(-1));
    CHECK(F5(-2) + F5(-2) == F5(1));
    CHECK(F5(2) - F5(-2) == F5(-1));
    CHECK(F5(2) * F5(-2) == F5(1));
    CHECK(F5(-2) * F5(-2) == F5(-1));
    CHECK(-F5(2) == F5(-2));
    F5 x(1);
    x += F5(1);
    CHECK(x == F5(2));
    x *= F5(2);
    CHECK(x == F5(-1));
    x -= F5(-1);
    CHECK(x.is_zero());
}

TEST_CASE("both square roots of -1") {
    auto roots = F5::sqrt_minus_one();
    CHECK(roots[0] == F5(2));
    CHECK(roots[1] == F5(-2));
    for (F5 r : roots) CHECK(r * r == F5(-1));
}

TEST_CASE("inverses") {
    CHECK(F5(1).inv() == F5(1));
    CHECK(F5(2).inv() == F5(-2));
    CHECK(F5(-2).inv() == F5(2));
    CHECK(F5(-1).inv() == F5(-1));
    CHECK(F5(2) / F5(2) == F5(1));
    CHECK(F5(1) / F5(2) == F5(-2));
    CHECK_THROWS_AS(F5(0).inv(), std::domain_error);
    CHECK_THROWS_AS(F5(1) / F5(0), std::domain_error);
}

TEST_CASE("element listing in display order") {
    auto all = F5::all();
    REQUIRE(all.size() == 5);
    CHECK(all.front() == F5(-2));
    CHECK(all.back() == F5(2));
    CHECK(std::set<F5>(all.begin(), all.end()).size() == 5);
}

TEST_CASE("norm") {
    CHECK(abs_norm(F5(0)) == 0);
    for (int v : {1, 2, -1, -2}) CHECK(abs_norm(F5(v)) == 1);
}

TEST_CASE("text round trip") {
    for (F5 a : F5::all()) CHECK(F5::parse(a.to_string()) == a);
    CHECK(F5(-2).to_string() == "-2");
    CHECK(F5::parse("4") == F5(-1));
    CHECK_THROWS_AS(F5::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(F5::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(F5::parse("2x"), std::invalid_argument);
}

TEST_CASE("ordering follows balanced values") {
    CHECK(F5(-2) < F5(-1));
    CHECK(F5(-1) < F5(0));
    CHECK(F5(1) < F5(2));
}
