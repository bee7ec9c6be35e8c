#include "sumprod/factor.hpp"
#include "sumprod/numeric.hpp"

#include <catch2/catch.hpp>

#include <random>

using namespace sumprod;

TEST_CASE("rational construction and parsing", "[numeric]") {
    CHECK(make_rat(4, 6) == make_rat(2, 3));
    CHECK(make_rat(4, 2) == 2);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);

    CHECK(parse_rat("3/2") == make_rat(3, 2));
    CHECK(parse_rat("7") == 7);
    CHECK(parse_rat("-5/10") == make_rat(-1, 2));
    CHECK_THROWS_AS(parse_rat("2.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);

    CHECK(rat_str(make_rat(6, 4)) == "3/2");
    CHECK(rat_str(Rat(5)) == "5");
}

TEST_CASE("integer and rational powers", "[numeric]") {
    CHECK(int_pow(Int(3), 4) == 81);
    CHECK(rat_pow(make_rat(3, 2), 3) == make_rat(27, 8));
    CHECK(rat_pow(make_rat(3, 2), -2) == make_rat(4, 9));
    CHECK(rat_pow(make_rat(3, 2), 0) == 1);
}

TEST_CASE("rational gcd", "[numeric]") {
    // gcd(2/3, 4) = 2/3: both are integer multiples and nothing larger works.
    Rat g = rat_gcd(make_rat(2, 3), Rat(4));
    CHECK(g == make_rat(2, 3));
    CHECK(rat_is_integer(make_rat(2, 3) / g));
    CHECK(rat_is_integer(Rat(4) / g));

    CHECK(rat_gcd(make_rat(1, 4), make_rat(1, 6)) == make_rat(1, 12));
    CHECK(rat_gcd(Rat(6), Rat(10)) == 2);
}

TEST_CASE("factorization round trip", "[numeric][property]") {
    std::mt19937 rng(7301);
    for (int trial = 0; trial < 200; ++trial) {
        Rat q = make_rat(1 + static_cast<long>(rng() % 5000), 1 + static_cast<long>(rng() % 500));
        CHECK(exvec_value(factor_rat(q)) == q);
    }
    CHECK(factor_rat(Rat(1)).empty());
    auto f12 = factor_int(Int(12));
    CHECK(f12.at(Int(2)) == 2);
    CHECK(f12.at(Int(3)) == 1);
}

TEST_CASE("power membership via exponent vectors", "[numeric]") {
    CHECK(is_rational_power_of(Rat(8), Rat(2)));
    CHECK(is_rational_power_of(make_rat(1, 4), Rat(2))); // negative exponent
    CHECK(is_rational_power_of(Rat(1), Rat(2)));          // r^0
    CHECK(is_rational_power_of(make_rat(9, 4), make_rat(3, 2)));
    CHECK_FALSE(is_rational_power_of(Rat(6), Rat(2)));
    CHECK_FALSE(is_rational_power_of(Rat(2), Rat(4))); // 4^t never equals 2

    CHECK(power_index_of(make_rat(27, 8), make_rat(3, 2)) == 3);
    CHECK(power_index_of(make_rat(2, 3), make_rat(3, 2)) == -1);
    CHECK_FALSE(power_index_of(Rat(5), Rat(3)).has_value());
}

TEST_CASE("content hashing is stable", "[numeric]") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("certificate") == fnv1a64("certificate"));
    CHECK(fnv1a64("a") != fnv1a64("b"));
}
