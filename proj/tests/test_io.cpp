#include "doctest.h"

#include <random>
#include <string>

#include "support.hpp"
#include "tlst/invariant.hpp"
#include "tlst/io.hpp"

using namespace tlst;

TEST_CASE("text output") {
    CHECK(to_text(delta_B(parse_word("s1 s1")).value) == "l*(u + u^2*z - z)/(u*z)");
    CHECK(to_text(Scalar(1)) == "1");
    CHECK(to_text(constant("x")) == "x");
}

TEST_CASE("latex output uses lambda") {
    CHECK(to_latex(constant("l")).find("\\lambda") != std::string::npos);
}

TEST_CASE("json layout") {
    const auto j = to_json(constant("x"));
    REQUIRE(j.contains("lambda0"));
    CHECK(j["lambda1"].is_object());
    CHECK(j["lambda1"].empty());
    const auto& term = j["lambda0"]["num"][0];
    CHECK(term["coeff"] == "1");
    CHECK(term["exp"]["x"] == 1);
}

TEST_CASE("json round trip of random scalars") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 50; ++k) {
        const auto s = tlst::testing::random_scalar(rng);
        const auto j = to_json(s);
        CHECK(scalar_from_json(j) == s);
        CHECK(to_json(scalar_from_json(j)) == j);
    }
}

TEST_CASE("json round trip of invariant values") {
    std::mt19937_64 rng(62);
    for (int k = 0; k < 50; ++k) {
        const auto v = delta_B(random_word(rng, {3, 8, 2}));
        const auto j = to_json(v);
        const auto back = invariant_from_json(j);
        CHECK(back == v);
        CHECK(to_json(back).dump() == j.dump());
    }
}
