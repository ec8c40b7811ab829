#include "doctest.h"

#include <random>
#include <string>

#include "tlst/errors.hpp"
#include "tlst/invariant.hpp"

using namespace tlst;

namespace {

Scalar c(const char* name) { return constant(name); }
TiedWord w(const std::string& s, std::size_t n = 0) { return parse_word(s, n ? std::optional<std::size_t>(n) : std::nullopt); }

}  // namespace

TEST_CASE("delta_B values") {
    CHECK(delta_B(w("")).value == Scalar(1));
    CHECK(delta_B(w("s1", 2)).value == Scalar(1));
    CHECK(delta_B(w("f")).value == c("x"));
    CHECK(delta_B(w("r")).value == c("y"));
    CHECK(delta_B(w("f r")).value == c("w"));
    const auto v = delta_B(w("s1 s1"));
    CHECK(v.n == 2);
    CHECK(v.e == 2);
    CHECK(v.summary.find("components=2") != std::string::npos);
}

TEST_CASE("invariant_compare") {
    auto r = invariant_compare(w("s1 s1"), w("e1 s1 s1"));
    CHECK_FALSE(r.equal);
    CHECK(r.first_agrees);
    CHECK(r.second_agrees);
    r = invariant_compare(w("s1"), w("e1 s1"));
    CHECK(r.equal);
    CHECK(r.first.value == Scalar(1));
    r = invariant_compare(w("r"), w("-r"));
    CHECK_FALSE(r.equal);
    CHECK(r.second.value == c("y") - c("dv") * c("x"));
}

TEST_CASE("single Markov moves") {
    const auto word = w("s1 r s1 f");
    const auto base = delta_B(word).value;
    CHECK(delta_B(apply_markov(word, {MoveKind::Stabilize, 1})).value == base);
    CHECK(delta_B(apply_markov(word, {MoveKind::Stabilize, -1})).value == base);
    for (int cut = 0; cut <= 4; ++cut) CHECK(delta_B(apply_markov(word, {MoveKind::Rotate, cut})).value == base);
    CHECK(delta_B(apply_markov(w("s1"), {MoveKind::TieMoving, 1})).value == delta_B(w("s1")).value);
    CHECK(delta_B(apply_markov(word, {MoveKind::TieFixed, 1})).value == base);
}

TEST_CASE("stabilization telescopes") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 100; ++k) {
        const auto word = random_word(rng, {3, 8, 2});
        const auto base = delta_B(word).value;
        for (int s : {1, -1}) {
            auto up = word;
            up.n += 1;
            up.letters.push_back(Gen::sigma(static_cast<int>(word.n), s));
            CHECK(delta_B(up).value == base);
        }
    }
}

TEST_CASE("random Markov sequences") {
    const auto r = markov_suite(52, 150);
    CHECK(r.trials == 150);
    CHECK(r.moves_applied >= r.trials);
    CHECK(r.ok());
}

TEST_CASE("mirror") {
    auto m = mirror_check(w("e1 s1 s1"));
    CHECK(m.holds);
    m = mirror_check(w("f r"));
    CHECK(m.holds);
    CHECK(m.mirrored == c("w") - c("dv") * c("x"));
    CHECK_THROWS_AS(mirror_check(w("s1 s1")), PreconditionViolated);
    const auto r = mirror_suite(53, 20);
    CHECK(r.ok());
}

TEST_CASE("affine words ignore y, w and v") {
    CHECK(affine_independent(w("s1 s1 e1 s2 -s1", 3), 1));
    CHECK_THROWS_AS(affine_independent(w("r s1"), 1), PreconditionViolated);
    CHECK_THROWS_AS(affine_independent(w("f s1"), 1), PreconditionViolated);
    const auto r = affine_suite(54, 40);
    CHECK(r.ok());
}

TEST_CASE("golden suite") {
    for (const auto& r : golden_suite()) {
        CAPTURE(r.name);
        CHECK(r.ok());
    }
}

TEST_CASE("random words are deterministic and bounded") {
    std::mt19937_64 a(55), b(55);
    for (int k = 0; k < 50; ++k) {
        const auto x = random_word(a, {4, 10, 2});
        CHECK(x == random_word(b, {4, 10, 2}));
        CHECK(x.n <= 4);
        CHECK(x.letters.size() <= 10);
        int rho = 0;
        for (const auto& g : x.letters) rho += g.kind == GenKind::Rho ? g.sign : 0;
        CHECK(std::abs(rho) <= 2);
    }
}
