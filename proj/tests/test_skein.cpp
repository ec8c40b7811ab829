#include "doctest.h"

#include <random>
#include <string>

#include "tlst/errors.hpp"
#include "tlst/invariant.hpp"
#include "tlst/skein.hpp"

using namespace tlst;

namespace {

Scalar c(const char* name) { return constant(name); }
TiedWord w(const std::string& s) { return parse_word(s); }

std::size_t sigma_count(const TiedWord& v) {
    std::size_t k = 0;
    for (const auto& g : v.letters) k += g.kind == GenKind::Sigma;
    return k;
}

}  // namespace

TEST_CASE("deciding crossings") {
    CHECK(classify_crossings(SkeinNode::from_word(w("s1 s1"))).size() == 1);
    CHECK(classify_crossings(SkeinNode::from_word(w("s1 -s1"))).empty());
    CHECK(classify_crossings(SkeinNode::from_word(ascending_unlink_word(TiePartition(3), {1, -1, 2}))).empty());
    CHECK(classify_crossings(SkeinNode::from_word(w("-s1"))).empty());
    CHECK(classify_crossings(SkeinNode::from_word(w("s1"))).size() == 1);
}

TEST_CASE("skein step on the Hopf link") {
    const auto node = SkeinNode::from_word(w("s1 s1"));
    const auto pos = classify_crossings(node).front();
    const auto step = skein_step(node, pos);
    CHECK(step.sign == 1);
    CHECK(step.switched.gamma.is_discrete());
    CHECK(step.switched.beta.letters.empty());
    CHECK(step.smoothed.gamma == TiePartition::from_pairs(2, {{1, 2}}));
    CHECK(step.smoothed.beta.letters == std::vector<Gen>{Gen::sigma(1)});
    CHECK_THROWS_AS(skein_step(SkeinNode::from_word(w("r s1")), 0), NotACrossing);
}

TEST_CASE("worked expansion") {
    SkeinEngine engine;
    const auto e = engine.expand_first(w("e1 f r s1 s1"));
    REQUIRE(e.has_value());
    const Scalar l = c("l");
    CHECK(e->switched_coeff == l * l);
    CHECK(e->smoothed_coeff == l * c("du"));
    CHECK(e->switched_value == c("w") * c("x") / (c("z") * l));
    CHECK(e->smoothed_value == c("w"));
    CHECK(e->switched_coeff * e->switched_value + e->smoothed_coeff * e->smoothed_value == evaluate_FB(w("e1 f r s1 s1")));
    CHECK_FALSE(engine.expand_first(w("r")).has_value());
}

TEST_CASE("unlink values") {
    const Scalar x = c("x");
    CHECK(eval_trivial(TiePartition(1), {0}) == Scalar(1));
    CHECK(eval_trivial(TiePartition(2), {0, 0}) == (c("z") * c("l")).inverse());
    CHECK(eval_trivial(TiePartition(1), {-1}) == c("y") - c("dv") * x);
    CHECK(eval_trivial(TiePartition::from_pairs(1, {{0, 1}}), {1}) == c("w"));
    CHECK(eval_trivial(TiePartition::from_pairs(1, {{0, 1}}), {0}) == x);
    CHECK(eval_trivial(TiePartition(1), {1}) == c("y"));
    CHECK(eval_trivial(TiePartition::from_pairs(2, {{1, 2}}), {0, 0}) == x / (c("z") * c("l")));
    CHECK_THROWS_AS(eval_trivial(TiePartition(2), {0}), NotTrivial);
}

TEST_CASE("evaluate_FB on Hopf links") {
    const Scalar u = c("u"), z = c("z"), l = c("l");
    const Scalar plain = l * (u + u * u * z - z) / (u * z);
    const Scalar tied = l * (c("x") * u + u * u * z - z) / (u * z);
    CHECK(evaluate_FB(w("s1 s1")) == plain);
    CHECK(evaluate_FB(w("f r s1 s1")) == c("w") * plain);
    CHECK(evaluate_FB(w("e1 f r s1 s1")) == c("w") * tied);
}

TEST_CASE("expansion measure decreases") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 200; ++k) {
        const auto node = SkeinNode::from_word(random_word(rng, {3, 6, 2}));
        const auto deciding = classify_crossings(node);
        if (deciding.empty()) continue;
        const auto step = skein_step(node, deciding.front());
        const auto s = sigma_count(node.beta);
        CHECK(sigma_count(step.smoothed.beta) < s);
        const auto sw = sigma_count(step.switched.beta);
        CHECK((sw < s || (sw == s && classify_crossings(step.switched).size() < deciding.size())));
    }
}

TEST_CASE("traversal choices do not change the value") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 150; ++k) {
        const auto word = random_word(rng, {3, 6, 2});
        const auto base = evaluate_FB(word);
        CHECK(evaluate_FB(word, {true, 0}) == base);
        CHECK(evaluate_FB(word, {false, 1}) == base);
        CHECK(evaluate_FB(word, {true, 2}) == base);
    }
}

TEST_CASE("skein agrees with the trace") {
    const auto r = agreement_suite(2, 3, 100, 6, 43);
    CHECK(r.checks > 100);
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? std::string() : r.failures.front()));
}
