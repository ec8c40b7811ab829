#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tlst/algebra.hpp"
#include "tlst/errors.hpp"
#include "tlst/invariant.hpp"

using namespace tlst;

namespace {

Scalar c(const char* name) { return constant(name); }
TiedWord w(const std::string& s, std::size_t n = 0) { return parse_word(s, n ? std::optional<std::size_t>(n) : std::nullopt); }

AlgElement T(std::size_t n, int i) { return AlgElement::letters(n, {ALetter::t(i)}); }
AlgElement tie(std::size_t n, int a, int b) { return AlgElement::ties(TiePartition(n).tied(a, b)); }

// Elements are stored as unreduced words: structural equality for identities
// that need no rewriting, probe equality for the rest.
bool same(const AlgElement& a, const AlgElement& b) { return (a - b).is_zero(); }
bool equiv(const AlgElement& a, const AlgElement& b) { return trace_probe_equal(a, b); }

TiedWord inverse_word(const TiedWord& v) {
    TiedWord r{v.n, {}};
    for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) {
        auto g = *it;
        g.sign = -g.sign;
        r.letters.push_back(g);
    }
    return r;
}

}  // namespace

TEST_CASE("theta") {
    CHECK(same(theta(w("s1")), AlgElement::term(2, 1, TiePartition(2), {1})));
    const auto inv = theta(w("-s1"));
    CHECK(same(inv, T(2, 1) - tie(2, 1, 2) * c("du")));
    CHECK(equiv(multiply(theta(w("s1")), inv), AlgElement::one(2)));
    CHECK(same(theta(w("e1 f")), AlgElement::ties(TiePartition::from_blocks(2, {{0, 1, 2}}))));
    CHECK(equiv(multiply(theta(w("r")), theta(w("-r"))), AlgElement::one(1)));
}

TEST_CASE("theta_L") {
    CHECK(same(theta_L(w("s1")), T(2, 1) * c("l")));
    CHECK(same(theta_L(w("r")), AlgElement::letters(1, {ALetter::b1()})));
    CHECK(equiv(theta_L(w("s1 -s1")), AlgElement::one(2)));
}

TEST_CASE("multiply") {
    CHECK(same(tie(2, 1, 2) * T(2, 1), T(2, 1) * tie(2, 1, 2)));
    CHECK(same(T(2, 1) * tie(2, 0, 1), tie(2, 0, 2) * T(2, 1)));
    const auto a = theta(w("s1 r e1 -s1"));
    CHECK(same(AlgElement::one(2) * a, a));
    CHECK(same(a * AlgElement::one(2), a));
    const auto tt = T(2, 1) * T(2, 1);
    CHECK_FALSE(same(tt, AlgElement::one(2)));
    CHECK(equiv(tt, AlgElement::one(2) + tie(2, 1, 2) * T(2, 1) * c("du")));
    const auto b = AlgElement::letters(1, {ALetter::b1()});
    CHECK(equiv(b * b, AlgElement::one(1) + tie(1, 0, 1) * b * c("dv")));
}

TEST_CASE("trace values") {
    const Scalar u = c("u"), x = c("x"), y = c("y"), z = c("z");
    CHECK(trace(AlgElement::one(3), 3) == Scalar(1));
    CHECK(trace(T(2, 1), 2) == z);
    CHECK(trace(theta(w("s1 s1")), 2) == Scalar(1) + c("du") * z);
    CHECK(trace(theta(w("f s1 s1")), 2) == x * (Scalar(1) + c("du") * z));
    CHECK(trace(theta(w("r f")), 1) == c("w"));
    CHECK(trace(theta(w("r")), 1) == y);
    CHECK(trace(theta(w("f")), 1) == x);
    CHECK(trace(theta(w("e1")), 2) == x);
    CHECK(trace(theta(w("-r")), 1) == y - c("dv") * x);
    CHECK(trace(theta(w("s1 r s1 r")), 2) == trace(theta(w("r s1 r s1")), 2));
    TraceEngine engine;
    CHECK(Scalar(engine.trace_theta(w("s1 s2 s1"))) == trace(theta(w("s1 s2 s1")), 3));
    (void)u;
}

TEST_CASE("probe equality") {
    CHECK(trace_probe_equal(theta(w("r s1 r s1")), theta(w("s1 r s1 r"))));
    CHECK(trace_probe_equal(theta(w("f e1")), theta(w("s1 f -s1 e1"))));
    CHECK_FALSE(trace_probe_equal(T(2, 1), AlgElement::one(2)));
}

TEST_CASE("trace rules as properties") {
    for (const auto& r : trace_axiom_suite(31, 200, 3, AxiomMode::Adopted)) {
        CAPTURE(r.name);
        CHECK(r.checks > 0);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? std::string() : r.failures.front()));
    }
}

TEST_CASE("trace is invariant under conjugation") {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 100; ++k) {
        const auto x = random_word(rng, {3, 6, 2});
        auto g = random_word(rng, {3, 4, 2}, true, false);
        g.n = std::max(g.n, x.n);
        auto xx = x;
        xx.n = g.n;
        bool tie_free = std::none_of(g.letters.begin(), g.letters.end(), [](const Gen& l) { return l.is_tie(); });
        if (!tie_free) continue;
        const auto conj = concat(concat(g, xx), inverse_word(g));
        CHECK(trace(theta(conj), g.n) == trace(theta(xx), g.n));
    }
}

TEST_CASE("trace is invariant under word reversal") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Gen> alphabet{Gen::rho(1), Gen::rho(-1)};
        for (int i = 1; i < static_cast<int>(n); ++i) {
            alphabet.push_back(Gen::sigma(i, 1));
            alphabet.push_back(Gen::sigma(i, -1));
        }
        std::vector<TiedWord> level{{n, {}}};
        for (int len = 1; len <= 4; ++len) {
            std::vector<TiedWord> next;
            for (const auto& v : level)
                for (const auto& g : alphabet) {
                    auto e = v;
                    e.letters.push_back(g);
                    auto r = e;
                    std::reverse(r.letters.begin(), r.letters.end());
                    CHECK(trace(theta(r), n) == trace(theta(e), n));
                    next.push_back(std::move(e));
                }
            level = std::move(next);
        }
    }
}

TEST_CASE("theta respects the defining relations") {
    const auto r = relation_suite(33, 3);
    CHECK(r.checks > 0);
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? std::string() : r.failures.front()));
}

TEST_CASE("step budget") {
    TraceEngine engine(2);
    CHECK_THROWS_AS(engine.trace_theta(w("s1 s2 s1 s2 r s1 r s2")), ReductionCap);
}
