#pragma once

// The invariant Delta_B = D^(n-1) l^e(w) tr_n(theta(w)), comparisons, and the
// property suites shared by the selftest command and the test binaries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tlst/braid.hpp"
#include "tlst/coeffring.hpp"

namespace tlst {

struct InvariantValue {
    Scalar value;
    std::size_t n = 1;
    int e = 0;            // sigma exponent sum
    std::string summary;  // components, loop numbers and tie classes of the closure
    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

/// Computed through the trace. Throws ReductionCap past the step budget.
InvariantValue delta_B(const TiedWord& w);

struct CompareReport {
    InvariantValue first;
    InvariantValue second;
    Scalar first_skein;
    Scalar second_skein;
    bool equal = false;  // the two invariants agree
    bool first_agrees = false;   // trace and skein agree on the first word
    bool second_agrees = false;
};

CompareReport invariant_compare(const TiedWord& w1, const TiedWord& w2);

struct WordBounds {
    std::size_t max_strands = 4;
    std::size_t max_length = 10;
    int max_rho = 2;  // bound on |rho exponent sum|
};

/// Uniform random word over the core generators s_i, -s_i, r, -r, e_i, f
/// with 1 <= n <= max_strands. Letter choice uses rng() % k so the output
/// only depends on the engine.
TiedWord random_word(std::mt19937_64& rng, const WordBounds& b, bool loops = true, bool fixed_ties = true);

struct MarkovBounds {
    WordBounds word;
    int max_moves = 4;
};

struct MarkovFailure {
    TiedWord word;
    std::vector<MarkovMove> moves;
    TiedWord moved;
    Scalar before;
    Scalar after;
};

struct MarkovReport {
    std::size_t trials = 0;
    std::size_t moves_applied = 0;
    std::vector<MarkovFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Random words under random admissible move sequences; delta_B must not move.
MarkovReport markov_suite(std::uint64_t seed, std::size_t trials, const MarkovBounds& bounds = {});

struct MirrorReport {
    Scalar value;     // delta_B(w)
    Scalar mirrored;  // delta_B(mirror_word(w))
    Scalar expected;  // mirror_map(value)
    bool holds = false;
};

/// Throws PreconditionViolated unless all standard components are tied together.
MirrorReport mirror_check(const TiedWord& w);

/// For words without r, f and ties to the fixed strand: delta_B is unchanged
/// by two random rational substitutions of (y, w, v). Throws
/// PreconditionViolated otherwise.
bool affine_independent(const TiedWord& w, std::uint64_t seed);

struct SuiteResult {
    explicit SuiteResult(std::string n, std::size_t c = 0) : name(std::move(n)), checks(c) {}

    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // one reproducer per line
    double seconds = 0;
    bool ok() const { return failures.empty(); }
};

/// Unknots, the six Hopf links and the worked expansion of "e1 f r s1 s1".
std::vector<SuiteResult> golden_suite();
/// Literal: rule (v) in both forms for every X. Adopted: rule (v) as this
/// trace satisfies it, tr(X Bp(n) F_n) = w tr(X) for X free of r and f, and
/// tr(X Bp(n) E_{n-1}) = x tr(X Bp(n-1)) for every X.
enum class AxiomMode { Literal, Adopted };

/// One result per trace rule form, `trials` random elements each, n <= max_n.
std::vector<SuiteResult> trace_axiom_suite(std::uint64_t seed, std::size_t trials, std::size_t max_n = 3,
                                           AxiomMode mode = AxiomMode::Literal);
/// Every defining relation of TB_n^B in `contexts` random contexts, plus the
/// probe-equality of theta(lhs) and theta(rhs).
SuiteResult relation_suite(std::uint64_t seed, std::size_t contexts);
/// Trace and skein evaluation on every word of length <= max_len over the core
/// generators of TB_strands^B, then on `random_words` random words of length <= random_len.
SuiteResult agreement_suite(std::size_t max_len, std::size_t strands, std::size_t random_words, std::size_t random_len,
                            std::uint64_t seed);
SuiteResult markov_invariance_suite(std::uint64_t seed, std::size_t trials, const MarkovBounds& bounds = {});
SuiteResult mirror_suite(std::uint64_t seed, std::size_t trials);
SuiteResult affine_suite(std::uint64_t seed, std::size_t trials);

}  // namespace tlst
