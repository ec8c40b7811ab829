#pragma once

// Words in the tied braid monoid of type B on n moving strands plus the
// fixed strand 0.
//
// Convention: words act left to right, tau(ab) = tau(b) * tau(a). A strand
// that starts at top position i ends at bottom position tau(i).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlst/partition.hpp"

namespace tlst {

enum class GenKind { Sigma, Rho, Eta, Phi, EtaGen, PhiGen };

/// One letter. Sigma(i, sign), Rho(sign), Eta(i), Phi, EtaGen(i, j) with
/// i < j, PhiGen(j).
struct Gen {
    GenKind kind;
    int i = 0;
    int j = 0;
    int sign = 1;

    static Gen sigma(int i, int sign = 1) { return {GenKind::Sigma, i, 0, sign}; }
    static Gen rho(int sign = 1) { return {GenKind::Rho, 0, 0, sign}; }
    static Gen eta(int i) { return {GenKind::Eta, i, 0, 1}; }
    static Gen phi() { return {GenKind::Phi, 0, 0, 1}; }
    static Gen eta_gen(int i, int j);
    static Gen phi_gen(int j) { return {GenKind::PhiGen, 0, j, 1}; }

    bool is_tie() const { return kind != GenKind::Sigma && kind != GenKind::Rho; }
    /// The pair of positions joined by a tie letter (0 = fixed strand).
    std::pair<int, int> tie_pair() const;
    std::string to_string() const;
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct TiedWord {
    std::size_t n = 1;
    std::vector<Gen> letters;

    std::string to_string() const;
    friend bool operator==(const TiedWord&, const TiedWord&) = default;
};

/// Minimum strand count a letter needs.
std::size_t required_strands(const Gen& g);
/// Throws IndexOutOfRange unless every letter fits in w.n strands.
void validate(const TiedWord& w);

/// Grammar: s<i> -s<i> r -r e<i> e<i>,<j> f f<j>, whitespace separated.
/// Throws SyntaxError (with character position) or IndexOutOfRange.
TiedWord parse_word(std::string_view text, std::optional<std::size_t> strands = std::nullopt);

/// Replaces generalized ties by their definitions in core generators.
TiedWord expand_tie_macros(const TiedWord& w);
/// Generalized-tie expansion with an explicit sign choice for each conjugating
/// sigma (signs[k] for sigma_{i+k}); used to check all equivalent forms.
std::vector<Gen> eta_gen_expansion(int i, int j, const std::vector<int>& signs);

Perm project_tau(const TiedWord& w);

/// Signed permutation image in W_n: entry m is the signed end position of
/// the strand starting at m. Diagnostic only.
std::vector<int> signed_perm(const TiedWord& w);

struct GammaBeta {
    TiePartition gamma;
    TiedWord beta;
};

/// Pushes every tie to the top of the braid.
GammaBeta gamma_beta(const TiedWord& w);
/// The word gamma * beta with gamma written as generalized ties.
TiedWord recompose(const GammaBeta& gb);

struct Closure {
    std::vector<std::vector<int>> cycles;
    std::vector<int> loop_numbers;
};

/// Throws TiePresent if beta has tie letters.
Closure closure_components(const TiedWord& beta);

/// Cancels adjacent sigma_i sigma_i^-1 and rho rho^-1 pairs.
TiedWord free_reduce(const TiedWord& beta);

int sigma_exponent_sum(const TiedWord& w);
/// All sigma and rho signs flipped.
TiedWord mirror_word(const TiedWord& w);
TiedWord concat(const TiedWord& a, const TiedWord& b);

enum class MoveKind { Rotate, Stabilize, TieMoving, TieFixed };

/// Rotate: w = a b -> b a with |a| = arg. Stabilize: append sigma_n^arg
/// (arg = +1 or -1). TieMoving: prepend eta_{i, tau(i)} with i = arg.
/// TieFixed: prepend phi_{tau(i)} with i = arg tied to 0 in gamma(w).
struct MarkovMove {
    MoveKind kind;
    int arg;
    std::string to_string() const;
};

/// Throws PreconditionViolated naming the failed condition.
TiedWord apply_markov(const TiedWord& w, const MarkovMove& move);

struct TieReport {
    std::pair<int, int> strands;  // transported to the top
    bool essential;
};

struct LinkSummary {
    TiePartition gamma;
    TiedWord beta;
    Closure closure;
    TiePartition components;  // on {0 = fixed, 1..m = closure.cycles}
    std::vector<TieReport> ties;
    bool affine;
};

LinkSummary link_summary(const TiedWord& w);

}  // namespace tlst
