#pragma once

// The bt-algebra of type B, E_n^B, and its Markov trace.
//
// An element is a linear combination of terms P * W where P is a set
// partition of {0..n} (the product of the E_{i,j} and F_j it contains) and W
// is a word in T_1..T_{n-1}, B_1. Ties always sit on the left: a tie passing
// T_i is relabelled by the transposition s_i, and ties commute with B_1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlst/braid.hpp"
#include "tlst/coeffring.hpp"
#include "tlst/partition.hpp"

namespace tlst {

/// T(i) for i >= 1, B1, or the loop element Bp(k) = T_{k-1}..T_1 B1 T_1^-1..T_{k-1}^-1.
struct ALetter {
    enum class Kind : std::uint8_t { T, B1, Bp } kind;
    int index = 0;

    static ALetter t(int i) { return {Kind::T, i}; }
    static ALetter b1() { return {Kind::B1, 1}; }
    static ALetter bp(int k) { return k == 1 ? b1() : ALetter{Kind::Bp, k}; }
    friend bool operator==(const ALetter&, const ALetter&) = default;
    friend auto operator<=>(const ALetter&, const ALetter&) = default;
};

/// Flat internal alphabet: 0 is B1, i > 0 is T_i, -i is T_i^-1.
using AWord = std::vector<std::int8_t>;

AWord flatten(const std::vector<ALetter>& letters);

struct ATerm {
    Scalar coeff;
    TiePartition ties;
    AWord word;
};

class AlgElement {
public:
    explicit AlgElement(std::size_t n = 1) : n_(n) {}
    static AlgElement one(std::size_t n);
    static AlgElement term(std::size_t n, const Scalar& c, const TiePartition& ties, AWord word);
    static AlgElement letters(std::size_t n, const std::vector<ALetter>& word);
    static AlgElement ties(const TiePartition& p);

    std::size_t n() const { return n_; }
    /// Terms with nonzero coefficients, ordered by (ties, word).
    std::vector<ATerm> terms() const;
    bool is_zero() const { return terms_.empty(); }

    AlgElement& operator+=(const AlgElement& o);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a += b * Scalar(-1); }
    friend AlgElement operator*(const AlgElement& a, const Scalar& c);
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b);

    /// Same element viewed in E_m^B, m >= n.
    AlgElement embedded(std::size_t m) const;
    /// Debug dump: `coeff * {partition} * word` per line.
    std::string dump() const;

private:
    using Key = std::pair<TiePartition, AWord>;
    void add(const TiePartition& p, const AWord& w, const Scalar& c);
    std::size_t n_;
    std::map<Key, Scalar> terms_;
};

AlgElement multiply(const AlgElement& a, const AlgElement& b);

/// sigma_i -> T_i, rho -> B1, eta_i -> E_i, phi -> F_1; inverses expand as
/// T_i^-1 = T_i - (u - 1/u) E_i and B1^-1 = B1 - (v - 1/v) F_1.
AlgElement theta(const TiedWord& w);
/// theta with every sigma_i^(+-1) scaled by l^(+-1).
AlgElement theta_L(const TiedWord& w);

/// Evaluates tr_n by rewriting each word into the coset normal form
/// P * r_1 r_2 ... r_n, r_m in {R_k, Bp(m) R_k} with R_k = T_{m-1}..T_k,
/// and peeling the top coset with the Markov rules. Holds a memo table;
/// not thread-safe, use one engine per thread.
class TraceEngine {
public:
    static constexpr std::size_t kDefaultBudget = 1'000'000;
    /// kDefaultBudget unless TLST_STEP_BUDGET is set in the environment.
    static std::size_t default_budget();

    TraceEngine() : budget_(default_budget()) {}
    explicit TraceEngine(std::size_t budget) : budget_(budget) {}

    /// tr_n(P * W) as a Laurent polynomial in u, v, x, y, w, z.
    Poly trace_word(std::size_t n, const TiePartition& ties, const AWord& word);
    /// tr_n of a TB_n^B word through theta, without expanding theta first.
    Poly trace_theta(const TiedWord& w);
    Scalar trace(const AlgElement& a, std::size_t n);

    std::size_t cache_size() const { return nf_cache_.size(); }
    void set_budget(std::size_t b) { budget_ = b; }

    /// Coset code per level: k for R_k, m + k for Bp(m) R_k (1 <= k <= m).
    /// The identity is code m at every level.
    using Levels = std::vector<std::uint8_t>;
    struct NFKey {
        TiePartition ties;
        Levels levels;
        friend bool operator==(const NFKey&, const NFKey&) = default;
    };
    struct NFKeyHash {
        std::size_t operator()(const NFKey& k) const noexcept;
    };
    using NormalForm = std::unordered_map<NFKey, Poly, NFKeyHash>;

    static NormalForm identity(std::size_t n, const TiePartition& ties);
    /// Right multiplication by a generator (0 = B1, i > 0 = T_i) or its
    /// inverse (sign = -1), and by the tie joining positions a and b.
    NormalForm times_letter(const NormalForm& f, int letter, int sign = 1);
    static NormalForm times_ties(const NormalForm& f, int a, int b);
    static AWord word_of(const Levels& levels);

private:
    struct Outcome {
        Poly coeff;
        Levels levels;
        int tie_a = -1;
        int tie_b = -1;
    };
    std::vector<Outcome> mul_gen(const Levels& levels, std::size_t m, int gen);
    Poly trace_nf(const NFKey& key);
    Poly trace_word_impl(std::size_t n, const TiePartition& ties, const AWord& word);
    void tick();

    std::size_t budget_;
    std::size_t steps_ = 0;
    std::unordered_map<NFKey, Poly, NFKeyHash> nf_cache_;
};

/// Trace using a per-thread engine.
Scalar trace(const AlgElement& a, std::size_t n);

/// Probes used by trace_probe_equal when none are given: theta-images of
/// positive words of length <= 4 and all partition idempotents.
std::vector<AlgElement> default_probes(std::size_t n);

/// Sound but incomplete equality: tr((a - b) g) = 0 for every probe g.
bool trace_probe_equal(const AlgElement& a, const AlgElement& b, const std::vector<AlgElement>& probes);
bool trace_probe_equal(const AlgElement& a, const AlgElement& b);

}  // namespace tlst
