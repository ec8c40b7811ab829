#pragma once

// Skein evaluation of F_B on tied braid closures: switch deciding crossings
// until the diagram is ascending, then read the value of the resulting
// unlink off its components, loop numbers and ties.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlst/algebra.hpp"
#include "tlst/braid.hpp"
#include "tlst/coeffring.hpp"
#include "tlst/partition.hpp"

namespace tlst {

/// Traversal choices. Components are visited by least strand (reversed if
/// asked); each starts at the top of the strand `base_shift` steps along its
/// cycle from the least one.
struct SkeinOptions {
    bool reverse_components = false;
    std::size_t base_shift = 0;
};

/// A word in gamma-beta form: ties on top, beta tie-free.
struct SkeinNode {
    TiePartition gamma;
    TiedWord beta;

    static SkeinNode from_word(const TiedWord& w);
    TiedWord word() const { return recompose({gamma, beta}); }
};

/// Letter positions of beta whose first visit along the traversal is an
/// over-pass, in traversal order.
std::vector<std::size_t> classify_crossings(const SkeinNode& node, const SkeinOptions& opt = {});

struct SkeinStep {
    SkeinNode switched;
    SkeinNode smoothed;
    int sign;  // sign of the expanded crossing
};

/// Throws NotACrossing unless beta[position] is a sigma letter.
SkeinStep skein_step(const SkeinNode& node, std::size_t position);

/// F_B of the ascending unlink whose components (in traversal order) have
/// the given loop numbers, with `ties` on {0 = fixed, 1..m = components}.
/// Throws NotTrivial if the sizes disagree.
Scalar eval_trivial(const TiePartition& ties, const std::vector<int>& loop_numbers);

/// The braid realizing that unlink: component k is strand k, looping around
/// the axis after passing in front of strands 1..k-1.
TiedWord ascending_unlink_word(const TiePartition& ties, const std::vector<int>& loop_numbers);

/// One expansion F(node) = a * F(switched) + b * F(smoothed).
struct SkeinExpansion {
    std::size_t position;
    SkeinStep step;
    Scalar switched_coeff;
    Scalar smoothed_coeff;
    Scalar switched_value;
    Scalar smoothed_value;
};

class SkeinEngine {
public:
    SkeinEngine() : budget_(TraceEngine::default_budget()) {}
    explicit SkeinEngine(std::size_t budget) : budget_(budget), trace_(budget) {}

    /// Throws ReductionCap past the step budget.
    Scalar evaluate(const TiedWord& w, const SkeinOptions& opt = {});
    /// The first expansion of w, or nothing if w is already ascending.
    std::optional<SkeinExpansion> expand_first(const TiedWord& w, const SkeinOptions& opt = {});
    Scalar leaf(const TiePartition& ties, const std::vector<int>& loop_numbers);

    std::size_t cache_size() const { return memo_.size(); }

private:
    Scalar eval_node(const SkeinNode& node, const SkeinOptions& opt);

    std::size_t budget_;
    std::size_t steps_ = 0;
    TraceEngine trace_;
    std::unordered_map<std::string, Scalar> memo_;
    std::unordered_map<std::string, Scalar> leaf_memo_;
};

/// evaluate with a per-thread engine.
Scalar evaluate_FB(const TiedWord& w, const SkeinOptions& opt = {});

}  // namespace tlst
