#include "tlst/skein.hpp"

#include <algorithm>

#include "tlst/errors.hpp"

namespace tlst {

namespace {

Scalar lambda() { return {RatFn(0), RatFn(1)}; }

std::string memo_key(const SkeinNode& node, const SkeinOptions& opt) {
    std::string k = std::to_string(node.beta.n) + '|' + node.gamma.to_string() + '|' + node.beta.to_string();
    if (opt.reverse_components || opt.base_shift) k += '|' + std::to_string(opt.reverse_components) + ',' + std::to_string(opt.base_shift);
    return k;
}

std::vector<std::vector<int>> traversal_order(const TiedWord& beta, const SkeinOptions& opt) {
    auto cycles = project_tau(beta).cycles();
    if (opt.reverse_components) std::reverse(cycles.begin(), cycles.end());
    for (auto& c : cycles) std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(opt.base_shift % c.size()), c.end());
    return cycles;
}

}  // namespace

SkeinNode SkeinNode::from_word(const TiedWord& w) {
    auto gb = gamma_beta(w);
    return {std::move(gb.gamma), free_reduce(gb.beta)};
}

std::vector<std::size_t> classify_crossings(const SkeinNode& node, const SkeinOptions& opt) {
    const auto& letters = node.beta.letters;
    std::vector<bool> seen(letters.size(), false);
    std::vector<std::size_t> deciding;
    for (const auto& cycle : traversal_order(node.beta, opt)) {
        for (int start : cycle) {
            int p = start;
            for (std::size_t k = 0; k < letters.size(); ++k) {
                const Gen& g = letters[k];
                if (g.kind != GenKind::Sigma || (p != g.i && p != g.i + 1)) continue;
                const bool over = (g.sign > 0) == (p == g.i);
                if (!seen[k]) {
                    seen[k] = true;
                    if (over) deciding.push_back(k);
                }
                p = p == g.i ? g.i + 1 : g.i;
            }
        }
    }
    return deciding;
}

SkeinStep skein_step(const SkeinNode& node, std::size_t position) {
    if (position >= node.beta.letters.size() || node.beta.letters[position].kind != GenKind::Sigma)
        throw NotACrossing("position " + std::to_string(position) + " is not a sigma letter");
    const Gen g = node.beta.letters[position];
    auto sw = node.beta;
    sw.letters[position].sign = -g.sign;
    auto sm = node.beta;
    sm.letters[position] = Gen::eta(g.i);
    return {SkeinNode{node.gamma, free_reduce(sw)}, SkeinNode::from_word(recompose({node.gamma, sm})), g.sign};
}

TiedWord ascending_unlink_word(const TiePartition& ties, const std::vector<int>& loop_numbers) {
    const auto m = loop_numbers.size();
    if (ties.n() != m) throw NotTrivial("tie partition does not match the component count");
    TiedWord beta{std::max<std::size_t>(m, 1), {}};
    for (std::size_t k = 1; k <= m; ++k) {
        const int t = loop_numbers[k - 1];
        if (t == 0) continue;
        for (int i = static_cast<int>(k) - 1; i >= 1; --i) beta.letters.push_back(Gen::sigma(i, -1));
        for (int r = 0; r < std::abs(t); ++r) beta.letters.push_back(Gen::rho(t > 0 ? 1 : -1));
        for (int i = 1; i < static_cast<int>(k); ++i) beta.letters.push_back(Gen::sigma(i, 1));
    }
    return recompose({ties, beta});
}

Scalar SkeinEngine::leaf(const TiePartition& ties, const std::vector<int>& loop_numbers) {
    std::string key = ties.to_string();
    for (int t : loop_numbers) key += ',' + std::to_string(t);
    if (auto it = leaf_memo_.find(key); it != leaf_memo_.end()) return it->second;
    const auto w = ascending_unlink_word(ties, loop_numbers);
    const auto m = static_cast<int>(loop_numbers.size());
    trace_.set_budget(budget_);
    const Scalar v = constant("D").pow(m - 1) * Scalar(trace_.trace_theta(w));
    leaf_memo_.emplace(std::move(key), v);
    return v;
}

Scalar eval_trivial(const TiePartition& ties, const std::vector<int>& loop_numbers) {
    thread_local SkeinEngine engine;
    return engine.leaf(ties, loop_numbers);
}

Scalar SkeinEngine::eval_node(const SkeinNode& node, const SkeinOptions& opt) {
    const auto key = memo_key(node, opt);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++steps_ > budget_) throw ReductionCap(budget_);

    Scalar value;
    const auto deciding = classify_crossings(node, opt);
    if (deciding.empty()) {
        const auto cycles = traversal_order(node.beta, opt);
        const auto closure = closure_components(node.beta);
        // loop numbers follow closure.cycles, which are ordered by least strand
        std::vector<int> loops;
        for (const auto& c : cycles) {
            const auto lo = *std::min_element(c.begin(), c.end());
            for (std::size_t k = 0; k < closure.cycles.size(); ++k)
                if (closure.cycles[k].front() == lo) loops.push_back(closure.loop_numbers[k]);
        }
        value = leaf(induced_component_partition(node.gamma, cycles), loops);
    } else {
        const auto step = skein_step(node, deciding.front());
        const Scalar l = lambda();
        const Scalar du(delta_u());
        const Scalar a = step.sign > 0 ? l * l : (l * l).inverse();
        const Scalar b = step.sign > 0 ? l * du : -(l.inverse() * du);
        value = a * eval_node(step.switched, opt) + b * eval_node(step.smoothed, opt);
    }
    memo_.emplace(key, value);
    return value;
}

Scalar SkeinEngine::evaluate(const TiedWord& w, const SkeinOptions& opt) {
    validate(w);
    steps_ = 0;
    return eval_node(SkeinNode::from_word(w), opt);
}

std::optional<SkeinExpansion> SkeinEngine::expand_first(const TiedWord& w, const SkeinOptions& opt) {
    validate(w);
    steps_ = 0;
    const auto node = SkeinNode::from_word(w);
    const auto deciding = classify_crossings(node, opt);
    if (deciding.empty()) return std::nullopt;
    auto step = skein_step(node, deciding.front());
    const Scalar l = lambda();
    const Scalar du(delta_u());
    SkeinExpansion e{deciding.front(),
                     step,
                     step.sign > 0 ? l * l : (l * l).inverse(),
                     step.sign > 0 ? l * du : -(l.inverse() * du),
                     eval_node(step.switched, opt),
                     eval_node(step.smoothed, opt)};
    return e;
}

Scalar evaluate_FB(const TiedWord& w, const SkeinOptions& opt) {
    thread_local SkeinEngine engine;
    return engine.evaluate(w, opt);
}

}  // namespace tlst
