#pragma once

// Set partitions of {0, 1, ..., n}; element 0 is the fixed strand.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tlst {

/// Permutation of {1..n}, stored with a leading fixed point at index 0.
class Perm {
public:
    Perm() : img_{0} {}
    explicit Perm(std::size_t n);  // identity
    explicit Perm(std::vector<int> images);  // images[0] must be 0
    static Perm transposition(std::size_t n, int i);  // s_i = (i i+1)

    std::size_t size() const { return img_.size() - 1; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }
    Perm inverse() const;
    bool is_identity() const;
    /// Cycles of the permutation on {1..n}, each starting at its least
    /// element, ordered by that element.
    std::vector<std::vector<int>> cycles() const;

    /// Function composition: (a * b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

class TiePartition {
public:
    TiePartition() : rep_{0} {}
    /// Discrete partition of {0..n}.
    explicit TiePartition(std::size_t n);
    static TiePartition from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs);
    static TiePartition from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks);

    std::size_t n() const { return rep_.size() - 1; }
    /// Least element of the block containing i.
    int rep(int i) const { return rep_[static_cast<std::size_t>(i)]; }
    bool same_block(int a, int b) const { return rep(a) == rep(b); }
    bool is_discrete() const;
    bool is_singleton(int i) const;
    std::vector<std::vector<int>> blocks() const;

    /// Join with the single tie {a, b}.
    TiePartition tied(int a, int b) const;
    /// Restriction to {0..m}, m <= n.
    TiePartition restricted(std::size_t m) const;
    /// Same blocks, with singletons appended up to n = m >= n().
    TiePartition extended(std::size_t m) const;

    std::string to_string() const;
    friend bool operator==(const TiePartition&, const TiePartition&) = default;
    friend auto operator<=>(const TiePartition&, const TiePartition&) = default;
    std::size_t hash() const;

private:
    explicit TiePartition(std::vector<std::uint8_t> rep) : rep_(std::move(rep)) {}
    static TiePartition from_parent(std::vector<int> parent);
    std::vector<std::uint8_t> rep_;
};

/// Union of the two equivalence relations. Throws SizeMismatch.
TiePartition join(const TiePartition& p, const TiePartition& q);

/// Moves element i to perm(i) for i in 1..n; 0 stays 0.
TiePartition apply_perm(const TiePartition& p, const Perm& perm);

struct Peeled {
    bool tied_to_zero;
    bool tied_to_moving;
    TiePartition rest;
};

/// Reports how strand n is tied and restricts to {0..n-1}. Requires n >= 1.
Peeled peel(const TiePartition& p);

/// Partition of {0, 1..m} where 0 is the fixed component and k is
/// cycles[k-1]: components are joined when some of their strands are tied.
TiePartition induced_component_partition(const TiePartition& p,
                                         const std::vector<std::vector<int>>& cycles);

}  // namespace tlst

template <>
struct std::hash<tlst::TiePartition> {
    std::size_t operator()(const tlst::TiePartition& p) const noexcept { return p.hash(); }
};
