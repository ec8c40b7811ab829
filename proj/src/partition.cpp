#include "tlst/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tlst/errors.hpp"

namespace tlst {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t n) : img_(n + 1) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    if (img_.empty() || img_[0] != 0) throw std::invalid_argument("Perm: images[0] must be 0");
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::transposition(std::size_t n, int i) {
    Perm p(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(i) + 1]);
    return p;
}

Perm Perm::inverse() const {
    Perm r(size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return r;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 1; s < img_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (auto i = static_cast<int>(s); !seen[static_cast<std::size_t>(i)]; i = img_[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            c.push_back(i);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw SizeMismatch(a.size(), b.size());
    Perm r(a.size());
    for (std::size_t i = 0; i < r.img_.size(); ++i) r.img_[i] = a(b(static_cast<int>(i)));
    return r;
}

// ---------------------------------------------------------------- TiePartition

namespace {

int find_root(std::vector<int>& parent, int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
        auto& p = parent[static_cast<std::size_t>(i)];
        p = parent[static_cast<std::size_t>(p)];
        i = p;
    }
    return i;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    // smaller index becomes the root so roots are block minima
    if (a < b)
        parent[static_cast<std::size_t>(b)] = a;
    else
        parent[static_cast<std::size_t>(a)] = b;
}

std::vector<int> to_parent(const TiePartition& p) {
    std::vector<int> parent(p.n() + 1);
    for (std::size_t i = 0; i <= p.n(); ++i) parent[i] = p.rep(static_cast<int>(i));
    return parent;
}

}  // namespace

TiePartition::TiePartition(std::size_t n) : rep_(n + 1) {
    if (n > 250) throw std::invalid_argument("TiePartition: too many strands");
    std::iota(rep_.begin(), rep_.end(), std::uint8_t{0});
}

TiePartition TiePartition::from_parent(std::vector<int> parent) {
    std::vector<std::uint8_t> rep(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        rep[i] = static_cast<std::uint8_t>(find_root(parent, static_cast<int>(i)));
    return TiePartition(std::move(rep));
}

TiePartition TiePartition::from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    TiePartition p(n);
    for (auto [a, b] : pairs) p = p.tied(a, b);
    return p;
}

TiePartition TiePartition::from_blocks(std::size_t n, const std::vector<std::vector<int>>& blocks) {
    TiePartition p(n);
    for (const auto& b : blocks)
        for (std::size_t k = 1; k < b.size(); ++k) p = p.tied(b[0], b[k]);
    return p;
}

bool TiePartition::is_discrete() const {
    for (std::size_t i = 0; i < rep_.size(); ++i)
        if (rep_[i] != i) return false;
    return true;
}

bool TiePartition::is_singleton(int i) const {
    for (std::size_t j = 0; j < rep_.size(); ++j)
        if (static_cast<int>(j) != i && rep_[j] == rep(i)) return false;
    return true;
}

std::vector<std::vector<int>> TiePartition::blocks() const {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < rep_.size(); ++i) {
        if (rep_[i] == i) {
            out.emplace_back();
            for (std::size_t j = i; j < rep_.size(); ++j)
                if (rep_[j] == i) out.back().push_back(static_cast<int>(j));
        }
    }
    return out;
}

TiePartition TiePartition::tied(int a, int b) const {
    const auto hi = static_cast<std::size_t>(std::max(a, b));
    if (a < 0 || b < 0 || hi > n()) throw IndexOutOfRange("tie index out of range");
    if (same_block(a, b)) return *this;
    auto parent = to_parent(*this);
    unite(parent, a, b);
    return from_parent(std::move(parent));
}

TiePartition TiePartition::restricted(std::size_t m) const {
    if (m > n()) throw SizeMismatch(m, n());
    std::vector<int> parent(m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    // blocks keep their members below m even when the old root was removed
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rep_[i] == rep_[j]) {
                unite(parent, static_cast<int>(i), static_cast<int>(j));
                break;
            }
    return from_parent(std::move(parent));
}

TiePartition TiePartition::extended(std::size_t m) const {
    if (m < n()) throw SizeMismatch(m, n());
    std::vector<std::uint8_t> rep = rep_;
    for (std::size_t i = rep.size(); i <= m; ++i) rep.push_back(static_cast<std::uint8_t>(i));
    return TiePartition(std::move(rep));
}

std::string TiePartition::to_string() const {
    std::string s;
    for (const auto& b : blocks()) {
        s += '{';
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(b[k]);
        }
        s += '}';
    }
    return s;
}

std::size_t TiePartition::hash() const {
    std::size_t h = rep_.size();
    for (auto r : rep_) h = h * 1315423911U + r;
    return h;
}

TiePartition join(const TiePartition& p, const TiePartition& q) {
    if (p.n() != q.n()) throw SizeMismatch(p.n(), q.n());
    auto parent = to_parent(p);
    for (std::size_t i = 0; i <= q.n(); ++i) unite(parent, static_cast<int>(i), q.rep(static_cast<int>(i)));
    TiePartition r(p.n());
    for (std::size_t i = 0; i <= p.n(); ++i) r = r.tied(static_cast<int>(i), find_root(parent, static_cast<int>(i)));
    return r;
}

TiePartition apply_perm(const TiePartition& p, const Perm& perm) {
    if (perm.size() != p.n()) throw SizeMismatch(p.n(), perm.size());
    TiePartition r(p.n());
    for (std::size_t i = 1; i <= p.n(); ++i) {
        const int rp = p.rep(static_cast<int>(i));
        r = r.tied(perm(static_cast<int>(i)), perm(rp));
    }
    return r;
}

Peeled peel(const TiePartition& p) {
    if (p.n() < 1) throw PreconditionViolated("peel requires n >= 1");
    const auto top = static_cast<int>(p.n());
    Peeled out{p.same_block(top, 0), false, p.restricted(p.n() - 1)};
    for (int j = 1; j < top; ++j)
        if (p.same_block(top, j)) out.tied_to_moving = true;
    return out;
}

TiePartition induced_component_partition(const TiePartition& p,
                                         const std::vector<std::vector<int>>& cycles) {
    std::vector<int> owner(p.n() + 1, -1);
    owner[0] = 0;
    for (std::size_t k = 0; k < cycles.size(); ++k)
        for (int s : cycles[k]) {
            if (s < 1 || static_cast<std::size_t>(s) > p.n())
                throw IndexOutOfRange("cycle entry out of range");
            owner[static_cast<std::size_t>(s)] = static_cast<int>(k + 1);
        }
    for (std::size_t i = 1; i <= p.n(); ++i)
        if (owner[i] < 0) throw PreconditionViolated("cycles do not cover all strands");
    TiePartition r(cycles.size());
    for (std::size_t i = 0; i <= p.n(); ++i)
        r = r.tied(owner[i], owner[static_cast<std::size_t>(p.rep(static_cast<int>(i)))]);
    return r;
}

}  // namespace tlst
