#include "tlst/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "tlst/errors.hpp"

namespace tlst {

Gen Gen::eta_gen(int i, int j) {
    if (i > j) std::swap(i, j);
    if (j == i + 1) return eta(i);
    return {GenKind::EtaGen, i, j, 1};
}

std::pair<int, int> Gen::tie_pair() const {
    switch (kind) {
        case GenKind::Eta: return {i, i + 1};
        case GenKind::Phi: return {0, 1};
        case GenKind::EtaGen: return {i, j};
        case GenKind::PhiGen: return {0, j};
        default: throw PreconditionViolated("tie_pair on a braid letter");
    }
}

std::string Gen::to_string() const {
    switch (kind) {
        case GenKind::Sigma: return (sign < 0 ? "-s" : "s") + std::to_string(i);
        case GenKind::Rho: return sign < 0 ? "-r" : "r";
        case GenKind::Eta: return "e" + std::to_string(i);
        case GenKind::Phi: return "f";
        case GenKind::EtaGen: return "e" + std::to_string(i) + "," + std::to_string(j);
        case GenKind::PhiGen: return "f" + std::to_string(j);
    }
    return {};
}

std::string TiedWord::to_string() const {
    std::string s;
    for (const auto& g : letters) {
        if (!s.empty()) s += ' ';
        s += g.to_string();
    }
    return s;
}

std::size_t required_strands(const Gen& g) {
    switch (g.kind) {
        case GenKind::Sigma:
        case GenKind::Eta: return static_cast<std::size_t>(g.i) + 1;
        case GenKind::Rho:
        case GenKind::Phi: return 1;
        case GenKind::EtaGen:
        case GenKind::PhiGen: return static_cast<std::size_t>(g.j);
    }
    return 1;
}

void validate(const TiedWord& w) {
    if (w.n < 1) throw IndexOutOfRange("strand count must be at least 1");
    for (const auto& g : w.letters) {
        const bool bad_low = (g.kind == GenKind::Sigma || g.kind == GenKind::Eta || g.kind == GenKind::EtaGen)
                                 ? g.i < 1
                                 : (g.kind == GenKind::PhiGen && g.j < 1);
        if (bad_low || required_strands(g) > w.n)
            throw IndexOutOfRange("letter " + g.to_string() + " does not fit on " + std::to_string(w.n) +
                                  " strands");
    }
}

namespace {

int parse_index(std::string_view tok, std::size_t& k, std::size_t pos) {
    if (k >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[k])))
        throw SyntaxError("expected an index in '" + std::string(tok) + "'", pos + k);
    int v = 0;
    while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) {
        v = v * 10 + (tok[k] - '0');
        if (v > 200) throw IndexOutOfRange("index too large in '" + std::string(tok) + "'");
        ++k;
    }
    return v;
}

Gen parse_token(std::string_view tok, std::size_t pos) {
    std::size_t k = 0;
    int sign = 1;
    if (tok[0] == '-') {
        sign = -1;
        ++k;
    }
    if (k >= tok.size()) throw SyntaxError("dangling '-'", pos);
    const char c = tok[k++];
    Gen g{};
    switch (c) {
        case 's': {
            const int i = parse_index(tok, k, pos);
            if (i < 1) throw SyntaxError("sigma index must be >= 1", pos);
            g = Gen::sigma(i, sign);
            break;
        }
        case 'r':
            g = Gen::rho(sign);
            break;
        case 'e': {
            if (sign < 0) throw SyntaxError("ties have no inverse", pos);
            const int i = parse_index(tok, k, pos);
            if (i < 1) throw SyntaxError("tie index must be >= 1", pos);
            if (k < tok.size() && tok[k] == ',') {
                ++k;
                const int j = parse_index(tok, k, pos);
                if (j < 1 || j == i) throw SyntaxError("generalized tie needs two distinct strands", pos);
                g = Gen::eta_gen(i, j);
            } else {
                g = Gen::eta(i);
            }
            break;
        }
        case 'f': {
            if (sign < 0) throw SyntaxError("ties have no inverse", pos);
            if (k < tok.size()) {
                const int j = parse_index(tok, k, pos);
                if (j < 1) throw SyntaxError("phi index must be >= 1", pos);
                g = j == 1 ? Gen::phi() : Gen::phi_gen(j);
            } else {
                g = Gen::phi();
            }
            break;
        }
        default: throw SyntaxError("unknown letter '" + std::string(1, c) + "'", pos + k - 1);
    }
    if (k != tok.size()) throw SyntaxError("trailing characters in '" + std::string(tok) + "'", pos + k);
    return g;
}

}  // namespace

TiedWord parse_word(std::string_view text, std::optional<std::size_t> strands) {
    TiedWord w;
    std::size_t need = 1;
    std::size_t k = 0;
    while (k < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[k]))) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        Gen g = parse_token(text.substr(start, k - start), start);
        need = std::max(need, required_strands(g));
        w.letters.push_back(g);
    }
    if (strands) {
        if (*strands < need)
            throw IndexOutOfRange("word needs " + std::to_string(need) + " strands, got " +
                                  std::to_string(*strands));
        w.n = *strands;
    } else {
        w.n = need;
    }
    return w;
}

std::vector<Gen> eta_gen_expansion(int i, int j, const std::vector<int>& signs) {
    std::vector<Gen> out;
    for (int l = i; l <= j - 2; ++l) out.push_back(Gen::sigma(l, signs.at(static_cast<std::size_t>(l - i))));
    out.push_back(Gen::eta(j - 1));
    for (int l = j - 2; l >= i; --l) out.push_back(Gen::sigma(l, -signs.at(static_cast<std::size_t>(l - i))));
    return out;
}

TiedWord expand_tie_macros(const TiedWord& w) {
    TiedWord out{w.n, {}};
    for (const auto& g : w.letters) {
        if (g.kind == GenKind::EtaGen) {
            auto e = eta_gen_expansion(g.i, g.j, std::vector<int>(static_cast<std::size_t>(g.j - g.i), 1));
            out.letters.insert(out.letters.end(), e.begin(), e.end());
        } else if (g.kind == GenKind::PhiGen) {
            for (int l = g.j - 1; l >= 1; --l) out.letters.push_back(Gen::sigma(l, 1));
            out.letters.push_back(Gen::phi());
            for (int l = 1; l <= g.j - 1; ++l) out.letters.push_back(Gen::sigma(l, -1));
        } else {
            out.letters.push_back(g);
        }
    }
    return out;
}

Perm project_tau(const TiedWord& w) {
    // at[p] = starting position of the strand currently at position p
    std::vector<int> at(w.n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& g : w.letters)
        if (g.kind == GenKind::Sigma) std::swap(at[static_cast<std::size_t>(g.i)], at[static_cast<std::size_t>(g.i) + 1]);
    std::vector<int> img(w.n + 1, 0);
    for (std::size_t p = 1; p <= w.n; ++p) img[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
    return Perm(std::move(img));
}

std::vector<int> signed_perm(const TiedWord& w) {
    std::vector<int> at(w.n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& g : w.letters) {
        if (g.kind == GenKind::Sigma)
            std::swap(at[static_cast<std::size_t>(g.i)], at[static_cast<std::size_t>(g.i) + 1]);
        else if (g.kind == GenKind::Rho)
            at[1] = -at[1];
    }
    std::vector<int> img(w.n + 1, 0);
    for (std::size_t p = 1; p <= w.n; ++p) {
        const int s = at[p];
        img[static_cast<std::size_t>(std::abs(s))] = s < 0 ? -static_cast<int>(p) : static_cast<int>(p);
    }
    return img;
}

namespace {

struct Transported {
    TiePartition gamma;
    TiedWord beta;
    std::vector<std::pair<int, int>> ties;
};

Transported transport_ties(const TiedWord& w) {
    validate(w);
    Transported t{TiePartition(w.n), TiedWord{w.n, {}}, {}};
    std::vector<int> at(w.n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& g : w.letters) {
        if (g.is_tie()) {
            auto [a, b] = g.tie_pair();
            const int sa = at[static_cast<std::size_t>(a)];
            const int sb = at[static_cast<std::size_t>(b)];
            t.gamma = t.gamma.tied(sa, sb);
            t.ties.emplace_back(std::min(sa, sb), std::max(sa, sb));
        } else {
            if (g.kind == GenKind::Sigma)
                std::swap(at[static_cast<std::size_t>(g.i)], at[static_cast<std::size_t>(g.i) + 1]);
            t.beta.letters.push_back(g);
        }
    }
    return t;
}

}  // namespace

GammaBeta gamma_beta(const TiedWord& w) {
    auto t = transport_ties(w);
    return {std::move(t.gamma), std::move(t.beta)};
}

TiedWord recompose(const GammaBeta& gb) {
    TiedWord out{gb.beta.n, {}};
    for (const auto& block : gb.gamma.blocks()) {
        for (std::size_t k = 1; k < block.size(); ++k) {
            const int a = block[k - 1];
            const int b = block[k];
            if (a == 0)
                out.letters.push_back(b == 1 ? Gen::phi() : Gen::phi_gen(b));
            else
                out.letters.push_back(Gen::eta_gen(a, b));
        }
    }
    out.letters.insert(out.letters.end(), gb.beta.letters.begin(), gb.beta.letters.end());
    return out;
}

Closure closure_components(const TiedWord& beta) {
    for (const auto& g : beta.letters)
        if (g.is_tie()) throw TiePresent();
    validate(beta);
    const Perm tau = project_tau(beta);
    Closure c;
    c.cycles = tau.cycles();
    std::vector<int> owner(beta.n + 1, 0);
    for (std::size_t k = 0; k < c.cycles.size(); ++k)
        for (int s : c.cycles[k]) owner[static_cast<std::size_t>(s)] = static_cast<int>(k);
    c.loop_numbers.assign(c.cycles.size(), 0);
    std::vector<int> at(beta.n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto& g : beta.letters) {
        if (g.kind == GenKind::Sigma)
            std::swap(at[static_cast<std::size_t>(g.i)], at[static_cast<std::size_t>(g.i) + 1]);
        else
            c.loop_numbers[static_cast<std::size_t>(owner[static_cast<std::size_t>(at[1])])] += g.sign;
    }
    return c;
}

TiedWord free_reduce(const TiedWord& beta) {
    TiedWord out{beta.n, {}};
    for (const auto& g : beta.letters) {
        if (!out.letters.empty()) {
            const Gen& last = out.letters.back();
            if (!g.is_tie() && last.kind == g.kind && last.i == g.i && last.sign == -g.sign) {
                out.letters.pop_back();
                continue;
            }
        }
        out.letters.push_back(g);
    }
    return out;
}

int sigma_exponent_sum(const TiedWord& w) {
    int e = 0;
    for (const auto& g : w.letters)
        if (g.kind == GenKind::Sigma) e += g.sign;
    return e;
}

TiedWord mirror_word(const TiedWord& w) {
    TiedWord out = w;
    for (auto& g : out.letters)
        if (!g.is_tie()) g.sign = -g.sign;
    return out;
}

TiedWord concat(const TiedWord& a, const TiedWord& b) {
    TiedWord out{std::max(a.n, b.n), a.letters};
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

std::string MarkovMove::to_string() const {
    switch (kind) {
        case MoveKind::Rotate: return "rotate(" + std::to_string(arg) + ")";
        case MoveKind::Stabilize: return arg < 0 ? "stabilize(-)" : "stabilize(+)";
        case MoveKind::TieMoving: return "tie-moving(" + std::to_string(arg) + ")";
        case MoveKind::TieFixed: return "tie-fixed(" + std::to_string(arg) + ")";
    }
    return {};
}

TiedWord apply_markov(const TiedWord& w, const MarkovMove& move) {
    validate(w);
    switch (move.kind) {
        case MoveKind::Rotate: {
            if (move.arg < 0 || static_cast<std::size_t>(move.arg) > w.letters.size())
                throw PreconditionViolated("rotation split point outside the word");
            TiedWord out{w.n, {}};
            out.letters.assign(w.letters.begin() + move.arg, w.letters.end());
            out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + move.arg);
            return out;
        }
        case MoveKind::Stabilize: {
            if (move.arg != 1 && move.arg != -1) throw PreconditionViolated("stabilization sign must be +1 or -1");
            TiedWord out{w.n + 1, w.letters};
            out.letters.push_back(Gen::sigma(static_cast<int>(w.n), move.arg));
            return out;
        }
        case MoveKind::TieMoving:
        case MoveKind::TieFixed: {
            const int i = move.arg;
            if (i < 1 || static_cast<std::size_t>(i) > w.n) throw PreconditionViolated("strand index out of range");
            const int j = project_tau(w)(i);
            TiedWord out{w.n, {}};
            if (move.kind == MoveKind::TieMoving) {
                if (i == j) throw PreconditionViolated("tau(i) = i: eta_{i,i} is the identity");
                out.letters.push_back(Gen::eta_gen(i, j));
            } else {
                if (!gamma_beta(w).gamma.same_block(i, 0))
                    throw PreconditionViolated("strand " + std::to_string(i) + " is not tied to the fixed strand");
                out.letters.push_back(j == 1 ? Gen::phi() : Gen::phi_gen(j));
            }
            out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
            return out;
        }
    }
    throw PreconditionViolated("unknown move");
}

LinkSummary link_summary(const TiedWord& w) {
    auto t = transport_ties(w);
    LinkSummary s{t.gamma, t.beta, closure_components(t.beta), TiePartition(), {}, true};
    s.components = induced_component_partition(s.gamma, s.closure.cycles);
    for (std::size_t k = 0; k < t.ties.size(); ++k) {
        TiePartition without(w.n);
        for (std::size_t l = 0; l < t.ties.size(); ++l)
            if (l != k) without = without.tied(t.ties[l].first, t.ties[l].second);
        const bool essential = induced_component_partition(without, s.closure.cycles) != s.components;
        s.ties.push_back({t.ties[k], essential});
    }
    for (int loops : s.closure.loop_numbers)
        if (loops != 0) s.affine = false;
    for (std::size_t k = 1; k <= s.closure.cycles.size(); ++k)
        if (s.components.same_block(0, static_cast<int>(k))) s.affine = false;
    return s;
}

}  // namespace tlst
