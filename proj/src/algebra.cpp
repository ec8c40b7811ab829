#include "tlst/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "tlst/errors.hpp"
#include "tlst/io.hpp"

namespace tlst {

namespace {

// at[p] = start position of the strand currently at position p.
std::vector<int> positions_after(std::size_t n, const AWord& word) {
    std::vector<int> at(n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (auto g : word)
        if (g != 0) {
            const auto i = static_cast<std::size_t>(std::abs(g));
            std::swap(at[i], at[i + 1]);
        }
    return at;
}

// Q * W = W * P where P sits after W: returns Q.
TiePartition transport_front(const TiePartition& p, const AWord& word) {
    const auto at = positions_after(p.n(), word);
    TiePartition r(p.n());
    for (std::size_t i = 1; i <= p.n(); ++i) {
        const int ri = p.rep(static_cast<int>(i));
        if (ri != static_cast<int>(i)) r = r.tied(at[i], at[static_cast<std::size_t>(ri)]);
    }
    return r;
}

// B''_m = T_{m-1}..T_1 B1 T_1^-1..T_{m-1}^-1; negative letters are inverses.
AWord loop_word(std::size_t m) {
    AWord w;
    const int top = static_cast<int>(m) - 1;
    for (int i = top; i >= 1; --i) w.push_back(static_cast<std::int8_t>(i));
    w.push_back(0);
    for (int i = 1; i <= top; ++i) w.push_back(static_cast<std::int8_t>(-i));
    return w;
}

// Code k <= m is R_k = T_{m-1}..T_k; code m + k is B''_m R_k.
AWord rep_word(std::size_t m, int code) {
    AWord w;
    const int mi = static_cast<int>(m);
    if (code > mi) {
        w = loop_word(m);
        code -= mi;
    }
    for (int i = mi - 1; i >= code; --i) w.push_back(static_cast<std::int8_t>(i));
    return w;
}

AWord concat_words(AWord a, const AWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::size_t word_strands(const AWord& w) {
    std::size_t n = 1;
    for (auto g : w) n = std::max(n, static_cast<std::size_t>(std::abs(g)) + 1);
    return n;
}

}  // namespace

AWord flatten(const std::vector<ALetter>& letters) {
    AWord w;
    for (const auto& l : letters) {
        switch (l.kind) {
            case ALetter::Kind::T:
                if (l.index < 1) throw IndexOutOfRange("T index must be >= 1");
                w.push_back(static_cast<std::int8_t>(l.index));
                break;
            case ALetter::Kind::B1:
                w.push_back(0);
                break;
            case ALetter::Kind::Bp:
                if (l.index < 1) throw IndexOutOfRange("B' index must be >= 1");
                for (int i = l.index - 1; i >= 1; --i) w.push_back(static_cast<std::int8_t>(i));
                w.push_back(0);
                for (int i = 1; i < l.index; ++i) w.push_back(static_cast<std::int8_t>(-i));
                break;
        }
    }
    return w;
}

// ---------------------------------------------------------------- AlgElement

void AlgElement::add(const TiePartition& p, const AWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(Key{p, w}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::one(std::size_t n) { return term(n, Scalar(1), TiePartition(n), {}); }

AlgElement AlgElement::term(std::size_t n, const Scalar& c, const TiePartition& ties, AWord word) {
    if (ties.n() != n) throw SizeMismatch(ties.n(), n);
    if (word_strands(word) > n) throw IndexOutOfRange("word does not fit in " + std::to_string(n) + " strands");
    AlgElement a(n);
    a.add(ties, word, c);
    return a;
}

AlgElement AlgElement::letters(std::size_t n, const std::vector<ALetter>& word) {
    return term(n, Scalar(1), TiePartition(n), flatten(word));
}

AlgElement AlgElement::ties(const TiePartition& p) { return term(p.n(), Scalar(1), p, {}); }

std::vector<ATerm> AlgElement::terms() const {
    std::vector<ATerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({c, k.first, k.second});
    return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    if (o.n_ > n_) *this = embedded(o.n_);
    const auto& src = o.n_ < n_ ? o.embedded(n_) : o;
    for (const auto& [k, c] : src.terms_) add(k.first, k.second, c);
    return *this;
}

AlgElement operator*(const AlgElement& a, const Scalar& c) {
    AlgElement r(a.n_);
    for (const auto& [k, v] : a.terms_) r.add(k.first, k.second, v * c);
    return r;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) { return multiply(a, b); }

AlgElement AlgElement::embedded(std::size_t m) const {
    if (m < n_) throw SizeMismatch(m, n_);
    AlgElement r(m);
    for (const auto& [k, c] : terms_) r.add(k.first.extended(m), k.second, c);
    return r;
}

std::string AlgElement::dump() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_) {
        os << '(' << to_text(c) << ") * " << k.first.to_string() << " *";
        if (k.second.empty()) os << " 1";
        for (auto g : k.second) {
            if (g == 0)
                os << " B1";
            else if (g > 0)
                os << " T" << int(g);
            else
                os << " T" << -int(g) << "^-1";
        }
        os << '\n';
    }
    return os.str();
}

AlgElement multiply(const AlgElement& a0, const AlgElement& b0) {
    const auto n = std::max(a0.n(), b0.n());
    const auto a = a0.embedded(n);
    const auto b = b0.embedded(n);
    AlgElement r(n);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            r += AlgElement::term(n, ta.coeff * tb.coeff, join(ta.ties, transport_front(tb.ties, ta.word)),
                                  concat_words(ta.word, tb.word));
    return r;
}

namespace {

AlgElement letter_image(std::size_t n, const Gen& g) {
    switch (g.kind) {
        case GenKind::Sigma: {
            auto t = AlgElement::letters(n, {ALetter::t(g.i)});
            if (g.sign > 0) return t;
            return t - AlgElement::ties(TiePartition(n).tied(g.i, g.i + 1)) * Scalar(delta_u());
        }
        case GenKind::Rho: {
            auto b = AlgElement::letters(n, {ALetter::b1()});
            if (g.sign > 0) return b;
            return b - AlgElement::ties(TiePartition(n).tied(0, 1)) * Scalar(delta_v());
        }
        default: {
            auto [i, j] = g.tie_pair();
            return AlgElement::ties(TiePartition(n).tied(i, j));
        }
    }
}

}  // namespace

AlgElement theta(const TiedWord& w) {
    validate(w);
    auto r = AlgElement::one(w.n);
    for (const auto& g : w.letters) r = multiply(r, letter_image(w.n, g));
    return r;
}

AlgElement theta_L(const TiedWord& w) {
    const Scalar l(RatFn(0), RatFn(1));
    return theta(w) * l.pow(sigma_exponent_sum(w));
}

// ---------------------------------------------------------------- TraceEngine

std::size_t TraceEngine::default_budget() {
    if (const char* env = std::getenv("TLST_STEP_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

std::size_t TraceEngine::NFKeyHash::operator()(const NFKey& k) const noexcept {
    std::size_t h = k.ties.hash();
    for (auto c : k.levels) h = h * 31 + c;
    return h;
}

void TraceEngine::tick() {
    if (++steps_ > budget_) throw ReductionCap(budget_);
}

AWord TraceEngine::word_of(const Levels& levels) {
    AWord w;
    for (std::size_t m = 1; m <= levels.size(); ++m) {
        const auto r = rep_word(m, levels[m - 1]);
        w.insert(w.end(), r.begin(), r.end());
    }
    return w;
}

TraceEngine::NormalForm TraceEngine::identity(std::size_t n, const TiePartition& ties) {
    Levels lv(n);
    for (std::size_t m = 1; m <= n; ++m) lv[m - 1] = static_cast<std::uint8_t>(m);
    NormalForm f;
    f.emplace(NFKey{ties, std::move(lv)}, Poly(1));
    return f;
}

std::vector<TraceEngine::Outcome> TraceEngine::mul_gen(const Levels& levels, std::size_t m, int gen) {
    tick();
    const int mi = static_cast<int>(m);
    const int r = levels[m - 1];
    const Levels lower(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(m - 1));
    // B''_m commutes with E_{m-1}, so both families follow the R_k rules
    const int base = r > mi ? mi : 0;
    const int k = r - base;

    auto with = [&](int code) {
        Levels lv = lower;
        lv.push_back(static_cast<std::uint8_t>(code));
        return lv;
    };
    auto push = [&](int g) {
        auto out = mul_gen(lower, m - 1, g);
        for (auto& o : out) o.levels.push_back(static_cast<std::uint8_t>(r));
        return out;
    };
    // coeff * (tie {a, b} placed after lower * rep(prefix_code)) * rep(code)
    auto tied_outcome = [&](const Poly& coeff, int a, int b, int prefix_code, int code) {
        const auto at = positions_after(m, concat_words(word_of(lower), rep_word(m, prefix_code)));
        return Outcome{coeff, with(code), at[static_cast<std::size_t>(a)], at[static_cast<std::size_t>(b)]};
    };

    if (gen == 0) {
        if (k >= 2) return push(0);
        if (base == 0) return {Outcome{Poly(1), with(mi + 1), -1, -1}};
        // B''_m^2 = 1 + (v - 1/v) F_m B''_m
        return {Outcome{Poly(1), with(1), -1, -1}, Outcome{delta_v(), with(mi + 1), 0, mi}};
    }

    const int j = gen;
    if (j < k - 1) return push(j);
    if (j == k - 1) return {Outcome{Poly(1), with(base + k - 1), -1, -1}};
    if (j == k)
        return {Outcome{Poly(1), with(base + k + 1), -1, -1},
                tied_outcome(delta_u(), k, k + 1, base + k + 1, base + k)};
    return push(j - 1);
}

TraceEngine::NormalForm TraceEngine::times_letter(const NormalForm& f, int letter, int sign) {
    NormalForm out;
    auto add = [&](NFKey key, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace(std::move(key), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [key, c] : f) {
        for (auto& o : mul_gen(key.levels, key.levels.size(), letter)) {
            auto p = o.tie_a >= 0 ? key.ties.tied(o.tie_a, o.tie_b) : key.ties;
            add(NFKey{std::move(p), std::move(o.levels)}, c * o.coeff);
        }
    }
    if (sign < 0) {
        const int a = letter == 0 ? 0 : letter;
        for (const auto& [key, c] : times_ties(f, a, a + 1))
            add(key, c * (letter == 0 ? -delta_v() : -delta_u()));
    }
    return out;
}

TraceEngine::NormalForm TraceEngine::times_ties(const NormalForm& f, int a, int b) {
    NormalForm out;
    for (const auto& [key, c] : f) {
        const auto at = positions_after(key.levels.size(), word_of(key.levels));
        NFKey k2{key.ties.tied(at[static_cast<std::size_t>(a)], at[static_cast<std::size_t>(b)]), key.levels};
        auto [it, fresh] = out.try_emplace(std::move(k2), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

Poly TraceEngine::trace_nf(const NFKey& key) {
    const std::size_t n = key.levels.size();
    if (n == 0) return Poly(1);
    if (auto it = nf_cache_.find(key); it != nf_cache_.end()) return it->second;
    tick();

    const int ni = static_cast<int>(n);
    const int r = key.levels[n - 1];
    const Levels lower(key.levels.begin(), key.levels.end() - 1);
    const bool alone = key.ties.is_singleton(ni);
    Poly result;
    const bool moving_partner = [&] {
        for (int j = 1; j < ni; ++j)
            if (key.ties.same_block(j, ni)) return true;
        return false;
    }();
    if (r == 2 * ni && moving_partner) {
        // a loop tied to another moving strand j slides onto it:
        // tr(X W E_{j,n} B''_n) = x tr(X W B''_j)
        const AWord lw = word_of(lower);
        const auto after = transport_front(key.ties, lw);
        int partner = 0;
        for (int j = 1; j < ni; ++j)
            if (after.same_block(j, ni)) partner = j;
        result = Poly::variable(Var::x) *
                 trace_word_impl(n - 1, key.ties.restricted(n - 1), concat_words(lw, loop_word(static_cast<std::size_t>(partner))));
    } else if (r == ni || r == 2 * ni) {
        Poly factor(1);
        if (r == 2 * ni)
            factor = Poly::variable(alone ? Var::y : Var::w);
        else if (!alone)
            factor = Poly::variable(Var::x);
        result = factor * trace_nf(NFKey{key.ties.restricted(n - 1), lower});
    } else {
        // P a [B''_n] T_{n-1} Y  ->  P_Y [B''_{n-1}] (Y a) T_{n-1} by cyclicity,
        // using B''_n T_{n-1} = T_{n-1} B''_{n-1}
        const int k = r > ni ? r - ni : r;
        AWord y_word;
        for (int i = ni - 2; i >= k; --i) y_word.push_back(static_cast<std::int8_t>(i));
        const auto py = transport_front(key.ties, y_word);
        auto rest = py.restricted(n - 1);
        int partner = -1;
        bool has_prev = false;
        for (int j = 0; j < ni; ++j) {
            if (!py.same_block(j, ni)) continue;
            if (j == ni - 1) has_prev = true;
            if (partner < 0) partner = j;
        }
        if (partner >= 0 && !has_prev) rest = rest.tied(partner, ni - 1);
        AWord w = r > ni ? loop_word(n - 1) : AWord{};
        w = concat_words(concat_words(std::move(w), y_word), word_of(lower));
        result = Poly::variable(Var::z) * trace_word_impl(n - 1, rest, w);
    }
    nf_cache_.emplace(key, result);
    return result;
}

Poly TraceEngine::trace_word_impl(std::size_t n, const TiePartition& ties, const AWord& word) {
    auto f = identity(n, ties);
    for (auto g : word) f = g < 0 ? times_letter(f, -g, -1) : times_letter(f, g);
    Poly total;
    for (const auto& [key, c] : f) total += c * trace_nf(key);
    return total;
}

Poly TraceEngine::trace_word(std::size_t n, const TiePartition& ties, const AWord& word) {
    if (ties.n() != n) throw SizeMismatch(ties.n(), n);
    if (word_strands(word) > n) throw IndexOutOfRange("word does not fit in " + std::to_string(n) + " strands");
    steps_ = 0;
    return trace_word_impl(n, ties, word);
}

Poly TraceEngine::trace_theta(const TiedWord& w) {
    validate(w);
    steps_ = 0;
    auto f = identity(w.n, TiePartition(w.n));
    for (const auto& g : w.letters) {
        if (g.kind == GenKind::Sigma)
            f = times_letter(f, g.i, g.sign);
        else if (g.kind == GenKind::Rho)
            f = times_letter(f, 0, g.sign);
        else {
            auto [a, b] = g.tie_pair();
            f = times_ties(f, a, b);
        }
    }
    Poly total;
    for (const auto& [key, c] : f) total += c * trace_nf(key);
    return total;
}

Scalar TraceEngine::trace(const AlgElement& a, std::size_t n) {
    if (n < a.n()) throw SizeMismatch(n, a.n());
    Scalar total;
    for (const auto& t : a.terms()) total += t.coeff * Scalar(trace_word(n, t.ties.extended(n), t.word));
    return total;
}

Scalar trace(const AlgElement& a, std::size_t n) {
    thread_local TraceEngine engine;
    return engine.trace(a, n);
}

// ---------------------------------------------------------------- probes

namespace {

void all_partitions(std::size_t n, std::vector<TiePartition>& out) {
    // restricted growth strings over {0..n}
    std::vector<int> rgs(n + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
        if (i > n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_label) + 1);
            for (std::size_t k = 0; k <= n; ++k) blocks[static_cast<std::size_t>(rgs[k])].push_back(static_cast<int>(k));
            out.push_back(TiePartition::from_blocks(n, blocks));
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            rgs[i] = l;
            rec(i + 1, std::max(max_label, l));
        }
    };
    rec(1, 0);
}

}  // namespace

std::vector<AlgElement> default_probes(std::size_t n) {
    std::vector<AlgElement> out;
    std::vector<AWord> level{{}};
    for (int len = 0; len <= 4; ++len) {
        std::vector<AWord> next;
        for (const auto& w : level) {
            out.push_back(AlgElement::term(n, Scalar(1), TiePartition(n), w));
            if (len == 4) continue;
            for (int g = 0; g < static_cast<int>(n); ++g) {
                auto w2 = w;
                w2.push_back(static_cast<std::int8_t>(g));
                next.push_back(std::move(w2));
            }
        }
        level = std::move(next);
    }
    std::vector<TiePartition> parts;
    all_partitions(n, parts);
    for (const auto& p : parts)
        if (!p.is_discrete()) out.push_back(AlgElement::ties(p));
    return out;
}

bool trace_probe_equal(const AlgElement& a, const AlgElement& b, const std::vector<AlgElement>& probes) {
    const auto diff = a - b;
    for (const auto& g : probes) {
        const auto n = std::max(diff.n(), g.n());
        if (!trace(multiply(diff, g), n).is_zero()) return false;
    }
    return true;
}

bool trace_probe_equal(const AlgElement& a, const AlgElement& b) {
    return trace_probe_equal(a, b, default_probes(std::max(a.n(), b.n())));
}

}  // namespace tlst
