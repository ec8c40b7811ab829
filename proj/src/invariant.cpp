#include "tlst/invariant.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "tlst/algebra.hpp"
#include "tlst/errors.hpp"
#include "tlst/io.hpp"
#include "tlst/skein.hpp"

namespace tlst {

namespace {

Scalar lambda() { return {RatFn(0), RatFn(1)}; }
Scalar var(Var v) { return Scalar(RatFn(Poly::variable(v))); }

std::string summarize(const TiedWord& w) {
    const auto s = link_summary(w);
    std::ostringstream out;
    out << "components=" << s.closure.cycles.size() << " loops=[";
    for (std::size_t k = 0; k < s.closure.loop_numbers.size(); ++k) out << (k ? "," : "") << s.closure.loop_numbers[k];
    out << "] ties=" << s.components.to_string() << (s.affine ? " affine" : "");
    return out.str();
}

TiedWord word_on(std::mt19937_64& rng, std::size_t n, std::size_t length, int max_rho, bool loops, bool fixed_ties) {
    std::vector<Gen> alphabet;
    for (int i = 1; i < static_cast<int>(n); ++i) {
        alphabet.push_back(Gen::sigma(i, 1));
        alphabet.push_back(Gen::sigma(i, -1));
        alphabet.push_back(Gen::eta(i));
    }
    if (loops) {
        alphabet.push_back(Gen::rho(1));
        alphabet.push_back(Gen::rho(-1));
    }
    if (fixed_ties) alphabet.push_back(Gen::phi());
    TiedWord w{n, {}};
    if (alphabet.empty()) return w;
    int rho = 0;
    while (w.letters.size() < length) {
        const Gen g = alphabet[rng() % alphabet.size()];
        if (g.kind == GenKind::Rho) {
            if (std::abs(rho + g.sign) > max_rho) continue;
            rho += g.sign;
        }
        w.letters.push_back(g);
    }
    return w;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string show(const Scalar& s) { return to_text(s); }

}  // namespace

InvariantValue delta_B(const TiedWord& w) {
    validate(w);
    thread_local TraceEngine engine;
    const int e = sigma_exponent_sum(w);
    Scalar v = constant("D").pow(static_cast<int>(w.n) - 1) * lambda().pow(e) * Scalar(RatFn(engine.trace_theta(w)));
    return {std::move(v), w.n, e, summarize(w)};
}

CompareReport invariant_compare(const TiedWord& w1, const TiedWord& w2) {
    CompareReport r{delta_B(w1), delta_B(w2), evaluate_FB(w1), evaluate_FB(w2)};
    r.equal = r.first.value == r.second.value;
    r.first_agrees = r.first.value == r.first_skein;
    r.second_agrees = r.second.value == r.second_skein;
    return r;
}

TiedWord random_word(std::mt19937_64& rng, const WordBounds& b, bool loops, bool fixed_ties) {
    const std::size_t n = 1 + rng() % std::max<std::size_t>(b.max_strands, 1);
    const std::size_t len = rng() % (b.max_length + 1);
    return word_on(rng, n, len, b.max_rho, loops, fixed_ties);
}

MarkovReport markov_suite(std::uint64_t seed, std::size_t trials, const MarkovBounds& bounds) {
    std::mt19937_64 rng(seed);
    MarkovReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        const TiedWord start = random_word(rng, bounds.word);
        const Scalar before = delta_B(start).value;
        TiedWord cur = start;
        std::vector<MarkovMove> moves;
        const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(bounds.max_moves, 1)));
        for (int k = 0; k < count; ++k) {
            // pick until admissible; rotation always is
            for (;;) {
                MarkovMove m{MoveKind::Rotate, 0};
                switch (rng() % 4) {
                    case 0:
                        m = {MoveKind::Rotate, static_cast<int>(rng() % (cur.letters.size() + 1))};
                        break;
                    case 1:
                        if (cur.n >= bounds.word.max_strands) continue;
                        m = {MoveKind::Stabilize, rng() % 2 ? 1 : -1};
                        break;
                    case 2:
                        m = {MoveKind::TieMoving, 1 + static_cast<int>(rng() % cur.n)};
                        break;
                    default:
                        m = {MoveKind::TieFixed, 1 + static_cast<int>(rng() % cur.n)};
                        break;
                }
                try {
                    cur = apply_markov(cur, m);
                } catch (const PreconditionViolated&) {
                    continue;
                }
                moves.push_back(m);
                break;
            }
        }
        report.moves_applied += moves.size();
        const Scalar after = delta_B(cur).value;
        if (!(after == before)) report.failures.push_back({start, moves, cur, before, after});
        ++report.trials;
    }
    return report;
}

MirrorReport mirror_check(const TiedWord& w) {
    const auto s = link_summary(w);
    const auto m = static_cast<int>(s.closure.cycles.size());
    for (int k = 2; k <= m; ++k)
        if (!s.components.same_block(1, k)) throw PreconditionViolated("standard components are not all tied together");
    MirrorReport r;
    r.value = delta_B(w).value;
    r.mirrored = delta_B(mirror_word(w)).value;
    r.expected = mirror_map(r.value);
    r.holds = r.mirrored == r.expected;
    return r;
}

bool affine_independent(const TiedWord& w, std::uint64_t seed) {
    for (const auto& g : w.letters)
        if (g.kind == GenKind::Rho || g.kind == GenKind::Phi || g.kind == GenKind::PhiGen)
            throw PreconditionViolated("word contains r or a tie to the fixed strand");
    std::mt19937_64 rng(seed);
    auto point = [&] {
        // nonzero rationals p/q with small numerators
        std::array<Rational, 3> p;
        for (auto& r : p) r = Rational(static_cast<long>(1 + rng() % 97), static_cast<long>(1 + rng() % 89));
        return p;
    };
    const Scalar v = delta_B(w).value;
    auto at = [&](const std::array<Rational, 3>& p) {
        return v.substitute(Var::y, p[0]).substitute(Var::w, p[1]).substitute(Var::v, p[2]);
    };
    auto p1 = point();
    auto p2 = point();
    while (p2 == p1) p2 = point();
    return at(p1) == at(p2);
}

std::vector<SuiteResult> golden_suite() {
    std::vector<SuiteResult> out;
    const Scalar l = lambda(), u = var(Var::u), x = var(Var::x), y = var(Var::y), w = var(Var::w), z = var(Var::z);
    const Scalar one(1);

    {
        Timer timer;
        SuiteResult r{"unknots"};
        const std::vector<std::pair<std::string, Scalar>> cases{{"", one}, {"f", x}, {"r", y}, {"f r", w}};
        for (const auto& [text, expected] : cases) {
            const auto word = parse_word(text, 1);
            for (const auto& [how, got] : {std::pair{"trace", delta_B(word).value}, std::pair{"skein", evaluate_FB(word)}}) {
                ++r.checks;
                if (!(got == expected)) r.failures.push_back(std::string(how) + " \"" + text + "\": " + show(got) + " != " + show(expected));
            }
        }
        r.seconds = timer.seconds();
        out.push_back(std::move(r));
    }
    {
        Timer timer;
        SuiteResult r{"hopf links"};
        const Scalar plain = l * (u + u * u * z - z) * (u * z).inverse();
        const Scalar tied = l * (x * u + u * u * z - z) * (u * z).inverse();
        const std::vector<std::pair<std::string, Scalar>> cases{
            {"s1 s1", plain},         {"f s1 s1", x * plain}, {"f e1 s1 s1", x * tied},
            {"r s1 s1", y * plain},   {"f r s1 s1", w * plain}, {"e1 f r s1 s1", w * tied}};
        for (const auto& [text, expected] : cases) {
            const auto word = parse_word(text);
            for (const auto& [how, got] : {std::pair{"trace", delta_B(word).value}, std::pair{"skein", evaluate_FB(word)}}) {
                ++r.checks;
                if (!(got == expected)) r.failures.push_back(std::string(how) + " \"" + text + "\": " + show(got) + " != " + show(expected));
            }
        }
        r.seconds = timer.seconds();
        out.push_back(std::move(r));
    }
    {
        Timer timer;
        SuiteResult r{"worked expansion"};
        SkeinEngine engine;
        const auto e = engine.expand_first(parse_word("e1 f r s1 s1"));
        const Scalar du(delta_u());
        r.checks = 5;
        if (!e) {
            r.failures.push_back("\"e1 f r s1 s1\" has no deciding crossing");
        } else {
            if (!(e->switched_coeff == l * l)) r.failures.push_back("switched coefficient " + show(e->switched_coeff));
            if (!(e->smoothed_coeff == l * du)) r.failures.push_back("smoothed coefficient " + show(e->smoothed_coeff));
            if (!(e->switched_value == w * x * (z * l).inverse())) r.failures.push_back("F(H1) = " + show(e->switched_value));
            if (!(e->smoothed_value == w)) r.failures.push_back("F(H2) = " + show(e->smoothed_value));
            const Scalar total = e->switched_coeff * e->switched_value + e->smoothed_coeff * e->smoothed_value;
            if (!(total == delta_B(parse_word("e1 f r s1 s1")).value)) r.failures.push_back("expansion does not sum to the value");
        }
        r.seconds = timer.seconds();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SuiteResult> trace_axiom_suite(std::uint64_t seed, std::size_t trials, std::size_t max_n, AxiomMode mode) {
    std::mt19937_64 rng(seed);
    TraceEngine engine;
    auto tr = [&](const AlgElement& a, std::size_t n) { return engine.trace(a, n); };
    const Scalar x = var(Var::x), y = var(Var::y), w = var(Var::w), z = var(Var::z);

    // X in E_m^B with m = n - 1 >= 1; the top strand n is the new one.
    auto random_x = [&](std::size_t m) { return theta(word_on(rng, m, rng() % 6, 2, true, true)); };
    auto check = [&](SuiteResult& r, const Scalar& lhs, const Scalar& rhs, const std::string& what) {
        ++r.checks;
        if (!(lhs == rhs) && r.failures.size() < 5) r.failures.push_back(what + ": " + show(lhs) + " != " + show(rhs));
        else if (!(lhs == rhs)) r.failures.push_back(what);
    };

    std::vector<SuiteResult> out;
    Timer timer;
    SuiteResult r1{"trace rule (i)"};
    for (std::size_t n = 1; n <= max_n; ++n) check(r1, tr(AlgElement::one(n), n), Scalar(1), "tr_" + std::to_string(n) + "(1)");
    r1.seconds = timer.seconds();
    out.push_back(std::move(r1));

    struct Rule {
        std::string name;
        std::function<AlgElement(std::size_t)> right;  // element of E_n^B appended to X
        std::function<Scalar(const AlgElement&, std::size_t)> expected;
        std::string form;
        bool plain_x = false;  // X drawn without r and f
    };
    auto tie = [](std::size_t n, int a, int b) { return AlgElement::ties(TiePartition(n).tied(a, b)); };
    auto top_t = [](std::size_t n) { return AlgElement::letters(n, {ALetter::t(static_cast<int>(n) - 1)}); };
    auto loop = [](std::size_t n) { return AlgElement::letters(n, {ALetter::bp(static_cast<int>(n))}); };
    auto times = [&](const Scalar& c) {
        return [&tr, c](const AlgElement& xe, std::size_t n) { return c * tr(xe, n - 1); };
    };
    const auto top = [](std::size_t n) { return static_cast<int>(n); };
    std::vector<std::vector<Rule>> rules{
        {{"(ii)", top_t, times(z), "X T_{n-1}"},
         {"(ii)", [&](std::size_t n) { return tie(n, top(n) - 1, top(n)) * top_t(n); }, times(z), "X E_{n-1} T_{n-1}"}},
        {{"(iii)", [&](std::size_t n) { return tie(n, top(n) - 1, top(n)); }, times(x), "X E_{n-1}"},
         {"(iii)", [&](std::size_t n) { return tie(n, 0, top(n)); }, times(x), "X F_n"}},
        {{"(iv)", loop, times(y), "X Bp(n)"}},
    };
    if (mode == AxiomMode::Literal) {
        rules.push_back({{"(v)", [&](std::size_t n) { return loop(n) * tie(n, top(n) - 1, top(n)); }, times(w), "X Bp(n) E_{n-1}"},
                         {"(v)", [&](std::size_t n) { return loop(n) * tie(n, 0, top(n)); }, times(w), "X Bp(n) F_n"}});
    } else {
        rules.push_back({{"(v)", [&](std::size_t n) { return loop(n) * tie(n, 0, top(n)); }, times(w), "X Bp(n) F_n", true}});
        rules.push_back({{"(v)", [&](std::size_t n) { return loop(n) * tie(n, top(n) - 1, top(n)); },
                          [&](const AlgElement& xe, std::size_t n) { return x * tr(xe * loop(n - 1), n - 1); },
                          "X Bp(n) E_{n-1} = x tr(X Bp(n-1))"}});
    }
    for (const auto& group : rules) {
        std::vector<SuiteResult> results;
        for (const auto& rule : group) results.emplace_back("trace rule " + rule.name + " tr(" + rule.form + ")");
        Timer t;
        for (std::size_t k = 0; k < trials; ++k) {
            const std::size_t n = 2 + k % (max_n - 1);
            const AlgElement xe = group.front().plain_x ? theta(word_on(rng, n - 1, rng() % 6, 0, false, false)) : random_x(n - 1);
            for (std::size_t f = 0; f < group.size(); ++f)
                check(results[f], tr(xe.embedded(n) * group[f].right(n), n), group[f].expected(xe, n),
                      "n=" + std::to_string(n) + ", X =\n" + xe.dump());
        }
        for (auto& r : results) {
            r.seconds = t.seconds() / static_cast<double>(group.size());
            out.push_back(std::move(r));
        }
    }

    Timer t6;
    SuiteResult r6{"trace rule (vi)"};
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t n = 1 + k % max_n;
        const AlgElement a = theta(word_on(rng, n, rng() % 6, 2, true, true));
        const AlgElement b = theta(word_on(rng, n, rng() % 6, 2, true, true));
        check(r6, tr(a * b, n), tr(b * a, n), "tr(XY) = tr(YX) at n=" + std::to_string(n) + " with X =\n" + a.dump() + "Y =\n" + b.dump());
    }
    r6.seconds = t6.seconds();
    out.push_back(std::move(r6));
    return out;
}

SuiteResult relation_suite(std::uint64_t seed, std::size_t contexts) {
    struct Relation {
        const char* lhs;
        const char* rhs;
        std::size_t n;
    };
    // braid relations of type B, then type A and type B tie relations
    static const Relation relations[] = {
        {"s1 s3", "s3 s1", 4},
        {"s1 s2 s1", "s2 s1 s2", 3},
        {"r s2", "s2 r", 3},
        {"r s1 r s1", "s1 r s1 r", 2},
        {"e1 e2", "e2 e1", 3},
        {"e1 s1", "s1 e1", 2},
        {"e1 s3", "s3 e1", 4},
        {"e1 s2 s1", "s2 s1 e2", 3},
        {"e2 s1 s2", "s1 s2 e1", 3},
        {"e1 s2 -s1", "s2 -s1 e2", 3},
        {"e2 s1 -s2", "s1 -s2 e1", 3},
        {"e1 e2 s1", "s1 e1 e2", 3},
        {"e1 e2 s1", "e2 s1 e2", 3},
        {"e2 e1 s2", "s2 e2 e1", 3},
        {"e2 e1 s2", "e1 s2 e1", 3},
        {"e1 e1", "e1", 2},
        {"f f", "f", 1},
        {"r e1", "e1 r", 2},
        {"r e2", "e2 r", 3},
        {"r f", "f r", 1},
        {"f e1", "e1 f", 2},
        {"f e2", "e2 f", 3},
        {"f s2", "s2 f", 3},
        {"s1 f -s1", "-s1 f s1", 2},
        {"s2 s1 f -s1 -s2", "-s2 -s1 f s1 s2", 3},
        {"f e1", "f s1 f -s1", 2},
        {"f e1", "s1 f -s1 e1", 2},
    };
    Timer timer;
    std::mt19937_64 rng(seed);
    SuiteResult r{"relation soundness"};
    for (const auto& rel : relations) {
        const auto lhs = parse_word(rel.lhs, rel.n);
        const auto rhs = parse_word(rel.rhs, rel.n);
        ++r.checks;
        if (!trace_probe_equal(theta(lhs), theta(rhs)))
            r.failures.push_back(std::string("probe: ") + rel.lhs + " = " + rel.rhs);
        for (std::size_t c = 0; c < contexts; ++c) {
            const auto a = word_on(rng, rel.n, rng() % 4, 2, true, true);
            const auto b = word_on(rng, rel.n, rng() % 4, 2, true, true);
            const auto left = concat(concat(a, lhs), b);
            const auto right = concat(concat(a, rhs), b);
            ++r.checks;
            if (!(delta_B(left).value == delta_B(right).value))
                r.failures.push_back("context: " + left.to_string() + " vs " + right.to_string());
        }
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult agreement_suite(std::size_t max_len, std::size_t strands, std::size_t random_words, std::size_t random_len,
                            std::uint64_t seed) {
    Timer timer;
    SuiteResult r{"strategy agreement"};
    auto agree = [&](const TiedWord& w) {
        ++r.checks;
        const Scalar a = delta_B(w).value;
        const Scalar b = evaluate_FB(w);
        if (!(a == b)) r.failures.push_back("\"" + w.to_string() + "\" n=" + std::to_string(w.n) + ": " + show(a) + " vs " + show(b));
    };
    std::vector<Gen> alphabet{Gen::rho(1), Gen::rho(-1), Gen::phi()};
    for (int i = 1; i < static_cast<int>(strands); ++i) {
        alphabet.push_back(Gen::sigma(i, 1));
        alphabet.push_back(Gen::sigma(i, -1));
        alphabet.push_back(Gen::eta(i));
    }
    std::vector<std::size_t> digits;
    for (std::size_t len = 0; len <= max_len; ++len) {
        digits.assign(len, 0);
        for (;;) {
            TiedWord w{strands, {}};
            for (auto d : digits) w.letters.push_back(alphabet[d]);
            agree(w);
            std::size_t k = 0;
            while (k < len && ++digits[k] == alphabet.size()) digits[k++] = 0;
            if (k == len) break;
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_words; ++k) agree(random_word(rng, {strands, random_len, 2}));
    r.seconds = timer.seconds();
    return r;
}

SuiteResult markov_invariance_suite(std::uint64_t seed, std::size_t trials, const MarkovBounds& bounds) {
    Timer timer;
    const auto report = markov_suite(seed, trials, bounds);
    SuiteResult r{"markov invariance", report.trials};
    for (const auto& f : report.failures) {
        std::string moves;
        for (const auto& m : f.moves) moves += (moves.empty() ? "" : ", ") + m.to_string();
        r.failures.push_back("\"" + f.word.to_string() + "\" n=" + std::to_string(f.word.n) + " after " + moves + " -> \"" +
                             f.moved.to_string() + "\": " + show(f.before) + " vs " + show(f.after));
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult mirror_suite(std::uint64_t seed, std::size_t trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    SuiteResult r{"mirror"};
    for (std::size_t k = 0; k < trials; ++k) {
        const std::size_t n = 1 + rng() % 3;
        TiedWord w{n, {}};
        // tie every moving strand together so all components are tied
        for (int i = 1; i < static_cast<int>(n); ++i) w.letters.push_back(Gen::eta(i));
        w = concat(w, word_on(rng, n, rng() % 7, 2, true, true));
        ++r.checks;
        const auto m = mirror_check(w);
        if (!m.holds) r.failures.push_back("\"" + w.to_string() + "\": " + show(m.mirrored) + " vs " + show(m.expected));
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult affine_suite(std::uint64_t seed, std::size_t trials) {
    Timer timer;
    std::mt19937_64 rng(seed);
    SuiteResult r{"affine restriction"};
    for (std::size_t k = 0; k < trials; ++k) {
        const auto w = word_on(rng, 1 + rng() % 4, rng() % 9, 0, false, false);
        ++r.checks;
        if (!affine_independent(w, rng())) r.failures.push_back("\"" + w.to_string() + "\" n=" + std::to_string(w.n));
    }
    r.seconds = timer.seconds();
    return r;
}

}  // namespace tlst
