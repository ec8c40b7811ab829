// Acceptance checks. Prints one PASS/FAIL line per criterion; with an
// argument, runs only that criterion. Exit status is nonzero if any ran
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tlst/invariant.hpp"

using namespace tlst;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::size_t checks = 0;
    std::vector<std::string> notes;
};

void absorb(Outcome& o, const SuiteResult& r) {
    o.checks += r.checks;
    if (!r.ok()) {
        o.pass = false;
        auto example = r.failures.front();
        std::replace(example.begin(), example.end(), '\n', ' ');
        o.notes.push_back(r.name + ": " + std::to_string(r.failures.size()) + " failed, e.g. " + example);
    }
}

void within(Outcome& o, double seconds, double limit, const std::string& what) {
    if (seconds >= limit) {
        o.pass = false;
        o.notes.push_back(what + " took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
    }
}

SuiteResult golden(std::size_t k) { return golden_suite().at(k); }

struct Criterion {
    const char* title;
    double limit;  // seconds
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {"unknot values 1, x, y, w by both strategies", 0.1,
         [] {
             Outcome o;
             absorb(o, golden(0));
             return o;
         }},
        {"six Hopf link values by both strategies", 6.0,
         [] {
             Outcome o;
             const auto r = golden(1);
             absorb(o, r);
             within(o, r.seconds, 1.0, "slowest Hopf link (bounded by the total)");
             return o;
         }},
        {"worked skein expansion of e1 f r s1 s1", 1.0,
         [] {
             Outcome o;
             absorb(o, golden(2));
             return o;
         }},
        {"trace rules (i)-(vi), 200 random elements per rule, n <= 3", 60.0,
         [] {
             Outcome o;
             for (const auto& r : trace_axiom_suite(kSeed, 200, 3, AxiomMode::Literal)) absorb(o, r);
             return o;
         }},
        {"Markov invariance, 500 random words and move sequences", 300.0,
         [] {
             Outcome o;
             MarkovBounds b;
             b.word = {4, 10, 2};
             b.max_moves = 4;
             absorb(o, markov_invariance_suite(kSeed, 500, b));
             return o;
         }},
        {"trace and skein agree: all words of length <= 4 on TB_3, 200 random of length <= 8", 600.0,
         [] {
             Outcome o;
             absorb(o, agreement_suite(4, 3, 200, 8, kSeed));
             return o;
         }},
        {"every defining relation in 20 random contexts, plus probe equality", 300.0,
         [] {
             Outcome o;
             absorb(o, relation_suite(kSeed, 20));
             return o;
         }},
        {"mirror property on 50 random all-tied words", 120.0,
         [] {
             Outcome o;
             absorb(o, mirror_suite(kSeed, 50));
             return o;
         }},
        {"affine words independent of y, w, v on 100 random words", 60.0,
         [] {
             Outcome o;
             absorb(o, affine_suite(kSeed, 100));
             return o;
         }},
    };
    return list;
}

bool run(std::size_t k) {
    const auto& c = criteria()[k - 1];
    const auto start = std::chrono::steady_clock::now();
    auto o = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    within(o, seconds, c.limit, "criterion");
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.checks << " checks, "
              << seconds << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> which;
    for (int a = 1; a < argc; ++a) {
        const auto k = std::strtoul(argv[a], nullptr, 10);
        if (k < 1 || k > criteria().size()) {
            std::cerr << "usage: acceptance [criterion 1-" << criteria().size() << "]...\n";
            return 2;
        }
        which.push_back(k);
    }
    if (which.empty())
        for (std::size_t k = 1; k <= criteria().size(); ++k) which.push_back(k);
    bool ok = true;
    for (auto k : which) ok = run(k) && ok;
    return ok ? 0 : 1;
}
