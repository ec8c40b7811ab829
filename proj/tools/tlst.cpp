// Command-line front end: evaluate, compare and summarize tied braid words
// and run the property suites.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlst/braid.hpp"
#include "tlst/errors.hpp"
#include "tlst/invariant.hpp"
#include "tlst/io.hpp"
#include "tlst/skein.hpp"

using namespace tlst;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kSuite = 3 };

std::string render(const Scalar& s, const std::string& format) {
    if (format == "latex") return to_latex(s);
    return to_text(s);
}

TiedWord read_word(const std::string& text, std::size_t strands) {
    return parse_word(text, strands ? std::optional<std::size_t>(strands) : std::nullopt);
}

int cmd_eval(const std::string& braid, std::size_t strands, const std::string& method, const std::string& format) {
    const auto w = read_word(braid, strands);
    std::optional<InvariantValue> value;
    std::optional<Scalar> skein;
    if (method != "skein") value = delta_B(w);
    if (method != "trace") skein = evaluate_FB(w);

    if (format == "json") {
        nlohmann::json j;
        if (value) {
            j = to_json(*value);
        } else {
            j = to_json(*skein);
            j["n"] = w.n;
            j["e"] = sigma_exponent_sum(w);
        }
        if (value && skein) {
            j["skein"] = to_json(*skein);
            j["agree"] = value->value == *skein;
        }
        std::cout << j.dump() << '\n';
    } else if (value && skein) {
        std::cout << "trace: " << render(value->value, format) << '\n'
                  << "skein: " << render(*skein, format) << '\n'
                  << "agree: " << (value->value == *skein ? "yes" : "no") << '\n';
    } else {
        std::cout << render(value ? value->value : *skein, format) << '\n';
    }
    return kOk;
}

int cmd_compare(const std::string& first, const std::string& second, std::size_t strands, const std::string& format) {
    const auto r = invariant_compare(read_word(first, strands), read_word(second, strands));
    if (format == "json") {
        nlohmann::json j;
        j["first"] = to_json(r.first);
        j["second"] = to_json(r.second);
        j["equal"] = r.equal;
        j["first_agrees"] = r.first_agrees;
        j["second_agrees"] = r.second_agrees;
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << "first:  " << render(r.first.value, format) << "  (" << r.first.summary << ")\n"
              << "second: " << render(r.second.value, format) << "  (" << r.second.summary << ")\n"
              << (r.equal ? "equal" : "different") << '\n'
              << "strategy agreement: first " << (r.first_agrees ? "yes" : "no") << ", second "
              << (r.second_agrees ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_partition(const std::string& braid, std::size_t strands) {
    const auto w = read_word(braid, strands);
    const auto s = link_summary(w);
    std::cout << "gamma: " << s.gamma.to_string() << '\n'
              << "beta: " << (s.beta.letters.empty() ? "(empty)" : s.beta.to_string()) << '\n'
              << "components: " << s.closure.cycles.size() << '\n';
    for (std::size_t k = 0; k < s.closure.cycles.size(); ++k) {
        std::cout << "  " << k + 1 << ": strands";
        for (int i : s.closure.cycles[k]) std::cout << ' ' << i;
        std::cout << ", loop number " << s.closure.loop_numbers[k] << '\n';
    }
    std::cout << "component partition: " << s.components.to_string() << '\n';
    for (const auto& t : s.ties)
        std::cout << "tie {" << t.strands.first << "," << t.strands.second << "}: " << (t.essential ? "essential" : "removable")
                  << '\n';
    std::cout << "affine: " << (s.affine ? "yes" : "no") << '\n';
    return kOk;
}

// A word may start with "-s1" or "-r", which CLI11 would take for a flag.
// Such values are rewritten to "--name=value" before parsing.
bool looks_like_word(const std::string& a) {
    return a.size() >= 2 && a[0] == '-' && (a[1] == 'r' || (a[1] == 's' && a.size() > 2 && std::isdigit(static_cast<unsigned char>(a[2])))) &&
           (a.size() == 2 || a[2] == ' ' || std::isdigit(static_cast<unsigned char>(a[2])));
}

std::vector<std::string> protect_words(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    const bool compare = !args.empty() && args.front() == "compare";
    int positional = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
        const auto& a = args[k];
        if ((a == "-b" || a == "--braid") && k + 1 < args.size()) {
            out.push_back("--braid=" + args[++k]);
        } else if ((a == "-n" || a == "--strands" || a == "-f" || a == "--format") && k + 1 < args.size()) {
            out.push_back(a);
            out.push_back(args[++k]);
        } else if (compare && k > 0 && (looks_like_word(a) || a.empty() || a[0] != '-')) {
            out.push_back((positional++ == 0 ? "--first=" : "--second=") + a);
        } else {
            out.push_back(a);
        }
    }
    std::reverse(out.begin(), out.end());  // CLI11 consumes a reversed vector
    return out;
}

void print(const SuiteResult& r, bool& ok) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checks << " checks";
    if (!r.ok()) std::cout << ", " << r.failures.size() << " failed";
    std::cout << '\n';
    for (std::size_t k = 0; k < r.failures.size() && k < 3; ++k) std::cout << "     " << r.failures[k] << '\n';
    ok = ok && r.ok();
}

int cmd_markov(std::uint64_t seed, std::size_t trials, const MarkovBounds& bounds) {
    bool ok = true;
    print(markov_invariance_suite(seed, trials, bounds), ok);
    return ok ? kOk : kSuite;
}

int cmd_selftest(std::size_t max_len, std::size_t strands, std::uint64_t seed) {
    bool ok = true;
    std::size_t checks = 0, suites = 0;
    auto run = [&](const SuiteResult& r) {
        print(r, ok);
        checks += r.checks;
        ++suites;
    };
    for (const auto& r : golden_suite()) run(r);
    for (const auto& r : trace_axiom_suite(seed, 50, std::max<std::size_t>(strands, 2), AxiomMode::Adopted)) run(r);
    run(relation_suite(seed + 1, 5));
    MarkovBounds mb;
    mb.word = {strands + 1, max_len + 2, 2};
    run(markov_invariance_suite(seed + 2, 100, mb));
    run(agreement_suite(max_len, strands, 50, max_len + 2, seed + 3));
    if (!ok) return kSuite;
    std::cout << "all suites passed (" << suites << " suites, " << checks << " checks)\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of tied links in the solid torus", "tlst"};
    app.require_subcommand(1);

    std::string braid, second, method = "trace", format = "text";
    std::size_t strands = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate the invariant of a word's closure");
    eval->add_option("--braid,-b", braid, "Word, e.g. \"e1 f r s1 s1\"")->required();
    eval->add_option("--strands,-n", strands, "Strand count (default: inferred)");
    eval->add_option("--method,-m", method, "trace, skein or both")->check(CLI::IsMember({"trace", "skein", "both"}));
    eval->add_option("--format,-f", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

    auto* compare = app.add_subcommand("compare", "Compare the invariants of two words");
    compare->add_option("first,--first", braid, "First word")->required();
    compare->add_option("second,--second", second, "Second word")->required();
    compare->add_option("--strands,-n", strands, "Strand count for both words");
    compare->add_option("--format,-f", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

    auto* partition = app.add_subcommand("partition", "Summarize the closure: components, loops and ties");
    partition->add_option("--braid,-b", braid, "Word")->required();
    partition->add_option("--strands,-n", strands, "Strand count");

    std::uint64_t seed = 1;
    std::size_t trials = 500;
    MarkovBounds bounds;
    auto* markov = app.add_subcommand("markov", "Check invariance under random Markov move sequences");
    markov->add_option("--seed", seed, "Random seed");
    markov->add_option("--trials", trials, "Number of words");
    markov->add_option("--max-strands", bounds.word.max_strands, "Strand bound")->check(CLI::Range(1, 8));
    markov->add_option("--max-length", bounds.word.max_length, "Length bound of the starting word");
    markov->add_option("--max-rho", bounds.word.max_rho, "Bound on the rho exponent sum");
    markov->add_option("--max-moves", bounds.max_moves, "Moves per trial")->check(CLI::Range(1, 16));

    std::size_t max_len = 3, test_strands = 3;
    auto* selftest = app.add_subcommand("selftest", "Run golden values and the property suites");
    selftest->add_option("--max-len", max_len, "Exhaustive word length")->check(CLI::Range(0, 6));
    selftest->add_option("--strands", test_strands, "Strand count")->check(CLI::Range(2, 4));
    selftest->add_option("--seed", seed, "Random seed");

    try {
        auto args = protect_words(argc, argv);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return cmd_eval(braid, strands, method, format);
        if (*compare) return cmd_compare(braid, second, strands, format);
        if (*partition) return cmd_partition(braid, strands);
        if (*markov) return cmd_markov(seed, trials, bounds);
        if (*selftest) return cmd_selftest(max_len, test_strands, seed);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return kUsage;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ReductionCap& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    }
    return kUsage;
}
