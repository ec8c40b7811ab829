#include "tlst/io.hpp"

#include <algorithm>
#include <utility>
#include <vector>
#include <stdexcept>

namespace tlst {

namespace {

struct Style {
    bool latex;
};

std::string rational_text(const Rational& q, bool latex) {
    if (q.get_den() == 1) return q.get_num().get_str();
    if (latex) return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string monomial_text(const ExpVec& e, Style st) {
    std::string s;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += st.latex ? " " : "*";
        s += kVarNames[i];
        if (e[i] != 1) s += st.latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
    }
    return s;
}

// Terms are listed alphabetically by monomial, the constant last.
std::string poly_text(const Poly& p, Style st) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<std::string, const Poly::Terms::value_type*>> order;
    for (const auto& t : p.terms()) order.emplace_back(monomial_text(t.first, st), &t);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.empty() != b.first.empty()) return b.first.empty();
        return a.first < b.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [mono, term] : order) {
        const auto& c = term->second;
        const bool neg = sgn(c) < 0;
        const Rational a = neg ? Rational(-c) : c;
        std::string body;
        if (mono.empty())
            body = rational_text(a, st.latex);
        else if (a == 1)
            body = mono;
        else
            body = rational_text(a, st.latex) + (st.latex ? " " : "*") + mono;
        if (first)
            s += neg ? "-" + body : body;
        else
            s += (neg ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

bool is_atom(const Poly& p) {
    if (p.size() != 1) return false;
    const auto& [e, c] = p.leading();
    int factors = c == 1 ? 0 : 1;
    for (int k : e)
        if (k != 0) ++factors;
    return factors <= 1 && sgn(c) > 0;
}

// numerator and denominator with every exponent non-negative
std::pair<Poly, Poly> cleared(const RatFn& f) {
    ExpVec shift{};
    for (const auto& part : {f.num(), f.den()}) {
        const auto mn = part.min_exponents();
        for (std::size_t i = 0; i < kNumVars; ++i) shift[i] = std::max(shift[i], -mn[i]);
    }
    return {f.num().shifted(shift), f.den().shifted(shift)};
}

std::string ratfn_text(const RatFn& f, Style st, bool wrap_sum) {
    if (f.is_zero()) return "0";
    auto [num, den] = cleared(f);
    if (den == Poly(1)) {
        const auto s = poly_text(num, st);
        return wrap_sum && num.size() > 1 ? "(" + s + ")" : s;
    }
    if (st.latex) return "\\frac{" + poly_text(num, st) + "}{" + poly_text(den, st) + "}";
    auto n = poly_text(num, st);
    auto d = poly_text(den, st);
    if (num.size() > 1) n = "(" + n + ")";
    if (!is_atom(den)) d = "(" + d + ")";
    return n + "/" + d;
}

std::string scalar_text(const Scalar& s, Style st) {
    if (s.is_zero()) return "0";
    const std::string lam = st.latex ? "\\lambda" : "l";
    std::string out;
    if (!s.c0().is_zero()) out = ratfn_text(s.c0(), st, false);
    if (s.c1().is_zero()) return out;
    std::string lp;
    if (s.c1() == RatFn(1))
        lp = lam;
    else if (s.c1() == RatFn(-1))
        lp = "-" + lam;
    else {
        auto body = ratfn_text(s.c1(), st, true);
        const bool neg = body.front() == '-';
        if (neg) body.erase(0, 1);
        if (st.latex && body.rfind("\\frac", 0) != 0 && body.find_first_of("+-") != std::string::npos)
            body = "\\left(" + body + "\\right)";
        lp = (neg ? "-" : "") + lam + (st.latex ? " " : "*") + body;
    }
    if (out.empty()) return lp;
    if (lp.front() == '-') return out + " - " + lp.substr(1);
    return out + " + " + lp;
}

nlohmann::json terms_json(const Poly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json exp;
        for (std::size_t i = 0; i < kNumVars; ++i) exp[std::string(kVarNames[i])] = e[i];
        arr.push_back({{"coeff", c.get_str()}, {"exp", exp}});
    }
    return arr;
}

}  // namespace

std::string to_text(const Poly& p) { return poly_text(p, {false}); }
std::string to_text(const RatFn& f) { return ratfn_text(f, {false}, false); }
std::string to_text(const Scalar& s) { return scalar_text(s, {false}); }
std::string to_latex(const Poly& p) { return poly_text(p, {true}); }
std::string to_latex(const RatFn& f) { return ratfn_text(f, {true}, false); }
std::string to_latex(const Scalar& s) { return scalar_text(s, {true}); }

nlohmann::json to_json(const Poly& p) { return terms_json(p); }

nlohmann::json to_json(const RatFn& f) {
    if (f.is_zero()) return nlohmann::json::object();
    return {{"num", terms_json(f.num())}, {"den", terms_json(f.den())}};
}

nlohmann::json to_json(const Scalar& s) { return {{"lambda0", to_json(s.c0())}, {"lambda1", to_json(s.c1())}}; }

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    Poly p;
    for (const auto& t : j) {
        ExpVec e{};
        const auto& exp = t.at("exp");
        for (auto it = exp.begin(); it != exp.end(); ++it) {
            const auto pos = std::find(kVarNames.begin(), kVarNames.end(), it.key());
            if (pos == kVarNames.end()) throw std::invalid_argument("unknown variable '" + it.key() + "'");
            e[static_cast<std::size_t>(pos - kVarNames.begin())] = it.value().get<int>();
        }
        Rational c(t.at("coeff").get<std::string>());
        c.canonicalize();
        p += Poly::monomial(e, c);
    }
    return p;
}

RatFn ratfn_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("rational function must be a JSON object");
    if (j.empty()) return RatFn();
    return RatFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Scalar scalar_from_json(const nlohmann::json& j) {
    try {
        return Scalar(ratfn_from_json(j.at("lambda0")), ratfn_from_json(j.at("lambda1")));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed scalar: ") + e.what());
    }
}

nlohmann::json to_json(const InvariantValue& v) {
    auto j = to_json(v.value);
    j["n"] = v.n;
    j["e"] = v.e;
    j["summary"] = v.summary;
    return j;
}

InvariantValue invariant_from_json(const nlohmann::json& j) {
    try {
        return {scalar_from_json(j), j.at("n").get<std::size_t>(), j.at("e").get<int>(), j.at("summary").get<std::string>()};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed invariant: ") + e.what());
    }
}

}  // namespace tlst
