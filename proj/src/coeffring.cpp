#include "tlst/coeffring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "tlst/errors.hpp"

namespace tlst {

namespace {

ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec sub_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec neg_exp(const ExpVec& a) { return sub_exp(ExpVec{}, a); }

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(ExpVec{}, Rational(c));
}

Poly::Poly(const Rational& c) : Poly(monomial(ExpVec{}, c)) {}

// Rationals built from (num, den) are not canonical until asked; GMP
// comparisons assume they are.
Poly Poly::monomial(const ExpVec& e, const Rational& c) {
    Poly p;
    Rational k = c;
    k.canonicalize();
    if (k != 0) p.terms_.emplace(e, std::move(k));
    return p;
}

Poly Poly::variable(Var v, int power) {
    ExpVec e{};
    e[static_cast<std::size_t>(v)] = power;
    return monomial(e);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
}

void Poly::add_term(const ExpVec& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    Rational k = c;
    k.canonicalize();
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= k;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1);
    Poly base = *this;
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base = base * base;
    }
    return result;
}

Poly Poly::shifted(const ExpVec& e) const {
    Poly r;
    for (const auto& [ee, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exp(ee, e), c);
    return r;
}

ExpVec Poly::min_exponents() const {
    ExpVec m;
    m.fill(std::numeric_limits<int>::max());
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

ExpVec Poly::max_exponents() const {
    ExpVec m;
    m.fill(std::numeric_limits<int>::min());
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

Rational Poly::content() const {
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    if (g == 0) return 1;
    Rational r(g, l);
    r.canonicalize();
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw ZeroDivision();
    if (is_zero()) return Poly{};
    if (d.size() == 1) {
        const auto& [e, c] = *d.terms_.begin();
        Poly q = shifted(neg_exp(e));
        q *= Rational(1) / c;
        return q;
    }
    // In the Laurent ring the extreme degrees in each variable are additive,
    // which bounds the support of any quotient.
    const ExpVec lo = sub_exp(min_exponents(), d.min_exponents());
    const ExpVec hi = sub_exp(max_exponents(), d.max_exponents());
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (lo[i] > hi[i]) return std::nullopt;

    const auto& [de, dc] = d.leading();
    Poly q;
    Poly r = *this;
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading();
        ExpVec e = sub_exp(re, de);
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        Rational c = rc / dc;
        q.add_term(e, c);
        Poly t = d.shifted(e);
        t *= c;
        r -= t;
    }
    return q;
}

Poly Poly::substitute(Var var, const Rational& raw) const {
    const auto idx = static_cast<std::size_t>(var);
    Rational value = raw;
    value.canonicalize();
    if (value == 0) {
        for (const auto& [e, c] : terms_)
            if (e[idx] < 0) throw ZeroDivision();
    }
    Poly r;
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        e2[idx] = 0;
        Rational f = 1;
        const int k = e[idx];
        for (int i = 0; i < std::abs(k); ++i) f *= value;
        if (k < 0) f = Rational(1) / f;
        r.add_term(e2, c * f);
    }
    return r;
}

RatFn Poly::compose(const std::array<RatFn, kNumVars>& images) const {
    // Power cache per variable, positive and negative exponents.
    std::array<std::map<int, RatFn>, kNumVars> cache;
    auto power = [&](std::size_t i, int k) -> const RatFn& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        return cache[i].emplace(k, images[i].pow(k)).first->second;
    };
    // Collect terms sharing the same image denominator before adding.
    RatFn acc;
    for (const auto& [e, c] : terms_) {
        RatFn t(c);
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (e[i] != 0) t *= power(i, e[i]);
        acc += t;
    }
    return acc;
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDivision();
    canonicalize();
}

void RatFn::canonicalize() {
    if (den_.is_zero()) throw ZeroDivision();
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const ExpVec m = den_.min_exponents();
    if (m != ExpVec{}) {
        den_ = den_.shifted(neg_exp(m));
        num_ = num_.shifted(neg_exp(m));
    }
    Rational c = den_.content();
    if (den_.leading().second < 0) c = -c;
    if (c != 1) {
        const Rational inv = Rational(1) / c;
        den_ *= inv;
        num_ *= inv;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = Poly(1);
        }
    }
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFn r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else if (auto q = a.den_.divide_exact(b.den_)) {
        r.num_ = a.num_ + b.num_ * *q;
        r.den_ = a.den_;
    } else if (auto q2 = b.den_.divide_exact(a.den_)) {
        r.num_ = a.num_ * *q2 + b.num_;
        r.den_ = b.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn{};
    Poly na = a.num_, da = a.den_, nb = b.num_, db = b.den_;
    if (!da.is_constant()) {
        if (auto q = nb.divide_exact(da)) {
            nb = std::move(*q);
            da = Poly(1);
        }
    }
    if (!db.is_constant()) {
        if (auto q = na.divide_exact(db)) {
            na = std::move(*q);
            db = Poly(1);
        }
    }
    RatFn r;
    r.num_ = na * nb;
    r.den_ = da * db;
    r.canonicalize();
    return r;
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw ZeroDivision();
    return {den_, num_};
}

RatFn RatFn::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFn r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    r.canonicalize();
    return r;
}

bool operator==(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFn RatFn::substitute(Var var, const Rational& value) const {
    return {num_.substitute(var, value), den_.substitute(var, value)};
}

RatFn RatFn::compose(const std::array<RatFn, kNumVars>& images) const {
    return num_.compose(images) / den_.compose(images);
}

// ---------------------------------------------------------------- Scalar

const Poly& delta_u() {
    static const Poly p = Poly::variable(Var::u) - Poly::variable(Var::u, -1);
    return p;
}

const Poly& delta_v() {
    static const Poly p = Poly::variable(Var::v) - Poly::variable(Var::v, -1);
    return p;
}

const Poly& big_l() {
    static const Poly p =
        Poly(1) - delta_u() * Poly::variable(Var::x) * Poly::variable(Var::z, -1);
    return p;
}

Scalar operator+(const Scalar& a, const Scalar& b) { return {a.c0_ + b.c0_, a.c1_ + b.c1_}; }

Scalar operator-(const Scalar& a, const Scalar& b) { return {a.c0_ - b.c0_, a.c1_ - b.c1_}; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    RatFn c0 = a.c0_ * b.c0_;
    if (!a.c1_.is_zero() && !b.c1_.is_zero()) c0 += a.c1_ * b.c1_ * RatFn(big_l());
    return {std::move(c0), a.c0_ * b.c1_ + a.c1_ * b.c0_};
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroDivision();
    if (c1_.is_zero()) return Scalar(c0_.inverse());
    const RatFn norm = c0_ * c0_ - c1_ * c1_ * RatFn(big_l());
    if (norm.is_zero()) throw DegenerateNorm();
    const RatFn inv = norm.inverse();
    return {c0_ * inv, -c1_ * inv};
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(1);
    Scalar base = *this;
    while (k != 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k != 0) base = base * base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }

Scalar Scalar::substitute(Var var, const Rational& value) const {
    return {c0_.substitute(var, value), c1_.substitute(var, value)};
}

void Scalar::canonicalize() {
    c0_.canonicalize();
    c1_.canonicalize();
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_inv(const Scalar& a) { return a.inverse(); }
bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

Scalar mirror_map(const Scalar& a) {
    static const std::array<RatFn, kNumVars> images = [] {
        const Poly x = Poly::variable(Var::x);
        return std::array<RatFn, kNumVars>{
            RatFn(Poly::variable(Var::u, -1)),
            RatFn(Poly::variable(Var::v, -1)),
            RatFn(x),
            RatFn(Poly::variable(Var::y) - delta_v() * x),
            RatFn(Poly::variable(Var::w) - delta_v() * x),
            RatFn(Poly::variable(Var::z) - delta_u() * x),
        };
    }();
    // l -> 1/l = l / L
    static const RatFn inv_l = RatFn(big_l()).inverse();
    return {a.c0().compose(images), a.c1().compose(images) * inv_l};
}

Scalar constant(std::string_view name) {
    if (name == "one" || name == "1") return Scalar(1);
    if (name == "zero" || name == "0") return Scalar(0);
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return Scalar(Poly::variable(static_cast<Var>(i)));
    if (name == "l" || name == "lambda" || name == "λ") return {RatFn(0), RatFn(1)};
    if (name == "L") return Scalar(big_l());
    if (name == "D") {
        // 1 / (z sqrt(L)) = l / (z L)
        return {RatFn(0), RatFn(Poly(1), Poly::variable(Var::z) * big_l())};
    }
    if (name == "du" || name == "δ_u" || name == "delta_u") return Scalar(delta_u());
    if (name == "dv" || name == "δ_v" || name == "delta_v") return Scalar(delta_v());
    throw UnknownConstant(std::string(name));
}

}  // namespace tlst
