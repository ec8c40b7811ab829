#pragma once

// Exact arithmetic in Q(u,v,x,y,w,z)[l] / (l^2 - L), L = (z - (u - 1/u) x) / z.
//
// Poly is a Laurent polynomial with rational coefficients. RatFn is a quotient
// of two Polys; it is not kept gcd-reduced, only normalized so that the
// denominator carries no monomial factor, has integer content 1 and a
// positive leading coefficient. Equality is decided by cross-multiplication.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tlst {

using Rational = mpq_class;

enum class Var : int { u = 0, v, x, y, w, z };
inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<std::string_view, kNumVars> kVarNames{"u", "v", "x", "y", "w", "z"};

/// Exponents in the fixed variable order (u, v, x, y, w, z). Compared
/// lexicographically.
using ExpVec = std::array<int, kNumVars>;

class RatFn;

class Poly {
public:
    using Terms = std::map<ExpVec, Rational>;

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    static Poly monomial(const ExpVec& e, const Rational& c = 1);
    static Poly variable(Var v, int power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    /// Largest term in lexicographic order. Requires a nonzero polynomial.
    const Terms::value_type& leading() const { return *terms_.rbegin(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned k) const;
    /// Multiply by the monomial with exponent vector `e` (exponents may be negative).
    Poly shifted(const ExpVec& e) const;
    /// Componentwise minimum / maximum exponents. Requires nonzero.
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;
    /// Positive rational c such that this / c has coprime integer coefficients.
    Rational content() const;
    /// Exact quotient in the Laurent ring, or nullopt if `d` does not divide.
    std::optional<Poly> divide_exact(const Poly& d) const;
    /// Replace variable `var` by the rational constant `value`.
    Poly substitute(Var var, const Rational& value) const;
    /// Simultaneous substitution of every variable by a rational function.
    RatFn compose(const std::array<RatFn, kNumVars>& images) const;

private:
    void add_term(const ExpVec& e, const Rational& c);
    Terms terms_;
};

class RatFn {
public:
    RatFn() : num_(0), den_(1) {}
    RatFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFn(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFn(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws ZeroDivision if `den` is zero.
    RatFn(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn inverse() const;
    RatFn pow(int k) const;
    /// Cross-multiplication equality.
    friend bool operator==(const RatFn& a, const RatFn& b);

    RatFn substitute(Var var, const Rational& value) const;
    /// Simultaneous substitution of every variable by a rational function.
    RatFn compose(const std::array<RatFn, kNumVars>& images) const;

    /// Re-establishes the normal form; idempotent.
    void canonicalize();

private:
    Poly num_;
    Poly den_;
};

/// c0 + c1 * l with l^2 = L.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : c0_(c) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& c) : c0_(c) {}  // NOLINT(google-explicit-constructor)
    Scalar(Poly p) : c0_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    Scalar(RatFn c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
    Scalar(RatFn c0, RatFn c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    const RatFn& c0() const { return c0_; }
    const RatFn& c1() const { return c1_; }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const { return {-c0_, -c1_}; }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    /// Throws ZeroDivision for zero.
    Scalar inverse() const;
    Scalar pow(int k) const;
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar substitute(Var var, const Rational& value) const;
    void canonicalize();

private:
    RatFn c0_;
    RatFn c1_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inv(const Scalar& a);
bool scalar_eq(const Scalar& a, const Scalar& b);

/// Mirror automorphism: u -> 1/u, v -> 1/v, l -> 1/l. Consistency with
/// l^2 = L (and with the loop skein rule) forces z -> L z,
/// y -> y - (v - 1/v) x, w -> w - (v - 1/v) x; x is fixed. Involutive.
Scalar mirror_map(const Scalar& a);

/// Named constants: u v x y w z, "l" or "lambda", L, D, one, zero,
/// "du" (u - 1/u), "dv" (v - 1/v). Throws UnknownConstant.
Scalar constant(std::string_view name);

/// L = (z - (u - 1/u) x) / z as a Laurent polynomial.
const Poly& big_l();
/// u - 1/u and v - 1/v.
const Poly& delta_u();
const Poly& delta_v();

}  // namespace tlst
