#pragma once

// Text, LaTeX and JSON forms of ring elements.

#include <string>

#include "json.hpp"

#include "tlst/coeffring.hpp"
#include "tlst/invariant.hpp"

namespace tlst {

/// Plain text: terms in descending lex order, `coef*u^a*v^b`, l for lambda,
/// negative exponents moved into a monomial denominator.
std::string to_text(const Poly& p);
std::string to_text(const RatFn& f);
std::string to_text(const Scalar& s);

std::string to_latex(const Poly& p);
std::string to_latex(const RatFn& f);
std::string to_latex(const Scalar& s);

/// {"lambda0": ratfn, "lambda1": ratfn}; ratfn is {"num": [..], "den": [..]}
/// or {} for zero; a term is {"coeff": "p/q", "exp": {"u": .., ..., "z": ..}}.
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFn& f);
nlohmann::json to_json(const Scalar& s);

/// Inverses of to_json. Throw std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::json& j);
RatFn ratfn_from_json(const nlohmann::json& j);
Scalar scalar_from_json(const nlohmann::json& j);

/// The scalar object extended with "n", "e" and "summary".
nlohmann::json to_json(const InvariantValue& v);
InvariantValue invariant_from_json(const nlohmann::json& j);

}  // namespace tlst
