#pragma once
#include <gmpxx.h>
#include <string>

namespace leibcoh {

// Exact arithmetic throughout; no floating point anywhere in the engine.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p" or "p/q" with optional leading minus; rejects anything else
// (in particular decimal points and exponents).
Rational parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string rational_string(const Rational& q);

} // namespace leibcoh
