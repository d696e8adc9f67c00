#pragma once

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <string>

namespace sndp {

// All costs, LP values and solutions are exact arbitrary-precision
// fractions. GMP keeps mpq_class canonical (lowest terms, positive
// denominator) under arithmetic; the factories below canonicalize
// explicitly constructed values.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p" or "p/q" with q > 0 after sign normalization.
// Throws ValidationError on anything else (including q == 0).
Rational parse_rational(const std::string& text);

// "p/q", or plain "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

// Decimal rendering for report fields that are explicitly labeled
// approximate. Never used in any exact comparison.
std::string rational_approx_string(const Rational& value, int digits = 6);

// Integers with denominator 1 that fit in 64 bits are emitted as JSON
// numbers, everything else as a "p/q" string.
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value, const std::string& path);

}  // namespace sndp
