#pragma once

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace novipot {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign, decimal digits). Throws DomainError
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Integers that fit in int64 are JSON numbers; larger ones are decimal strings.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

/// [num, den] in lowest terms with den > 0.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

bool is_integer(const Rational& q);

/// Integer value of q; q must be an integer that fits in int64.
std::int64_t to_int64(const Rational& q);

}  // namespace novipot
