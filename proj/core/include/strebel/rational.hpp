#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace strebel {

// All lengths, residues and cone-angle coefficients are exact rationals.
// Floating point is confined to the numeric module.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical "p/q" form, lowest terms, q > 0 (integers render as "p/1").
std::string fraction_string(const Rational& r);

// Accepts "p/q", plain integers, and decimal strings. Decimals are parsed
// exactly ("0.7" -> 7/10); there is no binary-float round trip.
std::optional<Rational> parse_rational(const std::string& text);

std::vector<std::string> fraction_strings(const std::vector<Rational>& values);

double to_double(const Rational& r);

}  // namespace strebel
