#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extlab {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Always "p/q", including "0/1" and "3/1".
std::string to_string(const Rational& q);

}  // namespace extlab
