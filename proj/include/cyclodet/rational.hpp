#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cyclodet {

// Exact rationals are GMP's canonical mpq (lowest terms, positive
// denominator, zero is 0/1), which is exactly the representation the rest of
// the library assumes for equality tests.
using Rational = mpq_class;
using Integer = mpz_class;

// Wire format "num/den", denominator always present: "0/1", "-3/2".
std::string rat_str(const Rational& r);

// Accepts "num" or "num/den" with optional sign; rejects malformed input and
// zero denominators.
std::optional<Rational> rat_parse(const std::string& s);

// Integer power; e < 0 requires base != 0.
Rational rat_pow(const Rational& base, long e);

Rational rat_factorial(int n);

} // namespace cyclodet
