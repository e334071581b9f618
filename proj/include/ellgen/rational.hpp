#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ellgen {

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "a", "-a/b" or "a/b"; rejects zero denominators and garbage.
Rat parse_rat(std::string_view text);

/// Canonical string: "a" for integers, "a/b" otherwise.
std::string rat_string(const Rat& r);

double rat_to_double(const Rat& r);

bool is_integer(const Rat& r);

Rat factorial(unsigned k);
Int binomial(long top, unsigned k);

}  // namespace ellgen
