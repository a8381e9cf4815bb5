#pragma once

// Exact scalars shared by every module: arbitrary-precision integers and
// always-reduced rationals (GMP's mpz/mpq classes).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wright {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// r^e for any integer e; 0^e with e < 0 throws std::domain_error.
Rat pow(const Rat& r, long e);
BigInt pow(const BigInt& z, unsigned long e);

BigInt binomial(const BigInt& n, unsigned long k);
BigInt factorial(unsigned long n);

bool is_integer(const Rat& r);

std::vector<Rat> to_rats(const std::vector<BigInt>& zs);

}  // namespace wright
