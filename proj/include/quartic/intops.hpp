#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace quartic {

// Floor of the square root of n.  Requires n >= 0.
mpz_class isqrt(const mpz_class& n);

// Exact square detection.  Returns the nonnegative root when n is a perfect
// square, std::nullopt otherwise.  Candidates are first rejected by
// quadratic-residue tables modulo 64, 63, 65 and 11 (together these filter
// out over 99% of non-squares), then confirmed with an exact integer root.
std::optional<mpz_class> is_perfect_square(const mpz_class& n);

// Generalized binomial coefficient alpha (alpha-1) ... (alpha-n+1) / n!.
// binom_rat(alpha, 0) == 1 for every alpha.
mpq_class binom_rat(const mpq_class& alpha, unsigned long n);

// Ordinary binomial coefficient as an exact integer.
mpz_class binom_int(unsigned long n, unsigned long k);

// All positive divisors of n > 0, ascending.  Trial division; intended for
// desk-scale operands.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace quartic
