#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace quartic {

// Parameter t >= 1 of the unit tau = sqrt(t+1) + sqrt(t).  Odd powers of tau
// expand over (sqrt(t+1), sqrt(t)), even powers over (1, sqrt(t(t+1))).
struct PellContext {
    mpz_class t;
};

// tau^(2k+1) = V sqrt(t+1) + W sqrt(t); invariant (t+1)V^2 - t W^2 = 1.
struct OddPower {
    unsigned long k;
    mpz_class V, W;
};

// tau^(2k) = T + U sqrt(t(t+1)); invariant T^2 - t(t+1) U^2 = 1.
struct EvenPower {
    unsigned long k;
    mpz_class T, U;
};

// Minimal positive solution of a v^2 - b w^2 = 1.
struct PellFundamental {
    mpz_class a, b, v, w;
};

OddPower odd_power(const PellContext& ctx, unsigned long k);
EvenPower even_power(const PellContext& ctx, unsigned long k);

// All odd powers with index 0..k_max (one linear pass).
std::vector<OddPower> odd_powers(const PellContext& ctx, unsigned long k_max);
std::vector<EvenPower> even_powers(const PellContext& ctx, unsigned long k_max);

// V_3 = 1 + 4t.
mpz_class v3_formula(const mpz_class& t);

// Closed forms for V_7 and V_11 as polynomials in t (checked against the
// recurrence in the tests).
mpz_class v7_closed_form(const mpz_class& t);
mpz_class v11_closed_form(const mpz_class& t);

struct SquareScanHit {
    long t;
    int index;  // 7 or 11
    mpz_class value, root;
};

// Every t in [t_lo, t_hi] for which V_7 or V_11 is a perfect square.
// jobs <= 0 uses all cores.
std::vector<SquareScanHit> v7_v11_square_scan(long t_lo, long t_hi, int jobs = 0);

// Minimal positive solution of a X^2 - b Y^2 = 1, or nullopt when the
// equation is insolvable.  Works through the fundamental solution (T, U) of
// the Pell equation for D = ab, computed from the continued fraction of
// sqrt(D): the equation is solvable iff T is odd, (T+1)/2 = a v^2 and
// (T-1)/2 = b w^2 with v, w integers, in which case (v, w) is minimal.
// Throws std::domain_error when ab is a perfect square.
std::optional<PellFundamental> pell_fundamental(const mpz_class& a, const mpz_class& b);

}  // namespace quartic
