#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "quartic/interval.hpp"
#include "quartic/poly.hpp"
#include "quartic/ring.hpp"

namespace quartic {

// Rational approximation pair to (1-z)^(1/4):
//   A_{r,g}(z) = sum_m binom(r-g+1/4, m) binom(2r-g-m, r-g) (-z)^m   (deg r)
//   B_{r,g}(z) = sum_m binom(r-1/4, m)   binom(2r-g-m, r)   (-z)^m   (deg r-g)
// with A(0) = B(0) = binom(2r-g, r).
struct PadePair {
    long r;
    int g;
    RatPoly A, B;
};

PadePair pade_pair(long r, int g);

// Reflection companions C(z) = A(1-z), D(z) = B(1-z) built from their own
// binomial sums.
struct ReflectionPair {
    RatPoly C, D;
};

ReflectionPair reflection_pair(long r, int g);

// Asserts A - (1-z)^(1/4) B vanishes to order exactly 2r+1-g and that the
// first surviving coefficient equals the Gauss evaluation
//   binom(r-1/4, r) binom(r-g+1/4, r+1-g) / binom(2r+1-g, r).
struct RemainderOrder {
    long order;
    mpq_class leading;
};

RemainderOrder remainder_order_check(long r, int g);

// C == A(1-z), D == B(1-z) and C(1) = binom(2r-g, r).
bool reflection_check(long r, int g);

// A_{r,0} B_{r+h,1} - A_{r+h,1} B_{r,0} must be a single monomial c z^k.
struct DetMonomial {
    long k;
    mpq_class c;
};

DetMonomial determinant_check(long r, int h);

// Integer-coefficient multiples of the r = 1..5 approximants together with
// the quartic remainder cofactor:  A^4 - (1-z) B^4 = z^(2r+1) F.
struct ExplicitTable {
    long r;
    mpq_class scale;  // A = scale * A_{r,0}
    RatPoly A, B, F;
};

// Returns the stored table and verifies both the scaling relation and the
// quartic identity exactly; throws std::runtime_error on any mismatch.
ExplicitTable explicit_table(long r);

// The printed degree-1..4 cofactor forms used by the r = 4, 5 identities.
IntForm ledger_g4();
IntForm ledger_h4();
IntForm ledger_g5();
IntForm ledger_h5();

// One bilinear identity between homogenized table polynomials: computed
// exactly and compared against the printed monomial.
struct LedgerEntry {
    int index;
    std::string description;
    mpz_class printed_coeff;
    int printed_x_exp, printed_y_exp;
    bool is_monomial;
    mpz_class computed_coeff;
    int computed_x_exp, computed_y_exp;
    bool coeff_matches, exponent_matches;
};

std::vector<LedgerEntry> bilinear_ledger_check();

// Quantities whose fourth power lands in Z[w]; the returned element is the
// exact ring candidate and its fourth power is verified against the product
// of resolvent fourth powers.
enum class FourthPowerKind { xi_eta_over_root, xi3_xi, eta3_eta };

RingElem fourth_power_integrality(const mpz_class& t, const mpz_class& x1, const mpz_class& y1,
                                  const mpz_class& x2, const mpz_class& y2, FourthPowerKind kind);

// Rational-component value in Q(w), used before integrality is established.
struct QRingVal {
    mpq_class a, b;
    mpz_class d;
};

// x^deg p(y/x) evaluated at (u, v) with u in Z[w] and v a rational integer.
QRingVal star_eval(const RatPoly& p, long deg, const RingElem& u, const mpz_class& v);

// A*_{r,g} and B*_{r,g} at (xi^4, xi^4 - eta^4); every denominator must
// clear (the 8 P(x, y) power supplies the needed 8^m), else throws.
struct StarValues {
    RingElem astar, bstar;
};

StarValues star_integrality(const mpz_class& t, long r, int g, const mpz_class& x,
                            const mpz_class& y);

// Sigma_{r,g} = (eta2/xi2) A(z1) - (-1)^r (eta1/xi1) B(z1) as a complex
// enclosure (principal branches), plus the exact algebraic side:
//  - g = 0: Lambda = xi1^(4r+1) xi2 Sigma / (-t-1)^(1/4) in Z[w], asserted to
//    be a pure w-multiple;
//  - g = 1: Lambda^4 = -4 (w-1) M^4 / (t+1) is computed exactly with rational
//    components (lambda4_a + lambda4_b w).  lambda4_in_max_order reports
//    membership in the ring of integers of Q(sqrt(-t)); that membership is a
//    property of genuine same-root solution pairs and does not hold pointwise
//    for arbitrary integer pairs.  lambda4 is set when the element lies in
//    Z[w] itself.
struct SigmaEval {
    long r;
    int g;
    ComplexInterval sigma;
    std::optional<RingElem> lambda;
    std::optional<RingElem> lambda4;
    mpq_class lambda4_a, lambda4_b;
    bool lambda4_in_max_order = false;
};

SigmaEval sigma_eval(const mpz_class& t, long r, int g, const mpz_class& x1, const mpz_class& y1,
                     const mpz_class& x2, const mpz_class& y2);

}  // namespace quartic
