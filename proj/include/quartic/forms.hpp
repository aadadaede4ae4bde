#pragma once

#include <gmpxx.h>

#include <array>

#include "quartic/interval.hpp"
#include "quartic/poly.hpp"
#include "quartic/ring.hpp"

namespace quartic {

// P(x, y) = x^4 + 4t x^3 y - 6t x^2 y^2 - 4t^2 x y^3 + t^2 y^4.
struct QuarticForm {
    mpz_class t;
    IntForm form;
};

QuarticForm make_quartic(const mpz_class& t);
mpz_class eval_P(const mpz_class& t, const mpz_class& x, const mpz_class& y);

// The fourth powers of the resolvent pair at an integer point, over Z[w] with
// w^2 = -t:
//   xi4  = 4 (w+1) (x - w y)^4
//   eta4 = 4 (w-1) (x + w y)^4
// and xi4 - eta4 = 8 P(x, y) exactly.  z = 1 - eta4/xi4 is kept as the exact
// quotient z_num / z_den = (xi4 - eta4) / xi4.
struct ResolventPoint {
    mpz_class t, x, y;
    RingElem xi4, eta4;
    RingElem z_num, z_den;
};

ResolventPoint resolvent(const mpz_class& t, const mpz_class& x, const mpz_class& y);

// |xi|^8 = |xi^4|^2 = 16 (t+1) (x^2 + t y^2)^4, the exact integer carrier for
// every inequality about |xi|.
mpz_class xi_abs8(const mpz_class& t, const mpz_class& x, const mpz_class& y);

// When x y > 64 t^3, checks the resolvent size bound |xi|^4 > 2^16 t^(15/2)
// in its squared integer form |xi|^8 > 2^32 t^15.
enum class SizeCheck { holds, fails, not_applicable };
SizeCheck xi_size_check(const mpz_class& t, const mpz_class& x, const mpz_class& y);

// One bracketing interval for a real root of P(x, 1); endpoints are
// p + q sqrt(t) with exact rationals p, q, plus a numeric enclosure.
struct RootBracket {
    mpq_class lo_p, lo_q;
    mpq_class hi_p, hi_q;
    Interval lo, hi;
};

// Brackets for the four real roots, ordered beta4 < beta2 < beta3 < beta1 on
// the real line as [0]..[3] = beta1..beta4 (matching the classical labels).
struct RootBounds {
    mpz_class t;
    std::array<RootBracket, 4> beta;
};

// Requires t >= 18.  Verifies exactly (in Q[sqrt(t)]) that P(x, 1) changes
// sign across every bracket and that the brackets are pairwise disjoint;
// throws std::runtime_error when a verification fails.
RootBounds root_bounds(const mpz_class& t);

// Nearest fourth root of unity to eta/xi (principal fourth roots of the
// exact fourth powers) and the enclosure of |i^j - eta/xi| - (pi/12)|z|.
// certified_related is true when the margin is entirely negative.
struct RelatedClass {
    int root_index;
    Interval margin;
    bool certified_related;
};

RelatedClass classify_related(const mpz_class& t, const mpz_class& x, const mpz_class& y);

// Interval replay of the cross-product identity
//   |xi1 eta2 - xi2 eta1| = 4 (t+1)^(1/4) sqrt(t) |x1 y2 - x2 y1|
// (resolvents as linear forms with one fixed branch) and of the lower bound
// it implies for coprime distinct points.
struct WronskianReport {
    Interval lhs, rhs;
    bool identity_consistent;
    bool bound_holds;
};

WronskianReport wronskian_check(const mpz_class& t, const mpz_class& x1, const mpz_class& y1,
                                const mpz_class& x2, const mpz_class& y2);

// Complex enclosure of a + b*sqrt(-t) (requires d = -t < 0).
ComplexInterval ring_to_complex(const RingElem& e, mpfr_prec_t prec);

}  // namespace quartic
