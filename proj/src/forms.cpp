#include "quartic/forms.hpp"

#include <stdexcept>

#include "quartic/intops.hpp"

namespace quartic {

QuarticForm make_quartic(const mpz_class& t) {
    if (t < 1) throw std::domain_error("make_quartic: t must be >= 1");
    return {t, IntForm({mpz_class(1), 4 * t, -6 * t, -4 * t * t, t * t})};
}

mpz_class eval_P(const mpz_class& t, const mpz_class& x, const mpz_class& y) {
    return make_quartic(t).form.eval(x, y);
}

ResolventPoint resolvent(const mpz_class& t, const mpz_class& x, const mpz_class& y) {
    if (x == 0 && y == 0) throw std::invalid_argument("resolvent: (0, 0) is excluded");
    const mpz_class d = -t;
    const RingElem xi4 = RingElem(1, 1, d) * RingElem(x, -y, d).pow(4) * mpz_class(4);
    const RingElem eta4 = RingElem(-1, 1, d) * RingElem(x, y, d).pow(4) * mpz_class(4);
    const RingElem diff = xi4 - eta4;
    const mpz_class p8 = 8 * eval_P(t, x, y);
    if (!diff.is_rational() || diff.a() != p8)
        throw std::logic_error("resolvent: xi^4 - eta^4 != 8 P(x, y)");
    return {t, x, y, xi4, eta4, diff, xi4};
}

mpz_class xi_abs8(const mpz_class& t, const mpz_class& x, const mpz_class& y) {
    if (x == 0 && y == 0) throw std::invalid_argument("xi_abs8: (0, 0) is excluded");
    mpz_class s = x * x + t * y * y;
    mpz_class s4 = s * s;
    s4 *= s4;
    return 16 * (t + 1) * s4;
}

SizeCheck xi_size_check(const mpz_class& t, const mpz_class& x, const mpz_class& y) {
    if (x <= 0 || y <= 0) throw std::invalid_argument("xi_size_check: x, y must be positive");
    mpz_class threshold = 64 * t * t * t;
    if (x * y <= threshold) return SizeCheck::not_applicable;
    // |xi|^8 > 2^32 t^15, all integers.
    mpz_class t15;
    mpz_pow_ui(t15.get_mpz_t(), t.get_mpz_t(), 15);
    mpz_class rhs = t15 << 32;
    return xi_abs8(t, x, y) > rhs ? SizeCheck::holds : SizeCheck::fails;
}

ComplexInterval ring_to_complex(const RingElem& e, mpfr_prec_t prec) {
    if (e.d() >= 0) throw std::invalid_argument("ring_to_complex: needs negative discriminant");
    const mpz_class t = -e.d();
    Interval sq = Interval::from_mpz(t, prec).sqrt();
    return {Interval::from_mpz(e.a(), prec), Interval::from_mpz(e.b(), prec) * sq};
}

namespace {

// Exact arithmetic on values p + q sqrt(t), p, q rational, t a fixed
// non-square positive integer (sqrt(t) irrational is not required; sign logic
// is exact either way).
struct QuadVal {
    mpq_class p, q;
};

QuadVal qv_mul(const QuadVal& a, const QuadVal& b, const mpz_class& t) {
    return {a.p * b.p + mpq_class(t) * a.q * b.q, a.p * b.q + a.q * b.p};
}

QuadVal qv_add(const QuadVal& a, const QuadVal& b) { return {a.p + b.p, a.q + b.q}; }

// Sign of p + q sqrt(t), exact.
int qv_sign(const QuadVal& v, const mpz_class& t) {
    const int sp = sgn(v.p), sq = sgn(v.q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with t q^2.
    mpq_class p2 = v.p * v.p, tq2 = mpq_class(t) * v.q * v.q;
    if (p2 == tq2) return 0;
    return p2 > tq2 ? sp : sq;
}

// P(v, 1) evaluated exactly in Q[sqrt(t)].
QuadVal eval_P_quad(const mpz_class& t, const QuadVal& v) {
    const QuarticForm Q = make_quartic(t);
    QuadVal acc{mpq_class(0), mpq_class(0)};
    for (int i = 0; i <= 4; ++i) {
        acc = qv_mul(acc, v, t);
        acc = qv_add(acc, QuadVal{mpq_class(Q.form.coeff(static_cast<size_t>(i))), mpq_class(0)});
    }
    return acc;
}

Interval qv_enclosure(const QuadVal& v, const mpz_class& t, mpfr_prec_t prec) {
    Interval sq = Interval::from_mpz(t, prec).sqrt();
    return Interval::from_mpq(v.p, prec) + Interval::from_mpq(v.q, prec) * sq;
}

}  // namespace

RootBounds root_bounds(const mpz_class& t) {
    if (t < 18) throw std::invalid_argument("root_bounds: requires t >= 18");
    const mpq_class qt(t);
    const mpq_class inv8t = mpq_class(1) / (8 * qt);
    const mpq_class inv512t2 = mpq_class(1) / (512 * qt * qt);

    // Endpoint data (p, q) meaning p + q sqrt(t).
    QuadVal b1_lo{mpq_class(1, 2) - 2 * inv8t, 1 + inv8t};
    QuadVal b1_hi{mpq_class(1, 2) - inv8t, 1 + inv8t};
    QuadVal b2_lo{mpq_class(1, 2) - inv8t, -(1 + inv8t)};
    QuadVal b2_hi{mpq_class(1, 2), -(1 + inv8t)};
    QuadVal b3_lo{mpq_class(1, 4) - 5 * inv8t / 8 + 22 * inv512t2, 0};
    QuadVal b3_hi{mpq_class(1, 4) - 5 * inv8t / 8 + 23 * inv512t2, 0};
    QuadVal b4_lo{-4 * qt - mpq_class(5, 4) + 21 * inv8t / 8 - 87 * inv512t2, 0};
    QuadVal b4_hi{-4 * qt - mpq_class(5, 4) + 21 * inv8t / 8 - 84 * inv512t2, 0};

    const QuadVal los[4] = {b1_lo, b2_lo, b3_lo, b4_lo};
    const QuadVal his[4] = {b1_hi, b2_hi, b3_hi, b4_hi};

    RootBounds out{t, {}};
    const mpfr_prec_t prec = 192;
    for (int i = 0; i < 4; ++i) {
        const int slo = qv_sign(eval_P_quad(t, los[i]), t);
        const int shi = qv_sign(eval_P_quad(t, his[i]), t);
        if (slo == 0 || shi == 0 || slo == shi)
            throw std::runtime_error("root_bounds: sign change verification failed for beta" +
                                     std::to_string(i + 1));
        out.beta[static_cast<size_t>(i)] =
            RootBracket{los[i].p, los[i].q, his[i].p, his[i].q,
                        qv_enclosure(los[i], t, prec), qv_enclosure(his[i], t, prec)};
    }

    // Pairwise disjoint: beta4 < beta2 < beta3 < beta1 on the real line.
    const int order[4] = {3, 1, 2, 0};
    for (int i = 0; i + 1 < 4; ++i) {
        const QuadVal& hi = his[order[i]];
        const QuadVal& lo = los[order[i + 1]];
        QuadVal diff{lo.p - hi.p, lo.q - hi.q};
        if (qv_sign(diff, t) <= 0)
            throw std::runtime_error("root_bounds: brackets are not disjoint");
    }
    return out;
}

RelatedClass classify_related(const mpz_class& t, const mpz_class& x, const mpz_class& y) {
    const ResolventPoint rp = resolvent(t, x, y);
    const mpz_class P = eval_P(t, x, y);
    if (P == 0) throw std::invalid_argument("classify_related: P(x, y) = 0");
    const mpz_class abs8 = xi_abs8(t, x, y);

    return with_precision_ladder([&](mpfr_prec_t prec) -> RelatedClass {
        ComplexInterval ratio =
            ring_to_complex(rp.eta4, prec) / ring_to_complex(rp.xi4, prec);
        ComplexInterval w = ratio.root4_principal();

        Interval dist[4];
        for (int j = 0; j < 4; ++j) {
            ComplexInterval one{Interval::from_long(1, prec), Interval(prec)};
            dist[j] = (one.mul_i_pow(j) - w).abs();
        }
        int best = 0;
        for (int j = 1; j < 4; ++j)
            if (dist[j].lo_d() < dist[best].lo_d()) best = j;
        for (int j = 0; j < 4; ++j) {
            if (j == best) continue;
            if (!dist[best].certainly_less(dist[j]))
                throw precision_needed("classify_related: nearest root of unity ambiguous");
        }

        // |z| = 8|P| / |xi^4| with |xi^4| = sqrt(|xi|^8).
        Interval zabs = Interval::from_mpz(8 * abs(P), prec) /
                        Interval::from_mpz(abs8, prec).sqrt();
        Interval margin =
            dist[best] - Interval::pi(prec) * zabs / Interval::from_long(12, prec);
        if (margin.contains_zero())
            throw precision_needed("classify_related: margin sign undecided");
        return RelatedClass{best, margin, margin.certainly_negative()};
    });
}

WronskianReport wronskian_check(const mpz_class& t, const mpz_class& x1, const mpz_class& y1,
                                const mpz_class& x2, const mpz_class& y2) {
    const mpz_class det = x1 * y2 - x2 * y1;
    if (det == 0) throw std::invalid_argument("wronskian_check: x1 y2 = x2 y1");

    return with_precision_ladder([&](mpfr_prec_t prec) -> WronskianReport {
        const Interval sqt = Interval::from_mpz(t, prec).sqrt();
        // One fixed branch for each resolvent constant, shared by both points:
        // xi(x, y) = c_xi (x - w y), eta(x, y) = c_eta (x + w y) with
        // c_xi = (4(1+w))^(1/4), c_eta = (4(w-1))^(1/4), w = i sqrt(t).
        const ComplexInterval c_xi =
            ComplexInterval{Interval::from_long(4, prec), sqt.mul_2si(2)}.root4_principal();
        const ComplexInterval c_eta =
            ComplexInterval{Interval::from_long(-4, prec), sqt.mul_2si(2)}.root4_principal();

        auto point = [&](const mpz_class& px, const mpz_class& py, bool conjugate) {
            Interval re = Interval::from_mpz(px, prec);
            Interval im = Interval::from_mpz(conjugate ? py : -py, prec) * sqt;
            return ComplexInterval{re, im};
        };
        const ComplexInterval xi1 = c_xi * point(x1, y1, false);
        const ComplexInterval xi2 = c_xi * point(x2, y2, false);
        const ComplexInterval eta1 = c_eta * point(x1, y1, true);
        const ComplexInterval eta2 = c_eta * point(x2, y2, true);

        const Interval lhs = (xi1 * eta2 - xi2 * eta1).abs();
        const Interval tp1_q = Interval::from_mpz(t + 1, prec).rootn(4);
        const Interval rhs = Interval::from_long(4, prec) * tp1_q * sqt *
                             Interval::from_mpz(abs(det), prec);
        const bool consistent = !lhs.certainly_less(rhs) && !lhs.certainly_greater(rhs);
        const Interval floor = Interval::from_long(4, prec) * sqt * tp1_q;
        const bool bound = !lhs.certainly_less(floor) && abs(det) >= 1;
        if (!consistent) throw precision_needed("wronskian_check: enclosures diverged");
        return WronskianReport{lhs, rhs, consistent, bound};
    });
}

}  // namespace quartic
