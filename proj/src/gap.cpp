#include "quartic/gap.hpp"

#include <cmath>
#include <stdexcept>

#include "quartic/intops.hpp"

namespace quartic {

namespace {

void check_rg(long r, int g) {
    if (r < 1) throw std::domain_error("gap: r must be >= 1");
    if (g != 0 && g != 1) throw std::domain_error("gap: g must be 0 or 1");
}

Interval powq_z(const mpz_class& base, long num, unsigned long den, mpfr_prec_t prec) {
    return Interval::from_mpz(base, prec).pow_q(num, den);
}

}  // namespace

GapConstants gap_constants(long r, int g, const mpz_class& t, mpfr_prec_t prec) {
    check_rg(r, g);
    if (t < 1) throw std::domain_error("gap_constants: t must be >= 1");
    const Interval pi = Interval::pi(prec);
    const Interval rr = Interval::from_long(r, prec);
    const Interval two = Interval::from_long(2, prec);
    const Interval three = Interval::from_long(3, prec);

    Interval c1 = two.pow_q(8 * r + 4 + g, 4) * powq_z(t, 10 + 3 * g, 8, prec) /
                  (pi * rr).sqrt();
    Interval c2 = two.pow_q(2 + g - 8 * r, 4) * three.pow_int(4 * r + 2 - 2 * g) *
                  powq_z(t, 32 * r + 10 - 13 * g, 8, prec) / (pi * rr.sqrt());
    return {r, g, t, std::move(c1), std::move(c2)};
}

bool stirling_check(unsigned long k) {
    if (k < 1) throw std::domain_error("stirling_check: k must be >= 1");
    const mpz_class c = binom_int(2 * k, k);
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, k);
    // Lower bound 4^k / (2 sqrt(k)) <= C  <=>  16^k <= 4 k C^2, exactly.
    if (p16 > 4 * k * c * c) return false;
    // Upper bound C < 4^k / sqrt(pi k)  <=>  C^2 pi k < 16^k.
    const mpfr_prec_t prec = 192;
    Interval lhs = Interval::from_mpz(c * c * k, prec) * Interval::pi(prec);
    return lhs.certainly_less(Interval::from_mpz(p16, prec));
}

std::optional<unsigned long> stirling_sweep(unsigned long k_max) {
    const mpfr_prec_t prec = 192;
    const Interval pi = Interval::pi(prec);
    mpz_class c(2), p16(16);
    for (unsigned long k = 1; k <= k_max; ++k) {
        if (p16 > 4 * k * c * c) return k;
        Interval lhs = Interval::from_mpz(c * c * k, prec) * pi;
        if (!lhs.certainly_less(Interval::from_mpz(p16, prec))) return k;
        // binom(2(k+1), k+1) = binom(2k, k) * 2 (2k+1) / (k+1)
        c *= 2 * (2 * k + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
        p16 *= 16;
    }
    return std::nullopt;
}

namespace {

// Shared sweep core for X_r = binom(r-3/4, r) binom(r-1/4, r) = y_r / r:
//   y_1 = 3/16,  y_{r+1} = y_r (16 r^2 + 16 r + 3) / (16 r^2 + 16 r),
// tracked as an unreduced fraction so the loop stays linear-time.
template <class Visit>
std::optional<unsigned long> xr_sweep_impl(unsigned long r_max, Visit visit) {
    const mpfr_prec_t prec = 192;
    const Interval sqrt2pi = (Interval::from_long(2, prec)).sqrt() * Interval::pi(prec);
    mpz_class yn(3), yd(16);
    for (unsigned long r = 1; r <= r_max; ++r) {
        // X_r < 1/(sqrt(2) pi r)  <=>  y_r sqrt(2) pi < 1  <=>  yn sqrt(2) pi < yd.
        Interval lhs = Interval::from_mpz(yn, prec) * sqrt2pi;
        const bool bound_ok = lhs.certainly_less(Interval::from_mpz(yd, prec));
        // Companion binom(r-3/4, r) > binom(r+1/4, r+1): the ratio of the two
        // is (4r+1)/(4r+4) < 1 on a positive value, so it holds identically.
        const bool companion_ok = yn > 0;
        if (!visit(r, bound_ok && companion_ok)) return r;
        const mpz_class r2 = mpz_class(16) * r * r + 16 * r;
        yn *= r2 + 3;
        yd *= r2;
    }
    return std::nullopt;
}

}  // namespace

bool binomial_product_bound_check(unsigned long r) {
    if (r < 1) throw std::domain_error("binomial_product_bound_check: r must be >= 1");
    bool ok = false;
    xr_sweep_impl(r, [&](unsigned long i, bool pass) {
        if (i == r) ok = pass;
        return true;
    });
    return ok;
}

std::optional<unsigned long> binomial_product_sweep(unsigned long r_max) {
    return xr_sweep_impl(r_max, [](unsigned long, bool pass) { return pass; });
}

mpq_class binomial_product_xr(unsigned long r) {
    return binom_rat(mpq_class(4 * static_cast<long>(r) - 3, 4), r) *
           binom_rat(mpq_class(4 * static_cast<long>(r) - 1, 4), r);
}

Interval gap_lower_bound(const mpz_class& t, const mpz_class& xi1_abs8, mpfr_prec_t prec) {
    if (xi1_abs8 <= 0) throw std::domain_error("gap_lower_bound: carrier must be positive");
    return Interval::from_long(3, prec) * powq_z(xi1_abs8, 3, 8, prec) /
           (Interval::pi(prec) * powq_z(t, 5, 4, prec));
}

Interval lambda_floor(long r, int g, const mpz_class& t, mpfr_prec_t prec) {
    check_rg(r, g);
    return Interval::from_long(2, prec).pow_q(-g, 4) * powq_z(t, 4 - 3 * g, 8, prec);
}

GapInequality gap_inequality(long r, int g, const mpz_class& t, const mpz_class& xi1_abs8,
                             const mpz_class& xi2_abs8, mpfr_prec_t prec) {
    check_rg(r, g);
    if (xi1_abs8 <= 0 || xi2_abs8 <= 0)
        throw std::domain_error("gap_inequality: carriers must be positive");
    const GapConstants c = gap_constants(r, g, t, prec);
    Interval lhs = c.c1 * powq_z(xi1_abs8, 4 * r + 1 - g, 8, prec) *
                       powq_z(xi2_abs8, -3, 8, prec) +
                   c.c2 * powq_z(xi1_abs8, -(4 * r + 3 - 3 * g), 8, prec) *
                       powq_z(xi2_abs8, 1, 8, prec);
    const Interval one = Interval::from_long(1, prec);
    Verdict v = Verdict::undecided;
    if (lhs.certainly_greater(one)) v = Verdict::certified;
    else if (lhs.certainly_less(one)) v = Verdict::refuted;
    return {std::move(lhs), v};
}

bool size_contradiction_r1_all_t() {
    // 2^23 t^9 < 6635.52 t^6 would need 2^23 t^3 < 663552/100; at t = 1 the
    // left side is already larger, and it only grows with t.
    const mpq_class lhs(mpz_class(1) << 23);
    const mpq_class rhs(663552, 100);
    return lhs >= rhs;
}

bool size_contradiction_refuted(long r, const mpz_class& t) {
    if (r < 1 || r > 5) throw std::domain_error("size_contradiction_refuted: r must be in 1..5");
    if (t < 1) throw std::domain_error("size_contradiction_refuted: t must be >= 1");
    static const mpz_class n1(1296);
    static const mpz_class n2 = [] { mpz_class x(560); return mpz_class(x * x * x * x); }();
    static const mpz_class n3 = [] { mpz_class x(77 * 16800); return mpz_class(x * x * x * x); }();
    static const mpz_class n4 = [] {
        mpz_class x = mpz_class(231) * mpz_class(150678528);
        return mpz_class(x * x * x * x);
    }();
    static const mpz_class n5 = [] {
        mpz_class x = mpz_class(209) * mpz_class(134424576);
        return mpz_class(x * x * x * x);
    }();
    static const mpz_class* norms[5] = {&n1, &n2, &n3, &n4, &n5};
    static const long f_floor_exp[5] = {2, 4, 10, 13, 14};

    // Refuted when 2^(26r-3) t^(11r-2) >= N_r / F_r^min.
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(11 * r - 2));
    lhs <<= (26 * r - 3);
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 10, static_cast<unsigned long>(f_floor_exp[r - 1]));
    return lhs * f >= *norms[r - 1];
}

namespace {

struct ChainCtx {
    mpfr_prec_t prec;
    mpz_class t;
    Interval pi, tI, x0;  // x0 = 16 t^(15/8), the lower bound on |xi1|

    // Canonical height-bound coefficient at level r:
    //   K(r) = (sqrt(r)/5) (4/81)^r t^(-4r-7/4),  so |xi2| > K(r) |xi1|^(4r+3).
    Interval K(long r) const {
        return Interval::from_long(r, prec).sqrt() / Interval::from_long(5, prec) *
               (Interval::from_long(4, prec) / Interval::from_long(81, prec)).pow_int(r) *
               Interval::from_mpz(t, prec).pow_q(-(16 * r + 7), 4);
    }
};

}  // namespace

ChainReport chain_replay(const mpz_class& t, long r_max) {
    if (t <= 204) throw std::domain_error("chain_replay: requires t > 204");
    if (r_max < 1) throw std::domain_error("chain_replay: r_max must be >= 1");

    ChainCtx cx;
    cx.prec = 256;
    cx.t = t;
    cx.pi = Interval::pi(cx.prec);
    cx.tI = Interval::from_mpz(t, cx.prec);
    cx.x0 = Interval::from_long(16, cx.prec) * cx.tI.pow_q(15, 8);

    ChainReport report;
    report.t = t;
    report.r_max = r_max;
    report.all_certified = true;

    const Interval one = Interval::from_long(1, cx.prec);
    const Interval tenth = Interval::from_mpq(mpq_class(1, 10), cx.prec);
    const Interval nine_tenths = Interval::from_mpq(mpq_class(9, 10), cx.prec);
    const Interval r81 = Interval::from_long(4, cx.prec) / Interval::from_long(81, cx.prec);
    const Interval ratio36 = Interval::from_long(3, cx.prec).pow_int(12).mul_2si(-36);
    const Interval ratio4 = Interval::from_long(3, cx.prec).pow_int(12).mul_2si(-4);

    auto clamp = [](double m) {
        if (std::isnan(m)) return 0.0;
        return std::max(-1e300, std::min(1e300, m));
    };
    auto push_lt_tenth = [&](std::vector<ChainCheck>& out, const std::string& label,
                             const Interval& v, bool gating, bool* ok_flag) {
        const bool ok = v.certainly_less(tenth);
        out.push_back({label, v.str(6), clamp(0.1 - v.hi_d()), ok, gating});
        if (gating && !ok) *ok_flag = false;
    };
    auto push_at_least = [&](std::vector<ChainCheck>& out, const std::string& label,
                             const Interval& lhs, const Interval& rhs, bool gating,
                             bool* ok_flag) {
        const bool ok = !(lhs.lo_q() < rhs.hi_q());
        out.push_back({label, lhs.str(6) + " >= " + rhs.str(6),
                       clamp(lhs.lo_d() - rhs.hi_d()), ok, gating});
        if (gating && !ok) *ok_flag = false;
    };

    // Certified height-bound status per level; level r certified means
    // |xi2| > K(r) |xi1|^(4r+3) has been established.
    bool prev_ok = false;

    for (long r = 1; r <= r_max; ++r) {
        ChainStep step;
        step.r = r;
        step.branch_b_replayed = false;
        bool ok = true;

        if (r == 1) {
            const GapConstants g10 = gap_constants(1, 0, t, cx.prec);
            // Displayed base constant 2^-13 pi^-1/2 t^-5/2.
            Interval disp = one.mul_2si(-13) / cx.pi.sqrt() / cx.tI.pow_q(5, 2);
            push_lt_tenth(step.checks, "c1(1,0)|xi1|^5|xi2|^-3 displayed bound < 0.1", disp,
                          true, &ok);
            // Sharp chain: c1(1,0) (pi/3)^3 t^(15/4) X0^-4.
            Interval sharp = g10.c1 * (cx.pi / Interval::from_long(3, cx.prec)).pow_int(3) *
                             cx.tI.pow_q(15, 4) / cx.x0.pow_int(4);
            push_lt_tenth(step.checks, "c1(1,0)|xi1|^5|xi2|^-3 sharp bound < 0.1", sharp, true,
                          &ok);
            push_at_least(step.checks, "displayed base constant dominates sharp bound", disp,
                          sharp, false, &ok);
            // c2(1,0)|xi1|^-7 |xi2| > 0.9 follows; it yields the level-1 bound.
            step.checks.push_back({"c2(1,0)|xi1|^-7|xi2| > 0.9 (derived)",
                                   nine_tenths.str(6), 0.1 - disp.hi_d(),
                                   disp.certainly_less(tenth) && sharp.certainly_less(tenth),
                                   false});
            Interval k1 = nine_tenths / g10.c2;
            push_at_least(step.checks, "derived level-1 bound implies canonical height bound",
                          k1, cx.K(1), true, &ok);
        } else {
            const long rp = r - 1;  // induction from level rp to level r
            if (!prev_ok) ok = false;
            const GapConstants ga = gap_constants(r, 0, t, cx.prec);
            const Interval kprev = cx.K(rp);
            const Interval kprev_inv3 = one / kprev.pow_int(3);

            // Branch A (Sigma_{r,0} != 0).
            Interval m_sharp = ga.c1 * kprev_inv3;
            Interval m_disp = Interval::from_long(2000, cx.prec) /
                              (cx.pi.sqrt() * Interval::from_long(rp * rp, cx.prec)) *
                              cx.tI.pow_q(24 * rp + 13, 2) * ratio4.pow_int(rp);
            push_at_least(step.checks, "displayed induction constant dominates sharp bound",
                          m_disp, m_sharp, false, &ok);
            Interval d_disp = Interval::from_long(125, cx.prec).mul_2si(-12) /
                              (cx.pi.sqrt() * Interval::from_long(rp * rp, cx.prec)) *
                              cx.tI.pow_q(-(3 * rp + 1), 1) * ratio36.pow_int(rp);
            push_lt_tenth(step.checks, "displayed size-bound step constant < 0.1", d_disp, true,
                          &ok);
            Interval sharp = m_sharp / cx.x0.pow_int(8 * rp + 4);
            push_lt_tenth(step.checks, "c1(r+1,0)|xi1|^(4r+5)|xi2|^-3 sharp bound < 0.1", sharp,
                          true, &ok);
            Interval knext = nine_tenths / ga.c2;
            push_at_least(step.checks, "branch A maintains canonical height bound", knext,
                          cx.K(r), true, &ok);

            // Branch B (Sigma_{r,0} = 0 forces g = 1 replay), only live for
            // induction levels rp >= 5.
            if (rp >= 5) {
                step.branch_b_replayed = true;
                const GapConstants gb1 = gap_constants(r, 1, t, cx.prec);
                const GapConstants gb2 = gap_constants(r + 1, 1, t, cx.prec);
                Interval sb1 = gb1.c1 * kprev_inv3 / cx.x0.pow_int(8 * rp + 5);
                push_lt_tenth(step.checks, "c1(r+1,1)|xi1|^(4r+4)|xi2|^-3 sharp bound < 0.1",
                              sb1, true, &ok);
                Interval kb = nine_tenths / gb1.c2;
                Interval kb_disp = Interval::from_mpq(mpq_class(2, 25), cx.prec) *
                                   Interval::from_long(r, cx.prec).sqrt() * r81.pow_int(rp) *
                                   cx.tI.pow_q(-(32 * rp + 29), 8);
                push_at_least(step.checks, "g=1 intermediate bound meets displayed constant",
                              kb, kb_disp, true, &ok);
                Interval mb_sharp = gb2.c1 / kb_disp.pow_int(3);
                Interval mb_disp = Interval::from_long(24000, cx.prec) /
                                   Interval::from_long(r * r, cx.prec) * ratio4.pow_int(rp) *
                                   cx.tI.pow_q(24 * rp + 25, 2);
                push_at_least(step.checks,
                              "displayed g=1 induction constant dominates sharp bound", mb_disp,
                              mb_sharp, false, &ok);
                Interval db = one / Interval::from_long(2 * r * r, cx.prec) *
                              ratio36.pow_int(rp) * cx.tI.pow_q(5 - 3 * rp, 1);
                push_lt_tenth(step.checks, "displayed g=1 final constant < 0.1", db, true, &ok);
                Interval sb2 = mb_sharp / cx.x0.pow_int(8 * rp + 4);
                push_lt_tenth(step.checks, "c1(r+2,1)|xi1|^(4r+8)|xi2|^-3 sharp bound < 0.1",
                              sb2, true, &ok);
                Interval kb2 = nine_tenths / gb2.c2;
                Interval kb2_disp = Interval::from_mpq(mpq_class(2, 25), cx.prec) *
                                    Interval::from_long(r, cx.prec).sqrt() *
                                    r81.pow_int(rp + 1) * cx.tI.pow_q(-(32 * rp + 61), 8);
                push_at_least(step.checks, "g=1 second bound meets displayed constant", kb2,
                              kb2_disp, true, &ok);
                push_at_least(step.checks, "branch B maintains canonical height bound",
                              kb2_disp * cx.x0, cx.K(r), true, &ok);
            }
        }

        // Final magnitude at this level: K(r) X0^(4r+3) >= t^((28r+31)/8).
        Interval final_lhs = cx.K(r) * cx.x0.pow_int(4 * r + 3);
        Interval final_rhs = cx.tI.pow_q(28 * r + 31, 8);
        bool final_ok = true;
        push_at_least(step.checks, "height bound implies |xi2| > t^(7r/2+31/8)", final_lhs,
                      final_rhs, true, &final_ok);

        step.height_bound_certified = ok;
        step.final_certified = ok && final_ok;
        if (!step.final_certified) report.all_certified = false;
        prev_ok = ok;
        report.steps.push_back(std::move(step));
    }
    return report;
}

}  // namespace quartic
