#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quartic/forms.hpp"
#include "quartic/intops.hpp"
#include "quartic/pade.hpp"

using namespace quartic;

TEST_CASE("approximation pairs match hand values") {
    auto p10 = pade_pair(1, 0);
    CHECK(p10.A == RatPoly({mpq_class(2), mpq_class(-5, 4)}));
    CHECK(p10.B == RatPoly({mpq_class(2), mpq_class(-3, 4)}));

    auto p11 = pade_pair(1, 1);
    CHECK(p11.A == RatPoly({mpq_class(1), mpq_class(-1, 4)}));
    CHECK(p11.B == RatPoly({mpq_class(1)}));

    auto p21 = pade_pair(2, 1);
    CHECK(p21.A == RatPoly({mpq_class(3), mpq_class(-5, 2), mpq_class(5, 32)}));
    CHECK(p21.B == RatPoly({mpq_class(3), mpq_class(-7, 4)}));
    CHECK(p21.A.coeff(0) == mpq_class(binom_int(3, 2)));
}

TEST_CASE("degrees and equal constant terms") {
    for (long r = 1; r <= 10; ++r)
        for (int g : {0, 1}) {
            auto p = pade_pair(r, g);
            CHECK(p.A.degree() == r);
            CHECK(p.B.degree() == r - g);
            mpz_class c0 = binom_int(static_cast<unsigned long>(2 * r - g),
                                     static_cast<unsigned long>(r));
            CHECK(p.A.coeff(0) == mpq_class(c0));
            CHECK(p.B.coeff(0) == mpq_class(c0));
        }
}

TEST_CASE("remainder vanishing order and Gauss constant") {
    auto r10 = remainder_order_check(1, 0);
    CHECK(r10.order == 3);
    CHECK(r10.leading == mpq_class(5, 128));

    auto r11 = remainder_order_check(1, 1);
    CHECK(r11.order == 2);
    CHECK(r11.leading == mpq_class(3, 32));

    auto r50 = remainder_order_check(5, 0);
    CHECK(r50.order == 11);

    for (long r = 1; r <= 10; ++r)
        for (int g : {0, 1}) CHECK(remainder_order_check(r, g).order == 2 * r + 1 - g);
}

TEST_CASE("reflection companions") {
    CHECK(reflection_check(1, 0));
    CHECK(reflection_check(2, 1));
    for (long r = 1; r <= 12; ++r)
        for (int g : {0, 1}) CHECK(reflection_check(r, g));

    // negative control: a tampered coefficient must break the equality
    auto p = pade_pair(3, 0);
    auto cd = reflection_pair(3, 0);
    RatPoly tampered = cd.C + RatPoly::monomial(mpq_class(1, 7), 1);
    CHECK(!(tampered == p.A.compose_linear(1, -1)));
    CHECK(cd.C == p.A.compose_linear(1, -1));
}

TEST_CASE("reflected polynomials have positive coefficients") {
    for (long r = 1; r <= 20; ++r)
        for (int g : {0, 1}) {
            auto cd = reflection_pair(r, g);
            for (int i = 0; i <= cd.C.degree(); ++i)
                CHECK(cd.C.coeff(static_cast<size_t>(i)) > 0);
        }
}

TEST_CASE("determinants collapse to a single monomial") {
    auto d10 = determinant_check(1, 0);
    CHECK(d10.k == 2);
    CHECK(d10.c == mpq_class(-3, 16));

    auto d11 = determinant_check(1, 1);
    CHECK(d11.k == 3);
    CHECK(d11.c == mpq_class(15, 128));

    for (long r = 1; r <= 8; ++r)
        for (int h : {0, 1}) {
            auto d = determinant_check(r, h);
            CHECK(d.c != 0);
            CHECK(d.k == 2 * r + h);
        }
}

TEST_CASE("integer tables verify against construction and quartic identity") {
    auto e1 = explicit_table(1);
    CHECK(e1.A == RatPoly({mpq_class(8), mpq_class(-5)}));
    CHECK(e1.B == RatPoly({mpq_class(8), mpq_class(-3)}));
    CHECK(e1.F == RatPoly({mpq_class(320), mpq_class(-320), mpq_class(81)}));

    auto e3 = explicit_table(3);
    CHECK(e3.F.coeff(0) == mpq_class(mpz_class("14057472000")));

    auto e5 = explicit_table(5);
    CHECK(e5.F.coeff(10) == mpq_class(mpz_class("1908029761")));

    for (long r = 1; r <= 5; ++r) CHECK_NOTHROW(explicit_table(r));
    CHECK_THROWS_AS(explicit_table(6), std::domain_error);
}

TEST_CASE("bilinear ledger") {
    auto entries = bilinear_ledger_check();
    REQUIRE(entries.size() == 9);
    for (const auto& e : entries) {
        CHECK(e.is_monomial);
        CHECK(e.coeff_matches);
    }
    CHECK(entries[0].computed_coeff == -2);
    CHECK(entries[4].computed_coeff == -16800);
    CHECK(entries[4].computed_x_exp == 2);
    CHECK(entries[4].computed_y_exp == 3);
    // the eighth identity computes with total degree 9, not the printed y^7
    CHECK(entries[7].computed_coeff == -14586);
    CHECK(entries[7].computed_x_exp == 0);
    CHECK(entries[7].computed_y_exp == 9);
    CHECK(!entries[7].exponent_matches);
    for (int i : {0, 1, 2, 3, 4, 5, 6, 8}) CHECK(entries[static_cast<size_t>(i)].exponent_matches);
}

TEST_CASE("fourth powers of the mixed resolvent products stay in the ring") {
    auto c = fourth_power_integrality(1, 1, 0, 0, 1, FourthPowerKind::xi_eta_over_root);
    CHECK(c == RingElem(0, 2, -1));
    CHECK_NOTHROW(fourth_power_integrality(2, 1, 1, 1, 1, FourthPowerKind::xi3_xi));
    CHECK_NOTHROW(fourth_power_integrality(1, 1, 0, 1, 0, FourthPowerKind::eta3_eta));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dt(1, 50), dxy(-20, 20);
    int done = 0;
    while (done < 200) {
        mpz_class t(dt(rng)), x1(dxy(rng)), y1(dxy(rng)), x2(dxy(rng)), y2(dxy(rng));
        if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
        CHECK_NOTHROW(fourth_power_integrality(t, x1, y1, x2, y2,
                                               FourthPowerKind::xi_eta_over_root));
        CHECK_NOTHROW(fourth_power_integrality(t, x1, y1, x2, y2, FourthPowerKind::xi3_xi));
        CHECK_NOTHROW(fourth_power_integrality(t, x1, y1, x2, y2, FourthPowerKind::eta3_eta));
        ++done;
    }
}

TEST_CASE("homogenized evaluations clear their denominators") {
    auto sv = star_integrality(1, 1, 0, 1, 0);
    CHECK(sv.astar == RingElem(-2, 8, -1));
    CHECK(sv.bstar == RingElem(2, 8, -1));
    CHECK_NOTHROW(star_integrality(2, 3, 1, 1, 1));
    CHECK_NOTHROW(star_integrality(1, 5, 0, 2, 3));

    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> dt(1, 50), dxy(-20, 20), dr(1, 5), dg(0, 1);
    int done = 0;
    while (done < 200) {
        mpz_class t(dt(rng)), x(dxy(rng)), y(dxy(rng));
        if (x == 0 && y == 0) continue;
        CHECK_NOTHROW(star_integrality(t, dr(rng), static_cast<int>(dg(rng)), x, y));
        ++done;
    }
}

TEST_CASE("homogenized A and conjugated B agree up to sign at (u, u + conj(u))") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> dt(1, 30), dab(-40, 40), dr(1, 6);
    for (int i = 0; i < 200; ++i) {
        const long r = dr(rng);
        auto p = pade_pair(r, 0);
        RingElem u(dab(rng), dab(rng), -dt(rng));
        if (u.is_zero()) continue;
        const mpz_class s = u.a() * 2;  // u + conj(u)
        auto av = star_eval(p.A, r, u, s);
        auto bv = star_eval(p.B, r, u, s);
        const int sign = (r % 2 == 0) ? 1 : -1;
        CHECK(av.a == sign * bv.a);
        CHECK(av.b == -sign * bv.b);
    }
}

TEST_CASE("sigma evaluations: exact algebraic side") {
    auto s1 = sigma_eval(1, 1, 0, 1, 0, 0, 1);
    REQUIRE(s1.lambda);
    CHECK(s1.lambda->a() == 0);
    CHECK(s1.lambda->b() == -8);

    auto s2 = sigma_eval(2, 2, 0, 1, 1, 1, 2);
    REQUIRE(s2.lambda);
    CHECK(s2.lambda->a() == 0);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> dt(1, 40), dxy(-15, 15), dr(1, 5);
    int done = 0, nonzero = 0;
    while (done < 100) {
        mpz_class t(dt(rng)), x1(dxy(rng)), y1(dxy(rng)), x2(dxy(rng)), y2(dxy(rng));
        if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
        if (eval_P(t, x1, y1) == 0 || eval_P(t, x2, y2) == 0) continue;
        auto se = sigma_eval(t, dr(rng), 0, x1, y1, x2, y2);
        REQUIRE(se.lambda);
        REQUIRE(se.lambda->a() == 0);
        // |Lambda| >= sqrt(t) whenever Lambda != 0: norm = t b^2 >= t
        if (se.lambda->b() != 0) {
            REQUIRE(se.lambda->norm() >= t);
            ++nonzero;
        }
        ++done;
    }
    CHECK(nonzero > 50);
}

TEST_CASE("sigma evaluations: g = 1 exact fourth power") {
    auto se = sigma_eval(2, 2, 1, 1, 1, 1, 2);
    REQUIRE(se.lambda4);  // integral at t = 2
    CHECK(se.lambda4_in_max_order);
    CHECK(se.lambda4_a == mpq_class(se.lambda4->a()));

    // ring-of-integers membership is a property of same-root solution pairs,
    // not of arbitrary points: this instance has denominator 29
    auto bad = sigma_eval(57, 1, 1, 2, 8, 15, 16);
    CHECK(!bad.lambda4_in_max_order);
    CHECK(!bad.lambda4);
    CHECK(bad.lambda4_a.get_den() == 29);

    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> dt(1, 40), dxy(-15, 15), dr(1, 5);
    int done = 0, representable = 0;
    while (done < 100) {
        mpz_class t(dt(rng)), x1(dxy(rng)), y1(dxy(rng)), x2(dxy(rng)), y2(dxy(rng));
        if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
        if (eval_P(t, x1, y1) == 0 || eval_P(t, x2, y2) == 0) continue;
        auto s = sigma_eval(t, dr(rng), 1, x1, y1, x2, y2);
        if (s.lambda4) {
            ++representable;
            CHECK(s.lambda4_in_max_order);
            CHECK(mpq_class(s.lambda4->a()) == s.lambda4_a);
            CHECK(mpq_class(s.lambda4->b()) == s.lambda4_b);
        }
        ++done;
    }
    CHECK(representable > 20);
}

TEST_CASE("bound on |A| over the unit disk around 1") {
    const mpfr_prec_t prec = 128;
    // sample z = 1 - rho e^(i theta) with rational points on the circle:
    // cos = (1-s^2)/(1+s^2), sin = 2s/(1+s^2), so |1 - z| = rho exactly
    const mpq_class slopes[] = {mpq_class(0),      mpq_class(1, 4),  mpq_class(1, 2),
                                mpq_class(1),      mpq_class(2),     mpq_class(7),
                                mpq_class(-1, 3),  mpq_class(-1),    mpq_class(-3),
                                mpq_class(-5, 2)};
    const mpq_class rhos[] = {mpq_class(0), mpq_class(1, 4), mpq_class(1, 2),
                              mpq_class(3, 4), mpq_class(1)};
    const mpq_class eps(mpz_class(1), mpz_class(1) << 64);
    for (long r = 1; r <= 8; ++r)
        for (int g : {0, 1}) {
            auto p = pade_pair(r, g);
            const mpq_class cap(binom_int(static_cast<unsigned long>(2 * r - g),
                                          static_cast<unsigned long>(r)));
            for (const auto& s : slopes)
                for (const auto& rho : rhos) {
                    const mpq_class den = 1 + s * s;
                    const mpq_class re = 1 - rho * (1 - s * s) / den;
                    const mpq_class im = -rho * (2 * s / den);
                    ComplexInterval z{Interval::from_mpq(re, prec),
                                      Interval::from_mpq(im, prec)};
                    ComplexInterval acc{Interval(prec), Interval(prec)};
                    for (int i = p.A.degree(); i >= 0; --i) {
                        acc = acc * z;
                        acc.re = acc.re +
                                 Interval::from_mpq(p.A.coeff(static_cast<size_t>(i)), prec);
                    }
                    CHECK(acc.abs().hi_q() <= cap + eps);
                }
        }
}

TEST_CASE("bound on the remainder cofactor over [0, 0.9]") {
    // |F(z)| = F(0) G(z) with G's coefficients positive; partial sums plus a
    // geometric tail (ratio <= z once the coefficient ratio drops below 1)
    // must stay below F(0) (1-z)^(-(2r+1-g)/2).
    const mpfr_prec_t prec = 192;
    const unsigned long M = 80;
    for (long r = 1; r <= 5; ++r)
        for (int g : {0, 1}) {
            // coefficient ratio of G is <= 1 from m >= M on (checked exactly):
            // (r+1-g+m)(r+3/4+m) <= (m+1)(2r+2-g+m) for m >= M
            for (unsigned long m = M; m < M + 4; ++m) {
                mpq_class lhs = (mpq_class(r + 1 - g) + static_cast<long>(m)) *
                                (mpq_class(4 * r + 3, 4) + static_cast<long>(m));
                mpq_class rhs = mpq_class(static_cast<long>(m) + 1) *
                                (mpq_class(2 * r + 2 - g) + static_cast<long>(m));
                REQUIRE(lhs <= rhs);
            }
            for (int zk = 0; zk <= 9; ++zk) {
                mpq_class z(zk, 10);
                z.canonicalize();
                mpq_class gm(1), partial(0), zp(1);
                for (unsigned long m = 0; m < M; ++m) {
                    partial += gm * zp;
                    mpq_class num = (mpq_class(r + 1 - g) + static_cast<long>(m)) *
                                    (mpq_class(4 * r + 3, 4) + static_cast<long>(m));
                    mpq_class den = mpq_class(static_cast<long>(m) + 1) *
                                    (mpq_class(2 * r + 2 - g) + static_cast<long>(m));
                    gm *= num / den;
                    zp *= z;
                }
                mpq_class tail = (z == 0) ? mpq_class(0) : gm * zp / (1 - z);
                mpq_class gsum_hi = partial + tail;
                if (z == 0) {
                    CHECK(gsum_hi == 1);  // both sides are exactly 1
                    continue;
                }
                Interval lhs = Interval::from_mpq(gsum_hi, prec);
                Interval rhs = (Interval::from_long(1, prec) - Interval::from_mpq(z, prec))
                                   .pow_q(-(2 * r + 1 - g), 2);
                CHECK(lhs.certainly_less(rhs));
            }
        }
}

TEST_CASE("at most one of Sigma_{r,0}, Sigma_{r+h,1} can vanish") {
    // Mechanism check: expanding a 3x3 matrix with two equal rows along its
    // first row gives, for any consistent branch values,
    //   A_{r,0}(z1) Sigma_{r+h,1} - A_{r+h,1}(z1) Sigma_{r,0}
    //     + (-1)^r (eta1/xi1) [A_{r,0} B_{r+h,1} - A_{r+h,1} B_{r,0}](z1) = 0.
    // The bracket is c z1^(2r+h) with c != 0, so both Sigmas vanishing forces
    // z1 = 0, excluded by P(x1, y1) != 0.  The identity is replayed here on
    // random points; its enclosure must contain zero.
    const mpfr_prec_t prec = 192;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> dt(1, 30), dxy(-12, 12), dr(1, 4), dh(0, 1);
    int done = 0;
    while (done < 40) {
        mpz_class t(dt(rng)), x1(dxy(rng)), y1(dxy(rng)), x2(dxy(rng)), y2(dxy(rng));
        if ((x1 == 0 && y1 == 0) || (x2 == 0 && y2 == 0)) continue;
        if (eval_P(t, x1, y1) == 0 || eval_P(t, x2, y2) == 0) continue;
        const long r = dr(rng);
        const int h = static_cast<int>(dh(rng));

        auto s0 = sigma_eval(t, r, 0, x1, y1, x2, y2);
        auto s1 = sigma_eval(t, r + h, 1, x1, y1, x2, y2);

        auto rp1 = resolvent(t, x1, y1);
        ComplexInterval ratio1 =
            (ring_to_complex(rp1.eta4, prec) / ring_to_complex(rp1.xi4, prec)).root4_principal();
        ComplexInterval one{Interval::from_long(1, prec), Interval(prec)};
        ComplexInterval z1 =
            one - ring_to_complex(rp1.eta4, prec) / ring_to_complex(rp1.xi4, prec);
        auto horner = [&](const RatPoly& poly) {
            ComplexInterval acc{Interval(prec), Interval(prec)};
            for (int i = poly.degree(); i >= 0; --i) {
                acc = acc * z1;
                acc.re = acc.re + Interval::from_mpq(poly.coeff(static_cast<size_t>(i)), prec);
            }
            return acc;
        };
        auto p0 = pade_pair(r, 0);
        auto p1 = pade_pair(r + h, 1);
        auto det = determinant_check(r, h);
        ComplexInterval zpow = one;
        for (long i = 0; i < det.k; ++i) zpow = zpow * z1;
        ComplexInterval third =
            ratio1 * zpow * ComplexInterval{Interval::from_mpq(det.c, prec), Interval(prec)};
        if (r % 2 != 0) third = -third;

        // the matrix row carries (-1)^r for both columns, while Sigma_{r+h,1}
        // is defined with (-1)^(r+h); adjust when h = 1
        ComplexInterval sig1 = s1.sigma;
        if (h == 1) {
            ComplexInterval adj = ratio1 * horner(p1.B);
            adj = adj + adj;
            sig1 = (r % 2 == 0) ? sig1 - adj : sig1 + adj;
        }

        ComplexInterval total = horner(p0.A) * sig1 - horner(p1.A) * s0.sigma + third;
        CHECK(total.re.contains_zero());
        CHECK(total.im.contains_zero());
        ++done;
    }
}
