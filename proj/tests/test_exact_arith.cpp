#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quartic/intops.hpp"
#include "quartic/interval.hpp"
#include "quartic/poly.hpp"
#include "quartic/ring.hpp"

using namespace quartic;

namespace {
mpz_class rand_z(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return mpz_class(d(rng));
}

mpq_class rand_q(std::mt19937_64& rng, long num_range, long den_range) {
    mpq_class q(rand_z(rng, -num_range, num_range), rand_z(rng, 1, den_range));
    q.canonicalize();
    return q;
}
}  // namespace

TEST_CASE("generalized binomial coefficients") {
    CHECK(binom_rat(mpq_class(5, 4), 1) == mpq_class(5, 4));
    CHECK(binom_rat(mpq_class(1, 4), 2) == mpq_class(-3, 32));
    CHECK(binom_rat(mpq_class(1, 4), 0) == 1);
    // binom(1/4, 2) * 8^2 is an integer
    mpq_class v = binom_rat(mpq_class(1, 4), 2) * 64;
    CHECK(v == -6);
    CHECK(v.get_den() == 1);
}

TEST_CASE("binom(a/4, n) 8^n is integral for nonnegative a, n <= 40") {
    for (long a = 0; a <= 40; ++a) {
        mpz_class p8(1);
        for (unsigned long n = 0; n <= 40; ++n) {
            mpq_class alpha(a, 4);
            alpha.canonicalize();
            mpq_class v = binom_rat(alpha, n) * mpq_class(p8);
            CHECK(v.get_den() == 1);
            p8 *= 8;
        }
    }
}

TEST_CASE("quarter root series") {
    CHECK(quarter_root_series(0) == RatPoly({mpq_class(1)}));
    CHECK(quarter_root_series(1) == RatPoly({mpq_class(1), mpq_class(-1, 4)}));
    RatPoly s = quarter_root_series(3);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == mpq_class(-1, 4));
    CHECK(s.coeff(2) == mpq_class(-3, 32));
    CHECK(s.coeff(3) == mpq_class(-7, 128));
}

TEST_CASE("perfect square detection") {
    CHECK(*is_perfect_square(mpz_class(57121)) == 239);
    CHECK(*is_perfect_square(mpz_class(0)) == 0);
    CHECK(!is_perfect_square(mpz_class(2)));
    CHECK(!is_perfect_square(mpz_class(-4)));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        mpz_class r = rand_z(rng, 0, 1000000000L);
        mpz_class sq = r * r;
        auto root = is_perfect_square(sq);
        REQUIRE(root);
        CHECK(*root == r);
        if (r > 1) {
            CHECK(!is_perfect_square(sq - 1));
            CHECK(!is_perfect_square(sq + 1));
        }
    }
}

TEST_CASE("divisors") {
    auto d = divisors(mpz_class(36));
    CHECK(d == std::vector<mpz_class>({1, 2, 3, 4, 6, 9, 12, 18, 36}));
    CHECK(divisors(mpz_class(1)) == std::vector<mpz_class>({1}));
}

TEST_CASE("ring norm is multiplicative and conjugation is a homomorphism") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        mpz_class d = -rand_z(rng, 1, 1000);
        RingElem x(rand_z(rng, -1000000, 1000000), rand_z(rng, -1000000, 1000000), d);
        RingElem y(rand_z(rng, -1000000, 1000000), rand_z(rng, -1000000, 1000000), d);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("ring misc") {
    RingElem a(1, 2, -5), b(3, -1, -5);
    CHECK((a * b) == RingElem(3 + 10, -1 + 6, -5));
    CHECK(a.norm() == 1 + 5 * 4);
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(a + RingElem(1, 1, -7), std::invalid_argument);
    CHECK_THROWS_AS(RingElem(3, 1, -5).divided_by(2), std::domain_error);
    CHECK(RingElem(4, 6, -5).divided_by(2) == RingElem(2, 3, -5));
}

TEST_CASE("polynomial product agrees with evaluation at random points") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mpq_class> fc, gc;
        std::uniform_int_distribution<int> dl(0, 8);
        const int df = dl(rng), dg = dl(rng);
        for (int i = 0; i <= df; ++i) fc.push_back(rand_q(rng, 50, 20));
        for (int i = 0; i <= dg; ++i) gc.push_back(rand_q(rng, 50, 20));
        RatPoly f(fc), g(gc);
        RatPoly fg = f * g;
        for (int pt = 0; pt < 20; ++pt) {
            mpq_class q = rand_q(rng, 30, 10);
            CHECK(fg.eval(q) == f.eval(q) * g.eval(q));
        }
    }
}

TEST_CASE("polynomial basics") {
    CHECK(RatPoly().degree() == -1);
    CHECK(RatPoly({mpq_class(0)}).degree() == -1);
    RatPoly p({mpq_class(1), mpq_class(0), mpq_class(3)});
    CHECK(p.degree() == 2);
    auto mono = RatPoly::monomial(mpq_class(-3, 16), 2).as_monomial();
    REQUIRE(mono);
    CHECK(mono->first == 2);
    CHECK(mono->second == mpq_class(-3, 16));
    CHECK(!p.as_monomial());
    // composition with 1 - z
    RatPoly q({mpq_class(2), mpq_class(-5, 4)});
    RatPoly comp = q.compose_linear(1, -1);
    CHECK(comp.coeff(0) == mpq_class(3, 4));
    CHECK(comp.coeff(1) == mpq_class(5, 4));
}

TEST_CASE("binary forms") {
    IntForm f({mpz_class(1), mpz_class(4), mpz_class(-6)});
    CHECK(f.eval(2, 3) == 4 + 24 - 54);
    IntForm g({mpz_class(1), mpz_class(-1)});
    IntForm fg = f * g;
    CHECK(fg.degree() == 3);
    CHECK(fg.eval(5, 7) == f.eval(5, 7) * g.eval(5, 7));
    auto mono = (g * g - IntForm({mpz_class(1), mpz_class(-2), mpz_class(0)})).as_monomial();
    REQUIRE(mono);
    CHECK(mono->first == 2);
    CHECK(mono->second == 1);
}

TEST_CASE("interval enclosures always contain the exact value") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        mpq_class q1 = rand_q(rng, 1000, 100);
        mpq_class q2 = rand_q(rng, 1000, 100);
        Interval a = Interval::from_mpq(q1), b = Interval::from_mpq(q2);
        auto contains = [](const Interval& iv, const mpq_class& v) {
            return iv.lo_q() <= v && v <= iv.hi_q();
        };
        CHECK(contains(a + b, q1 + q2));
        CHECK(contains(a - b, q1 - q2));
        CHECK(contains(a * b, q1 * q2));
        if (q2 != 0) CHECK(contains(a / b, q1 / q2));
        CHECK(contains(a.pow_int(3), q1 * q1 * q1));
    }
}

TEST_CASE("interval sqrt enclosures") {
    Interval two = interval_from_sqrt(mpz_class(4), 64);
    CHECK(two.lo_q() == 2);
    CHECK(two.hi_q() == 2);
    Interval zero = interval_from_sqrt(mpz_class(0), 64);
    CHECK(zero.lo_q() == 0);
    CHECK(zero.hi_q() == 0);

    Interval r2 = interval_from_sqrt(mpz_class(2), 30);
    mpq_class w = r2.hi_q() - r2.lo_q();
    // relative width <= 2^-30 (sqrt(2) < 2 gives the absolute bound below)
    CHECK(w * (mpz_class(1) << 30) <= 2);
    CHECK(r2.lo_q() * r2.lo_q() <= 2);
    CHECK(r2.hi_q() * r2.hi_q() >= 2);
}

TEST_CASE("precision ladder") {
    int calls = 0;
    int v = with_precision_ladder([&](mpfr_prec_t prec) {
        ++calls;
        if (prec < 512) throw precision_needed("try wider");
        return 99;
    });
    CHECK(v == 99);
    CHECK(calls == 3);
    CHECK_THROWS_AS(
        with_precision_ladder([&](mpfr_prec_t) -> int { throw precision_needed("never"); }),
        undecidable_error);
}

TEST_CASE("complex principal roots") {
    const mpfr_prec_t prec = 128;
    ComplexInterval minus_one{Interval::from_long(-1, prec), Interval(prec)};
    ComplexInterval i = minus_one.sqrt_principal();
    CHECK(i.re.lo_q() == 0);
    CHECK(i.im.lo_q() <= 1);
    CHECK(i.im.hi_q() >= 1);
    // fourth root of -1 lands on the bisector e^(i pi/4); its fourth power
    // must enclose -1 again
    ComplexInterval w = minus_one.root4_principal();
    ComplexInterval w4 = w * w * w * w;
    CHECK(w4.re.lo_q() <= -1);
    CHECK(w4.re.hi_q() >= -1);
    CHECK(w4.im.lo_q() <= 0);
    CHECK(w4.im.hi_q() >= 0);
    // |w| = 1
    Interval a = w.abs();
    CHECK(a.lo_q() <= 1);
    CHECK(a.hi_q() >= 1);
}
