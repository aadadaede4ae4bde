#include "quartic/pade.hpp"

#include <stdexcept>

#include "quartic/forms.hpp"
#include "quartic/intops.hpp"

namespace quartic {

namespace {

void check_rg(long r, int g) {
    if (r < 1) throw std::domain_error("pade: r must be >= 1");
    if (g != 0 && g != 1) throw std::domain_error("pade: g must be 0 or 1");
}

mpq_class quarter(long num) { return mpq_class(num, 4); }

}  // namespace

PadePair pade_pair(long r, int g) {
    check_rg(r, g);
    std::vector<mpq_class> a(static_cast<size_t>(r) + 1), b(static_cast<size_t>(r - g) + 1);
    for (long m = 0; m <= r; ++m) {
        mpq_class c = binom_rat(quarter(4 * (r - g) + 1), static_cast<unsigned long>(m)) *
                      binom_int(static_cast<unsigned long>(2 * r - g - m),
                                static_cast<unsigned long>(r - g));
        if (m & 1) c = -c;
        a[static_cast<size_t>(m)] = c;
    }
    for (long m = 0; m <= r - g; ++m) {
        mpq_class c = binom_rat(quarter(4 * r - 1), static_cast<unsigned long>(m)) *
                      binom_int(static_cast<unsigned long>(2 * r - g - m),
                                static_cast<unsigned long>(r));
        if (m & 1) c = -c;
        b[static_cast<size_t>(m)] = c;
    }
    return {r, g, RatPoly(std::move(a)), RatPoly(std::move(b))};
}

ReflectionPair reflection_pair(long r, int g) {
    check_rg(r, g);
    // C_{r,g}(z) = sum_m binom(r-1/4, r-m) binom(r-g+1/4, m) z^m
    // D_{r,g}(z) = sum_m binom(r-1/4, m) binom(r-g+1/4, r-g-m) z^m
    std::vector<mpq_class> c(static_cast<size_t>(r) + 1), d(static_cast<size_t>(r - g) + 1);
    for (long m = 0; m <= r; ++m)
        c[static_cast<size_t>(m)] = binom_rat(quarter(4 * r - 1), static_cast<unsigned long>(r - m)) *
                                    binom_rat(quarter(4 * (r - g) + 1), static_cast<unsigned long>(m));
    for (long m = 0; m <= r - g; ++m)
        d[static_cast<size_t>(m)] =
            binom_rat(quarter(4 * r - 1), static_cast<unsigned long>(m)) *
            binom_rat(quarter(4 * (r - g) + 1), static_cast<unsigned long>(r - g - m));
    return {RatPoly(std::move(c)), RatPoly(std::move(d))};
}

RemainderOrder remainder_order_check(long r, int g) {
    check_rg(r, g);
    const PadePair p = pade_pair(r, g);
    const size_t order = static_cast<size_t>(2 * r + 1 - g);
    const RatPoly series = quarter_root_series(order + 1);
    const RatPoly rem = p.A.truncated(order + 1) - RatPoly::mul_trunc(series, p.B, order + 1);
    for (size_t i = 0; i < order; ++i)
        if (rem.coeff(i) != 0)
            throw std::runtime_error("remainder_order_check: coefficient " + std::to_string(i) +
                                     " does not vanish");
    const mpq_class leading = rem.coeff(order);
    mpq_class gauss = binom_rat(quarter(4 * r - 1), static_cast<unsigned long>(r)) *
                      binom_rat(quarter(4 * (r - g) + 1), static_cast<unsigned long>(r + 1 - g));
    gauss /= mpq_class(binom_int(static_cast<unsigned long>(2 * r + 1 - g),
                                 static_cast<unsigned long>(r)));
    if (leading != gauss)
        throw std::runtime_error("remainder_order_check: leading coefficient mismatch");
    return {static_cast<long>(order), leading};
}

bool reflection_check(long r, int g) {
    check_rg(r, g);
    const PadePair p = pade_pair(r, g);
    const ReflectionPair cd = reflection_pair(r, g);
    const RatPoly a_ref = p.A.compose_linear(1, -1);
    const RatPoly b_ref = p.B.compose_linear(1, -1);
    if (!(cd.C == a_ref) || !(cd.D == b_ref)) return false;
    // Vandermonde check at z = 1.
    const mpz_class expected =
        binom_int(static_cast<unsigned long>(2 * r - g), static_cast<unsigned long>(r));
    return cd.C.eval(1) == mpq_class(expected);
}

DetMonomial determinant_check(long r, int h) {
    if (r < 1 || (h != 0 && h != 1)) throw std::domain_error("determinant_check: bad arguments");
    const PadePair p0 = pade_pair(r, 0);
    const PadePair p1 = pade_pair(r + h, 1);
    const RatPoly det = p0.A * p1.B - p1.A * p0.B;
    const auto mono = det.as_monomial();
    if (!mono) throw std::runtime_error("determinant_check: not a single monomial");
    return {static_cast<long>(mono->first), mono->second};
}

namespace {

RatPoly int_poly(std::initializer_list<long> cs) {
    std::vector<mpq_class> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

RatPoly int_poly_str(std::initializer_list<const char*> cs) {
    std::vector<mpq_class> v;
    for (const char* c : cs) v.emplace_back(mpz_class(c));
    return RatPoly(std::move(v));
}

}  // namespace

ExplicitTable explicit_table(long r) {
    ExplicitTable e;
    e.r = r;
    switch (r) {
        case 1:
            e.scale = mpq_class(4);
            e.A = int_poly({8, -5});
            e.B = int_poly({8, -3});
            e.F = int_poly({320, -320, 81});
            break;
        case 2:
            e.scale = mpq_class(32, 3);
            e.A = int_poly({64, -72, 15});
            e.B = int_poly({64, -56, 7});
            e.F = int_poly({86016, -172032, 114624, -28608, 2401});
            break;
        case 3:
            e.scale = mpq_class(128);
            e.A = int_poly({2560, -4160, 1872, -195});
            e.B = int_poly({2560, -3520, 1232, -77});
            e.F = int_poly_str({"14057472000", "-42172416000", "48483635200", "-26679910400",
                                "7150266240", "-839047040", "35153041"});
            break;
        case 4:
            e.scale = mpq_class(2048, 5);
            e.A = int_poly({28672, -60928, 42432, -10608, 663});
            e.B = int_poly({28672, -53760, 31680, -6160, 231});
            e.F = int_poly_str({"13989396348928", "-55957585395712", "91916125077504",
                                "-79896826347520", "39463764078592", "-11050000539648",
                                "1648475542656", "-113348764800", "2847396321"});
            break;
        case 5:
            e.scale = mpq_class(8192, 21);
            e.A = int_poly({98304, -258048, 243712, -99008, 15912, -663});
            e.B = int_poly({98304, -233472, 194560, -66880, 8360, -209});
            e.F = int_poly_str({"121733331812352", "-608666659061760", "1301756554248192",
                                "-1555026262622208", "1136607561252864", "-523630732640256",
                                "151029162176512", "-26204424888320", "2515441608384",
                                "-113971885760", "1908029761"});
            break;
        default:
            throw std::domain_error("explicit_table: r must be in 1..5");
    }
    const PadePair p = pade_pair(r, 0);
    if (!(p.A * e.scale == e.A) || !(p.B * e.scale == e.B))
        throw std::runtime_error("explicit_table: scaling does not reproduce the table");
    const RatPoly one_minus_z = int_poly({1, -1});
    const RatPoly lhs = e.A * e.A * e.A * e.A - one_minus_z * (e.B * e.B * e.B * e.B);
    const RatPoly rhs = RatPoly::monomial(1, static_cast<size_t>(2 * r + 1)) * e.F;
    if (!(lhs == rhs))
        throw std::runtime_error("explicit_table: quartic remainder identity failed");
    return e;
}

IntForm ledger_g4() {
    return IntForm({mpz_class(14178304), mpz_class(-15889280), mpz_class(4071760),
                    mpz_class(-162393)});
}

IntForm ledger_h4() {
    return IntForm({mpz_class(14178304), mpz_class(-19433856), mpz_class(6714864),
                    mpz_class(-466089)});
}

IntForm ledger_g5() {
    return IntForm({mpz_class(43706368), mpz_class(-69346048), mpz_class(32767856),
                    mpz_class(-4764782), mpz_class(123519)});
}

IntForm ledger_h5() {
    return IntForm({mpz_class(43706368), mpz_class(-80272640), mpz_class(46006896),
                    mpz_class(-8845746), mpz_class(391833)});
}

std::vector<LedgerEntry> bilinear_ledger_check() {
    IntForm A[6] = {IntForm({mpz_class(1)}), IntForm::homogenize(explicit_table(1).A),
                    IntForm::homogenize(explicit_table(2).A), IntForm::homogenize(explicit_table(3).A),
                    IntForm::homogenize(explicit_table(4).A), IntForm::homogenize(explicit_table(5).A)};
    IntForm B[6] = {IntForm({mpz_class(1)}), IntForm::homogenize(explicit_table(1).B),
                    IntForm::homogenize(explicit_table(2).B), IntForm::homogenize(explicit_table(3).B),
                    IntForm::homogenize(explicit_table(4).B), IntForm::homogenize(explicit_table(5).B)};

    struct Identity {
        std::string desc;
        IntForm lhs;
        mpz_class coeff;
        int xe, ye;
    };
    const IntForm l1({mpz_class(-32), mpz_class(7)});
    const IntForm l2({mpz_class(-32), mpz_class(15)});
    const IntForm m1({mpz_class(1616), mpz_class(-1078), mpz_class(77)});
    const IntForm m2({mpz_class(1616), mpz_class(-1482), mpz_class(195)});

    std::vector<Identity> identities;
    identities.push_back({"A1* - B1*", A[1] - B[1], mpz_class(-2), 0, 1});
    identities.push_back({"B1* A2* - A1* B2*", B[1] * A[2] - A[1] * B[2], mpz_class(-10), 0, 3});
    identities.push_back({"(-32x+7y) A2* - (-32x+15y) B2*", l1 * A[2] - l2 * B[2], mpz_class(80), 1, 2});
    identities.push_back({"B2* A3* - A2* B3*", B[2] * A[3] - A[2] * B[3], mpz_class(-210), 0, 5});
    identities.push_back({"(1616x^2-1078xy+77y^2) A3* - (1616x^2-1482xy+195y^2) B3*",
                     m1 * A[3] - m2 * B[3], mpz_class(-16800), 2, 3});
    identities.push_back({"B3* A4* - A3* B4*", B[3] * A[4] - A[3] * B[4], mpz_class(-6006), 0, 7});
    identities.push_back({"G4 A4* - H4 B4*", ledger_g4() * A[4] - ledger_h4() * B[4],
                     mpz_class(-150678528), 3, 4});
    identities.push_back({"B4* A5* - A4* B5*", B[4] * A[5] - A[4] * B[5], mpz_class(-14586), 0, 7});
    identities.push_back({"G5 A5* - H5 B5*", ledger_g5() * A[5] - ledger_h5() * B[5],
                     mpz_class(-134424576), 4, 5});

    std::vector<LedgerEntry> out;
    int idx = 1;
    for (const auto& s : identities) {
        LedgerEntry e;
        e.index = idx++;
        e.description = s.desc;
        e.printed_coeff = s.coeff;
        e.printed_x_exp = s.xe;
        e.printed_y_exp = s.ye;
        const auto mono = s.lhs.as_monomial();
        e.is_monomial = mono.has_value();
        if (mono) {
            const int deg = s.lhs.degree();
            e.computed_coeff = mono->second;
            e.computed_y_exp = static_cast<int>(mono->first);
            e.computed_x_exp = deg - e.computed_y_exp;
            e.coeff_matches = (e.computed_coeff == e.printed_coeff);
            e.exponent_matches =
                (e.computed_x_exp == e.printed_x_exp) && (e.computed_y_exp == e.printed_y_exp);
        } else {
            e.computed_coeff = 0;
            e.computed_x_exp = e.computed_y_exp = -1;
            e.coeff_matches = e.exponent_matches = false;
        }
        out.push_back(std::move(e));
    }
    return out;
}

RingElem fourth_power_integrality(const mpz_class& t, const mpz_class& x1, const mpz_class& y1,
                                  const mpz_class& x2, const mpz_class& y2, FourthPowerKind kind) {
    const mpz_class d = -t;
    const RingElem p1m(x1, -y1, d), p1p(x1, y1, d);
    const RingElem p2m(x2, -y2, d), p2p(x2, y2, d);
    const ResolventPoint rp1 = resolvent(t, x1, y1);
    const ResolventPoint rp2 = resolvent(t, x2, y2);
    const RingElem &xi4_1 = rp1.xi4, &eta4_1 = rp1.eta4;
    const RingElem &xi4_2 = rp2.xi4, &eta4_2 = rp2.eta4;

    RingElem cand(0, 0, d);
    RingElem target(0, 0, d);
    switch (kind) {
        case FourthPowerKind::xi_eta_over_root:
            // xi1 eta2 / (-t-1)^(1/4) = 2 (x1 - w y1)(x2 + w y2)
            cand = p1m * p2p * mpz_class(2);
            target = (xi4_1 * eta4_2).divided_by(-t - 1);
            break;
        case FourthPowerKind::xi3_xi:
            // xi1^3 xi2 = 4 (w+1) (x1 - w y1)^3 (x2 - w y2)
            cand = RingElem(1, 1, d) * p1m.pow(3) * p2m * mpz_class(4);
            target = xi4_1.pow(3) * xi4_2;
            break;
        case FourthPowerKind::eta3_eta:
            cand = RingElem(-1, 1, d) * p1p.pow(3) * p2p * mpz_class(4);
            target = eta4_1.pow(3) * eta4_2;
            break;
    }
    if (!(cand.pow(4) == target))
        throw std::logic_error("fourth_power_integrality: fourth powers disagree");
    return cand;
}

QRingVal star_eval(const RatPoly& p, long deg, const RingElem& u, const mpz_class& v) {
    if (p.degree() != static_cast<int>(deg))
        throw std::invalid_argument("star_eval: polynomial degree mismatch");
    // Powers of u up to deg.
    std::vector<RingElem> up(static_cast<size_t>(deg) + 1, RingElem::integer(1, u.d()));
    for (size_t i = 1; i < up.size(); ++i) up[i] = up[i - 1] * u;
    QRingVal acc{mpq_class(0), mpq_class(0), u.d()};
    mpz_class vp(1);
    for (long m = 0; m <= deg; ++m) {
        const mpq_class coeff = p.coeff(static_cast<size_t>(m)) * mpq_class(vp);
        const RingElem& pw = up[static_cast<size_t>(deg - m)];
        acc.a += coeff * mpq_class(pw.a());
        acc.b += coeff * mpq_class(pw.b());
        if (m < deg) vp *= v;
    }
    return acc;
}

StarValues star_integrality(const mpz_class& t, long r, int g, const mpz_class& x,
                            const mpz_class& y) {
    check_rg(r, g);
    const PadePair p = pade_pair(r, g);
    const ResolventPoint rp = resolvent(t, x, y);
    const mpz_class v = 8 * eval_P(t, x, y);
    const QRingVal av = star_eval(p.A, r, rp.xi4, v);
    const QRingVal bv = star_eval(p.B, r - g, rp.xi4, v);
    if (av.a.get_den() != 1 || av.b.get_den() != 1 || bv.a.get_den() != 1 || bv.b.get_den() != 1)
        throw std::runtime_error("star_integrality: denominators did not clear");
    return {RingElem(av.a.get_num(), av.b.get_num(), -t),
            RingElem(bv.a.get_num(), bv.b.get_num(), -t)};
}

SigmaEval sigma_eval(const mpz_class& t, long r, int g, const mpz_class& x1, const mpz_class& y1,
                     const mpz_class& x2, const mpz_class& y2) {
    check_rg(r, g);
    if (eval_P(t, x1, y1) == 0 || eval_P(t, x2, y2) == 0)
        throw std::invalid_argument("sigma_eval: P vanishes at an input point");
    const mpz_class d = -t;
    const ResolventPoint rp1 = resolvent(t, x1, y1);
    const ResolventPoint rp2 = resolvent(t, x2, y2);

    SigmaEval out;
    out.r = r;
    out.g = g;

    // Complex enclosure with principal branches.
    const PadePair p = pade_pair(r, g);
    out.sigma = with_precision_ladder([&](mpfr_prec_t prec) -> ComplexInterval {
        const ComplexInterval ratio1 =
            (ring_to_complex(rp1.eta4, prec) / ring_to_complex(rp1.xi4, prec)).root4_principal();
        const ComplexInterval ratio2 =
            (ring_to_complex(rp2.eta4, prec) / ring_to_complex(rp2.xi4, prec)).root4_principal();
        const ComplexInterval one{Interval::from_long(1, prec), Interval(prec)};
        const ComplexInterval z1 = one - ring_to_complex(rp1.eta4, prec) /
                                             ring_to_complex(rp1.xi4, prec);
        auto horner = [&](const RatPoly& poly) {
            ComplexInterval acc{Interval(prec), Interval(prec)};
            for (int i = poly.degree(); i >= 0; --i) {
                acc = acc * z1;
                acc.re = acc.re + Interval::from_mpq(poly.coeff(static_cast<size_t>(i)), prec);
            }
            return acc;
        };
        ComplexInterval term2 = ratio1 * horner(p.B);
        if (r % 2 != 0) term2 = -term2;
        return ratio2 * horner(p.A) - term2;
    });

    // Exact algebraic side.
    const StarValues sv = star_integrality(t, r, g, x1, y1);
    const int sign_r = (r % 2 == 0) ? 1 : -1;
    if (g == 0) {
        // Lambda = c A* - (-1)^r conj(c) B*, c = 2 (x1 - w y1)(x2 + w y2).
        const RingElem c = RingElem(x1, -y1, d) * RingElem(x2, y2, d) * mpz_class(2);
        RingElem second = c.conj() * sv.bstar;
        if (sign_r < 0) second = -second;
        const RingElem lambda = c * sv.astar - second;
        if (lambda.a() != 0)
            throw std::runtime_error("sigma_eval: Lambda_{r,0} is not a pure w-multiple");
        out.lambda = lambda;
        const RingElem l4 = lambda.pow(4);
        out.lambda4 = l4;
        out.lambda4_a = mpq_class(l4.a());
        out.lambda4_b = mpq_class(l4.b());
        out.lambda4_in_max_order = true;
    } else {
        // Lambda^4 = -4 (w-1) M^4 / (t+1),
        // M = (x2 + w y2) A* - (-1)^r (x1 + w y1) (xi1^3 xi2) B*.
        const RingElem e3 = RingElem(1, 1, d) * RingElem(x1, -y1, d).pow(3) *
                            RingElem(x2, -y2, d) * mpz_class(4);
        RingElem second = RingElem(x1, y1, d) * e3 * sv.bstar;
        if (sign_r < 0) second = -second;
        const RingElem m = RingElem(x2, y2, d) * sv.astar - second;
        const RingElem num = RingElem(-1, 1, d) * m.pow(4) * mpz_class(-4);

        // Membership in the ring of integers of Q(sqrt(-t)) (which exceeds
        // Z[w] when -t has a square factor or is 1 mod 4) is recorded, not
        // asserted: it holds for same-root solution pairs but not pointwise.
        mpq_class pa(num.a()), qb(num.b());
        pa /= t + 1;
        qb /= t + 1;
        out.lambda4_a = pa;
        out.lambda4_b = qb;
        mpz_class f(1), s(t);
        for (mpz_class k(2); k * k <= s; ++k)
            while (s % (k * k) == 0) {
                s /= k * k;
                f *= k;
            }
        const mpz_class d0 = -s;  // -t = f^2 d0, d0 squarefree
        mpq_class u = qb * f;     // value = pa + u sqrt(d0)
        if (mpz_fdiv_ui(d0.get_mpz_t(), 4) == 1) {
            mpq_class p2 = 2 * pa, u2 = 2 * u;
            out.lambda4_in_max_order = p2.get_den() == 1 && u2.get_den() == 1 &&
                                       (p2.get_num() - u2.get_num()) % 2 == 0;
        } else {
            out.lambda4_in_max_order = pa.get_den() == 1 && u.get_den() == 1;
        }
        if (pa.get_den() == 1 && qb.get_den() == 1)
            out.lambda4 = RingElem(pa.get_num(), qb.get_num(), d);
    }
    return out;
}

}  // namespace quartic
