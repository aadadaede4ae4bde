#include "quartic/interval.hpp"

#include <algorithm>
#include <sstream>

namespace quartic {

Interval::Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    // MPFR caches the constant internally, so repeated calls are cheap.
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

namespace {
mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

Interval Interval::operator+(const Interval& o) const {
    Interval r(join_prec(*this, o));
    mpfr_add(r.lo_raw(), lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_raw(), hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(join_prec(*this, o));
    mpfr_sub(r.lo_raw(), lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_raw(), hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_raw(), hi_, MPFR_RNDD);
    mpfr_neg(r.hi_raw(), lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    const mpfr_prec_t p = join_prec(*this, o);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    // lo = min over the four endpoint products rounded down.
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_raw())) mpfr_set(r.lo_raw(), t, MPFR_RNDD);
            first = false;
        }
    first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_raw())) mpfr_set(r.hi_raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw precision_needed("interval division: divisor encloses zero");
    const mpfr_prec_t p = join_prec(*this, o);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_div(t, a, b, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_raw())) mpfr_set(r.lo_raw(), t, MPFR_RNDD);
            first = false;
        }
    first = true;
    for (auto a : as)
        for (auto b : bs) {
            mpfr_div(t, a, b, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_raw())) mpfr_set(r.hi_raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec());
    if (sign_lo() >= 0) return *this;
    if (sign_hi() <= 0) return -*this;
    // straddles zero: [0, max(-lo, hi)]
    mpfr_set_zero(r.lo_raw(), 1);
    mpfr_neg(r.hi_raw(), lo_, MPFR_RNDU);
    if (mpfr_less_p(r.hi_raw(), hi_)) mpfr_set(r.hi_raw(), hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (sign_hi() < 0) throw precision_needed("sqrt of a negative enclosure");
    Interval r(prec());
    if (sign_lo() < 0)
        mpfr_set_zero(r.lo_raw(), 1);
    else
        mpfr_sqrt(r.lo_raw(), lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_raw(), hi_, MPFR_RNDU);
    return r;
}

Interval Interval::rootn(unsigned long k) const {
    if (k == 0) throw std::domain_error("rootn: k must be positive");
    if (sign_hi() < 0) throw precision_needed("rootn of a negative enclosure");
    Interval r(prec());
    if (sign_lo() < 0)
        mpfr_set_zero(r.lo_raw(), 1);
    else
        mpfr_rootn_ui(r.lo_raw(), lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_raw(), hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    if (e == 0) return Interval::from_long(1, prec());
    Interval r(prec());
    const unsigned long ue = static_cast<unsigned long>(e);
    if (e % 2 == 1 || sign_lo() >= 0) {
        mpfr_pow_ui(r.lo_raw(), lo_, ue, MPFR_RNDD);
        mpfr_pow_ui(r.hi_raw(), hi_, ue, MPFR_RNDU);
        return r;
    }
    if (sign_hi() <= 0) {
        mpfr_pow_ui(r.lo_raw(), hi_, ue, MPFR_RNDD);
        mpfr_pow_ui(r.hi_raw(), lo_, ue, MPFR_RNDU);
        return r;
    }
    // even power of an interval straddling zero: [0, max(|lo|,|hi|)^e]
    Interval a = abs();
    mpfr_set_zero(r.lo_raw(), 1);
    mpfr_pow_ui(r.hi_raw(), a.hi_raw(), ue, MPFR_RNDU);
    return r;
}

Interval Interval::pow_q(long num, unsigned long den) const {
    if (den == 0) throw std::domain_error("pow_q: zero denominator");
    if (sign_lo() < 0) throw precision_needed("pow_q: base not certainly nonnegative");
    if (num < 0) {
        Interval one = Interval::from_long(1, prec());
        return (one / *this).pow_q(-num, den);
    }
    Interval p = pow_int(num);
    if (den == 1) return p;
    return p.rootn(den);
}

Interval Interval::mul_2si(long e) const {
    Interval r(prec());
    mpfr_mul_2si(r.lo_raw(), lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_raw(), hi_, e, MPFR_RNDU);
    return r;
}

namespace {
mpq_class dyadic_to_q(const mpfr_t& x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpz_class m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    mpq_class q(m);
    if (e >= 0) {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= mpq_class(shift);
    } else {
        mpz_class shift;
        mpz_ui_pow_ui(shift.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= mpq_class(shift);
    }
    return q;
}
}  // namespace

mpq_class Interval::lo_q() const { return dyadic_to_q(lo_); }
mpq_class Interval::hi_q() const { return dyadic_to_q(hi_); }

Interval Interval::width() const {
    Interval r(prec());
    mpfr_sub(r.lo_raw(), hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_raw(), hi_, lo_, MPFR_RNDU);
    return r;
}

namespace {
std::string mpfr_to_str(const mpfr_t& x, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}
}  // namespace

std::string Interval::lo_str(int digits) const { return mpfr_to_str(lo_, digits); }
std::string Interval::hi_str(int digits) const { return mpfr_to_str(hi_, digits); }

std::string Interval::str(int digits) const {
    char* s = nullptr;
    std::ostringstream os;
    mpfr_asprintf(&s, "%.*Rg", digits, lo_);
    os << "[" << s << ", ";
    mpfr_free_str(s);
    mpfr_asprintf(&s, "%.*Rg", digits, hi_);
    os << s << "]";
    mpfr_free_str(s);
    return os.str();
}

ComplexInterval ComplexInterval::operator/(const ComplexInterval& o) const {
    Interval n = o.abs2();
    ComplexInterval num = *this * o.conj();
    return {num.re / n, num.im / n};
}

ComplexInterval ComplexInterval::sqrt_principal() const {
    const bool im_exactly_zero = im.is_point() && im.sign_lo() == 0;
    if (im_exactly_zero) {
        if (re.sign_lo() >= 0) {
            return {re.sqrt(), Interval(re.prec())};
        }
        if (re.sign_hi() <= 0) {
            // arg = pi, principal root = i sqrt(|x|)
            return {Interval(re.prec()), (-re).sqrt()};
        }
        throw precision_needed("complex sqrt: real enclosure straddles zero");
    }
    if (im.contains_zero() && re.sign_hi() <= 0)
        throw precision_needed("complex sqrt: enclosure touches the branch cut");
    Interval m = abs();
    Interval two = Interval::from_long(2, m.prec());
    Interval s = ((m + re) / two).sqrt();
    Interval tq = ((m - re) / two).sqrt();
    if (im.certainly_positive()) return {s, tq};
    if (im.certainly_negative()) return {s, -tq};
    // im straddles zero with re not certainly negative: the true root has
    // re >= 0; take the hull of both sign choices for the imaginary part.
    Interval imhull = tq;
    Interval neg = -tq;
    Interval hull(std::max(imhull.prec(), neg.prec()));
    mpfr_set(hull.lo_raw(), neg.lo_raw(), MPFR_RNDD);
    mpfr_set(hull.hi_raw(), imhull.hi_raw(), MPFR_RNDU);
    return {s, hull};
}

ComplexInterval ComplexInterval::mul_i_pow(int k) const {
    switch (((k % 4) + 4) % 4) {
        case 0: return *this;
        case 1: return {-im, re};
        case 2: return {-re, -im};
        default: return {im, -re};
    }
}

Interval interval_from_sqrt(const mpz_class& n, mpfr_prec_t bits) {
    if (n < 0) throw std::domain_error("interval_from_sqrt: negative argument");
    // prec bits + guard gives relative endpoint error below 2^-bits.
    Interval v = Interval::from_mpz(n, bits + 8);
    return v.sqrt();
}

}  // namespace quartic
