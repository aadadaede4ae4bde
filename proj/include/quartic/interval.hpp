#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace quartic {

inline constexpr mpfr_prec_t kMinPrec = 128;
inline constexpr mpfr_prec_t kMaxPrec = 4096;

// Thrown when a comparison is still undecided at the top of the precision
// ladder (128 -> 4096 bits).
class undecidable_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal retry signal: the running computation cannot decide something at
// the current precision.  with_precision_ladder catches it and reruns wider.
class precision_needed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rigorous enclosure [lo, hi] of a real number with dyadic endpoints.  Every
// operation rounds lo down and hi up, so the exact value of any expression
// built from exact inputs always stays inside the result.
class Interval {
public:
    Interval() : Interval(kMinPrec) {}
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o) noexcept;
    ~Interval();

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    static Interval from_long(long v, mpfr_prec_t prec = kMinPrec);
    static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec = kMinPrec);
    static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec = kMinPrec);
    static Interval pi(mpfr_prec_t prec = kMinPrec);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    // Divisor must be sign-definite; otherwise precision_needed is thrown.
    Interval operator/(const Interval& o) const;
    Interval operator-() const;

    Interval abs() const;
    // Enclosure of sqrt.  If lo dips below zero while hi >= 0 the lower
    // endpoint clamps to 0 (sound for quantities that are >= 0 exactly).
    Interval sqrt() const;
    Interval rootn(unsigned long k) const;
    // Integer power, any sign of the base; e >= 0.
    Interval pow_int(long e) const;
    // base^(num/den) for a nonnegative interval, den >= 1.
    Interval pow_q(long num, unsigned long den) const;
    Interval mul_2si(long e) const;  // exact scaling by 2^e

    bool contains_zero() const { return sign_lo() <= 0 && sign_hi() >= 0; }
    int sign_lo() const { return mpfr_sgn(lo_); }
    int sign_hi() const { return mpfr_sgn(hi_); }
    bool is_point() const { return mpfr_equal_p(lo_, hi_); }

    bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
    bool certainly_greater(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_); }
    bool certainly_positive() const { return sign_lo() > 0; }
    bool certainly_negative() const { return sign_hi() < 0; }

    // Exact dyadic endpoints as rationals (for reports and exact reasoning).
    mpq_class lo_q() const;
    mpq_class hi_q() const;
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    Interval width() const;

    std::string str(int digits = 17) const;
    std::string lo_str(int digits = 17) const;
    std::string hi_str(int digits = 17) const;

    // Raw endpoint access for the implementation of friends.
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_raw() { return lo_; }
    mpfr_t& hi_raw() { return hi_; }

private:
    mpfr_t lo_, hi_;
};

// Rectangular complex enclosure.
struct ComplexInterval {
    Interval re, im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexInterval operator/(const ComplexInterval& o) const;
    ComplexInterval operator-() const { return {-re, -im}; }
    ComplexInterval conj() const { return {re, -im}; }

    Interval abs2() const { return re.pow_int(2) + im.pow_int(2); }
    Interval abs() const { return abs2().sqrt(); }

    // Principal square root (argument halved into (-pi/2, pi/2]).  Exact
    // negative reals map to i*sqrt(|x|); enclosures that straddle the branch
    // cut raise precision_needed.
    ComplexInterval sqrt_principal() const;
    ComplexInterval root4_principal() const { return sqrt_principal().sqrt_principal(); }

    // Multiplication by i^k.
    ComplexInterval mul_i_pow(int k) const;
};

// Enclosure of sqrt(n) with relative width <= 2^-bits.
Interval interval_from_sqrt(const mpz_class& n, mpfr_prec_t bits = kMinPrec);

// Runs f(prec) for prec = 128, 256, ..., 4096 until it stops throwing
// precision_needed; rethrows undecidable_error when the ladder is exhausted.
template <class F>
auto with_precision_ladder(F&& f) {
    for (mpfr_prec_t p = kMinPrec; p <= kMaxPrec; p *= 2) {
        try {
            return f(p);
        } catch (const precision_needed&) {
            // retry wider
        }
    }
    throw undecidable_error("undecidable at maximum precision (4096 bits)");
}

}  // namespace quartic
