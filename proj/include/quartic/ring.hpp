#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace quartic {

// Element a + b*w of the quadratic ring Z[w], w^2 = d.  Every computation in
// this project fixes d = -t for one positive integer t, so elements carry d
// with them and mixing two different rings in one operation throws.
class RingElem {
public:
    RingElem() : a_(0), b_(0), d_(0) {}
    RingElem(mpz_class a, mpz_class b, mpz_class d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    static RingElem integer(const mpz_class& v, const mpz_class& d) {
        return RingElem(v, 0, d);
    }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    RingElem conj() const { return RingElem(a_, -b_, d_); }

    // a^2 - d b^2; for d = -t this is |a + b sqrt(-t)|^2.
    mpz_class norm() const { return a_ * a_ - d_ * b_ * b_; }

    RingElem operator-() const { return RingElem(-a_, -b_, d_); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator*(const mpz_class& k) const { return RingElem(a_ * k, b_ * k, d_); }

    bool operator==(const RingElem& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }

    RingElem pow(unsigned long e) const;

    // Exact division by a rational integer; throws when a component is not
    // divisible.
    RingElem divided_by(const mpz_class& k) const;

    std::string str() const;

private:
    void require_same_ring(const RingElem& o) const;

    mpz_class a_, b_, d_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& e);

}  // namespace quartic
