#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace quartic {

// Dense univariate polynomial over exact rationals.  Coefficient i multiplies
// z^i.  The zero polynomial has degree -1 so degree arithmetic stays total.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const mpq_class& c);
    static RatPoly monomial(const mpq_class& c, size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of z^i (zero beyond the degree).
    const mpq_class& coeff(size_t i) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Product with every coefficient above z^order dropped.
    static RatPoly mul_trunc(const RatPoly& a, const RatPoly& b, size_t order);

    RatPoly truncated(size_t order) const;

    mpq_class eval(const mpq_class& x) const;

    // P(c0 + c1 z), exact composition with a linear polynomial.
    RatPoly compose_linear(const mpq_class& c0, const mpq_class& c1) const;

    // When the polynomial is c z^k with c != 0, returns {k, c}.
    std::optional<std::pair<size_t, mpq_class>> as_monomial() const;

    bool has_integer_coeffs() const;

    std::string str(const std::string& var = "z") const;

private:
    void normalize();
    std::vector<mpq_class> c_;
};

// Homogeneous binary form of degree n with integer coefficients; coefficient
// i multiplies x^(n-i) y^i.  Degree-0 forms are nonzero constants.
class IntForm {
public:
    explicit IntForm(std::vector<mpz_class> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(size_t i) const { return c_.at(i); }

    mpz_class eval(const mpz_class& x, const mpz_class& y) const;

    IntForm operator*(const IntForm& o) const;
    IntForm operator+(const IntForm& o) const;  // degrees must match
    IntForm operator-(const IntForm& o) const;  // degrees must match
    bool operator==(const IntForm& o) const { return c_ == o.c_; }

    bool is_zero() const;

    // When the form is c x^(n-k) y^k with a single nonzero coefficient,
    // returns {k, c}.
    std::optional<std::pair<size_t, mpz_class>> as_monomial() const;

    // x^n P(y/x) for P of degree n; requires integer coefficients.
    static IntForm homogenize(const RatPoly& p);

    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

// Truncated Maclaurin series of (1-z)^(1/4) through z^order.
RatPoly quarter_root_series(unsigned long order);

}  // namespace quartic
