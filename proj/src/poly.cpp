#include "quartic/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "quartic/intops.hpp"

namespace quartic {

namespace {
const mpq_class kZeroQ(0);
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const mpq_class& c, size_t k) {
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = c;
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPoly::coeff(size_t i) const {
    if (i >= c_.size()) return kZeroQ;
    return c_[i];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> v(c_);
    for (auto& x : v) x *= s;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const { return *this * mpq_class(-1); }

RatPoly RatPoly::mul_trunc(const RatPoly& a, const RatPoly& b, size_t order) {
    std::vector<mpq_class> v(order + 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size() && i <= order; ++i)
        for (size_t j = 0; j < b.c_.size() && i + j <= order; ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::truncated(size_t order) const {
    std::vector<mpq_class> v;
    for (size_t i = 0; i < c_.size() && i <= order; ++i) v.push_back(c_[i]);
    return RatPoly(std::move(v));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::compose_linear(const mpq_class& c0, const mpq_class& c1) const {
    // Horner: result = (...(c_n (c0 + c1 z) + c_{n-1}) ... ) + c_0
    RatPoly lin({c0, c1});
    RatPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + RatPoly::constant(*it);
    return acc;
}

std::optional<std::pair<size_t, mpq_class>> RatPoly::as_monomial() const {
    std::optional<std::pair<size_t, mpq_class>> hit;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (hit) return std::nullopt;
        hit = {i, c_[i]};
    }
    return hit;
}

bool RatPoly::has_integer_coeffs() const {
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0)
            os << "-";
        mpq_class mag = abs(c_[i]);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntForm::IntForm(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("IntForm: empty coefficient list");
}

mpz_class IntForm::eval(const mpz_class& x, const mpz_class& y) const {
    // Horner in x with a running power of y.
    mpz_class acc(0), yp(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        acc = acc * x + c_[i] * yp;
        if (i + 1 < c_.size()) yp *= y;
    }
    return acc;
}

IntForm IntForm::operator*(const IntForm& o) const {
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntForm(std::move(v));
}

IntForm IntForm::operator+(const IntForm& o) const {
    if (degree() != o.degree())
        throw std::invalid_argument("IntForm: degree mismatch in addition");
    std::vector<mpz_class> v(c_);
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    return IntForm(std::move(v));
}

IntForm IntForm::operator-(const IntForm& o) const {
    if (degree() != o.degree())
        throw std::invalid_argument("IntForm: degree mismatch in subtraction");
    std::vector<mpz_class> v(c_);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
    return IntForm(std::move(v));
}

bool IntForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<std::pair<size_t, mpz_class>> IntForm::as_monomial() const {
    std::optional<std::pair<size_t, mpz_class>> hit;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (hit) return std::nullopt;
        hit = {i, c_[i]};
    }
    return hit;
}

IntForm IntForm::homogenize(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("IntForm: cannot homogenize zero");
    if (!p.has_integer_coeffs())
        throw std::invalid_argument("IntForm: non-integer coefficients");
    std::vector<mpz_class> v;
    for (int i = 0; i <= p.degree(); ++i) v.emplace_back(p.coeff(i).get_num());
    return IntForm(std::move(v));
}

std::string IntForm::str() const {
    std::ostringstream os;
    bool first = true;
    const int n = degree();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0)
            os << "-";
        mpz_class mag = abs(c_[i]);
        const int xe = n - static_cast<int>(i);
        const int ye = static_cast<int>(i);
        if (mag != 1 || (xe == 0 && ye == 0)) os << mag.get_str();
        if (xe > 0) os << "x" << (xe > 1 ? "^" + std::to_string(xe) : "");
        if (ye > 0) os << "y" << (ye > 1 ? "^" + std::to_string(ye) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

RatPoly quarter_root_series(unsigned long order) {
    std::vector<mpq_class> v(order + 1);
    for (unsigned long m = 0; m <= order; ++m) {
        mpq_class c = binom_rat(mpq_class(1, 4), m);
        if (m & 1) c = -c;
        v[m] = c;
    }
    return RatPoly(std::move(v));
}

}  // namespace quartic
