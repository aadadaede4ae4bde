#include "quartic/ring.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quartic {

void RingElem::require_same_ring(const RingElem& o) const {
    if (d_ != o.d_)
        throw std::invalid_argument("RingElem: mixed ring discriminants " + d_.get_str() +
                                    " and " + o.d_.get_str());
}

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(o);
    return RingElem(a_ + o.a_, b_ + o.b_, d_);
}

RingElem RingElem::operator-(const RingElem& o) const {
    require_same_ring(o);
    return RingElem(a_ - o.a_, b_ - o.b_, d_);
}

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(o);
    return RingElem(a_ * o.a_ + d_ * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_);
}

RingElem RingElem::pow(unsigned long e) const {
    RingElem result = RingElem::integer(1, d_);
    RingElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

RingElem RingElem::divided_by(const mpz_class& k) const {
    if (k == 0) throw std::domain_error("RingElem: division by zero");
    if (a_ % k != 0 || b_ % k != 0)
        throw std::domain_error("RingElem: inexact division by " + k.get_str());
    return RingElem(a_ / k, b_ / k, d_);
}

std::string RingElem::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& e) {
    os << e.a();
    if (e.b() >= 0)
        os << "+" << e.b() << "w";
    else
        os << e.b() << "w";
    return os;
}

}  // namespace quartic
