#include "quartic/intops.hpp"

#include <array>
#include <stdexcept>

namespace quartic {

namespace {

template <int M>
std::array<bool, M> square_residues() {
    std::array<bool, M> table{};
    for (int i = 0; i < M; ++i) table[(i * i) % M] = true;
    return table;
}

const std::array<bool, 64> kMod64 = square_residues<64>();
const std::array<bool, 63> kMod63 = square_residues<63>();
const std::array<bool, 65> kMod65 = square_residues<65>();
const std::array<bool, 11> kMod11 = square_residues<11>();

}  // namespace

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<mpz_class> is_perfect_square(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return mpz_class(0);
    // n mod 64 from the low bits, the rest by single-limb division.
    const unsigned long low = mpz_get_ui(n.get_mpz_t());
    if (!kMod64[low & 63]) return std::nullopt;
    if (!kMod63[mpz_fdiv_ui(n.get_mpz_t(), 63)]) return std::nullopt;
    if (!kMod65[mpz_fdiv_ui(n.get_mpz_t(), 65)]) return std::nullopt;
    if (!kMod11[mpz_fdiv_ui(n.get_mpz_t(), 11)]) return std::nullopt;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

mpq_class binom_rat(const mpq_class& alpha, unsigned long n) {
    mpq_class result(1);
    mpq_class factor = alpha;
    for (unsigned long i = 0; i < n; ++i) {
        result *= factor;
        result /= mpq_class(static_cast<unsigned long>(i + 1));
        factor -= 1;
    }
    return result;
}

mpz_class binom_int(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    if (n <= 0) throw std::domain_error("divisors: argument must be positive");
    std::vector<mpz_class> small, large;
    mpz_class d(1);
    for (; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace quartic
