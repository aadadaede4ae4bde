#include "quartic/pell.hpp"

#include <mutex>
#include <stdexcept>

#include "quartic/intops.hpp"
#include "quartic/parallel.hpp"

namespace quartic {

namespace {

void check_ctx(const PellContext& ctx) {
    if (ctx.t < 1) throw std::domain_error("PellContext: t must be >= 1");
}

// One multiplication by tau^2 = (2t+1) + 2 sqrt(t(t+1)) on the odd-power pair.
void odd_step(const mpz_class& t, mpz_class& V, mpz_class& W) {
    mpz_class nV = (2 * t + 1) * V + 2 * t * W;
    mpz_class nW = 2 * (t + 1) * V + (2 * t + 1) * W;
    V = std::move(nV);
    W = std::move(nW);
}

void even_step(const mpz_class& t, mpz_class& T, mpz_class& U) {
    mpz_class nT = (2 * t + 1) * T + 2 * t * (t + 1) * U;
    mpz_class nU = 2 * T + (2 * t + 1) * U;
    T = std::move(nT);
    U = std::move(nU);
}

}  // namespace

OddPower odd_power(const PellContext& ctx, unsigned long k) {
    check_ctx(ctx);
    mpz_class V = 1, W = 1;
    for (unsigned long i = 0; i < k; ++i) odd_step(ctx.t, V, W);
    return {k, V, W};
}

EvenPower even_power(const PellContext& ctx, unsigned long k) {
    check_ctx(ctx);
    mpz_class T = 1, U = 0;
    for (unsigned long i = 0; i < k; ++i) even_step(ctx.t, T, U);
    return {k, T, U};
}

std::vector<OddPower> odd_powers(const PellContext& ctx, unsigned long k_max) {
    check_ctx(ctx);
    std::vector<OddPower> out;
    out.reserve(k_max + 1);
    mpz_class V = 1, W = 1;
    for (unsigned long k = 0; k <= k_max; ++k) {
        out.push_back({k, V, W});
        odd_step(ctx.t, V, W);
    }
    return out;
}

std::vector<EvenPower> even_powers(const PellContext& ctx, unsigned long k_max) {
    check_ctx(ctx);
    std::vector<EvenPower> out;
    out.reserve(k_max + 1);
    mpz_class T = 1, U = 0;
    for (unsigned long k = 0; k <= k_max; ++k) {
        out.push_back({k, T, U});
        even_step(ctx.t, T, U);
    }
    return out;
}

mpz_class v3_formula(const mpz_class& t) { return 1 + 4 * t; }

mpz_class v7_closed_form(const mpz_class& t) {
    return ((64 * t + 80) * t + 24) * t + 1;
}

mpz_class v11_closed_form(const mpz_class& t) {
    return ((((1024 * t + 2304) * t + 1792) * t + 560) * t + 60) * t + 1;
}

std::vector<SquareScanHit> v7_v11_square_scan(long t_lo, long t_hi, int jobs) {
    if (t_lo < 1) throw std::domain_error("v7_v11_square_scan: t_lo must be >= 1");
    std::vector<SquareScanHit> hits;
    std::mutex mu;
    parallel_chunks(t_lo, t_hi, jobs, [&](long lo, long hi, int) {
        std::vector<SquareScanHit> local;
        mpz_class tz;
        for (long t = lo; t <= hi; ++t) {
            tz = t;
            mpz_class v7 = v7_closed_form(tz);
            if (auto r = is_perfect_square(v7)) local.push_back({t, 7, v7, *r});
            mpz_class v11 = v11_closed_form(tz);
            if (auto r = is_perfect_square(v11)) local.push_back({t, 11, v11, *r});
        }
        std::lock_guard<std::mutex> lock(mu);
        hits.insert(hits.end(), local.begin(), local.end());
    });
    std::sort(hits.begin(), hits.end(), [](const SquareScanHit& a, const SquareScanHit& b) {
        return a.t != b.t ? a.t < b.t : a.index < b.index;
    });
    return hits;
}

std::optional<PellFundamental> pell_fundamental(const mpz_class& a, const mpz_class& b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("pell_fundamental: a, b must be positive");
    const mpz_class D = a * b;
    if (is_perfect_square(D))
        throw std::domain_error("pell_fundamental: ab is a perfect square (degenerate Pell)");

    // Fundamental solution of T^2 - D U^2 = 1 by the continued fraction of
    // sqrt(D); the first convergent p/q with p^2 - D q^2 = 1 is fundamental.
    const mpz_class a0 = isqrt(D);
    mpz_class m = 0, den = 1, ai = a0;
    mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
    // The period is O(sqrt(D) log D); the cap only guards absurd inputs.
    for (long guard = 0; p * p - D * q * q != 1; ++guard) {
        if (guard > 100000000L)
            throw std::runtime_error("pell_fundamental: continued fraction did not close");
        m = den * ai - m;
        den = (D - m * m) / den;
        ai = (a0 + m) / den;
        mpz_class pn = ai * p + p_prev;
        mpz_class qn = ai * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = std::move(pn);
        q = std::move(qn);
    }

    // Solvable iff the fundamental unit is the square of v sqrt(a) + w sqrt(b).
    if (mpz_odd_p(p.get_mpz_t()) == 0) return std::nullopt;
    const mpz_class h1 = (p + 1) / 2, h2 = (p - 1) / 2;
    if (h1 % a != 0 || h2 % b != 0) return std::nullopt;
    auto v = is_perfect_square(h1 / a);
    if (!v) return std::nullopt;
    auto w = is_perfect_square(h2 / b);
    if (!w || *w == 0) return std::nullopt;
    PellFundamental f{a, b, *v, *w};
    if (a * f.v * f.v - b * f.w * f.w != 1 || q != 2 * f.v * f.w)
        throw std::logic_error("pell_fundamental: internal verification failed");
    return f;
}

}  // namespace quartic
