#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "quartic/interval.hpp"

namespace quartic {

// c1(r,g) = 2^(2r+1+g/4) t^(5/4+3g/8) / sqrt(pi r)
// c2(r,g) = 2^(1/2+g/4-2r) 3^(4r+2-2g) t^(4r+5/4-13g/8) / (pi sqrt(r))
struct GapConstants {
    long r;
    int g;
    mpz_class t;
    Interval c1, c2;
};

GapConstants gap_constants(long r, int g, const mpz_class& t, mpfr_prec_t prec = kMinPrec);

// 4^k / (2 sqrt(k)) <= binom(2k, k) < 4^k / sqrt(pi k).  The lower bound is
// decided exactly in integers, the upper against a pi enclosure.
bool stirling_check(unsigned long k);
// First failing k in 1..k_max, or nullopt when every k passes.
std::optional<unsigned long> stirling_sweep(unsigned long k_max);

// X_r = binom(r-3/4, r) binom(r-1/4, r) < 1 / (sqrt(2) pi r), together with
// the companion binom(r-3/4, r) > binom(r+1/4, r+1).  O(r) per call.
bool binomial_product_bound_check(unsigned long r);
std::optional<unsigned long> binomial_product_sweep(unsigned long r_max);
// Exact X_r for small r (reduced rational).
mpq_class binomial_product_xr(unsigned long r);

// Enclosure of (3/pi) t^(-5/4) |xi1|^3 given the exact carrier |xi1|^8.
Interval gap_lower_bound(const mpz_class& t, const mpz_class& xi1_abs8,
                         mpfr_prec_t prec = kMinPrec);

// Enclosure of 2^(-g/4) t^(1/2 - 3g/8).
Interval lambda_floor(long r, int g, const mpz_class& t, mpfr_prec_t prec = kMinPrec);

enum class Verdict { certified, refuted, undecided };

// Left side of c1 |xi1|^(4r+1-g) |xi2|^(-3) + c2 |xi1|^(-4r-3(1-g)) |xi2|,
// with the verdict of the comparison against 1.
struct GapInequality {
    Interval lhs;
    Verdict verdict;
};

GapInequality gap_inequality(long r, int g, const mpz_class& t, const mpz_class& xi1_abs8,
                             const mpz_class& xi2_abs8, mpfr_prec_t prec = kMinPrec);

// The r = 1 size contradiction: 2^23 t^9 < 6635.52 t^6 is false for every
// t >= 1 (exact rational comparison at t = 1 plus monotonicity in t).
bool size_contradiction_r1_all_t();
// Exact per-t refutation of 2^(26r-3) t^(11r-2) < N_r / F_r^min for r = 1..5,
// using the stored ideal-norm bounds and cofactor floors.
bool size_contradiction_refuted(long r, const mpz_class& t);

// One certified (or failed) numeric fact inside the induction replay.
struct ChainCheck {
    std::string label;
    std::string value;   // printed enclosure
    double margin;       // distance to the threshold (negative = failed)
    bool pass;
    bool gating;         // report-only entries do not gate certification
};

struct ChainStep {
    long r;                   // induction produces the height bound at this r
    bool branch_b_replayed;   // g = 1 branch replayed (only meaningful r >= 6)
    std::vector<ChainCheck> checks;
    bool height_bound_certified;  // |xi2| > (sqrt(r)/(5 t^(4r+7/4))) (4/81)^r |xi1|^(4r+3)
    bool final_certified;         // |xi2| > t^(7r/2 + 31/8)
};

struct ChainReport {
    mpz_class t;
    long r_max;
    std::vector<ChainStep> steps;
    bool all_certified;
};

// Replays the height-gap induction at a concrete t > 204: every displayed
// "< 0.1" constant is certified numerically, the derived |xi2| lower bound is
// checked against the canonical height bound at each induction level (both
// branches where applicable), and the final magnitude |xi2| > t^(7r/2+31/8)
// is certified per level.
ChainReport chain_replay(const mpz_class& t, long r_max);

}  // namespace quartic
