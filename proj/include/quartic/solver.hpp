#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "quartic/pell.hpp"

namespace quartic {

// Three or more verified solutions of a X^4 - b Y^2 = 1 would contradict the
// two-solution theorem; any scan that produces them signals a fatal defect
// rather than returning them silently.
class conjecture_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolutionRecord {
    mpz_class X, Y;
    enum class Source { brute_force, sequence } source;
    long k = -1;  // odd-power index when source == sequence
    bool verified = false;
};

// All (X, Y) with X <= x_max satisfying a X^4 - b Y^2 = 1 by direct scan.
// X runs only over the residues mod b admissible for a X^4 == 1 (mod b).
std::vector<SolutionRecord> brute_force(const mpz_class& a, const mpz_class& b,
                                        const mpz_class& x_max);

enum class ReductionStatus { family, a_is_square, pell_insolvable, v1_not_square };

struct ReductionOutcome {
    ReductionStatus status;
    mpz_class t;  // family parameter, t = a x^4 - 1 (family status only)
    mpz_class x;  // v1 = x^2
    std::optional<PellFundamental> fundamental;
};

// Routes a X^4 - b Y^2 = 1 through the quadratic Pell reduction: square a is
// handled by scan only; otherwise the fundamental solution decides between
// insolvable, v1 non-square (no quartic solutions), and the one-parameter
// family (t+1) X^4 - t Y^2 = 1.
ReductionOutcome reduce(const mpz_class& a, const mpz_class& b);

struct FamilyResult {
    mpz_class t;
    std::vector<SolutionRecord> solutions;
    bool v3_square = false;
    mpz_class m;  // t = m^2 + m when v3_square
};

// Solves (t+1) X^4 - t Y^2 = 1 by combining a brute-force scan to x_max with
// the square scan over V_1, V_3, ..., V_(2 k_max + 1).  When V_3 is a square
// the parameterization t = m^2 + m is asserted and no other sequence index
// may produce a square (exception: the sporadic t = 1 hit at V_7, where V_3
// is not a square).  Throws conjecture_violation on a third solution.
FamilyResult family_solve(const mpz_class& t, unsigned long k_max, const mpz_class& x_max);

struct SolveResult {
    std::vector<SolutionRecord> solutions;
    ReductionOutcome reduction;
};

// End-to-end: reduction, family solve, back-mapping X = x X_family, plus the
// brute-force cross-check.  Every returned record is re-verified against
// a X^4 - b Y^2 = 1 exactly.
SolveResult solve(const mpz_class& a, const mpz_class& b, unsigned long k_max = 40,
                  const mpz_class& x_max = mpz_class(1000000));

// Constructive decomposition of a square V_(4n+3) = z^2 into the data of a
// Thue-inequality solution: z -/+ (T_n + t U_n) = 2 t1 G^2 / 2 t2 H^2 with
// t = t1 t2, U_(n+1) = 2 G H, and the point (x, y) = (-t1 G, H) satisfying
// P(x, y) = t1^2, gcd(t1 G, H) = 1, t1 <= sqrt(t), and |x y| > 64 t^3 once
// n >= 3.
struct ThueWitness {
    unsigned long n;
    mpz_class z, t1, t2, G, H, x, y;
};

enum class WitnessStatus { witness, not_square, base_case };

struct ThueWitnessResult {
    WitnessStatus status;
    std::optional<ThueWitness> witness;
};

ThueWitnessResult thue_witness(const mpz_class& t, unsigned long n);

// family_solve over t in [t_lo, t_hi], parallel over t, ordered by t.
std::vector<FamilyResult> family_range(long t_lo, long t_hi, unsigned long k_max,
                                       const mpz_class& x_max, int jobs = 0);

}  // namespace quartic
