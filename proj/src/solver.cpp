#include "quartic/solver.hpp"

#include <algorithm>
#include <map>

#include "quartic/forms.hpp"
#include "quartic/intops.hpp"
#include "quartic/parallel.hpp"

namespace quartic {

namespace {

bool verify_solution(const mpz_class& a, const mpz_class& b, const mpz_class& X,
                     const mpz_class& Y) {
    mpz_class x4 = X * X;
    x4 *= x4;
    return a * x4 - b * Y * Y == 1;
}

void sort_dedup(std::vector<SolutionRecord>& v) {
    std::sort(v.begin(), v.end(), [](const SolutionRecord& l, const SolutionRecord& r) {
        if (l.X != r.X) return l.X < r.X;
        if (l.Y != r.Y) return l.Y < r.Y;
        // sequence provenance first so it survives deduplication
        return l.source == SolutionRecord::Source::sequence &&
               r.source == SolutionRecord::Source::brute_force;
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const SolutionRecord& l, const SolutionRecord& r) {
                            return l.X == r.X && l.Y == r.Y;
                        }),
            v.end());
}

}  // namespace

std::vector<SolutionRecord> brute_force(const mpz_class& a, const mpz_class& b,
                                        const mpz_class& x_max) {
    if (a <= 0 || b <= 0 || x_max <= 0)
        throw std::invalid_argument("brute_force: a, b, x_max must be positive");
    std::vector<SolutionRecord> out;

    auto try_x = [&](const mpz_class& X) {
        mpz_class n = a * X * X * X * X - 1;
        if (n < b) return;  // Y >= 1 needs n >= b
        if (n % b != 0) return;
        if (auto y = is_perfect_square(n / b)) {
            if (*y > 0) out.push_back({X, *y, SolutionRecord::Source::brute_force, -1, true});
        }
    };

    // Enumerating the residue classes with a X^4 == 1 (mod b) cuts the scan by
    // roughly a factor of b / #roots; fall back to the plain loop when b is
    // large or tiny.
    if (b > 4 && b <= 1000000 && b < x_max) {
        const unsigned long bm = b.get_ui();
        std::vector<unsigned long> roots;
        const unsigned long am = mpz_fdiv_ui(a.get_mpz_t(), bm);
        for (unsigned long r = 0; r < bm; ++r) {
            // a r^4 mod b without overflow (bm <= 1e6 keeps products in range)
            unsigned long r2 = (r * r) % bm;
            unsigned long r4 = (r2 * r2) % bm;
            if ((am * r4) % bm == 1) roots.push_back(r);
        }
        for (unsigned long r : roots)
            for (mpz_class X(r == 0 ? bm : r); X <= x_max; X += bm) try_x(X);
        sort_dedup(out);
        return out;
    }
    for (mpz_class X(1); X <= x_max; ++X) try_x(X);
    return out;
}

ReductionOutcome reduce(const mpz_class& a, const mpz_class& b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("reduce: a, b must be positive");
    if (is_perfect_square(a)) return {ReductionStatus::a_is_square, 0, 0, std::nullopt};
    if (is_perfect_square(a * b)) {
        // With a non-square, ab square forces gcd(a, b) > 1, so the quadratic
        // equation has no solutions.
        return {ReductionStatus::pell_insolvable, 0, 0, std::nullopt};
    }
    auto fund = pell_fundamental(a, b);
    if (!fund) return {ReductionStatus::pell_insolvable, 0, 0, std::nullopt};
    auto x = is_perfect_square(fund->v);
    if (!x) return {ReductionStatus::v1_not_square, 0, 0, fund};
    mpz_class t = a * fund->v * fund->v - 1;
    return {ReductionStatus::family, t, *x, fund};
}

FamilyResult family_solve(const mpz_class& t, unsigned long k_max, const mpz_class& x_max) {
    if (t < 1) throw std::domain_error("family_solve: t must be >= 1");
    FamilyResult res;
    res.t = t;
    res.solutions = brute_force(t + 1, t, x_max);

    std::vector<unsigned long> square_indices;
    {
        PellContext ctx{t};
        mpz_class V = 1, W = 1;
        for (unsigned long k = 0; k <= k_max; ++k) {
            if (auto X = is_perfect_square(V)) {
                const mpz_class& Y = W;
                if (!verify_solution(t + 1, t, *X, Y))
                    throw std::logic_error("family_solve: sequence square failed verification");
                res.solutions.push_back(
                    {*X, Y, SolutionRecord::Source::sequence, static_cast<long>(k), true});
                if (k >= 1) square_indices.push_back(k);
            }
            mpz_class nV = (2 * t + 1) * V + 2 * t * W;
            mpz_class nW = 2 * (t + 1) * V + (2 * t + 1) * W;
            V = std::move(nV);
            W = std::move(nW);
        }
    }

    // V_3 square forces t = m^2 + m and forbids any later square index.
    if (auto z = is_perfect_square(v3_formula(t))) {
        res.v3_square = true;
        res.m = (*z - 1) / 2;
        if (res.m * (res.m + 1) != t)
            throw std::logic_error("family_solve: V_3 square but t != m^2 + m");
        for (unsigned long k : square_indices)
            if (k != 1)
                throw conjecture_violation(
                    "family_solve: square at index beyond V_3 in a V_3-square family, t = " +
                    t.get_str());
    }

    sort_dedup(res.solutions);
    for (const auto& s : res.solutions)
        if (!verify_solution(t + 1, t, s.X, s.Y))
            throw std::logic_error("family_solve: unverified record survived");
    if (res.solutions.size() > 2)
        throw conjecture_violation("family_solve: more than two solutions at t = " + t.get_str());
    return res;
}

SolveResult solve(const mpz_class& a, const mpz_class& b, unsigned long k_max,
                  const mpz_class& x_max) {
    SolveResult out;
    out.reduction = reduce(a, b);
    out.solutions = brute_force(a, b, x_max);

    if (out.reduction.status == ReductionStatus::family) {
        FamilyResult fam = family_solve(out.reduction.t, k_max, x_max);
        const mpz_class& x = out.reduction.x;
        for (const auto& s : fam.solutions) {
            // Family (X_f, Y_f) lifts to X = x X_f; Y is recovered from the
            // original equation and verified exactly.
            mpz_class X = x * s.X;
            mpz_class x4 = X * X;
            x4 *= x4;
            mpz_class n = a * x4 - 1;
            if (n <= 0 || n % b != 0) continue;
            auto Y = is_perfect_square(n / b);
            if (!Y || *Y == 0)
                throw std::logic_error("solve: family solution failed to lift, t = " +
                                       out.reduction.t.get_str());
            out.solutions.push_back({X, *Y, s.source, s.k, true});
        }
    } else if (out.reduction.status == ReductionStatus::pell_insolvable ||
               out.reduction.status == ReductionStatus::v1_not_square) {
        // The reduction says there are no solutions at all; a brute-force hit
        // here would falsify it.
        if (!out.solutions.empty())
            throw conjecture_violation("solve: reduction excluded solutions but the scan found " +
                                       out.solutions.front().X.get_str());
    }

    sort_dedup(out.solutions);
    for (const auto& s : out.solutions)
        if (!verify_solution(a, b, s.X, s.Y))
            throw std::logic_error("solve: unverified record survived");
    if (out.solutions.size() > 2)
        throw conjecture_violation("solve: more than two solutions for a = " + a.get_str() +
                                   ", b = " + b.get_str());
    return out;
}

ThueWitnessResult thue_witness(const mpz_class& t, unsigned long n) {
    PellContext ctx{t};
    const OddPower big = odd_power(ctx, 2 * n + 1);  // V at odd index 4n+3
    auto z = is_perfect_square(big.V);
    if (!z) return {WitnessStatus::not_square, std::nullopt};
    if (n == 0) return {WitnessStatus::base_case, std::nullopt};

    const EvenPower en = even_power(ctx, n);
    const EvenPower en1 = even_power(ctx, n + 1);
    const mpz_class S = en.T + t * en.U;
    if (S != odd_power(ctx, n).V)
        throw std::logic_error("thue_witness: T_n + t U_n != V_(2n+1)");

    const mpz_class A = *z - S, B = *z + S;
    for (const mpz_class& t1 : divisors(t)) {
        if (t1 * t1 > t) break;  // keep t1 <= sqrt(t)
        const mpz_class t2 = t / t1;
        if (A % (2 * t1) != 0 || B % (2 * t2) != 0) continue;
        auto G = is_perfect_square(A / (2 * t1));
        if (!G || *G == 0) continue;
        auto H = is_perfect_square(B / (2 * t2));
        if (!H || *H == 0) continue;
        if (en1.U != 2 * (*G) * (*H)) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), mpz_class(t1 * *G).get_mpz_t(), H->get_mpz_t());
        if (g != 1) continue;

        ThueWitness w{n, *z, t1, t2, *G, *H, -t1 * *G, *H};
        if (eval_P(t, w.x, w.y) != t1 * t1)
            throw std::logic_error("thue_witness: P(x, y) != t1^2");
        if (n >= 3) {
            mpz_class prod = abs(w.x * w.y);
            if (prod <= 64 * t * t * t)
                throw std::logic_error("thue_witness: |x y| <= 64 t^3 with n >= 3");
        }
        return {WitnessStatus::witness, w};
    }
    throw std::runtime_error("thue_witness: square V_(4n+3) admits no valid decomposition, t = " +
                             t.get_str());
}

std::vector<FamilyResult> family_range(long t_lo, long t_hi, unsigned long k_max,
                                       const mpz_class& x_max, int jobs) {
    if (t_lo < 1) throw std::domain_error("family_range: t_lo must be >= 1");
    if (t_hi < t_lo) return {};
    std::vector<FamilyResult> out(static_cast<size_t>(t_hi - t_lo + 1));
    parallel_chunks(t_lo, t_hi, jobs, [&](long lo, long hi, int) {
        for (long t = lo; t <= hi; ++t)
            out[static_cast<size_t>(t - t_lo)] = family_solve(mpz_class(t), k_max, x_max);
    });
    return out;
}

}  // namespace quartic
