// Acceptance suite: one line per criterion, exact checks with per-criterion
// wall-clock budgets. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "racahops/verify.hpp"

using namespace racahops;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string label;
    long budget_ms;
    bool pass;
    long elapsed_ms;
    std::string detail;
};

std::vector<Criterion> results;

void run(int id, const std::string& label, long budget_ms,
         const std::function<bool(std::string&)>& body) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const long elapsed = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    if (ok && elapsed > budget_ms) {
        ok = false;
        detail = "exceeded time budget";
    }
    results.push_back({id, label, budget_ms, ok, elapsed, detail});
    std::printf("%s criterion %d: %s (%ld ms, budget %ld ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), elapsed, budget_ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

bool collect(const Report& rep, std::string& detail) {
    if (rep.all_pass())
        return true;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            detail = rep.suite + " [" + rep.params.str() + "]: " + c.name +
                     (c.witness.empty() ? "" : " -- " + c.witness);
            return false;
        }
    return false;
}

} // namespace

int main() {
    // 1. Hahn algebra relations, difference pair and Jacobi pair, D=8, 5 seeds
    run(1, "hahn algebra relations, 5 seeds, D=8", 5000 * 5, [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto params = sample_family_params(Family::Hahn, 4, seed);
            if (!collect(verify_hahn_algebra(params, 4, 8, seed), detail))
                return false;
        }
        return true;
    });

    // 2. Racah algebra relations, grid pair and shifted-Casimir pair, D=8, 5 seeds
    run(2, "racah algebra relations, 5 seeds, D=8", 20000 * 5, [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto params = sample_family_params(Family::Racah, 4, seed);
            if (!collect(verify_racah_algebra(params, 4, 8, seed), detail))
                return false;
        }
        return true;
    });

    // 3. Hahn convolution, both directions, all N <= 8, 5 seeds
    run(3, "hahn convolution theorem, N<=8, 5 seeds", 30000, [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto params = sample_family_params(Family::Hahn, 8, seed);
            for (unsigned N = 0; N <= 8; ++N)
                if (!collect(verify_hahn_convolution(params, N, seed), detail))
                    return false;
        }
        return true;
    });

    // 4. Racah convolution, both directions, all N <= 6, 5 seeds
    run(4, "racah convolution theorem, N<=6, 5 seeds", 120000, [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto params = sample_family_params(Family::Racah, 6, seed);
            for (unsigned N = 0; N <= 6; ++N)
                if (!collect(verify_racah_convolution(params, N, seed), detail))
                    return false;
        }
        return true;
    });

    // 5. Orthogonality and Gamma identities, all N <= 12, 10 seeds, both families
    run(5, "orthogonality and gamma identities, N<=12, 10 seeds", 30000,
        [](std::string& detail) {
            for (std::uint64_t seed = 1; seed <= 10; ++seed)
                for (const Family family : {Family::Hahn, Family::Racah}) {
                    const auto params = sample_family_params(family, 12, seed);
                    for (unsigned N = 1; N <= 12; ++N) {
                        if (!collect(verify_orthogonality(family, params, N, seed), detail))
                            return false;
                        if (!collect(verify_gamma_sums(family, params, N, seed), detail))
                            return false;
                    }
                }
            return true;
        });

    // 6. Tridiagonality with the off-diagonal product constraint, N <= 6
    run(6, "tridiagonal actions, both families, N<=6", 30000, [](std::string& detail) {
        for (unsigned N = 1; N <= 6; ++N) {
            const auto hahn = sample_family_params(Family::Hahn, N, 100 + N);
            if (!collect(verify_tridiagonal(hahn, N, TridiagonalSide::HahnX, 100 + N), detail))
                return false;
            if (!collect(verify_tridiagonal(hahn, N, TridiagonalSide::HahnY, 100 + N), detail))
                return false;
            const auto racah = sample_family_params(Family::Racah, N, 200 + N);
            if (!collect(verify_tridiagonal(racah, N, TridiagonalSide::RacahX, 200 + N), detail))
                return false;
            if (!collect(verify_tridiagonal(racah, N, TridiagonalSide::RacahY, 200 + N), detail))
                return false;
        }
        return true;
    });

    // 7. Conjugation identities and the two-sided extension, l,m <= 4, deg <= 8
    run(7, "conjugation identities, l,m<=4, deg<=8", 10000, [](std::string& detail) {
        for (std::uint64_t seed = 1; seed <= 2; ++seed) {
            const auto params = sample_family_params(Family::Hahn, 4, 300 + seed);
            if (!collect(verify_conjugation(params, 4, 4, 8, 300 + seed), detail))
                return false;
        }
        return true;
    });

    // 8. Higher rank: all 18 schemes at n=4 and 20 schemes at n=5, D=4, K=4
    run(8, "higher-rank schemes: n=4 all 18, n=5 sample of 20, D=4, K=4", 300000,
        [](std::string& detail) {
            const auto params4 = sample_higher_rank_params(4, 4, 401);
            for (const auto& scheme : enumerate_schemes(4))
                if (!collect(verify_scheme(scheme, params4, 4, 4, 401, 4), detail))
                    return false;
            const auto params5 = sample_higher_rank_params(5, 4, 402);
            const auto schemes5 = enumerate_schemes(5);
            for (std::size_t i = 0; i < 20; ++i)
                if (!collect(verify_scheme(schemes5[i * 9], params5, 4, 4, 402, 4), detail))
                    return false;
            return true;
        });

    // 9. Counting: scheme and family counts for n = 2..6
    run(9, "scheme and family counts, n=2..6", 10000, [](std::string& detail) {
        return collect(verify_counting(6), detail);
    });

    // 10. Cross-family transition matrices for n=3, N <= 5
    run(10, "cross-family transition matrix vs closed form, N<=5", 30000,
        [](std::string& detail) {
            for (unsigned N = 0; N <= 5; ++N) {
                const auto params = sample_family_params(Family::Racah, N == 0 ? 1 : N, 500 + N);
                if (!collect(verify_cross_family(params, N, 500 + N), detail))
                    return false;
            }
            return true;
        });

    int failures = 0;
    for (const auto& c : results)
        if (!c.pass)
            ++failures;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
