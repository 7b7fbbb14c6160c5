#include "doctest.h"

#include "racahops/families.hpp"

using namespace racahops;

namespace {

// independent oracle: evaluate the 2F1 form (lambda)_l / l! *
// 2F1(-l, l+lambda+lambda'-1; lambda; (1-x0)/2) at a rational point
Rational jacobi_2f1_value(unsigned l, const Rational& lam, const Rational& lamp,
                          const Rational& x0) {
    const Rational lr(static_cast<long>(l));
    return pochhammer(lam, l) / factorial(l) *
           hyp_terminating({-lr, lr + lam + lamp - Rational(1)}, {lam}, l,
                           (Rational(1) - x0) / Rational(2));
}

// independent oracle: expand (xI+xJ)^k P_k((xJ-xI)/(xI+xJ)) through the
// univariate Jacobi polynomial, substituting u^j -> (xJ-xI)^j (xI+xJ)^(k-j)
MultiPoly homogenized_brute(unsigned k, const Rational& lamI, const Rational& lamJ,
                            const MultiPoly& xI, const MultiPoly& xJ) {
    const auto uvar = VarSet::single("u");
    const MultiPoly P = jacobi_poly(k, lamI, lamJ, uvar);
    MultiPoly out = MultiPoly::zero(xI.vars());
    const MultiPoly diff = xJ - xI;
    const MultiPoly sum = xI + xJ;
    for (const auto& [e, c] : P.terms()) {
        const unsigned j = static_cast<unsigned>(e[0]);
        out += (diff.pow(j) * sum.pow(k - j)).scale(c);
    }
    return out;
}

} // namespace

TEST_CASE("jacobi polynomial closed form") {
    const auto vars = VarSet::single("v");
    const auto v = MultiPoly::variable(vars, 0);
    const Rational lam(5, 3), lamp(-3, 4);

    CHECK(jacobi_poly(0, lam, lamp, vars) == MultiPoly::constant(vars, Rational(1)));
    CHECK(jacobi_poly(1, lam, lamp, vars) ==
          v.scale((lam + lamp) / Rational(2)) +
              MultiPoly::constant(vars, (lam - lamp) / Rational(2)));

    // value at x = 1 is (lambda)_l / l!
    for (unsigned l = 0; l <= 6; ++l)
        CHECK(jacobi_poly(l, lam, lamp, vars).eval({{"v", Rational(1)}}) ==
              pochhammer(lam, l) / factorial(l));

    // cross-check against the 2F1 form at deg+1 rational points
    ParameterSampler sampler(77);
    for (int rep = 0; rep < 3; ++rep) {
        const Rational a = sampler.next_rational(), b = sampler.next_rational();
        for (unsigned l = 0; l <= 6; ++l) {
            const auto P = jacobi_poly(l, a, b, vars);
            for (unsigned pt = 0; pt <= l; ++pt) {
                const Rational x0(static_cast<long>(pt) + 2, 3);
                CHECK(P.eval({{"v", x0}}) == jacobi_2f1_value(l, a, b, x0));
            }
        }
    }
}

TEST_CASE("homogenized jacobi against the brute-force expansion") {
    const auto vars = VarSet::make({"x", "y"});
    const auto x = MultiPoly::variable(vars, 0);
    const auto y = MultiPoly::variable(vars, 1);

    CHECK(homogenized_jacobi(0, Rational(1), Rational(2), x, y) ==
          MultiPoly::constant(vars, Rational(1)));
    CHECK(homogenized_jacobi(1, Rational(1), Rational(2), x, y) ==
          y - x.scale(Rational(2))); // lambda1 y - lambda2 x

    ParameterSampler sampler(13);
    for (int rep = 0; rep < 3; ++rep) {
        const Rational a = sampler.next_rational(), b = sampler.next_rational();
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(homogenized_jacobi(k, a, b, x, y) == homogenized_brute(k, a, b, x, y));
    }

    // at xI = 0 only the s = 0 term survives: ((lambda_I)_k / k!) xJ^k
    const Rational a(7, 5), b(2, 3);
    for (unsigned k = 0; k <= 5; ++k) {
        const auto h = homogenized_jacobi(k, a, b, MultiPoly::zero(vars), y);
        CHECK(h == y.pow(k).scale(pochhammer(a, k) / factorial(k)));
    }

    // homogeneity of degree k * deg when xI, xJ are homogeneous of equal degree
    const auto vars3 = VarSet::make({"x", "y", "z"});
    const auto xx = MultiPoly::variable(vars3, 0);
    const auto yy = MultiPoly::variable(vars3, 1);
    const auto zz = MultiPoly::variable(vars3, 2);
    const auto h1 = homogenized_jacobi(3, a, b, xx + yy, zz);
    CHECK(h1.is_homogeneous());
    CHECK(h1.degree() == 3);
    const auto h2 = homogenized_jacobi(2, a, b, xx * xx, yy * zz);
    CHECK(h2.is_homogeneous());
    CHECK(h2.degree() == 4);
}

TEST_CASE("classical values") {
    const ParameterSet hahn({Rational(1, 2), Rational(3, 2)});
    const unsigned N = 4;
    for (unsigned l = 0; l <= N; ++l)
        CHECK(classical_value(Family::Hahn, 0, l, hahn, N) == Rational(1));
    for (unsigned k = 0; k <= N; ++k)
        CHECK(classical_value(Family::Hahn, k, 0, hahn, N) == Rational(1));
    // Q_{1,l} = 1 - (lambda1+lambda2) l / (lambda1 N)
    for (unsigned l = 0; l <= N; ++l)
        CHECK(classical_value(Family::Hahn, 1, l, hahn, N) ==
              Rational(1) - (hahn.lambda(0) + hahn.lambda(1)) * Rational(static_cast<long>(l)) /
                                (hahn.lambda(0) * Rational(static_cast<long>(N))));

    const ParameterSet racah({Rational(1), Rational(1), Rational(1)});
    CHECK(classical_value(Family::Racah, 1, 1, racah, 1) == Rational(-1, 3));
}

TEST_CASE("recurrence data") {
    const ParameterSet hahn({Rational(1), Rational(2)});
    const unsigned N = 2;
    const auto rec = recurrence_data(Family::Hahn, hahn, N);
    CHECK(rec.B[N].is_zero());
    CHECK(rec.D[0].is_zero());
    CHECK(rec.A[0] == Rational(-2, 3)); // (0-2)(0+1)(0+2)/((2)(3))
    for (unsigned i = 0; i <= N; ++i) {
        CHECK((rec.B[i] + rec.D[i] + rec.M[i]).is_zero());
        CHECK((rec.A[i] + rec.C[i] + rec.Nk[i]).is_zero());
    }
    for (unsigned k = 0; k + 1 <= N; ++k) {
        CHECK(!rec.A[k].is_zero());
        CHECK(!rec.C[k + 1].is_zero());
        CHECK(!rec.B[k].is_zero());
        CHECK(!rec.D[k + 1].is_zero());
    }

    // Racah: A_k is B(k) with lambda1 and lambda3 exchanged
    const ParameterSet racah({Rational(1, 2), Rational(3, 4), Rational(1, 3)});
    const ParameterSet swapped({Rational(1, 3), Rational(3, 4), Rational(1, 2)});
    const unsigned NR = 3;
    for (long k = 0; k <= static_cast<long>(NR); ++k) {
        CHECK(recurrence_A(Family::Racah, racah, NR, k) ==
              recurrence_B(Family::Racah, swapped, NR, k));
        CHECK(recurrence_C(Family::Racah, racah, NR, k) ==
              recurrence_D(Family::Racah, swapped, NR, k));
    }
}

TEST_CASE("difference and recurrence identities at the grid points") {
    for (const Family family : {Family::Hahn, Family::Racah}) {
        const ParameterSet params = family == Family::Hahn
                                        ? ParameterSet({Rational(1, 2), Rational(3, 2)})
                                        : ParameterSet({Rational(1, 2), Rational(3, 4), Rational(1, 3)});
        const unsigned N = 4;
        const auto rec = recurrence_data(family, params, N);
        const Rational eig_base = family == Family::Hahn
                                      ? params.lambda(0) + params.lambda(1)
                                      : params.lambda(1) + params.lambda(2);
        const Rational l12 = params.lambda(0) + params.lambda(1);
        auto value = [&](unsigned k, long x) {
            if (x < 0 || x > static_cast<long>(N))
                return Rational(0); // multiplied by a vanishing coefficient
            return classical_value(family, k, static_cast<unsigned>(x), params, N);
        };
        for (unsigned k = 0; k <= N; ++k)
            for (long x = 0; x <= static_cast<long>(N); ++x) {
                const Rational kr(static_cast<long>(k));
                const Rational lhs = kr * (kr + eig_base - Rational(1)) * value(k, x);
                const Rational rhs = rec.B[x] * value(k, x + 1) + rec.M[x] * value(k, x) +
                                     rec.D[x] * value(k, x - 1);
                CHECK(lhs == rhs);

                // recurrence in the spectral variable
                const Rational xr(x);
                const Rational spectral =
                    family == Family::Hahn ? xr : xr * (xr + l12 - Rational(1));
                const Rational up = k + 1 <= N ? value(k + 1, x) : Rational(0);
                const Rational down = k >= 1 ? value(k - 1, x) : Rational(0);
                CHECK(spectral * value(k, x) ==
                      rec.A[k] * up + rec.Nk[k] * value(k, x) + rec.C[k] * down);
            }
    }
}

TEST_CASE("transition tables") {
    const ParameterSet hahn({Rational(1), Rational(2)});
    const auto t = transition_table(Family::Hahn, hahn, 3);
    CHECK(t.gamma == Rational(5, 2)); // (3)_3/(2)_3 = 60/24
    CHECK(t.tilde.at(0, 0) == Rational(1));

    const ParameterSet racah1({Rational(1), Rational(1), Rational(1)});
    CHECK(transition_table(Family::Racah, racah1, 1).gamma == Rational(4));

    // boundary structural zeros survive a vanishing boundary denominator:
    // lambda1+lambda2 = 2 makes the raw D(0) a 0/0, but D(0) multiplies f(-1)
    const ParameterSet boundary({Rational(1, 2), Rational(3, 2), Rational(5, 4)});
    CHECK(recurrence_denominators_ok(Family::Racah, boundary, 3));
    CHECK(recurrence_data(Family::Racah, boundary, 3).D[0].is_zero());
    CHECK(transition_table(Family::Racah, boundary, 3).gamma ==
          pochhammer(Rational(2), 3) * pochhammer(Rational(11, 4), 3) /
              (pochhammer(Rational(1, 2), 3) * pochhammer(Rational(5, 4), 3)));

    // parameters passing (cond-Racah) but with a vanishing interior
    // denominator: lambda1+lambda2 = 1 kills B(0); no limit is taken
    const ParameterSet exotic({Rational(1, 2), Rational(1, 2), Rational(5, 4)});
    CHECK(check_admissible(exotic, 3, AdmissibilityMode::racah()).empty());
    CHECK(!recurrence_denominators_ok(Family::Racah, exotic, 3));
    CHECK_THROWS_AS(transition_table(Family::Racah, exotic, 3), ZeroDenominator);

    // JSON form carries exact strings
    const auto j = t.to_json();
    CHECK(j["gamma"] == "5/2");
    CHECK(j["family"] == "hahn");
    CHECK(j["values"][0][2] == "1");
}
