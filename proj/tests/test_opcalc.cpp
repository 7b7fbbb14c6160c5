#include "doctest.h"

#include <algorithm>

#include "racahops/families.hpp"
#include "racahops/opcalc.hpp"

using namespace racahops;

namespace {

// Hahn polynomial Q_k as an exact univariate polynomial in x, straight from
// the terminating 3F2 with (-x)_n expanded as a polynomial factor.
MultiPoly hahn_poly_in_x(unsigned k, const ParameterSet& params, unsigned N,
                         const std::shared_ptr<const VarSet>& vars) {
    const Rational l1 = params.lambda(0), l2 = params.lambda(1);
    const MultiPoly x = MultiPoly::variable(vars, 0);
    MultiPoly sum = MultiPoly::zero(vars);
    Rational scalar(1); // (-k)_n (k+l1+l2-1)_n / ((l1)_n (-N)_n n!)
    MultiPoly falling = MultiPoly::constant(vars, Rational(1)); // (-x)_n
    for (unsigned n = 0; n <= k; ++n) {
        sum += falling.scale(scalar);
        if (n == k)
            break;
        const Rational nr(static_cast<long>(n));
        scalar *= (Rational(-static_cast<long>(k)) + nr) *
                  (Rational(static_cast<long>(k)) + l1 + l2 - Rational(1) + nr) /
                  ((l1 + nr) * (Rational(-static_cast<long>(N)) + nr) * (nr + Rational(1)));
        falling = falling * (MultiPoly::constant(vars, nr) - x);
    }
    return sum;
}

} // namespace

TEST_CASE("operator application basics") {
    const auto vars = VarSet::single("x");
    const auto x = MultiPoly::variable(vars, 0);
    const auto dx = DiffOp::partial(vars, 0);
    CHECK(dx.apply(x * x) == x.scale(Rational(2)));

    const auto xT = ShiftOp::term(x, +1);
    CHECK(xT.apply(x) == x * x + x); // x * (x+1)

    const auto phi = jacobi_operator(vars, 0, Rational(1, 2), Rational(5, 3));
    CHECK(phi.apply(MultiPoly::constant(vars, Rational(1))).is_zero());
    CHECK(phi.apply(x) ==
          MultiPoly::constant(vars, Rational(1, 2) - Rational(5, 3)) +
              x.scale(Rational(1, 2) + Rational(5, 3)));
}

TEST_CASE("canonical commutators") {
    const auto vars = VarSet::single("x");
    const auto x = MultiPoly::variable(vars, 0);
    const auto dx = DiffOp::partial(vars, 0);
    CHECK(commutator(dx, DiffOp::mul_by(x)) == DiffOp::identity_op(vars));

    const auto T = ShiftOp::term(MultiPoly::constant(vars, Rational(1)), +1);
    const auto mx = ShiftOp::term(x, 0);
    CHECK(commutator(T, mx) == T);
}

TEST_CASE("verma relations") {
    const auto vars = VarSet::make({"x1", "x2"});
    for (const Rational& lam : {Rational(1, 2), Rational(-7, 3), Rational(4)}) {
        const auto g = verma_generators(vars, 0, lam);
        CHECK(commutator(g.H, g.E) == g.E.scale(Rational(2)));
        CHECK(commutator(g.H, g.F) == g.F.scale(Rational(-2)));
        CHECK(commutator(g.E, g.F) == g.H);

        const auto one = MultiPoly::constant(vars, Rational(1));
        const auto x1 = MultiPoly::variable(vars, 0);
        CHECK(g.H.apply(one) == one.scale(lam));
        CHECK(g.E.apply(one) == x1);
        CHECK(g.F.apply(x1) == one.scale(-lam));
    }
}

TEST_CASE("casimir values and eigenvectors") {
    const auto vars = VarSet::make({"x1", "x2"});
    const ParameterSet params({Rational(1, 2), Rational(5, 3)});
    const auto one = MultiPoly::constant(vars, Rational(1));

    const auto C1 = casimir(vars, {0}, params, false);
    CHECK(C1.apply(one) ==
          one.scale(params.lambda(0) * (params.lambda(0) - Rational(2)) / Rational(4)));
    CHECK(casimir(vars, {0}, params, true).apply(one).is_zero());

    const auto C12 = casimir(vars, {0, 1}, params, true);
    const auto x1 = MultiPoly::variable(vars, 0);
    const auto x2 = MultiPoly::variable(vars, 1);
    CHECK(C12.apply((x1 + x2).pow(3)).is_zero()); // l = 0 eigenvector at N = 3

    const auto w1 = x2.scale(params.lambda(0)) - x1.scale(params.lambda(1));
    CHECK(C12.apply(w1) == w1.scale(params.lambda(0) + params.lambda(1)));

    CHECK_THROWS_AS(casimir(vars, {}, params, true), EmptySubset);
}

TEST_CASE("commuting casimirs for nested or disjoint subsets") {
    const auto vars = VarSet::numbered(4);
    const ParameterSet params({Rational(1, 2), Rational(5, 3), Rational(7, 4), Rational(2, 5)});
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> s;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i))
                s.push_back(i);
        subsets.push_back(s);
    }
    int tested = 0;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            const auto& I = subsets[a];
            const auto& J = subsets[b];
            std::vector<int> inter;
            std::set_intersection(I.begin(), I.end(), J.begin(), J.end(),
                                  std::back_inserter(inter));
            const bool nested = inter.size() == I.size() || inter.size() == J.size();
            if (!(inter.empty() || nested))
                continue;
            const auto CI = casimir(vars, I, params, false);
            const auto CJ = casimir(vars, J, params, false);
            CHECK(commutator(CI, CJ).is_zero());
            ++tested;
        }
    CHECK(tested > 50);
}

TEST_CASE("jacobi operator eigen-equation") {
    const auto vars = VarSet::single("v");
    ParameterSampler sampler(5);
    for (int rep = 0; rep < 3; ++rep) {
        const Rational lam = sampler.next_rational();
        const Rational lamp = sampler.next_rational();
        const auto phi = jacobi_operator(vars, 0, lam, lamp);
        for (unsigned l = 0; l <= 10; ++l) {
            const auto P = jacobi_poly(l, lam, lamp, vars);
            const Rational eig =
                Rational(static_cast<long>(l)) * (Rational(static_cast<long>(l)) + lam + lamp - Rational(1));
            CHECK(phi.apply(P) == P.scale(eig));
        }
    }
}

TEST_CASE("hahn difference operators") {
    const ParameterSet params({Rational(1, 2), Rational(3, 2)});
    const unsigned N = 4;
    const auto [X, Y] = hahn_difference_ops(params, N);
    const auto vars = X.vars();
    const auto one = MultiPoly::constant(vars, Rational(1));
    CHECK(Y.apply(one).is_zero()); // M = -B-D

    const Rational l12 = params.lambda(0) + params.lambda(1);
    for (unsigned k = 0; k <= N; ++k) {
        const auto Q = hahn_poly_in_x(k, params, N, vars);
        const Rational eig = Rational(static_cast<long>(k)) * (Rational(static_cast<long>(k)) + l12 - Rational(1));
        CHECK(Y.apply(Q) == Q.scale(eig));
    }

    CHECK_THROWS_AS(hahn_difference_ops(ParameterSet({Rational(-1), Rational(2)}), 3),
                    InadmissibleParameters);
}

TEST_CASE("racah difference operators on the grid") {
    const ParameterSet params({Rational(1, 2), Rational(3, 4), Rational(1, 3)});
    const unsigned N = 3;
    const auto [X, Y] = racah_difference_ops(params, N);
    const Rational l12 = params.lambda(0) + params.lambda(1);
    const Rational l23 = params.lambda(1) + params.lambda(2);

    // X is multiplication by mu(x) = x(x+lambda1+lambda2-1)
    for (unsigned x = 0; x <= N; ++x)
        CHECK(X.at(x, x) == Rational(static_cast<long>(x)) * (Rational(static_cast<long>(x)) + l12 - Rational(1)));

    // rows of Y sum to zero (Y annihilates constants)
    for (unsigned x = 0; x <= N; ++x) {
        Rational s(0);
        for (unsigned c = 0; c <= N; ++c)
            s += Y.at(x, c);
        CHECK(s.is_zero());
    }

    // Y (R_k values) = k(k+lambda2+lambda3-1) (R_k values)
    for (unsigned k = 0; k <= N; ++k) {
        std::vector<Rational> vec, img(N + 1, Rational(0));
        for (unsigned l = 0; l <= N; ++l)
            vec.push_back(classical_value(Family::Racah, k, l, params, N));
        for (unsigned r = 0; r <= N; ++r)
            for (unsigned c = 0; c <= N; ++c)
                img[r] += Y.at(r, c) * vec[c];
        const Rational eig = Rational(static_cast<long>(k)) * (Rational(static_cast<long>(k)) + l23 - Rational(1));
        for (unsigned r = 0; r <= N; ++r)
            CHECK(img[r] == eig * vec[r]);
    }
}

TEST_CASE("hahn jacobi pair") {
    const ParameterSet params({Rational(1, 2), Rational(3, 2)});
    const unsigned N = 4;
    const auto [X, Y] = hahn_jacobi_pair(params, N);
    const auto vars = X.vars();
    const auto one = MultiPoly::constant(vars, Rational(1));
    const auto v = MultiPoly::variable(vars, 0);
    CHECK(X.apply(one) == (one - v).scale(Rational(static_cast<long>(N), 2)));
    const auto P1 = jacobi_poly(1, params.lambda(0), params.lambda(1), vars);
    CHECK(Y.apply(P1) == P1.scale(params.lambda(0) + params.lambda(1)));
}

TEST_CASE("relation residuals vanish for the model pairs and catch perturbations") {
    const ParameterSet params({Rational(1, 2), Rational(3, 2)});
    const unsigned N = 4;
    const HahnRelations rel{params.lambda(0), params.lambda(1), Rational(static_cast<long>(N))};

    const auto [X, Y] = hahn_difference_ops(params, N);
    const auto one = ShiftOp::identity_op(X.vars());
    const auto [r1, r2] = hahn_relation_residuals(X, Y, one, rel);
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());

    const auto [b1, b2] = hahn_relation_residuals(X, Y + one, one, rel);
    CHECK(!(b1.is_zero() && b2.is_zero()));

    const ParameterSet rparams({Rational(1, 2), Rational(3, 4), Rational(1, 3)});
    const RacahRelations rrel{rparams.lambda(0), rparams.lambda(1), rparams.lambda(2), Rational(3)};
    const auto [XR, YR] = racah_difference_ops(rparams, 3);
    const auto oneR = RationalMatrix::identity_matrix(4);
    const auto [m1, m2] = racah_relation_residuals(XR, YR, oneR, rrel);
    CHECK(m1.is_zero());
    CHECK(m2.is_zero());
    const auto [n1, n2] = racah_relation_residuals(XR, YR + oneR, oneR, rrel);
    CHECK(!(n1.is_zero() && n2.is_zero()));
}

TEST_CASE("racah structure constants decompose through the central combination") {
    ParameterSampler sampler(91);
    for (int rep = 0; rep < 10; ++rep) {
        const Rational l1 = sampler.next_rational(), l2 = sampler.next_rational(),
                       l3 = sampler.next_rational(), N = sampler.next_rational();
        const RacahRelations rel{l1, l2, l3, N};
        const Rational P = rel.central_value();
        CHECK(P == N * (l1 + l2 + l3 + N - Rational(1)));
        CHECK(rel.a1() ==
              Rational(-2) * P + l2 * (l1 + l2 + l3) - Rational(2) * l2 - l1 * l3);
        CHECK(rel.a2() == (l1 + l2) * (l1 + l2 - Rational(2)));
        CHECK(rel.a3() == -l2 * (l1 + l2 - Rational(2)) * P);
        CHECK(rel.b2() == (l2 + l3) * (l2 + l3 - Rational(2)));
        CHECK(rel.b3() == -l2 * (l2 + l3 - Rational(2)) * P);
    }
}

TEST_CASE("check_algebra_relations reports") {
    const ParameterSet params({Rational(1, 2), Rational(3, 2)});
    const HahnRelations rel{params.lambda(0), params.lambda(1), Rational(4)};
    const auto [X, Y] = hahn_difference_ops(params, 4);
    const auto good = check_algebra_relations(X, Y, rel, 8);
    CHECK(good.all_pass());
    CHECK(good.checks.size() == 4);

    const auto bad = check_algebra_relations(X, Y + ShiftOp::identity_op(X.vars()), rel, 8);
    CHECK(!bad.all_pass());
    bool witnessed = false;
    for (const auto& c : bad.checks)
        if (!c.pass && !c.witness.empty())
            witnessed = true;
    CHECK(witnessed);

    const auto [Xj, Yj] = hahn_jacobi_pair(params, 4);
    CHECK(check_algebra_relations(Xj, Yj, rel, 8).all_pass());

    // casimir pair with the C'123 substitution from the reparametrisation
    const ParameterSet rparams({Rational(1, 2), Rational(3, 4), Rational(1, 3)});
    const auto vars3 = VarSet::numbered(3);
    const auto X3 = casimir(vars3, {0, 1}, rparams, true);
    const auto Y3 = casimir(vars3, {1, 2}, rparams, true);
    const auto C123 = casimir(vars3, {0, 1, 2}, rparams, true);
    const RacahRelations rrel{rparams.lambda(0), rparams.lambda(1), rparams.lambda(2), Rational(2)};
    CHECK(check_algebra_relations(X3, Y3, rrel, 5, &C123).all_pass());

    const auto [XR, YR] = racah_difference_ops(rparams, 3);
    const RacahRelations rrel3{rparams.lambda(0), rparams.lambda(1), rparams.lambda(2), Rational(3)};
    CHECK(check_algebra_relations(XR, YR, rrel3).all_pass());
    CHECK(!check_algebra_relations(XR, YR + RationalMatrix::identity_matrix(4), rrel3).all_pass());
}

TEST_CASE("operator text forms") {
    const auto vars = VarSet::single("x");
    const auto x = MultiPoly::variable(vars, 0);
    const auto op = DiffOp::mul_by(x) + DiffOp::partial(vars, 0, 2);
    CHECK(op.str() == "(1 * x) + (1) d_x^2");
    const auto s = ShiftOp::term(x, -1) + ShiftOp::scalar(vars, Rational(2));
    CHECK(s.str() == "(1 * x) T-1 + (2)");
}
