#include "doctest.h"

#include "racahops/coupling.hpp"
#include "racahops/families.hpp"
#include "racahops/opcalc.hpp"

using namespace racahops;

TEST_CASE("scheme enumeration counts and determinism") {
    CHECK(enumerate_schemes(2).size() == 1);
    CHECK(enumerate_schemes(3).size() == 3);
    CHECK(enumerate_schemes(4).size() == 18);
    CHECK(enumerate_schemes(5).size() == 180);
    CHECK_THROWS_AS(enumerate_schemes(1), ArityOutOfRange);
    CHECK_THROWS_AS(enumerate_schemes(8), ArityOutOfRange);

    const auto schemes = enumerate_schemes(4);
    CHECK(schemes.front().str() == "1|2|3|4 -> 12|3|4 -> 123|4 -> 1234");
    // lexicographic over chosen pair indices, so the run is reproducible
    CHECK(schemes[1].str() == "1|2|3|4 -> 12|3|4 -> 124|3 -> 1234");
}

TEST_CASE("scheme text round trip") {
    for (const auto& s : enumerate_schemes(4))
        CHECK(CouplingScheme::parse(s.str()) == s);
    CHECK_THROWS_AS(CouplingScheme::parse("1|2 -> 1|2"), ParseError);
}

TEST_CASE("commutative families") {
    const auto s3 = CouplingScheme::parse("1|2|3 -> 12|3 -> 123");
    CHECK(commutative_family(s3) == std::vector<Block>{{1, 2}, {1, 2, 3}});

    const auto s4 = CouplingScheme::parse("1|2|3|4 -> 12|3|4 -> 12|34 -> 1234");
    CHECK(commutative_family(s4) == std::vector<Block>{{1, 2}, {3, 4}, {1, 2, 3, 4}});

    for (int n = 2; n <= 5; ++n)
        for (const auto& s : enumerate_schemes(n)) {
            Block all;
            for (int i = 1; i <= n; ++i)
                all.push_back(i);
            CHECK(commutative_family(s).back() == all);
        }

    CHECK(dedupe_families(enumerate_schemes(3)).size() == 3);
    CHECK(dedupe_families(enumerate_schemes(4)).size() == 15);
    CHECK(dedupe_families(enumerate_schemes(5)).size() == 105);
}

TEST_CASE("precedence relations") {
    const auto s = CouplingScheme::parse("1|2|3|4 -> 12|3|4 -> 123|4 -> 1234");
    CHECK(precedence(s, 1, 2) == Precedence::LeftOf);
    CHECK(precedence(s, 2, 3) == Precedence::LeftOf);
    CHECK(precedence(s, 1, 3) == Precedence::LeftOf);
    CHECK(precedence(s, 2, 2) == Precedence::Equal);
    CHECK_THROWS_AS(precedence(s, 2, 1), IndexOutOfRange);
    CHECK_THROWS_AS(precedence(s, 0, 1), IndexOutOfRange);

    const auto s2 = CouplingScheme::parse("1|2|3|4 -> 12|3|4 -> 12|34 -> 1234");
    CHECK(precedence(s2, 1, 2) == Precedence::Unrelated);
    CHECK(precedence(s2, 1, 3) == Precedence::LeftOf);
    CHECK(precedence(s2, 2, 3) == Precedence::RightOf);
}

TEST_CASE("shifted parameters") {
    const auto s = CouplingScheme::parse("1|2|3 -> 12|3 -> 123");
    const ParameterSet params({Rational(1, 2), Rational(5, 3), Rational(7, 4)});

    const auto unshifted = shifted_parameters(s, {0, 0}, params);
    CHECK(unshifted[0] == std::pair{params.lambda(0), params.lambda(1)});
    CHECK(unshifted[1] ==
          std::pair{params.lambda(0) + params.lambda(1), params.lambda(2)});

    const auto shifted = shifted_parameters(s, {2, 1}, params);
    CHECK(shifted[0] == std::pair{params.lambda(0), params.lambda(1)});
    CHECK(shifted[1] == std::pair{params.lambda(0) + params.lambda(1) + Rational(4),
                                  params.lambda(2)});
}

TEST_CASE("scheme eigenvectors and eigenvalues") {
    const auto s = CouplingScheme::parse("1|2|3 -> 12|3 -> 123");
    const ParameterSet params({Rational(1, 2), Rational(5, 3), Rational(7, 4)});
    const auto vars = VarSet::numbered(3);
    const auto x1 = MultiPoly::variable(vars, 0);
    const auto x2 = MultiPoly::variable(vars, 1);

    CHECK(scheme_eigenvector(s, {0, 0}, params, vars) ==
          MultiPoly::constant(vars, Rational(1)));
    CHECK(scheme_eigenvector(s, {1, 0}, params, vars) ==
          x2.scale(params.lambda(0)) - x1.scale(params.lambda(1)));

    CHECK(scheme_eigenvalue(s, 1, {0, 0}, params) == Rational(0));
    CHECK(scheme_eigenvalue(s, 2, {0, 0}, params) == Rational(0));
    CHECK(scheme_eigenvalue(s, 1, {1, 0}, params) == params.lambda(0) + params.lambda(1));
    CHECK(scheme_eigenvalue(s, 2, {1, 0}, params) ==
          params.lambda(0) + params.lambda(1) + params.lambda(2));

    // homogeneity of degree |k|_1
    for (int k1 = 0; k1 <= 2; ++k1)
        for (int k2 = 0; k2 <= 2; ++k2) {
            const auto v = scheme_eigenvector(s, {k1, k2}, params, vars);
            CHECK(v.is_homogeneous());
            CHECK(v.degree() == k1 + k2);
        }
}

TEST_CASE("worked examples for n=4") {
    const ParameterSet params({Rational(1, 2), Rational(5, 3), Rational(7, 4), Rational(2, 5)});
    const auto vars = VarSet::numbered(4);
    const auto x = [&](std::initializer_list<int> idx) {
        MultiPoly s = MultiPoly::zero(vars);
        for (int i : idx)
            s += MultiPoly::variable(vars, static_cast<std::size_t>(i - 1));
        return s;
    };
    const Rational l1 = params.lambda(0), l2 = params.lambda(1), l3 = params.lambda(2),
                   l4 = params.lambda(3);

    struct Example {
        std::string scheme;
        std::vector<Block> family;
    };
    const std::vector<Example> examples = {
        {"1|2|3|4 -> 12|3|4 -> 123|4 -> 1234", {{1, 2}, {1, 2, 3}, {1, 2, 3, 4}}},
        {"1|2|3|4 -> 12|3|4 -> 12|34 -> 1234", {{1, 2}, {3, 4}, {1, 2, 3, 4}}},
        {"1|2|3|4 -> 1|2|34 -> 1|234 -> 1234", {{3, 4}, {2, 3, 4}, {1, 2, 3, 4}}},
        {"1|2|3|4 -> 1|24|3 -> 1|234 -> 1234", {{2, 4}, {2, 3, 4}, {1, 2, 3, 4}}},
    };
    for (const auto& ex : examples)
        CHECK(commutative_family(CouplingScheme::parse(ex.scheme)) == ex.family);

    // printed closed forms of the eigenvectors, checked for all |k|_1 <= 3
    for (int k1 = 0; k1 <= 3; ++k1)
        for (int k2 = 0; k2 + k1 <= 3; ++k2)
            for (int k3 = 0; k3 + k2 + k1 <= 3; ++k3) {
                const std::vector<int> k{k1, k2, k3};
                const Rational s1(2L * k1), s2(2L * k2);

                auto v1 = homogenized_jacobi(k3, l1 + l2 + l3 + s1 + s2, l4, x({1, 2, 3}), x({4})) *
                          homogenized_jacobi(k2, l1 + l2 + s1, l3, x({1, 2}), x({3})) *
                          homogenized_jacobi(k1, l1, l2, x({1}), x({2}));
                CHECK(scheme_eigenvector(CouplingScheme::parse(examples[0].scheme), k, params,
                                         vars) == v1);

                auto v2 = homogenized_jacobi(k3, l1 + l2 + s1, l3 + l4 + s2, x({1, 2}), x({3, 4})) *
                          homogenized_jacobi(k2, l3, l4, x({3}), x({4})) *
                          homogenized_jacobi(k1, l1, l2, x({1}), x({2}));
                CHECK(scheme_eigenvector(CouplingScheme::parse(examples[1].scheme), k, params,
                                         vars) == v2);

                auto v3 = homogenized_jacobi(k3, l1, l2 + l3 + l4 + s1 + s2, x({1}), x({2, 3, 4})) *
                          homogenized_jacobi(k2, l2, l3 + l4 + s1, x({2}), x({3, 4})) *
                          homogenized_jacobi(k1, l3, l4, x({3}), x({4}));
                CHECK(scheme_eigenvector(CouplingScheme::parse(examples[2].scheme), k, params,
                                         vars) == v3);

                auto v4 = homogenized_jacobi(k3, l1, l2 + l3 + l4 + s1 + s2, x({1}), x({2, 3, 4})) *
                          homogenized_jacobi(k2, l2 + l4 + s1, l3, x({2, 4}), x({3})) *
                          homogenized_jacobi(k1, l2, l4, x({2}), x({4}));
                CHECK(scheme_eigenvector(CouplingScheme::parse(examples[3].scheme), k, params,
                                         vars) == v4);
            }
}

TEST_CASE("family graph at n=4") {
    const auto famA = std::vector<Block>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}};
    const auto famB = std::vector<Block>{{2, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    CHECK(family_graph_distance(famA, famA, 4) == 0);
    CHECK(family_graph_distance(famA, famB, 4) == 3);
    CHECK(family_graph_diameter(4) == 3);
}
