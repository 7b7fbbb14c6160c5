#include "racahops/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "racahops/errors.hpp"

namespace racahops {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
        threads.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    for (auto& t : threads)
        t.join();
}

std::vector<MultiPoly> monomials_of_degree(const std::shared_ptr<const VarSet>& vars, int d) {
    std::vector<MultiPoly> out;
    for (auto& m : monomials_up_to(vars, d))
        if (m.degree() == d)
            out.push_back(std::move(m));
    return out;
}

template <typename Op>
void check_annihilates(Report& rep, const std::string& name, const Op& residual,
                       const std::vector<MultiPoly>& monomials) {
    for (const auto& m : monomials) {
        const MultiPoly img = residual.apply(m);
        if (!img.is_zero()) {
            rep.add(name, false, "monomial " + m.str() + ": residual acts as " + img.str());
            return;
        }
    }
    rep.add(name, true);
}

void check_matrix_zero(Report& rep, const std::string& name, const RationalMatrix& residual) {
    for (std::size_t r = 0; r < residual.rows(); ++r)
        for (std::size_t c = 0; c < residual.cols(); ++c)
            if (!residual.at(r, c).is_zero()) {
                rep.add(name, false,
                        "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                            residual.at(r, c).str());
                return;
            }
    rep.add(name, true);
}

// x d/dx as a two-variable operator (the image of (H x 1 - lambda1)/2)
DiffOp euler_op(const std::shared_ptr<const VarSet>& vars, std::size_t var) {
    Exponents d(vars->size(), 0);
    d[var] = 1;
    return DiffOp::term(MultiPoly::variable(vars, var), d);
}

struct HahnModel {
    std::shared_ptr<const VarSet> vars; // (x, y)
    DiffOp X;                           // x d/dx
    DiffOp Y;                           // C'_12
    DiffOp grading;                     // x d/dx + y d/dy
    std::vector<MultiPoly> v, w;        // eigenvector families for level N
};

HahnModel hahn_model(const ParameterSet& params, unsigned N) {
    require_admissible(params, N, AdmissibilityMode::hahn());
    const auto vars = VarSet::make({"x", "y"});
    HahnModel m{vars,
                euler_op(vars, 0),
                casimir(vars, {0, 1}, params, true),
                euler_op(vars, 0) + euler_op(vars, 1),
                {},
                {}};
    const MultiPoly x = MultiPoly::variable(m.vars, 0);
    const MultiPoly y = MultiPoly::variable(m.vars, 1);
    for (unsigned l = 0; l <= N; ++l) {
        m.v.push_back(x.pow(l) * y.pow(N - l));
        m.w.push_back((x + y).pow(N - l) *
                      homogenized_jacobi(l, params.lambda(0), params.lambda(1), x, y));
    }
    return m;
}

struct RacahModel {
    std::shared_ptr<const VarSet> vars; // (x, y, z)
    DiffOp X;                           // C'_12
    DiffOp Y;                           // C'_23
    DiffOp C123;                        // C'_123
    std::vector<MultiPoly> v, w;
};

RacahModel racah_model(const ParameterSet& params, unsigned N) {
    require_admissible(params, N, AdmissibilityMode::racah());
    const auto vars = VarSet::make({"x", "y", "z"});
    RacahModel m{vars,
                 casimir(vars, {0, 1}, params, true),
                 casimir(vars, {1, 2}, params, true),
                 casimir(vars, {0, 1, 2}, params, true),
                 {},
                 {}};
    const MultiPoly x = MultiPoly::variable(m.vars, 0);
    const MultiPoly y = MultiPoly::variable(m.vars, 1);
    const MultiPoly z = MultiPoly::variable(m.vars, 2);
    const Rational l1 = params.lambda(0), l2 = params.lambda(1), l3 = params.lambda(2);
    for (unsigned l = 0; l <= N; ++l) {
        const Rational two_l(2L * l);
        m.v.push_back(homogenized_jacobi(N - l, l1 + l2 + two_l, l3, x + y, z) *
                      homogenized_jacobi(l, l1, l2, x, y));
        m.w.push_back(homogenized_jacobi(N - l, l1, l2 + l3 + two_l, x, y + z) *
                      homogenized_jacobi(l, l2, l3, y, z));
    }
    return m;
}

void check_eigen(Report& rep, const std::string& name, const DiffOp& op,
                 const std::vector<MultiPoly>& vecs,
                 const std::function<Rational(unsigned)>& eigenvalue) {
    for (unsigned l = 0; l < vecs.size(); ++l) {
        const MultiPoly got = op.apply(vecs[l]);
        const MultiPoly want = vecs[l].scale(eigenvalue(l));
        if (got != want) {
            rep.add(name, false,
                    "l=" + std::to_string(l) + ": operator gives " + got.str() +
                        ", eigenvalue " + eigenvalue(l).str() + " gives " + want.str());
            return;
        }
    }
    rep.add(name, true);
}

void check_expansion(Report& rep, const std::string& name, const std::vector<MultiPoly>& targets,
                     const std::vector<MultiPoly>& basis, const RationalMatrix& expected) {
    for (unsigned l = 0; l < targets.size(); ++l) {
        std::vector<Rational> coeffs;
        try {
            coeffs = expand_in_basis(targets[l], basis);
        } catch (const Error& e) {
            rep.add(name, false, "l=" + std::to_string(l) + ": " + e.what());
            return;
        }
        for (unsigned k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != expected.at(l, k)) {
                rep.add(name, false,
                        "(l=" + std::to_string(l) + ",k=" + std::to_string(k) + "): expansion gives " +
                            coeffs[k].str() + ", closed form gives " + expected.at(l, k).str());
                return;
            }
    }
    rep.add(name, true);
}

} // namespace

ParameterSet sample_family_params(Family family, unsigned N, std::uint64_t seed) {
    ParameterSampler sampler(seed);
    const auto mode =
        family == Family::Hahn ? AdmissibilityMode::hahn() : AdmissibilityMode::racah();
    const std::size_t n = family == Family::Hahn ? 2 : 3;
    for (;;) {
        ParameterSet p = sampler.next_params(n, N, mode);
        if (recurrence_denominators_ok(family, p, N))
            return p;
    }
}

ParameterSet sample_higher_rank_params(std::size_t n, unsigned degree_bound, std::uint64_t seed) {
    ParameterSampler sampler(seed);
    return sampler.next_params(n, 0, AdmissibilityMode::higher_rank(degree_bound));
}

Report verify_hahn_algebra(const ParameterSet& params, unsigned N, int D, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "hahn-algebra";
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}, {"D", D}};
    rep.seed = seed;

    const HahnRelations rel{params.lambda(0), params.lambda(1), Rational(static_cast<long>(N))};

    {
        const auto [X, Y] = hahn_difference_ops(params, N);
        const ShiftOp one = ShiftOp::identity_op(X.vars());
        const auto [r1, r2] = hahn_relation_residuals(X, Y, one, rel);
        rep.add("difference pair [X,Z] relation, normal form", r1.is_zero(), r1.str());
        rep.add("difference pair [Y,Z] relation, normal form", r2.is_zero(), r2.str());
        const auto monos = monomials_up_to(X.vars(), D);
        check_annihilates(rep, "difference pair [X,Z] relation on monomials", r1, monos);
        check_annihilates(rep, "difference pair [Y,Z] relation on monomials", r2, monos);
    }

    {
        const auto [X, Y] = hahn_jacobi_pair(params, N);
        const DiffOp one = DiffOp::identity_op(X.vars());
        const auto [r1, r2] = hahn_relation_residuals(X, Y, one, rel);
        rep.add("jacobi pair [X,Z] relation, normal form", r1.is_zero(), r1.str());
        rep.add("jacobi pair [Y,Z] relation, normal form", r2.is_zero(), r2.str());
        const auto monos = monomials_up_to(X.vars(), D);
        check_annihilates(rep, "jacobi pair [X,Z] relation on monomials", r1, monos);
        check_annihilates(rep, "jacobi pair [Y,Z] relation on monomials", r2, monos);
    }

    {
        const HahnModel m = hahn_model(params, N);
        // grading element (delta(H) - lambda1 - lambda2)/2 == sum_i x_i d_i
        const auto g1 = verma_generators(m.vars, 0, params.lambda(0));
        const auto g2 = verma_generators(m.vars, 1, params.lambda(1));
        const DiffOp h12 =
            (g1.H + g2.H - DiffOp::scalar(m.vars, params.lambda(0) + params.lambda(1)))
                .scale(Rational(1, 2));
        rep.add("grading element equals sum of Euler operators", h12 == m.grading);

        const DiffOp one = DiffOp::identity_op(m.vars);
        const auto [s1, s2] = hahn_relation_residuals(m.X, m.Y, one, rel, &h12);
        rep.add("tensor-square pair [X,Z] with grading substitution, normal form", s1.is_zero(),
                s1.str());
        rep.add("tensor-square pair [Y,Z] with grading substitution, normal form", s2.is_zero(),
                s2.str());

        const auto [r1, r2] = hahn_relation_residuals(m.X, m.Y, one, rel);
        const auto monos = monomials_of_degree(m.vars, static_cast<int>(N));
        check_annihilates(rep, "tensor-square pair [X,Z] relation on the degree-N component", r1,
                          monos);
        check_annihilates(rep, "tensor-square pair [Y,Z] relation on the degree-N component", r2,
                          monos);
    }

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_racah_algebra(const ParameterSet& params, unsigned N, int D, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "racah-algebra";
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}, {"D", D}};
    rep.seed = seed;

    const RacahRelations rel{params.lambda(0), params.lambda(1), params.lambda(2),
                             Rational(static_cast<long>(N))};

    {
        const auto [X, Y] = racah_difference_ops(params, N);
        const RationalMatrix one = RationalMatrix::identity_matrix(N + 1);
        const auto [r1, r2] = racah_relation_residuals(X, Y, one, rel);
        check_matrix_zero(rep, "difference pair [X,Z] relation on the grid", r1);
        check_matrix_zero(rep, "difference pair [Y,Z] relation on the grid", r2);
    }

    {
        const RacahModel m = racah_model(params, N);
        const DiffOp one = DiffOp::identity_op(m.vars);
        const auto [s1, s2] = racah_relation_residuals(m.X, m.Y, one, rel, &m.C123);
        rep.add("casimir pair [X,Z] with C'123 substitution, normal form", s1.is_zero());
        rep.add("casimir pair [Y,Z] with C'123 substitution, normal form", s2.is_zero());
        const auto monos = monomials_up_to(m.vars, D);
        check_annihilates(rep, "casimir pair [X,Z] with C'123 substitution on monomials", s1, monos);
        check_annihilates(rep, "casimir pair [Y,Z] with C'123 substitution on monomials", s2, monos);

        const auto [p1, p2] = racah_relation_residuals(m.X, m.Y, one, rel);
        std::vector<MultiPoly> span = m.v;
        span.insert(span.end(), m.w.begin(), m.w.end());
        check_annihilates(rep, "casimir pair [X,Z] relation on the C'123 = N eigenspace", p1, span);
        check_annihilates(rep, "casimir pair [Y,Z] relation on the C'123 = N eigenspace", p2, span);
    }

    rep.elapsed_ms = ms_since(start);
    return rep;
}

RationalMatrix hahn_convolution_matrix(const ParameterSet& params, unsigned N, bool forward) {
    require_admissible(params, N, AdmissibilityMode::hahn());
    const Rational l1 = params.lambda(0), l2 = params.lambda(1);
    RationalMatrix mat(N + 1, N + 1);
    for (unsigned l = 0; l <= N; ++l)
        for (unsigned k = 0; k <= N; ++k) {
            if (forward) {
                // w_l = sum_k (lambda1)_l / l! binom(N,k) Q_{l,k} v_k
                mat.at(l, k) = pochhammer(l1, l) / factorial(l) * binomial(N, k) *
                               classical_value(Family::Hahn, l, k, params, N);
            } else {
                const Rational kr(static_cast<long>(k));
                mat.at(l, k) = binomial(N, k) * factorial(k) * pochhammer(l1, l) *
                               pochhammer(l2, N - l) /
                               (pochhammer(l2, k) * pochhammer(l1 + l2 + kr - Rational(1), k) *
                                pochhammer(l1 + l2 + Rational(2) * kr, N - k)) *
                               classical_value(Family::Hahn, k, l, params, N);
            }
        }
    return mat;
}

RationalMatrix racah_convolution_matrix(const ParameterSet& params, unsigned N, bool forward) {
    require_admissible(params, N, AdmissibilityMode::racah());
    const Rational l1 = params.lambda(0), l2 = params.lambda(1), l3 = params.lambda(2);
    const Rational lam123 = l1 + l2 + l3;
    const Rational Nr(static_cast<long>(N));
    RationalMatrix mat(N + 1, N + 1);
    for (unsigned l = 0; l <= N; ++l)
        for (unsigned k = 0; k <= N; ++k) {
            const Rational kr(static_cast<long>(k));
            if (forward) {
                // w_l = sum_k binom(N,l) (l2)_l (l1)_{N-l} (lam123+N-1)_k /
                //       ((l1)_k (l1+l2+k-1)_k (l1+l2+2k)_{N-k}) R_{l,k} v_k
                mat.at(l, k) = binomial(N, l) * pochhammer(l2, l) * pochhammer(l1, N - l) *
                               pochhammer(lam123 + Nr - Rational(1), k) /
                               (pochhammer(l1, k) * pochhammer(l1 + l2 + kr - Rational(1), k) *
                                pochhammer(l1 + l2 + Rational(2) * kr, N - k)) *
                               classical_value(Family::Racah, l, k, params, N);
            } else {
                mat.at(l, k) = binomial(N, l) * pochhammer(l2, l) * pochhammer(l3, N - l) *
                               pochhammer(lam123 + Nr - Rational(1), k) /
                               (pochhammer(l3, k) * pochhammer(l2 + l3 + kr - Rational(1), k) *
                                pochhammer(l2 + l3 + Rational(2) * kr, N - k)) *
                               classical_value(Family::Racah, k, l, params, N);
            }
        }
    return mat;
}

Report verify_hahn_convolution(const ParameterSet& params, unsigned N, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "hahn-convolution";
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    const HahnModel m = hahn_model(params, N);
    const Rational l12 = params.lambda(0) + params.lambda(1);

    check_eigen(rep, "X v_l = l v_l", m.X, m.v,
                [](unsigned l) { return Rational(static_cast<long>(l)); });
    check_eigen(rep, "Y w_l = l(l+lambda1+lambda2-1) w_l", m.Y, m.w, [&](unsigned l) {
        const Rational lr(static_cast<long>(l));
        return lr * (lr + l12 - Rational(1));
    });

    const RationalMatrix fwd = hahn_convolution_matrix(params, N, true);
    const RationalMatrix inv = hahn_convolution_matrix(params, N, false);
    check_expansion(rep, "w_l over the monomial basis matches the closed form", m.w, m.v, fwd);
    check_expansion(rep, "v_l over the Jacobi basis matches the closed form", m.v, m.w, inv);
    rep.add("forward and inverse matrices compose to the identity",
            fwd * inv == RationalMatrix::identity_matrix(N + 1));

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_racah_convolution(const ParameterSet& params, unsigned N, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "racah-convolution";
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    const RacahModel m = racah_model(params, N);
    const Rational l12 = params.lambda(0) + params.lambda(1);
    const Rational l23 = params.lambda(1) + params.lambda(2);
    const Rational lam123 = l12 + params.lambda(2);
    const Rational Nr(static_cast<long>(N));
    const Rational c123_eig = Nr * (lam123 + Nr - Rational(1));

    check_eigen(rep, "X v_l = l(l+lambda1+lambda2-1) v_l", m.X, m.v, [&](unsigned l) {
        const Rational lr(static_cast<long>(l));
        return lr * (lr + l12 - Rational(1));
    });
    check_eigen(rep, "Y w_l = l(l+lambda2+lambda3-1) w_l", m.Y, m.w, [&](unsigned l) {
        const Rational lr(static_cast<long>(l));
        return lr * (lr + l23 - Rational(1));
    });
    check_eigen(rep, "C'123 v_l = N(lambda123+N-1) v_l", m.C123, m.v,
                [&](unsigned) { return c123_eig; });
    check_eigen(rep, "C'123 w_l = N(lambda123+N-1) w_l", m.C123, m.w,
                [&](unsigned) { return c123_eig; });

    const RationalMatrix fwd = racah_convolution_matrix(params, N, true);
    const RationalMatrix inv = racah_convolution_matrix(params, N, false);
    check_expansion(rep, "w_l over the v basis matches the closed form", m.w, m.v, fwd);
    check_expansion(rep, "v_l over the w basis matches the closed form", m.v, m.w, inv);
    rep.add("forward and inverse matrices compose to the identity",
            fwd * inv == RationalMatrix::identity_matrix(N + 1));

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_orthogonality(Family family, const ParameterSet& params, unsigned N,
                            std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "orthogonality-" + family_name(family);
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    const TransitionTable t = transition_table(family, params, N);
    bool ok = true;
    std::string witness;
    for (unsigned l = 0; l <= N && ok; ++l)
        for (unsigned lp = 0; lp <= N && ok; ++lp) {
            Rational s(0);
            for (unsigned k = 0; k <= N; ++k)
                s += t.values.at(k, l) * t.tilde.at(k, lp);
            const Rational expect = l == lp ? t.gamma : Rational(0);
            if (s != expect) {
                ok = false;
                witness = "(l=" + std::to_string(l) + ",l'=" + std::to_string(lp) + "): sum " +
                          s.str() + " != " + expect.str();
            }
        }
    rep.add("sum_k Q_{k,l} Qt_{k,l'} = delta_{l,l'} Gamma", ok, witness);

    ok = true;
    witness.clear();
    for (unsigned k = 0; k <= N && ok; ++k)
        for (unsigned kp = 0; kp <= N && ok; ++kp) {
            Rational s(0);
            for (unsigned l = 0; l <= N; ++l)
                s += t.values.at(k, l) * t.tilde.at(kp, l);
            const Rational expect = k == kp ? t.gamma : Rational(0);
            if (s != expect) {
                ok = false;
                witness = "(k=" + std::to_string(k) + ",k'=" + std::to_string(kp) + "): sum " +
                          s.str() + " != " + expect.str();
            }
        }
    rep.add("sum_l Q_{k,l} Qt_{k',l} = delta_{k,k'} Gamma", ok, witness);

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_gamma_sums(Family family, const ParameterSet& params, unsigned N, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "gamma-sums-" + family_name(family);
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    const RecurrenceData rec = recurrence_data(family, params, N);
    const Rational l1 = params.lambda(0), l2 = params.lambda(1);

    Rational gamma_closed;
    if (family == Family::Hahn)
        gamma_closed = pochhammer(l1 + l2, N) / pochhammer(l2, N);
    else {
        const Rational l3 = params.lambda(2);
        gamma_closed = pochhammer(l1 + l2, N) * pochhammer(l2 + l3, N) /
                       (pochhammer(l1, N) * pochhammer(l3, N));
    }

    // step products of B/D and A/C against the closed forms and their sums
    Rational row_acc(1), col_acc(1), row_sum(0), col_sum(0);
    bool row_ok = true, col_ok = true;
    std::string row_witness, col_witness;
    const TransitionTable t = transition_table(family, params, N);
    for (unsigned i = 0; i <= N; ++i) {
        if (i > 0) {
            row_acc *= rec.B[i - 1] / rec.D[i];
            col_acc *= rec.A[i - 1] / rec.C[i];
        }
        if (row_ok && row_acc != t.row_prefactor[i]) {
            row_ok = false;
            row_witness = "l=" + std::to_string(i);
        }
        if (col_ok && col_acc != t.col_prefactor[i]) {
            col_ok = false;
            col_witness = "k=" + std::to_string(i);
        }
        row_sum += row_acc;
        col_sum += col_acc;
    }
    rep.add("B/D step products match the closed form", row_ok, row_witness);
    rep.add("A/C step products match the closed form", col_ok, col_witness);
    rep.add("sum of B/D products equals Gamma", row_sum == gamma_closed,
            row_sum.str() + " != " + gamma_closed.str());
    rep.add("sum of A/C products equals Gamma", col_sum == gamma_closed,
            col_sum.str() + " != " + gamma_closed.str());

    // normalised sum identity
    Rational lhs(0), rhs;
    if (family == Family::Hahn) {
        for (unsigned k = 0; k <= N; ++k) {
            const Rational kr(static_cast<long>(k));
            lhs += binomial(N, k) * pochhammer(l1, k) /
                   (pochhammer(l2, k) * pochhammer(l1 + l2 + kr - Rational(1), k) *
                    pochhammer(l1 + l2 + Rational(2) * kr, N - k));
        }
        rhs = Rational(1) / pochhammer(l2, N);
    } else {
        const Rational l3 = params.lambda(2);
        const Rational Nr(static_cast<long>(N));
        for (unsigned l = 0; l <= N; ++l) {
            const Rational lr(static_cast<long>(l));
            lhs += binomial(N, l) * pochhammer(l2, l) * pochhammer(l1 + l2 + l3 + Nr - Rational(1), l) /
                   (pochhammer(l1, l) * pochhammer(l3 + Nr - lr, l) *
                    pochhammer(l1 + l2 + lr - Rational(1), l) *
                    pochhammer(l1 + l2 + Rational(2) * lr, N - l));
        }
        rhs = pochhammer(l2 + l3, N) / (pochhammer(l1, N) * pochhammer(l3, N));
    }
    rep.add("normalised sum identity", lhs == rhs, lhs.str() + " != " + rhs.str());

    rep.elapsed_ms = ms_since(start);
    return rep;
}

std::string tridiagonal_side_name(TridiagonalSide side) {
    switch (side) {
    case TridiagonalSide::HahnX: return "hahn-x";
    case TridiagonalSide::HahnY: return "hahn-y";
    case TridiagonalSide::RacahX: return "racah-x";
    case TridiagonalSide::RacahY: return "racah-y";
    }
    return "?";
}

std::optional<TridiagonalSide> tridiagonal_side_from_name(const std::string& name) {
    if (name == "hahn-x")
        return TridiagonalSide::HahnX;
    if (name == "hahn-y")
        return TridiagonalSide::HahnY;
    if (name == "racah-x")
        return TridiagonalSide::RacahX;
    if (name == "racah-y")
        return TridiagonalSide::RacahY;
    return std::nullopt;
}

Report verify_tridiagonal(const ParameterSet& params, unsigned N, TridiagonalSide side,
                          std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "tridiagonal-" + tridiagonal_side_name(side);
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    const bool hahn = side == TridiagonalSide::HahnX || side == TridiagonalSide::HahnY;
    const bool x_side = side == TridiagonalSide::HahnX || side == TridiagonalSide::RacahX;
    const Family family = hahn ? Family::Hahn : Family::Racah;
    const RecurrenceData rec = recurrence_data(family, params, N);

    DiffOp op = DiffOp::zero(VarSet::single("t"));
    std::vector<MultiPoly> basis;
    if (hahn) {
        const HahnModel m = hahn_model(params, N);
        op = x_side ? m.X : m.Y;
        basis = x_side ? m.w : m.v;
    } else {
        const RacahModel m = racah_model(params, N);
        op = x_side ? m.X : m.Y;
        basis = x_side ? m.w : m.v;
    }

    // coefficient matrix E[i][l] of op(basis_l) over basis
    RationalMatrix E(N + 1, N + 1);
    for (unsigned l = 0; l <= N; ++l) {
        const auto coeffs = expand_in_basis(op.apply(basis[l]), basis);
        for (unsigned i = 0; i <= N; ++i)
            E.at(i, l) = coeffs[i];
    }

    bool ok = true;
    std::string witness;
    for (unsigned l = 0; l <= N && ok; ++l)
        for (unsigned i = 0; i <= N && ok; ++i)
            if ((i > l + 1 || i + 1 < l) && !E.at(i, l).is_zero()) {
                ok = false;
                witness = "entry (" + std::to_string(i) + "," + std::to_string(l) + ") = " +
                          E.at(i, l).str();
            }
    rep.add("support within {l-1, l, l+1}", ok, witness);

    ok = true;
    witness.clear();
    for (unsigned l = 0; l < N && ok; ++l) {
        const Rational product = E.at(l + 1, l) * E.at(l, l + 1);
        const Rational expect =
            x_side ? rec.A[l] * rec.C[l + 1] : rec.B[l] * rec.D[l + 1];
        if (product != expect) {
            ok = false;
            witness = "l=" + std::to_string(l) + ": product " + product.str() + " != " +
                      expect.str();
        }
    }
    rep.add(x_side ? "off-diagonal products equal A_l C_{l+1}"
                   : "off-diagonal products equal B(l) D(l+1)",
            ok, witness);

    ok = true;
    witness.clear();
    for (unsigned l = 0; l <= N && ok; ++l) {
        const Rational expect = x_side ? rec.Nk[l] : rec.M[l];
        if (E.at(l, l) != expect) {
            ok = false;
            witness = "l=" + std::to_string(l) + ": diagonal " + E.at(l, l).str() + " != " +
                      expect.str();
        }
    }
    rep.add(x_side ? "diagonal equals N_l" : "diagonal equals M(l)", ok, witness);

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_conjugation(const ParameterSet& params, int l_max, int m_max, int deg_max,
                          std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "conjugation";
    rep.params = params;
    rep.scope = {{"L", l_max}, {"M", m_max}, {"DEG", deg_max}};
    rep.seed = seed;

    const Rational alpha = params.lambda(0), beta = params.lambda(1);
    const auto vars = VarSet::single("u");
    const MultiPoly u = MultiPoly::variable(vars, 0);
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    const MultiPoly um = one - u;
    const MultiPoly up = one + u;

    bool ok = true;
    std::string witness;
    for (int l = 0; l <= l_max && ok; ++l) {
        const DiffOp phi = jacobi_operator(vars, 0, alpha, beta);
        const DiffOp phi_sh = jacobi_operator(vars, 0, alpha + Rational(2L * l), beta);
        for (int d = 0; d <= deg_max && ok; ++d) {
            const MultiPoly f = u.pow(static_cast<unsigned>(d));
            const MultiPoly lhs = phi.apply(um.pow(static_cast<unsigned>(l)) * f);
            MultiPoly rhs = um.pow(static_cast<unsigned>(l)) *
                            (phi_sh.apply(f) + f.scale(Rational(l) * beta));
            if (l > 0)
                rhs -= (um.pow(static_cast<unsigned>(l - 1)) * up * f)
                           .scale(Rational(l) * (Rational(l) + alpha - Rational(1)));
            if (lhs != rhs) {
                ok = false;
                witness = "l=" + std::to_string(l) + ", f=u^" + std::to_string(d);
            }
        }
    }
    rep.add("one-sided conjugation through (1-u)^l", ok, witness);

    ok = true;
    witness.clear();
    for (int l = 0; l <= l_max && ok; ++l)
        for (int mm = 0; mm <= m_max && ok; ++mm) {
            const DiffOp phi = jacobi_operator(vars, 0, alpha, beta);
            const DiffOp phi_sh =
                jacobi_operator(vars, 0, alpha + Rational(2L * l), beta + Rational(2L * mm));
            for (int d = 0; d <= deg_max && ok; ++d) {
                const MultiPoly f = u.pow(static_cast<unsigned>(d));
                const MultiPoly lhs =
                    phi.apply(um.pow(static_cast<unsigned>(l)) * up.pow(static_cast<unsigned>(mm)) * f);
                const Rational cross = Rational(l) * beta + Rational(mm) * alpha +
                                       Rational(2L * l * mm);
                MultiPoly rhs = um.pow(static_cast<unsigned>(l)) *
                                up.pow(static_cast<unsigned>(mm)) *
                                (phi_sh.apply(f) + f.scale(cross));
                if (l > 0)
                    rhs -= (um.pow(static_cast<unsigned>(l - 1)) *
                            up.pow(static_cast<unsigned>(mm + 1)) * f)
                               .scale(Rational(l) * (Rational(l) + alpha - Rational(1)));
                if (mm > 0)
                    rhs -= (um.pow(static_cast<unsigned>(l + 1)) *
                            up.pow(static_cast<unsigned>(mm - 1)) * f)
                               .scale(Rational(mm) * (Rational(mm) + beta - Rational(1)));
                if (lhs != rhs) {
                    ok = false;
                    witness = "l=" + std::to_string(l) + ", m=" + std::to_string(mm) + ", f=u^" +
                              std::to_string(d);
                }
            }
        }
    rep.add("two-sided conjugation through (1-u)^l (1+u)^m", ok, witness);

    rep.elapsed_ms = ms_since(start);
    return rep;
}

namespace {

std::vector<std::vector<int>> kvectors_up_to(std::size_t len, int K) {
    std::vector<std::vector<int>> out;
    std::vector<int> k(len, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == len) {
            out.push_back(k);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            k[i] = v;
            rec(i + 1, remaining - v);
        }
        k[i] = 0;
    };
    rec(0, K);
    return out;
}

bool nested_or_disjoint(const Block& a, const Block& b) {
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (inter.empty())
        return true;
    return inter.size() == a.size() || inter.size() == b.size();
}

} // namespace

Report verify_scheme(const CouplingScheme& scheme, const ParameterSet& params, int D, int K,
                     std::uint64_t seed, int jobs) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "scheme";
    rep.params = params;
    rep.scope = {{"n", scheme.n()}, {"D", D}, {"K", K}};
    rep.seed = seed;

    const unsigned bound = static_cast<unsigned>(std::max(D, K));
    require_admissible(params, 0, AdmissibilityMode::higher_rank(bound));

    const auto fam = commutative_family(scheme);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < fam.size() && ok; ++i)
        for (std::size_t j = i + 1; j < fam.size() && ok; ++j)
            if (!nested_or_disjoint(fam[i], fam[j])) {
                ok = false;
                witness = "subsets at steps " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1);
            }
    rep.add("family subsets pairwise nested or disjoint", ok, witness);

    const auto vars = VarSet::numbered(static_cast<std::size_t>(scheme.n()));
    std::vector<DiffOp> ops;
    for (const auto& blk : fam) {
        std::vector<int> subset;
        for (int i : blk)
            subset.push_back(i - 1);
        ops.push_back(casimir(vars, subset, params, true));
    }

    std::vector<DiffOp> comms;
    std::vector<std::pair<std::size_t, std::size_t>> comm_pairs;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            comms.push_back(commutator(ops[i], ops[j]));
            comm_pairs.emplace_back(i, j);
        }

    ok = true;
    witness.clear();
    for (std::size_t p = 0; p < comms.size() && ok; ++p)
        if (!comms[p].is_zero()) {
            ok = false;
            witness = "[C'_" + std::to_string(comm_pairs[p].first + 1) + ", C'_" +
                      std::to_string(comm_pairs[p].second + 1) + "] != 0";
        }
    rep.add("pairwise commutators vanish in normal form", ok, witness);

    const auto monos = monomials_up_to(vars, D);
    ok = true;
    witness.clear();
    for (std::size_t p = 0; p < comms.size() && ok; ++p)
        for (const auto& mono : monos) {
            const MultiPoly img = comms[p].apply(mono);
            if (!img.is_zero()) {
                ok = false;
                witness = "pair (" + std::to_string(comm_pairs[p].first + 1) + "," +
                          std::to_string(comm_pairs[p].second + 1) + ") on " + mono.str();
                break;
            }
        }
    rep.add("pairwise commutators annihilate monomials", ok, witness);

    const auto kvecs = kvectors_up_to(scheme.step_count(), K);
    std::vector<std::string> failures(kvecs.size());
    parallel_for(kvecs.size(), jobs, [&](std::size_t idx) {
        const auto& kvec = kvecs[idx];
        const MultiPoly v = scheme_eigenvector(scheme, kvec, params, vars);
        for (std::size_t b = 0; b < ops.size(); ++b) {
            const Rational eig = scheme_eigenvalue(scheme, static_cast<int>(b + 1), kvec, params);
            if (ops[b].apply(v) != v.scale(eig)) {
                std::string ks;
                for (int kv : kvec)
                    ks += (ks.empty() ? "" : ",") + std::to_string(kv);
                failures[idx] = "k=(" + ks + "), step " + std::to_string(b + 1);
                return;
            }
        }
    });
    ok = true;
    witness.clear();
    for (const auto& f : failures)
        if (!f.empty()) {
            ok = false;
            witness = f;
            break;
        }
    rep.add("eigen-equations for all |k| <= K", ok, witness);

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_cross_family(const ParameterSet& params, unsigned N, std::uint64_t seed) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "cross-family";
    rep.params = params;
    rep.scope = {{"N", static_cast<long>(N)}};
    rep.seed = seed;

    require_admissible(params, N, AdmissibilityMode::racah());
    const CouplingScheme v_scheme = CouplingScheme::parse("1|2|3 -> 12|3 -> 123");
    const CouplingScheme w_scheme = CouplingScheme::parse("1|2|3 -> 1|23 -> 123");
    const auto vars = VarSet::make({"x", "y", "z"});
    const RacahModel m = racah_model(params, N);

    bool ok = true;
    std::string witness;
    for (unsigned l = 0; l <= N && ok; ++l) {
        const std::vector<int> kvec{static_cast<int>(l), static_cast<int>(N - l)};
        if (scheme_eigenvector(v_scheme, kvec, params, vars) != m.v[l]) {
            ok = false;
            witness = "v_" + std::to_string(l);
        }
        if (ok && scheme_eigenvector(w_scheme, kvec, params, vars) != m.w[l]) {
            ok = false;
            witness = "w_" + std::to_string(l);
        }
    }
    rep.add("scheme eigenvectors match the direct products", ok, witness);

    std::vector<MultiPoly> v_basis, w_targets;
    for (unsigned l = 0; l <= N; ++l) {
        const std::vector<int> kvec{static_cast<int>(l), static_cast<int>(N - l)};
        v_basis.push_back(scheme_eigenvector(v_scheme, kvec, params, vars));
        w_targets.push_back(scheme_eigenvector(w_scheme, kvec, params, vars));
    }
    check_expansion(rep, "brute-force transition matrix equals the closed form", w_targets, v_basis,
                    racah_convolution_matrix(params, N, true));

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report verify_counting(int n_max) {
    const auto start = Clock::now();
    Report rep;
    rep.suite = "counting";
    rep.scope = {{"n_max", n_max}};

    for (int n = 2; n <= n_max; ++n) {
        const auto schemes = enumerate_schemes(n);
        // n!(n-1)!/2^(n-1)
        Rational expect_schemes = factorial(static_cast<unsigned>(n)) *
                                  factorial(static_cast<unsigned>(n - 1));
        for (int i = 0; i < n - 1; ++i)
            expect_schemes /= Rational(2);
        rep.add("scheme count n=" + std::to_string(n) + " equals n!(n-1)!/2^(n-1)",
                Rational(static_cast<long>(schemes.size())) == expect_schemes,
                std::to_string(schemes.size()) + " != " + expect_schemes.str());

        const auto fams = dedupe_families(schemes);
        long expect_fams = 1;
        for (long i = 3; i <= 2L * n - 3; i += 2)
            expect_fams *= i;
        rep.add("family count n=" + std::to_string(n) + " equals (2n-3)!!",
                static_cast<long>(fams.size()) == expect_fams,
                std::to_string(fams.size()) + " != " + std::to_string(expect_fams));
    }

    rep.elapsed_ms = ms_since(start);
    return rep;
}

Report run_named_suite(const std::string& name, ParameterSet params, unsigned N, int D, int K,
                       std::uint64_t seed, int jobs) {
    const auto need = [&](Family f) {
        if (params.size() == 0)
            params = sample_family_params(f, N, seed);
    };
    if (name == "hahn-algebra") {
        need(Family::Hahn);
        return verify_hahn_algebra(params, N, D, seed);
    }
    if (name == "racah-algebra") {
        need(Family::Racah);
        return verify_racah_algebra(params, N, D, seed);
    }
    if (name == "hahn-convolution") {
        need(Family::Hahn);
        return verify_hahn_convolution(params, N, seed);
    }
    if (name == "racah-convolution") {
        need(Family::Racah);
        return verify_racah_convolution(params, N, seed);
    }
    if (name == "orthogonality-hahn") {
        need(Family::Hahn);
        return verify_orthogonality(Family::Hahn, params, N, seed);
    }
    if (name == "orthogonality-racah") {
        need(Family::Racah);
        return verify_orthogonality(Family::Racah, params, N, seed);
    }
    if (name == "gamma-sums-hahn") {
        need(Family::Hahn);
        return verify_gamma_sums(Family::Hahn, params, N, seed);
    }
    if (name == "gamma-sums-racah") {
        need(Family::Racah);
        return verify_gamma_sums(Family::Racah, params, N, seed);
    }
    if (name.rfind("tridiagonal-", 0) == 0) {
        const auto side = tridiagonal_side_from_name(name.substr(12));
        if (!side)
            throw Error("unknown tridiagonal side in suite '" + name + "'");
        const bool hahn =
            *side == TridiagonalSide::HahnX || *side == TridiagonalSide::HahnY;
        need(hahn ? Family::Hahn : Family::Racah);
        return verify_tridiagonal(params, N, *side, seed);
    }
    if (name == "conjugation") {
        need(Family::Hahn);
        return verify_conjugation(params, 4, 4, static_cast<int>(D), seed);
    }
    if (name == "cross-family") {
        need(Family::Racah);
        return verify_cross_family(params, N, seed);
    }
    if (name == "counting")
        return verify_counting(6);
    (void)K;
    (void)jobs;
    throw Error("unknown suite '" + name + "'");
}

} // namespace racahops
