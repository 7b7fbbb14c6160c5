#include "racahops/families.hpp"

#include "racahops/errors.hpp"

namespace racahops {

std::string family_name(Family f) {
    return f == Family::Hahn ? "hahn" : "racah";
}

MultiPoly jacobi_poly(unsigned l, const Rational& lambda, const Rational& lambda_prime,
                      std::shared_ptr<const VarSet> vars, std::size_t var) {
    const MultiPoly x = MultiPoly::variable(vars, var);
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    const MultiPoly one_minus = one - x;
    const MultiPoly one_plus = one + x;
    MultiPoly sum = MultiPoly::zero(vars);
    for (unsigned s = 0; s <= l; ++s) {
        Rational c = gen_binomial(Rational(static_cast<long>(l)) + lambda - Rational(1), l - s) *
                     gen_binomial(Rational(static_cast<long>(l)) + lambda_prime - Rational(1), s);
        if (s % 2 == 1)
            c = -c;
        sum += (one_minus.pow(s) * one_plus.pow(l - s)).scale(c);
    }
    Rational half_pow(1);
    for (unsigned i = 0; i < l; ++i)
        half_pow *= Rational(1, 2);
    return sum.scale(half_pow);
}

MultiPoly homogenized_jacobi(unsigned k, const Rational& lambda_I, const Rational& lambda_J,
                             const MultiPoly& xI, const MultiPoly& xJ) {
    require_same_vars(xI, xJ);
    MultiPoly sum = MultiPoly::zero(xI.vars());
    for (unsigned s = 0; s <= k; ++s) {
        Rational c = gen_binomial(Rational(static_cast<long>(k)) + lambda_I - Rational(1), k - s) *
                     gen_binomial(Rational(static_cast<long>(k)) + lambda_J - Rational(1), s);
        if (s % 2 == 1)
            c = -c;
        sum += (xI.pow(s) * xJ.pow(k - s)).scale(c);
    }
    return sum;
}

Rational classical_value(Family family, unsigned k, unsigned l, const ParameterSet& params, unsigned N) {
    const Rational kr(static_cast<long>(k)), lr(static_cast<long>(l)), Nr(static_cast<long>(N));
    if (family == Family::Hahn) {
        require_admissible(params, N, AdmissibilityMode::hahn());
        const Rational l1 = params.lambda(0), l2 = params.lambda(1);
        return hyp_terminating({-kr, kr + l1 + l2 - Rational(1), -lr}, {l1, -Nr}, k, Rational(1));
    }
    require_admissible(params, N, AdmissibilityMode::racah());
    const Rational l1 = params.lambda(0), l2 = params.lambda(1), l3 = params.lambda(2);
    return hyp_terminating({-kr, kr + l2 + l3 - Rational(1), -lr, lr + l1 + l2 - Rational(1)},
                           {l2, l1 + l2 + l3 + Nr - Rational(1), -Nr}, k, Rational(1));
}

namespace {

Rational racah_B_impl(const Rational& l1, const Rational& l2, const Rational& l3, unsigned N, long x) {
    const Rational xr(x), Nr(static_cast<long>(N));
    const Rational num = (xr - Nr) * (xr + l2) * (xr + l1 + l2 - Rational(1)) *
                         (xr + l1 + l2 + l3 + Nr - Rational(1));
    const Rational den = (Rational(2) * xr + l1 + l2 - Rational(1)) * (Rational(2) * xr + l1 + l2);
    if (den.is_zero())
        throw ZeroDenominator("Racah B(" + std::to_string(x) +
                              ") has vanishing denominator; no limit is taken");
    return num / den;
}

Rational racah_D_impl(const Rational& l1, const Rational& l2, const Rational& l3, unsigned N, long x) {
    const Rational xr(x), Nr(static_cast<long>(N));
    const Rational num =
        xr * (xr + l1 - Rational(1)) * (xr - l3 - Nr) * (xr + l1 + l2 + Nr - Rational(1));
    const Rational den =
        (Rational(2) * xr + l1 + l2 - Rational(2)) * (Rational(2) * xr + l1 + l2 - Rational(1));
    if (den.is_zero())
        throw ZeroDenominator("Racah D(" + std::to_string(x) +
                              ") has vanishing denominator; no limit is taken");
    return num / den;
}

} // namespace

Rational recurrence_B(Family family, const ParameterSet& params, unsigned N, long x) {
    if (x == static_cast<long>(N))
        return Rational(0); // structural zero: the factor (x-N) multiplies f(N+1)
    if (family == Family::Hahn) {
        const Rational xr(x), Nr(static_cast<long>(N));
        return (xr - Nr) * (xr + params.lambda(0));
    }
    return racah_B_impl(params.lambda(0), params.lambda(1), params.lambda(2), N, x);
}

Rational recurrence_D(Family family, const ParameterSet& params, unsigned N, long x) {
    if (x == 0)
        return Rational(0); // structural zero: the factor x multiplies f(-1)
    if (family == Family::Hahn) {
        const Rational xr(x), Nr(static_cast<long>(N));
        return xr * (xr - params.lambda(1) - Nr);
    }
    return racah_D_impl(params.lambda(0), params.lambda(1), params.lambda(2), N, x);
}

Rational recurrence_A(Family family, const ParameterSet& params, unsigned N, long k) {
    if (k == static_cast<long>(N))
        return Rational(0); // structural zero: the factor (k-N) multiplies Q_{N+1}
    const Rational kr(k), Nr(static_cast<long>(N));
    if (family == Family::Hahn) {
        const Rational l1 = params.lambda(0), l2 = params.lambda(1);
        const Rational den =
            (Rational(2) * kr + l1 + l2 - Rational(1)) * (Rational(2) * kr + l1 + l2);
        if (den.is_zero())
            throw ZeroDenominator("Hahn A(" + std::to_string(k) + ") has vanishing denominator");
        return (kr - Nr) * (kr + l1) * (kr + l1 + l2 - Rational(1)) / den;
    }
    // lambda1 <-> lambda3
    return racah_B_impl(params.lambda(2), params.lambda(1), params.lambda(0), N, k);
}

Rational recurrence_C(Family family, const ParameterSet& params, unsigned N, long k) {
    if (k == 0)
        return Rational(0); // structural zero: the factor k multiplies Q_{-1}
    const Rational kr(k), Nr(static_cast<long>(N));
    if (family == Family::Hahn) {
        const Rational l1 = params.lambda(0), l2 = params.lambda(1);
        const Rational den =
            (Rational(2) * kr + l1 + l2 - Rational(2)) * (Rational(2) * kr + l1 + l2 - Rational(1));
        if (den.is_zero())
            throw ZeroDenominator("Hahn C(" + std::to_string(k) + ") has vanishing denominator");
        return -kr * (kr + l2 - Rational(1)) * (kr + l1 + l2 + Nr - Rational(1)) / den;
    }
    return racah_D_impl(params.lambda(2), params.lambda(1), params.lambda(0), N, k);
}

bool recurrence_denominators_ok(Family family, const ParameterSet& params, unsigned N) {
    // interior denominators 2j + sum - 2, 2j + sum - 1, 2j + sum vanish for
    // some needed j exactly when the sum is an integer in [1-2N, 1]
    const long hi = 1, lo = 1 - 2 * static_cast<long>(N);
    if (family == Family::Hahn)
        return !(params.lambda(0) + params.lambda(1)).is_integer_in(lo, hi);
    const bool bd = !(params.lambda(0) + params.lambda(1)).is_integer_in(lo, hi);
    const bool ac = !(params.lambda(1) + params.lambda(2)).is_integer_in(lo, hi);
    return bd && ac;
}

RecurrenceData recurrence_data(Family family, const ParameterSet& params, unsigned N) {
    require_admissible(params, N,
                       family == Family::Hahn ? AdmissibilityMode::hahn() : AdmissibilityMode::racah());
    RecurrenceData d{family, params, N, {}, {}, {}, {}, {}, {}};
    for (long x = 0; x <= static_cast<long>(N); ++x) {
        d.B.push_back(recurrence_B(family, params, N, x));
        d.D.push_back(recurrence_D(family, params, N, x));
        d.M.push_back(-(d.B.back() + d.D.back()));
    }
    for (long k = 0; k <= static_cast<long>(N); ++k) {
        d.A.push_back(recurrence_A(family, params, N, k));
        d.C.push_back(recurrence_C(family, params, N, k));
        d.Nk.push_back(-(d.A.back() + d.C.back()));
    }
    return d;
}

namespace {

// closed form of B(0)..B(l-1) / D(1)..D(l) per family
Rational row_prefactor_closed(Family family, const ParameterSet& p, unsigned N, unsigned l) {
    const Rational lr(static_cast<long>(l));
    if (family == Family::Hahn) {
        const Rational l1 = p.lambda(0), l2 = p.lambda(1);
        return binomial(N, l) * pochhammer(l1, l) * pochhammer(l2, N - l) / pochhammer(l2, N);
    }
    const Rational l1 = p.lambda(0), l2 = p.lambda(1), l3 = p.lambda(2);
    const Rational Nr(static_cast<long>(N));
    const Rational num = binomial(N, l) * pochhammer(l2, l) *
                         pochhammer(l1 + l2 + l3 + Nr - Rational(1), l) * pochhammer(l1 + l2, N);
    const Rational den = pochhammer(l1, l) * pochhammer(l3 + Nr - lr, l) *
                         pochhammer(l1 + l2 + lr - Rational(1), l) *
                         pochhammer(l1 + l2 + Rational(2) * lr, N - l);
    return num / den;
}

Rational col_prefactor_closed(Family family, const ParameterSet& p, unsigned N, unsigned k) {
    if (family == Family::Hahn) {
        const Rational l1 = p.lambda(0), l2 = p.lambda(1);
        const Rational kr(static_cast<long>(k));
        const Rational num = binomial(N, k) * pochhammer(l1, k) * pochhammer(l1 + l2, N);
        const Rational den = pochhammer(l2, k) * pochhammer(l1 + l2 + kr - Rational(1), k) *
                             pochhammer(l1 + l2 + Rational(2) * kr, N - k);
        return num / den;
    }
    // lambda1 <-> lambda3 applied to the row closed form
    ParameterSet swapped({p.lambda(2), p.lambda(1), p.lambda(0)});
    return row_prefactor_closed(family, swapped, N, k);
}

} // namespace

TransitionTable transition_table(Family family, const ParameterSet& params, unsigned N) {
    const RecurrenceData rec = recurrence_data(family, params, N);
    TransitionTable t{family, params, N, RationalMatrix(N + 1, N + 1), RationalMatrix(N + 1, N + 1),
                      Rational(0), {}, {}};

    // step products with closed-form cross-check
    Rational row_acc(1), col_acc(1);
    for (unsigned l = 0; l <= N; ++l) {
        if (l > 0)
            row_acc *= rec.B[l - 1] / rec.D[l];
        if (row_acc != row_prefactor_closed(family, params, N, l))
            throw Error("transition_table: row prefactor mismatch with closed form at l=" +
                        std::to_string(l));
        t.row_prefactor.push_back(row_acc);
    }
    for (unsigned k = 0; k <= N; ++k) {
        if (k > 0)
            col_acc *= rec.A[k - 1] / rec.C[k];
        if (col_acc != col_prefactor_closed(family, params, N, k))
            throw Error("transition_table: column prefactor mismatch with closed form at k=" +
                        std::to_string(k));
        t.col_prefactor.push_back(col_acc);
    }

    for (unsigned k = 0; k <= N; ++k)
        for (unsigned l = 0; l <= N; ++l) {
            t.values.at(k, l) = classical_value(family, k, l, params, N);
            t.tilde.at(k, l) = t.row_prefactor[l] * t.col_prefactor[k] * t.values.at(k, l);
        }

    // Gamma from both product routes and the closed form
    Rational gamma_rows(0), gamma_cols(0);
    for (unsigned i = 0; i <= N; ++i) {
        gamma_rows += t.row_prefactor[i];
        gamma_cols += t.col_prefactor[i];
    }
    Rational gamma_closed;
    if (family == Family::Hahn) {
        gamma_closed = pochhammer(params.lambda(0) + params.lambda(1), N) /
                       pochhammer(params.lambda(1), N);
    } else {
        gamma_closed = pochhammer(params.lambda(0) + params.lambda(1), N) *
                       pochhammer(params.lambda(1) + params.lambda(2), N) /
                       (pochhammer(params.lambda(0), N) * pochhammer(params.lambda(2), N));
    }
    if (gamma_rows != gamma_closed || gamma_cols != gamma_closed)
        throw Error("transition_table: Gamma sums disagree with the closed form");
    t.gamma = gamma_closed;

    // normalised sum identity (the nontrivial equality behind the A/C route)
    Rational lhs(0);
    if (family == Family::Hahn) {
        const Rational l1 = params.lambda(0), l2 = params.lambda(1);
        for (unsigned k = 0; k <= N; ++k) {
            const Rational kr(static_cast<long>(k));
            lhs += binomial(N, k) * pochhammer(l1, k) /
                   (pochhammer(l2, k) * pochhammer(l1 + l2 + kr - Rational(1), k) *
                    pochhammer(l1 + l2 + Rational(2) * kr, N - k));
        }
        if (lhs != Rational(1) / pochhammer(l2, N))
            throw Error("transition_table: Hahn normalised sum identity failed");
    } else {
        const Rational l1 = params.lambda(0), l2 = params.lambda(1), l3 = params.lambda(2);
        const Rational Nr(static_cast<long>(N));
        for (unsigned l = 0; l <= N; ++l) {
            const Rational lr(static_cast<long>(l));
            lhs += binomial(N, l) * pochhammer(l2, l) *
                   pochhammer(l1 + l2 + l3 + Nr - Rational(1), l) /
                   (pochhammer(l1, l) * pochhammer(l3 + Nr - lr, l) *
                    pochhammer(l1 + l2 + lr - Rational(1), l) *
                    pochhammer(l1 + l2 + Rational(2) * lr, N - l));
        }
        if (lhs != pochhammer(l2 + l3, N) / (pochhammer(l1, N) * pochhammer(l3, N)))
            throw Error("transition_table: Racah normalised sum identity failed");
    }

    return t;
}

nlohmann::json TransitionTable::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["params"] = nlohmann::json::array();
    for (const auto& l : params.lambdas)
        j["params"].push_back(l.str());
    j["N"] = N;
    j["gamma"] = gamma.str();
    auto mat = [](const RationalMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(m.at(r, c).str());
            rows.push_back(row);
        }
        return rows;
    };
    j["values"] = mat(values);
    j["tilde"] = mat(tilde);
    return j;
}

} // namespace racahops
