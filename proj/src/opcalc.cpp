#include "racahops/opcalc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "racahops/errors.hpp"
#include "racahops/families.hpp"

namespace racahops {

DiffOp::DiffOp(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {
    if (!vars_)
        throw Error("null variable set");
}

DiffOp DiffOp::identity_op(std::shared_ptr<const VarSet> vars) {
    return scalar(std::move(vars), Rational(1));
}

DiffOp DiffOp::scalar(std::shared_ptr<const VarSet> vars, const Rational& c) {
    DiffOp op(vars);
    op.add_term(Exponents(vars->size(), 0), MultiPoly::constant(vars, c));
    return op;
}

DiffOp DiffOp::term(MultiPoly coeff, Exponents orders) {
    DiffOp op(coeff.vars());
    if (orders.size() != op.vars_->size())
        throw VarSetMismatch("derivative multi-index length mismatch");
    op.add_term(orders, coeff);
    return op;
}

DiffOp DiffOp::partial(std::shared_ptr<const VarSet> vars, std::size_t var, unsigned times) {
    Exponents orders(vars->size(), 0);
    orders.at(var) = static_cast<int>(times);
    return term(MultiPoly::constant(vars, Rational(1)), std::move(orders));
}

void DiffOp::add_term(const Exponents& orders, const MultiPoly& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(orders, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly DiffOp::apply(const MultiPoly& p) const {
    if (!(*p.vars() == *vars_))
        throw VarSetMismatch("operator and polynomial over different variable sets");
    MultiPoly out = MultiPoly::zero(p.vars());
    for (const auto& [orders, coeff] : terms_) {
        MultiPoly q = p;
        for (std::size_t i = 0; i < orders.size() && !q.is_zero(); ++i)
            if (orders[i] > 0)
                q = q.derivative(i, static_cast<unsigned>(orders[i]));
        if (!q.is_zero())
            out += coeff * q;
    }
    return out;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(vars_);
    for (const auto& [o, c] : terms_)
        r.terms_.emplace(o, -c);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (!(*o.vars_ == *vars_))
        throw VarSetMismatch("operators over different variable sets");
    for (const auto& [orders, coeff] : o.terms_)
        add_term(orders, coeff);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    if (!(*o.vars_ == *vars_))
        throw VarSetMismatch("operators over different variable sets");
    for (const auto& [orders, coeff] : o.terms_)
        add_term(orders, -coeff);
    return *this;
}

namespace {

// binom(alpha, gamma) componentwise, as an exact rational
Rational multi_binomial(const Exponents& alpha, const Exponents& gamma) {
    Rational b(1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        b *= binomial(static_cast<unsigned>(alpha[i]), static_cast<unsigned>(gamma[i]));
    return b;
}

} // namespace

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (!(*a.vars() == *b.vars()))
        throw VarSetMismatch("operators over different variable sets");
    const std::size_t n = a.vars()->size();
    DiffOp out(a.vars());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            // normal ordering: d^alpha (cb d^beta .) via Leibniz, derivatives
            // distributed between cb and the function slot
            Exponents gamma(n, 0);
            for (;;) {
                MultiPoly dcb = cb;
                for (std::size_t i = 0; i < n && !dcb.is_zero(); ++i)
                    if (gamma[i] > 0)
                        dcb = dcb.derivative(i, static_cast<unsigned>(gamma[i]));
                if (!dcb.is_zero()) {
                    Exponents orders(n);
                    for (std::size_t i = 0; i < n; ++i)
                        orders[i] = alpha[i] - gamma[i] + beta[i];
                    out.add_term(orders, (ca * dcb).scale(multi_binomial(alpha, gamma)));
                }
                // next gamma <= alpha (odometer)
                std::size_t i = 0;
                while (i < n) {
                    if (gamma[i] < alpha[i]) {
                        ++gamma[i];
                        break;
                    }
                    gamma[i] = 0;
                    ++i;
                }
                if (i == n)
                    break;
            }
        }
    }
    return out;
}

DiffOp DiffOp::scale(const Rational& c) const {
    DiffOp r(vars_);
    if (c.is_zero())
        return r;
    for (const auto& [o, coeff] : terms_)
        r.terms_.emplace(o, coeff.scale(c));
    return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    if (!(*a.vars_ == *b.vars_))
        throw VarSetMismatch("operators over different variable sets");
    return a.terms_ == b.terms_;
}

std::string DiffOp::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [orders, coeff] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeff.str() << ")";
        for (std::size_t i = 0; i < orders.size(); ++i) {
            if (orders[i] == 0)
                continue;
            os << " d_" << vars_->name(i);
            if (orders[i] > 1)
                os << "^" << orders[i];
        }
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
    return a * b - b * a;
}

DiffOp anticommutator(const DiffOp& a, const DiffOp& b) {
    return a * b + b * a;
}

ShiftOp::ShiftOp(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {
    if (!vars_)
        throw Error("null variable set");
    if (vars_->size() != 1)
        throw VarSetMismatch("shift operators are univariate");
}

ShiftOp ShiftOp::identity_op(std::shared_ptr<const VarSet> vars) {
    return scalar(std::move(vars), Rational(1));
}

ShiftOp ShiftOp::scalar(std::shared_ptr<const VarSet> vars, const Rational& c) {
    ShiftOp op(vars);
    op.add_term(0, MultiPoly::constant(vars, c));
    return op;
}

ShiftOp ShiftOp::term(MultiPoly coeff, long shift) {
    ShiftOp op(coeff.vars());
    op.add_term(shift, coeff);
    return op;
}

void ShiftOp::add_term(long shift, const MultiPoly& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(shift, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly ShiftOp::apply(const MultiPoly& p) const {
    if (!(*p.vars() == *vars_))
        throw VarSetMismatch("operator and polynomial over different variable sets");
    MultiPoly out = MultiPoly::zero(p.vars());
    for (const auto& [shift, coeff] : terms_)
        out += coeff * p.shift_var(0, shift);
    return out;
}

ShiftOp ShiftOp::operator-() const {
    ShiftOp r(vars_);
    for (const auto& [s, c] : terms_)
        r.terms_.emplace(s, -c);
    return r;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
    if (!(*o.vars_ == *vars_))
        throw VarSetMismatch("operators over different variable sets");
    for (const auto& [s, c] : o.terms_)
        add_term(s, c);
    return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
    if (!(*o.vars_ == *vars_))
        throw VarSetMismatch("operators over different variable sets");
    for (const auto& [s, c] : o.terms_)
        add_term(s, -c);
    return *this;
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    if (!(*a.vars() == *b.vars()))
        throw VarSetMismatch("operators over different variable sets");
    ShiftOp out(a.vars());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms())
            out.add_term(m1 + m2, c1 * c2.shift_var(0, m1));
    return out;
}

ShiftOp ShiftOp::scale(const Rational& c) const {
    ShiftOp r(vars_);
    if (c.is_zero())
        return r;
    for (const auto& [s, coeff] : terms_)
        r.terms_.emplace(s, coeff.scale(c));
    return r;
}

bool operator==(const ShiftOp& a, const ShiftOp& b) {
    if (!(*a.vars_ == *b.vars_))
        throw VarSetMismatch("operators over different variable sets");
    return a.terms_ == b.terms_;
}

std::string ShiftOp::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [shift, coeff] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeff.str() << ")";
        if (shift != 0)
            os << " T" << (shift > 0 ? "+" : "") << shift;
    }
    return os.str();
}

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b) {
    return a * b - b * a;
}

ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b) {
    return a * b + b * a;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b - b * a;
}

RationalMatrix anticommutator(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b + b * a;
}

VermaTriple verma_generators(std::shared_ptr<const VarSet> vars, std::size_t var, const Rational& lambda) {
    const MultiPoly x = MultiPoly::variable(vars, var);
    Exponents d1(vars->size(), 0), d2(vars->size(), 0);
    d1.at(var) = 1;
    d2.at(var) = 2;
    DiffOp H = DiffOp::scalar(vars, lambda) + DiffOp::term(x.scale(Rational(2)), d1);
    DiffOp E = DiffOp::mul_by(x);
    DiffOp F = DiffOp::term(-x, d2) + DiffOp::term(MultiPoly::constant(vars, -lambda), d1);
    return {std::move(H), std::move(E), std::move(F)};
}

DiffOp casimir(std::shared_ptr<const VarSet> vars, const std::vector<int>& subset,
               const ParameterSet& params, bool shifted) {
    if (subset.empty())
        throw EmptySubset("casimir needs a nonempty index subset");
    DiffOp H = DiffOp::zero(vars), E = DiffOp::zero(vars), F = DiffOp::zero(vars);
    Rational lambda_sum(0);
    for (int i : subset) {
        if (i < 0 || static_cast<std::size_t>(i) >= vars->size())
            throw IndexOutOfRange("casimir subset index out of range");
        const auto gen = verma_generators(vars, static_cast<std::size_t>(i), params.lambda(i));
        H += gen.H;
        E += gen.E;
        F += gen.F;
        lambda_sum += params.lambda(i);
    }
    DiffOp C = (H * H + H.scale(Rational(2))).scale(Rational(1, 4)) + F * E;
    if (shifted)
        C -= DiffOp::scalar(vars, lambda_sum * (lambda_sum - Rational(2)) / Rational(4));
    return C;
}

DiffOp jacobi_operator(std::shared_ptr<const VarSet> vars, std::size_t var, const Rational& lambda,
                       const Rational& lambda_prime) {
    const MultiPoly x = MultiPoly::variable(vars, var);
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    Exponents d1(vars->size(), 0), d2(vars->size(), 0);
    d1[var] = 1;
    d2[var] = 2;
    return DiffOp::term(x * x - one, d2) +
           DiffOp::term(MultiPoly::constant(vars, lambda - lambda_prime) +
                            x.scale(lambda + lambda_prime),
                        d1);
}

std::pair<ShiftOp, ShiftOp> hahn_difference_ops(const ParameterSet& params, unsigned N) {
    require_admissible(params, N, AdmissibilityMode::hahn());
    const auto vars = VarSet::single("x");
    const MultiPoly x = MultiPoly::variable(vars, 0);
    const auto cst = [&](const Rational& c) { return MultiPoly::constant(vars, c); };
    const Rational l1 = params.lambda(0), l2 = params.lambda(1);
    const Rational Nr(static_cast<long>(N));
    const MultiPoly B = (x - cst(Nr)) * (x + cst(l1));
    const MultiPoly D = x * (x - cst(l2 + Nr));
    const MultiPoly M = -B - D;
    ShiftOp X = ShiftOp::term(x, 0);
    ShiftOp Y = ShiftOp::term(B, +1) + ShiftOp::term(M, 0) + ShiftOp::term(D, -1);
    return {std::move(X), std::move(Y)};
}

std::pair<RationalMatrix, RationalMatrix> racah_difference_ops(const ParameterSet& params, unsigned N) {
    require_admissible(params, N, AdmissibilityMode::racah());
    const Rational l1 = params.lambda(0), l2 = params.lambda(1);
    RationalMatrix X(N + 1, N + 1), Y(N + 1, N + 1);
    for (long x = 0; x <= static_cast<long>(N); ++x) {
        X.at(x, x) = Rational(x) * (Rational(x) + l1 + l2 - Rational(1));
        const Rational B = recurrence_B(Family::Racah, params, N, x); // vanishes at x = N
        const Rational D = recurrence_D(Family::Racah, params, N, x); // vanishes at x = 0
        Y.at(x, x) = -(B + D);
        if (x + 1 <= static_cast<long>(N))
            Y.at(x, x + 1) = B;
        if (x - 1 >= 0)
            Y.at(x, x - 1) = D;
    }
    return {std::move(X), std::move(Y)};
}

std::pair<DiffOp, DiffOp> hahn_jacobi_pair(const ParameterSet& params, unsigned N,
                                           const std::string& var) {
    require_admissible(params, N, AdmissibilityMode::hahn());
    const auto vars = VarSet::single(var);
    const MultiPoly v = MultiPoly::variable(vars, 0);
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    const Rational Nr(static_cast<long>(N));
    DiffOp X = DiffOp::mul_by((one - v).scale(Nr / Rational(2))) +
               DiffOp::term(((one - v) * (one + v)).scale(Rational(-1, 2)), Exponents{1});
    DiffOp Y = jacobi_operator(vars, 0, params.lambda(0), params.lambda(1));
    return {std::move(X), std::move(Y)};
}

Rational RacahRelations::central_value() const {
    return N * (lambda1 + lambda2 + lambda3 + N - Rational(1));
}

Rational RacahRelations::a1() const {
    return (lambda2 - Rational(2) * N) * (lambda1 + lambda2 + lambda3 + N - Rational(1)) -
           lambda2 * (N + Rational(1)) - lambda1 * lambda3;
}

Rational RacahRelations::a2() const {
    return (lambda1 + lambda2) * (lambda1 + lambda2 - Rational(2));
}

Rational RacahRelations::a3() const {
    return -lambda2 * central_value() * (lambda1 + lambda2 - Rational(2));
}

Rational RacahRelations::b2() const {
    return (lambda2 + lambda3) * (lambda2 + lambda3 - Rational(2));
}

Rational RacahRelations::b3() const {
    return -lambda2 * central_value() * (lambda2 + lambda3 - Rational(2));
}

template <typename Op>
std::pair<Op, Op> hahn_relation_residuals(const Op& X, const Op& Y, const Op& one,
                                          const HahnRelations& rel, const Op* central) {
    const Rational l1 = rel.lambda1, l2 = rel.lambda2;
    const Op Ncentral = central ? *central : one.scale(rel.N);
    const Op Z = commutator(X, Y);
    // [X,Z] = 2X^2 + (l1-l2)X - 2NX + Y - l1 N
    Op rhs1 = (X * X).scale(Rational(2)) + X.scale(l1 - l2) - (Ncentral * X).scale(Rational(2)) + Y -
              Ncentral.scale(l1);
    // [Y,Z] = -2{X,Y} - (l1+l2)(l1+l2-2)X - (l1-l2)Y + 2NY + l1(l1+l2-2)N
    Op rhs2 = anticommutator(X, Y).scale(Rational(-2)) - X.scale((l1 + l2) * (l1 + l2 - Rational(2))) -
              Y.scale(l1 - l2) + (Ncentral * Y).scale(Rational(2)) +
              Ncentral.scale(l1 * (l1 + l2 - Rational(2)));
    return {commutator(X, Z) - rhs1, commutator(Y, Z) - rhs2};
}

template <typename Op>
std::pair<Op, Op> racah_relation_residuals(const Op& X, const Op& Y, const Op& one,
                                           const RacahRelations& rel, const Op* central) {
    const Rational l1 = rel.lambda1, l2 = rel.lambda2, l3 = rel.lambda3;
    const Rational lam123 = l1 + l2 + l3;
    // a1 = -2P + l2*lam123 - 2 l2 - l1 l3, a3 = -l2 (l1+l2-2) P, b3 = -l2 (l2+l3-2) P
    // with P = N(lam123+N-1), replaced by `central` when given
    const Op P = central ? *central : one.scale(rel.central_value());
    const Op Z = commutator(X, Y);
    const Op XY = anticommutator(X, Y);
    Op rhs1 = (X * X).scale(Rational(2)) + XY.scale(Rational(2)) - (P * X).scale(Rational(2)) +
              X.scale(l2 * lam123 - Rational(2) * l2 - l1 * l3) + Y.scale(rel.a2()) -
              P.scale(l2 * (l1 + l2 - Rational(2)));
    Op rhs2 = (Y * Y).scale(Rational(-2)) - XY.scale(Rational(2)) + (P * Y).scale(Rational(2)) -
              Y.scale(l2 * lam123 - Rational(2) * l2 - l1 * l3) - X.scale(rel.b2()) +
              P.scale(l2 * (l2 + l3 - Rational(2)));
    return {commutator(X, Z) - rhs1, commutator(Y, Z) - rhs2};
}

std::vector<MultiPoly> monomials_up_to(const std::shared_ptr<const VarSet>& vars, int D) {
    std::vector<MultiPoly> out;
    Exponents e(vars->size(), 0);
    // enumerate all exponent vectors with total degree <= D in graded-lex order
    std::vector<Exponents> all;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == e.size()) {
            all.push_back(e);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            e[i] = d;
            rec(i + 1, remaining - d);
        }
        e[i] = 0;
    };
    rec(0, D);
    std::sort(all.begin(), all.end(), GradedLexLess{});
    out.reserve(all.size());
    for (auto& ex : all)
        out.push_back(MultiPoly::monomial(vars, std::move(ex), Rational(1)));
    return out;
}

namespace {

template <typename Op>
void relation_checks(Report& rep, const Op& r1, const Op& r2,
                     const std::vector<MultiPoly>& monomials) {
    rep.add("[X,Z] relation, normal form", r1.is_zero(), r1.str());
    rep.add("[Y,Z] relation, normal form", r2.is_zero(), r2.str());
    const auto act = [&](const char* name, const Op& r) {
        for (const auto& m : monomials) {
            const MultiPoly img = r.apply(m);
            if (!img.is_zero()) {
                rep.add(name, false, "monomial " + m.str() + ": residual acts as " + img.str());
                return;
            }
        }
        rep.add(name, true);
    };
    act("[X,Z] relation on monomials", r1);
    act("[Y,Z] relation on monomials", r2);
}

} // namespace

Report check_algebra_relations(const ShiftOp& X, const ShiftOp& Y, const HahnRelations& rel, int D) {
    Report rep;
    rep.suite = "algebra-relations-hahn";
    rep.params = ParameterSet({rel.lambda1, rel.lambda2, rel.N});
    rep.scope = {{"D", D}};
    const auto [r1, r2] = hahn_relation_residuals(X, Y, ShiftOp::identity_op(X.vars()), rel);
    relation_checks(rep, r1, r2, monomials_up_to(X.vars(), D));
    return rep;
}

Report check_algebra_relations(const DiffOp& X, const DiffOp& Y, const HahnRelations& rel, int D,
                               const DiffOp* central) {
    Report rep;
    rep.suite = "algebra-relations-hahn";
    rep.params = ParameterSet({rel.lambda1, rel.lambda2, rel.N});
    rep.scope = {{"D", D}};
    const auto [r1, r2] = hahn_relation_residuals(X, Y, DiffOp::identity_op(X.vars()), rel, central);
    relation_checks(rep, r1, r2, monomials_up_to(X.vars(), D));
    return rep;
}

Report check_algebra_relations(const DiffOp& X, const DiffOp& Y, const RacahRelations& rel, int D,
                               const DiffOp* central) {
    Report rep;
    rep.suite = "algebra-relations-racah";
    rep.params = ParameterSet({rel.lambda1, rel.lambda2, rel.lambda3, rel.N});
    rep.scope = {{"D", D}};
    const auto [r1, r2] = racah_relation_residuals(X, Y, DiffOp::identity_op(X.vars()), rel, central);
    relation_checks(rep, r1, r2, monomials_up_to(X.vars(), D));
    return rep;
}

Report check_algebra_relations(const RationalMatrix& X, const RationalMatrix& Y,
                               const RacahRelations& rel) {
    Report rep;
    rep.suite = "algebra-relations-racah";
    rep.params = ParameterSet({rel.lambda1, rel.lambda2, rel.lambda3, rel.N});
    rep.scope = {{"grid", static_cast<long>(X.rows())}};
    const auto [r1, r2] =
        racah_relation_residuals(X, Y, RationalMatrix::identity_matrix(X.rows()), rel);
    const auto entry_check = [&](const char* name, const RationalMatrix& r) {
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (!r.at(i, j).is_zero()) {
                    rep.add(name, false,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                r.at(i, j).str());
                    return;
                }
        rep.add(name, true);
    };
    entry_check("[X,Z] relation on the grid", r1);
    entry_check("[Y,Z] relation on the grid", r2);
    return rep;
}

template std::pair<DiffOp, DiffOp> hahn_relation_residuals<DiffOp>(const DiffOp&, const DiffOp&,
                                                                   const DiffOp&, const HahnRelations&,
                                                                   const DiffOp*);
template std::pair<ShiftOp, ShiftOp> hahn_relation_residuals<ShiftOp>(const ShiftOp&, const ShiftOp&,
                                                                      const ShiftOp&,
                                                                      const HahnRelations&,
                                                                      const ShiftOp*);
template std::pair<RationalMatrix, RationalMatrix>
hahn_relation_residuals<RationalMatrix>(const RationalMatrix&, const RationalMatrix&,
                                        const RationalMatrix&, const HahnRelations&,
                                        const RationalMatrix*);
template std::pair<DiffOp, DiffOp> racah_relation_residuals<DiffOp>(const DiffOp&, const DiffOp&,
                                                                    const DiffOp&, const RacahRelations&,
                                                                    const DiffOp*);
template std::pair<RationalMatrix, RationalMatrix>
racah_relation_residuals<RationalMatrix>(const RationalMatrix&, const RationalMatrix&,
                                         const RationalMatrix&, const RacahRelations&,
                                         const RationalMatrix*);

} // namespace racahops
