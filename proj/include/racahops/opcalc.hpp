#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "racahops/exactnum.hpp"
#include "racahops/polyalg.hpp"
#include "racahops/report.hpp"

namespace racahops {

/// Exact linear differential operator: finite sum of
/// (polynomial coefficient) * (partial-derivative monomial), in normal form
/// with coefficients on the left. Closed under composition and commutator.
class DiffOp {
public:
    using TermMap = std::map<Exponents, MultiPoly, GradedLexLess>;

    explicit DiffOp(std::shared_ptr<const VarSet> vars);

    static DiffOp zero(std::shared_ptr<const VarSet> vars) { return DiffOp(std::move(vars)); }
    static DiffOp identity_op(std::shared_ptr<const VarSet> vars);
    /// coeff * d^orders
    static DiffOp term(MultiPoly coeff, Exponents orders);
    /// Multiplication by a polynomial.
    static DiffOp mul_by(const MultiPoly& p) { return term(p, Exponents(p.vars()->size(), 0)); }
    /// Scalar multiple of the identity.
    static DiffOp scalar(std::shared_ptr<const VarSet> vars, const Rational& c);
    /// d/d(var index)
    static DiffOp partial(std::shared_ptr<const VarSet> vars, std::size_t var, unsigned times = 1);

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly apply(const MultiPoly& p) const;

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    /// Normal-ordered composition (this applied after o).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    DiffOp scale(const Rational& c) const;

    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(const Exponents& orders, const MultiPoly& coeff);
    std::shared_ptr<const VarSet> vars_;
    TermMap terms_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp anticommutator(const DiffOp& a, const DiffOp& b);

/// One-variable shift operator: finite sum of c(x) * T_m with
/// (T_m f)(x) = f(x+m); polynomial coefficients.
class ShiftOp {
public:
    using TermMap = std::map<long, MultiPoly>;

    explicit ShiftOp(std::shared_ptr<const VarSet> vars);

    static ShiftOp zero(std::shared_ptr<const VarSet> vars) { return ShiftOp(std::move(vars)); }
    static ShiftOp identity_op(std::shared_ptr<const VarSet> vars);
    static ShiftOp term(MultiPoly coeff, long shift);
    static ShiftOp scalar(std::shared_ptr<const VarSet> vars, const Rational& c);

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly apply(const MultiPoly& p) const;

    ShiftOp operator-() const;
    ShiftOp& operator+=(const ShiftOp& o);
    ShiftOp& operator-=(const ShiftOp& o);
    friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
    friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
    ShiftOp scale(const Rational& c) const;

    friend bool operator==(const ShiftOp& a, const ShiftOp& b);
    friend bool operator!=(const ShiftOp& a, const ShiftOp& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(long shift, const MultiPoly& coeff);
    std::shared_ptr<const VarSet> vars_;
    TermMap terms_;
};

ShiftOp commutator(const ShiftOp& a, const ShiftOp& b);
ShiftOp anticommutator(const ShiftOp& a, const ShiftOp& b);

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix anticommutator(const RationalMatrix& a, const RationalMatrix& b);

/// The lowest-weight realisation H = lambda + 2x d/dx, E = x,
/// F = -x d^2/dx^2 - lambda d/dx acting in variable `var` of `vars`.
struct VermaTriple {
    DiffOp H, E, F;
};
VermaTriple verma_generators(std::shared_ptr<const VarSet> vars, std::size_t var, const Rational& lambda);

/// Intermediate Casimir operator C_I = (dH^2 + 2 dH)/4 + dF dE built from sums
/// of single-variable generators over the 0-based index subset I;
/// the shifted form subtracts the scalar lambda_I(lambda_I - 2)/4.
DiffOp casimir(std::shared_ptr<const VarSet> vars, const std::vector<int>& subset,
               const ParameterSet& params, bool shifted);

/// (x^2-1) d^2/dx^2 + (lambda - lambda' + (lambda + lambda') x) d/dx in `var`.
DiffOp jacobi_operator(std::shared_ptr<const VarSet> vars, std::size_t var, const Rational& lambda,
                       const Rational& lambda_prime);

/// X = x and Y = B(x) T_+ + M(x) Id + D(x) T_- with B(x) = (x-N)(x+lambda1),
/// D(x) = x(x-lambda2-N), M = -B-D, over a single variable "x".
std::pair<ShiftOp, ShiftOp> hahn_difference_ops(const ParameterSet& params, unsigned N);

/// The Racah difference/recurrence pair acts with rational-function
/// coefficients, so it is represented exactly on the grid {0,...,N}: entry
/// (x, x') is the coefficient of f(x') in (Op f)(x). X is multiplication by
/// mu(x) = x(x+lambda1+lambda2-1); Y is the tridiagonal difference operator.
std::pair<RationalMatrix, RationalMatrix> racah_difference_ops(const ParameterSet& params, unsigned N);

/// The one-variable pair X = N(1-v)/2 - (1-v)(1+v)/2 d/dv, Y = Jacobi operator.
std::pair<DiffOp, DiffOp> hahn_jacobi_pair(const ParameterSet& params, unsigned N,
                                           const std::string& var = "v");

/// Structure constants of the two quadratic algebras. N enters as an exact
/// rational parameter; realisations where N corresponds to a central element
/// substitute that element via the `central` argument of the residual
/// builders below.
struct HahnRelations {
    Rational lambda1, lambda2, N;
};

struct RacahRelations {
    Rational lambda1, lambda2, lambda3, N;

    /// The central combination N(lambda1+lambda2+lambda3+N-1).
    Rational central_value() const;

    Rational a1() const;
    Rational a2() const;
    Rational a3() const;
    Rational b2() const;
    Rational b3() const;
};

/// Residuals [X,Z]-RHS1 and [Y,Z]-RHS2 for the Hahn relations; zero iff the
/// pair realises the algebra. When `central` is given it replaces N (as a
/// central operator) in the N-dependent constants.
template <typename Op>
std::pair<Op, Op> hahn_relation_residuals(const Op& X, const Op& Y, const Op& one,
                                          const HahnRelations& rel, const Op* central = nullptr);

/// Same for the Racah relations; `central` replaces N(lambda123+N-1).
template <typename Op>
std::pair<Op, Op> racah_relation_residuals(const Op& X, const Op& Y, const Op& one,
                                           const RacahRelations& rel, const Op* central = nullptr);

/// All monomials of total degree <= D over `vars`, graded-lex order.
std::vector<MultiPoly> monomials_up_to(const std::shared_ptr<const VarSet>& vars, int D);

/// Check the quadratic algebra relations for a generator pair: forms
/// Z = [X,Y] and reports whether the relation residuals vanish, both in
/// normal form and acting on every monomial of total degree <= D. Failures
/// are reported with the first offending monomial, never raised. `central`
/// substitutes the grading / total-Casimir operator for the parameter N.
Report check_algebra_relations(const ShiftOp& X, const ShiftOp& Y, const HahnRelations& rel, int D);
Report check_algebra_relations(const DiffOp& X, const DiffOp& Y, const HahnRelations& rel, int D,
                               const DiffOp* central = nullptr);
Report check_algebra_relations(const DiffOp& X, const DiffOp& Y, const RacahRelations& rel, int D,
                               const DiffOp* central = nullptr);
/// Grid-matrix flavour: the residuals are finite matrices, checked entrywise.
Report check_algebra_relations(const RationalMatrix& X, const RationalMatrix& Y,
                               const RacahRelations& rel);

extern template std::pair<DiffOp, DiffOp> hahn_relation_residuals<DiffOp>(const DiffOp&, const DiffOp&,
                                                                          const DiffOp&,
                                                                          const HahnRelations&,
                                                                          const DiffOp*);
extern template std::pair<ShiftOp, ShiftOp> hahn_relation_residuals<ShiftOp>(const ShiftOp&,
                                                                             const ShiftOp&,
                                                                             const ShiftOp&,
                                                                             const HahnRelations&,
                                                                             const ShiftOp*);
extern template std::pair<RationalMatrix, RationalMatrix>
hahn_relation_residuals<RationalMatrix>(const RationalMatrix&, const RationalMatrix&,
                                        const RationalMatrix&, const HahnRelations&,
                                        const RationalMatrix*);
extern template std::pair<DiffOp, DiffOp> racah_relation_residuals<DiffOp>(const DiffOp&, const DiffOp&,
                                                                           const DiffOp&,
                                                                           const RacahRelations&,
                                                                           const DiffOp*);
extern template std::pair<RationalMatrix, RationalMatrix>
racah_relation_residuals<RationalMatrix>(const RationalMatrix&, const RationalMatrix&,
                                         const RationalMatrix&, const RacahRelations&,
                                         const RationalMatrix*);

} // namespace racahops
