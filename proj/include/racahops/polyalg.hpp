#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "racahops/rational.hpp"

namespace racahops {

/// Ordered set of variable names; the order fixes the monomial ordering for
/// every polynomial built over it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);
    /// x1..xn
    static std::shared_ptr<const VarSet> numbered(std::size_t n, const std::string& prefix = "x");
    static std::shared_ptr<const VarSet> single(const std::string& name);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable; throws MissingVariable.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded-lexicographic monomial order: lower total degree first, ties broken
/// lexicographically with earlier variables dominating.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no stored zero coefficient, terms ordered graded-lex.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(std::shared_ptr<const VarSet> vars);

    static MultiPoly zero(std::shared_ptr<const VarSet> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::shared_ptr<const VarSet> vars, const Rational& c);
    static MultiPoly variable(std::shared_ptr<const VarSet> vars, std::size_t index);
    static MultiPoly monomial(std::shared_ptr<const VarSet> vars, Exponents e, const Rational& c);

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Exponents& e) const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scale(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// Exact partial derivative d^times / d(var index)^times.
    MultiPoly derivative(std::size_t var, unsigned times = 1) const;

    /// Substitute var -> var + offset (exact Taylor shift in one variable).
    MultiPoly shift_var(std::size_t var, long offset) const;

    /// Exact evaluation; the assignment must cover every variable occurring in
    /// the polynomial (MissingVariable otherwise).
    Rational eval(const std::map<std::string, Rational>& point) const;
    /// Positional evaluation over the full variable set.
    Rational eval(const std::vector<Rational>& point) const;

    /// Sum of the terms of total degree exactly d.
    MultiPoly homogeneous_component(int d) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Terms in graded-lex order, "c * x1^a1*x2^a2" joined by " + ".
    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    std::shared_ptr<const VarSet> vars_;
    TermMap terms_;
};

/// Throws VarSetMismatch unless both polynomials live over equal variable sets.
void require_same_vars(const MultiPoly& a, const MultiPoly& b);

/// Coefficients c_k with target = sum c_k basis_k, by exact Gaussian
/// elimination on monomial coordinates. Throws DependentBasis when the basis
/// is linearly dependent and NotInSpan when no solution exists.
std::vector<Rational> expand_in_basis(const MultiPoly& target, const std::vector<MultiPoly>& basis);

/// Dense matrix of rationals; used for exact finite-dimensional operator
/// algebra (difference operators on a grid) and small linear solves.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity_matrix(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    RationalMatrix operator-() const;
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix scale(const Rational& c) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace racahops
