#include "racahops/polyalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "racahops/errors.hpp"

namespace racahops {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw Error("duplicate variable name '" + n + "'");
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::numbered(std::size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(prefix + std::to_string(i));
    return make(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::single(const std::string& name) {
    return make({name});
}

std::size_t VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw MissingVariable("no variable '" + name + "'");
}

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    // within a degree, earlier variables dominate: x1^2 before x1*x2 before x2^2
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {
    if (!vars_)
        throw Error("null variable set");
}

MultiPoly MultiPoly::constant(std::shared_ptr<const VarSet> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero())
        p.terms_.emplace(Exponents(p.vars_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::shared_ptr<const VarSet> vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    if (index >= p.vars_->size())
        throw MissingVariable("variable index out of range");
    Exponents e(p.vars_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::shared_ptr<const VarSet> vars, Exponents e, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.vars_->size())
        throw VarSetMismatch("exponent vector length mismatch");
    for (int x : e)
        if (x < 0)
            throw Error("negative exponent");
    if (!c.is_zero())
        p.terms_.emplace(std::move(e), c);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty())
        return -1;
    return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
    return coefficient(Exponents(vars_->size(), 0));
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() == b.vars())
        return;
    if (!(*a.vars() == *b.vars()))
        throw VarSetMismatch("polynomials over different variable sets");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    MultiPoly r(a.vars_);
    const std::size_t n = a.vars_->size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero())
        return r;
    for (const auto& [e, coef] : terms_)
        r.terms_.emplace(e, coef * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var, unsigned times) const {
    if (var >= vars_->size())
        throw MissingVariable("derivative variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < static_cast<int>(times))
            continue;
        Rational factor(1);
        for (unsigned k = 0; k < times; ++k)
            factor *= Rational(e[var] - static_cast<int>(k));
        Exponents d = e;
        d[var] -= static_cast<int>(times);
        r.add_term(d, c * factor);
    }
    return r;
}

MultiPoly MultiPoly::shift_var(std::size_t var, long offset) const {
    if (var >= vars_->size())
        throw MissingVariable("shift variable index out of range");
    if (offset == 0)
        return *this;
    const Rational m(offset);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[var];
        // x^k -> (x+m)^k
        Rational coef = c; // binom(k,j) m^(k-j) accumulated from j=k down
        for (int j = k; j >= 0; --j) {
            Exponents d = e;
            d[var] = j;
            r.add_term(d, coef);
            if (j > 0) {
                coef *= Rational(j) * m / Rational(k - j + 1);
            }
        }
    }
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<bool> used(vars_->size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = true;
    std::vector<Rational> vals(vars_->size(), Rational(0));
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        const auto it = point.find(vars_->name(i));
        if (it != point.end())
            vals[i] = it->second;
        else if (used[i])
            throw MissingVariable("no value for variable '" + vars_->name(i) + "'");
    }
    return eval(vals);
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_->size())
        throw MissingVariable("evaluation point has wrong arity");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                term *= point[i];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d)
            r.terms_.emplace(e, c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    require_same_vars(a, b);
    return a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        if (!first_term)
            os << " + ";
        first_term = false;
        os << c.str();
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (first_var ? " * " : "*") << vars_->name(i);
            first_var = false;
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

std::vector<Rational> expand_in_basis(const MultiPoly& target, const std::vector<MultiPoly>& basis) {
    if (basis.empty())
        throw Error("empty basis");
    for (const auto& b : basis)
        require_same_vars(target, b);

    // union of monomials, graded-lex order
    std::set<Exponents, GradedLexLess> monos;
    for (const auto& [e, c] : target.terms())
        monos.insert(e);
    for (const auto& b : basis)
        for (const auto& [e, c] : b.terms())
            monos.insert(e);

    const std::size_t rows = monos.size();
    const std::size_t cols = basis.size();
    RationalMatrix A(rows, cols + 1); // augmented with target in the last column
    std::size_t r = 0;
    for (const auto& e : monos) {
        for (std::size_t j = 0; j < cols; ++j)
            A.at(r, j) = basis[j].coefficient(e);
        A.at(r, cols) = target.coefficient(e);
        ++r;
    }

    // forward elimination, rows processed in graded-lex order of their monomial
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t i = lead; i < rows; ++i)
            if (!A.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr == SIZE_MAX)
            continue;
        if (pr != lead)
            for (std::size_t j = 0; j <= cols; ++j)
                std::swap(A.at(pr, j), A.at(lead, j));
        const Rational inv = Rational(1) / A.at(lead, col);
        for (std::size_t j = col; j <= cols; ++j)
            A.at(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || A.at(i, col).is_zero())
                continue;
            const Rational f = A.at(i, col);
            for (std::size_t j = col; j <= cols; ++j)
                A.at(i, j) -= f * A.at(lead, j);
        }
        pivot_row[col] = lead;
        ++lead;
    }

    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row[col] == SIZE_MAX)
            throw DependentBasis("basis is linearly dependent (no pivot for element " +
                                 std::to_string(col) + ")");

    for (std::size_t i = lead; i < rows; ++i)
        if (!A.at(i, cols).is_zero())
            throw NotInSpan("target is outside the span of the basis");

    std::vector<Rational> coeffs(cols, Rational(0));
    for (std::size_t col = 0; col < cols; ++col)
        coeffs[col] = A.at(pivot_row[col], cols);
    return coeffs;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity_matrix(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = -data_[i];
    return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw KindMismatch("matrix shape mismatch");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw KindMismatch("matrix shape mismatch");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
        throw KindMismatch("matrix shape mismatch in product");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::scale(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] * c;
    return r;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

} // namespace racahops
