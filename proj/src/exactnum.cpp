#include "racahops/exactnum.hpp"

#include <sstream>

namespace racahops {

Rational pochhammer(const Rational& x, unsigned n) {
    mpq_class acc(1);
    for (unsigned i = 0; i < n; ++i)
        acc *= x.raw() + i;
    return Rational(std::move(acc));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational gen_binomial(const Rational& x, unsigned k) {
    return pochhammer(x - Rational(static_cast<long>(k)) + Rational(1), k) / factorial(k);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational hyp_terminating(const std::vector<Rational>& num_params,
                         const std::vector<Rational>& den_params,
                         unsigned k,
                         const Rational& arg) {
    Rational sum(0);
    Rational term(1); // running value of prod (a)_n / prod (b)_n * arg^n / n!
    for (unsigned n = 0; n <= k; ++n) {
        sum += term;
        if (n == k)
            break;
        // extend each Pochhammer by one factor: (a)_{n+1} = (a)_n * (a+n)
        Rational factor(1);
        bool numerator_zero = false;
        for (const auto& a : num_params) {
            const Rational f = a + Rational(static_cast<long>(n));
            if (f.is_zero())
                numerator_zero = true;
            factor *= f;
        }
        for (const auto& b : den_params) {
            const Rational f = b + Rational(static_cast<long>(n));
            if (f.is_zero()) {
                if (numerator_zero)
                    return sum; // series terminated before the singular factor
                throw ZeroDenominator("denominator Pochhammer (" + b.str() + ")_" +
                                      std::to_string(n + 1) + " vanishes before termination");
            }
            factor /= f;
        }
        if (numerator_zero)
            return sum;
        term *= factor * arg / Rational(static_cast<long>(n + 1));
    }
    return sum;
}

Rational ParameterSet::lambda_sum(const std::vector<int>& subset) const {
    Rational s(0);
    for (int i : subset)
        s += lambdas.at(static_cast<std::size_t>(i));
    return s;
}

std::string ParameterSet::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        os << (i ? "," : "") << lambdas[i].str();
    return os.str();
}

namespace {

// lambda in {0, -1, ..., -(count-1)}?
bool in_forbidden_set(const Rational& lambda, unsigned count) {
    if (count == 0)
        return false;
    return lambda.is_integer_in(-static_cast<long>(count - 1), 0);
}

void check_single(std::vector<std::string>& out, const std::string& label, const Rational& lambda,
                  unsigned count) {
    if (in_forbidden_set(lambda, count))
        out.push_back(label + " = " + lambda.str() + " in {0,-1,...,-" + std::to_string(count - 1) + "}");
}

} // namespace

std::vector<std::string> check_admissible(const ParameterSet& params, unsigned N,
                                          const AdmissibilityMode& mode) {
    std::vector<std::string> violations;
    const auto& ls = params.lambdas;
    switch (mode.kind) {
    case AdmissibilityMode::Hahn: {
        if (ls.size() != 2)
            throw ModeArityMismatch("Hahn admissibility requires n=2, got n=" + std::to_string(ls.size()));
        const unsigned sum_count = N == 0 ? 0 : 2 * N - 1;
        check_single(violations, "lambda1", ls[0], N);
        check_single(violations, "lambda2", ls[1], N);
        check_single(violations, "lambda1+lambda2", ls[0] + ls[1], sum_count);
        break;
    }
    case AdmissibilityMode::Racah: {
        if (ls.size() != 3)
            throw ModeArityMismatch("Racah admissibility requires n=3, got n=" + std::to_string(ls.size()));
        const unsigned sum_count = N == 0 ? 0 : 2 * N - 1;
        check_single(violations, "lambda1", ls[0], N);
        check_single(violations, "lambda2", ls[1], N);
        check_single(violations, "lambda3", ls[2], N);
        check_single(violations, "lambda1+lambda2", ls[0] + ls[1], sum_count);
        check_single(violations, "lambda2+lambda3", ls[1] + ls[2], sum_count);
        check_single(violations, "lambda1+lambda2+lambda3", ls[0] + ls[1] + ls[2], sum_count);
        break;
    }
    case AdmissibilityMode::HigherRank: {
        // Every nonempty subset can arise as a union in some coupling scheme.
        const std::size_t n = ls.size();
        const unsigned count = mode.degree_bound == 0 ? 0 : 2 * mode.degree_bound - 1;
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Rational sum(0);
            std::string label;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) {
                    sum += ls[i];
                    label += std::to_string(i + 1);
                }
            check_single(violations, "lambda_{" + label + "}", sum, count);
        }
        break;
    }
    }
    return violations;
}

void require_admissible(const ParameterSet& params, unsigned N, const AdmissibilityMode& mode) {
    const auto violations = check_admissible(params, N, mode);
    if (!violations.empty()) {
        std::string msg = "inadmissible parameters (" + params.str() + "), N=" + std::to_string(N) + ":";
        for (const auto& v : violations)
            msg += " " + v + ";";
        throw InadmissibleParameters(msg);
    }
}

std::uint64_t ParameterSampler::next_u64() {
    // splitmix64: portable and deterministic across platforms
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational ParameterSampler::next_rational() {
    const long num = 1 + static_cast<long>(next_u64() % 12);
    const long den = 1 + static_cast<long>(next_u64() % 12);
    return Rational(num, den);
}

ParameterSet ParameterSampler::next_params(std::size_t n, unsigned N, const AdmissibilityMode& mode) {
    for (;;) {
        std::vector<Rational> ls;
        ls.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            ls.push_back(next_rational());
        ParameterSet p(std::move(ls));
        if (check_admissible(p, N, mode).empty())
            return p;
    }
}

} // namespace racahops
