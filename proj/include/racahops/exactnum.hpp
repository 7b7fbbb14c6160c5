#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racahops/rational.hpp"

namespace racahops {

/// Rising factorial (x)_n = x(x+1)...(x+n-1); empty product for n = 0.
Rational pochhammer(const Rational& x, unsigned n);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// Generalised binomial coefficient (x-k+1)_k / k!.
Rational gen_binomial(const Rational& x, unsigned k);

/// Ordinary binomial coefficient, exact.
Rational binomial(unsigned n, unsigned k);

/// Terminating hypergeometric sum sum_{n=0}^{k} prod(a_i)_n / prod(b_j)_n * arg^n / n!.
/// One numerator parameter is expected to be -k so that the series terminates;
/// throws ZeroDenominator if a denominator Pochhammer vanishes at some n <= k
/// where the numerator factor does not.
Rational hyp_terminating(const std::vector<Rational>& num_params,
                         const std::vector<Rational>& den_params,
                         unsigned k,
                         const Rational& arg);

/// The ordered tuple (lambda_1, ..., lambda_n) of model parameters.
struct ParameterSet {
    std::vector<Rational> lambdas;

    explicit ParameterSet(std::vector<Rational> ls = {}) : lambdas(std::move(ls)) {}

    std::size_t size() const { return lambdas.size(); }
    const Rational& lambda(std::size_t i) const { return lambdas.at(i); }

    /// Sum of lambda_i over a 0-based index subset.
    Rational lambda_sum(const std::vector<int>& subset) const;

    std::string str() const;
};

struct AdmissibilityMode {
    enum Kind { Hahn, Racah, HigherRank } kind;
    unsigned degree_bound = 0; // only for HigherRank

    static AdmissibilityMode hahn() { return {Hahn, 0}; }
    static AdmissibilityMode racah() { return {Racah, 0}; }
    static AdmissibilityMode higher_rank(unsigned d) { return {HigherRank, d}; }
};

/// Checks the parameter exclusions guaranteeing all recurrence coefficients
/// are defined and nonzero. Returns the list of violated conditions (empty
/// means admissible). Hahn requires n=2 and Racah n=3; HigherRank checks
/// every nonempty subset sum lambda_I against {0,-1,...,-(2D-2)}.
std::vector<std::string> check_admissible(const ParameterSet& params, unsigned N,
                                          const AdmissibilityMode& mode);

/// Throws InadmissibleParameters listing the violations, if any.
void require_admissible(const ParameterSet& params, unsigned N, const AdmissibilityMode& mode);

/// Deterministic sampler used by the verification suites: numerators and
/// denominators uniform in [1,12], positive sign, rejection-resampled until
/// admissible. The same seed always yields the same parameters.
class ParameterSampler {
public:
    explicit ParameterSampler(std::uint64_t seed) : state_(seed) {}

    Rational next_rational();
    ParameterSet next_params(std::size_t n, unsigned N, const AdmissibilityMode& mode);

private:
    std::uint64_t next_u64();
    std::uint64_t state_;
};

} // namespace racahops
