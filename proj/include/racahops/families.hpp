#pragma once

#include <string>
#include <vector>

#include "racahops/exactnum.hpp"
#include "racahops/polyalg.hpp"

#include "json.hpp"

namespace racahops {

enum class Family { Hahn, Racah };

std::string family_name(Family f);

/// Degree-l Jacobi polynomial, division-free sum formula
/// 2^-l sum_s (-1)^s binom(l+lambda-1, l-s) binom(l+lambda'-1, s) (1-x)^s (1+x)^(l-s).
MultiPoly jacobi_poly(unsigned l, const Rational& lambda, const Rational& lambda_prime,
                      std::shared_ptr<const VarSet> vars, std::size_t var = 0);

/// Denominator-cleared homogenisation (xI+xJ)^k P_k^{lamI,lamJ}((xJ-xI)/(xI+xJ)):
/// sum_s (-1)^s binom(k+lamI-1, k-s) binom(k+lamJ-1, s) xI^s xJ^(k-s).
MultiPoly homogenized_jacobi(unsigned k, const Rational& lambda_I, const Rational& lambda_J,
                             const MultiPoly& xI, const MultiPoly& xJ);

/// Q_{k,l} (Hahn, terminating 3F2 at x=l) or R_{k,l} (Racah, 4F3 at x=l).
Rational classical_value(Family family, unsigned k, unsigned l, const ParameterSet& params, unsigned N);

/// Difference-equation coefficient B(x) at an integer point; for Racah this is
/// a ratio of products and throws ZeroDenominator when the denominator
/// vanishes (no limits are taken).
Rational recurrence_B(Family family, const ParameterSet& params, unsigned N, long x);
Rational recurrence_D(Family family, const ParameterSet& params, unsigned N, long x);
/// Recurrence coefficients A_k, C_k (for Racah these are B(k), D(k) with
/// lambda1 and lambda3 exchanged).
Rational recurrence_A(Family family, const ParameterSet& params, unsigned N, long k);
Rational recurrence_C(Family family, const ParameterSet& params, unsigned N, long k);

/// True iff no recurrence denominator vanishes on the grid, i.e. the relevant
/// parameter sums avoid the integers in [-2N, 2]. Always true for Hahn B/D
/// (polynomial), checked for Hahn A/C and both Racah sides.
bool recurrence_denominators_ok(Family family, const ParameterSet& params, unsigned N);

/// All difference/recurrence coefficient values on the grid [0, N].
struct RecurrenceData {
    Family family;
    ParameterSet params;
    unsigned N;
    std::vector<Rational> B, D, M; // index x = 0..N, M = -B-D
    std::vector<Rational> A, C, Nk; // index k = 0..N, Nk = -A-C
};

RecurrenceData recurrence_data(Family family, const ParameterSet& params, unsigned N);

/// Values Q_{k,l} / R_{k,l}, renormalised values, and the biorthogonality
/// constant Gamma. Construction cross-checks the step-product prefactors
/// against their closed forms and the closed-form sum identities.
struct TransitionTable {
    Family family;
    ParameterSet params;
    unsigned N;
    RationalMatrix values; // [k][l]
    RationalMatrix tilde;  // [k][l]
    Rational gamma;
    std::vector<Rational> row_prefactor; // B(0)..B(l-1) / D(1)..D(l), index l
    std::vector<Rational> col_prefactor; // A_0..A_{k-1} / C_1..C_k, index k

    nlohmann::json to_json() const;
};

TransitionTable transition_table(Family family, const ParameterSet& params, unsigned N);

} // namespace racahops
