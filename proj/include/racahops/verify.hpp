#pragma once

#include <cstdint>
#include <optional>

#include "racahops/coupling.hpp"
#include "racahops/families.hpp"
#include "racahops/opcalc.hpp"
#include "racahops/report.hpp"

namespace racahops {

/// Sample an admissible parameter set for a family suite, additionally
/// rejecting sets whose recurrence denominators vanish on the grid.
ParameterSet sample_family_params(Family family, unsigned N, std::uint64_t seed);
/// Sample n parameters admissible for higher-rank checks at degree bound.
ParameterSet sample_higher_rank_params(std::size_t n, unsigned degree_bound, std::uint64_t seed);

/// Hahn algebra relations for the difference-operator pair, the one-variable
/// Jacobi pair, and the tensor-square Casimir pair (the latter both restricted
/// to the degree-N component and operator-level with the grading element
/// substituted for N).
Report verify_hahn_algebra(const ParameterSet& params, unsigned N, int D, std::uint64_t seed = 0);

/// Racah algebra relations for the grid difference operators and for the
/// shifted intermediate Casimir pair (operator-level with C'_123 substituted,
/// plus the parametric check restricted to the constructed eigenvectors).
Report verify_racah_algebra(const ParameterSet& params, unsigned N, int D, std::uint64_t seed = 0);

/// Expansion of the Jacobi eigenvectors w_l over the monomial eigenvectors
/// v_l and back, coefficient-by-coefficient against the closed forms, plus the
/// eigen-equations for both families of vectors.
Report verify_hahn_convolution(const ParameterSet& params, unsigned N, std::uint64_t seed = 0);

/// Same for the two products-of-Jacobi families in three variables, including
/// the C'_123 eigen-assertions.
Report verify_racah_convolution(const ParameterSet& params, unsigned N, std::uint64_t seed = 0);

Report verify_orthogonality(Family family, const ParameterSet& params, unsigned N,
                            std::uint64_t seed = 0);

Report verify_gamma_sums(Family family, const ParameterSet& params, unsigned N,
                         std::uint64_t seed = 0);

enum class TridiagonalSide { HahnX, HahnY, RacahX, RacahY };

std::string tridiagonal_side_name(TridiagonalSide side);
std::optional<TridiagonalSide> tridiagonal_side_from_name(const std::string& name);

/// The non-diagonal operator expanded over the constructed eigenbasis:
/// support in {l-1, l, l+1}, off-diagonal products B(l)D(l+1) (Y sides) or
/// A_l C_{l+1} (X sides), and the diagonal entries M(l) / N_l.
Report verify_tridiagonal(const ParameterSet& params, unsigned N, TridiagonalSide side,
                          std::uint64_t seed = 0);

/// Conjugation identities moving the Jacobi operator through (1-u)^l and
/// (1-u)^l (1+u)^m, exactly, on monomials up to the given degree.
Report verify_conjugation(const ParameterSet& params, int l_max, int m_max, int deg_max,
                          std::uint64_t seed = 0);

/// Higher-rank checks for one scheme: pairwise commutativity of the family
/// operators on all monomials of degree <= D, and the exact eigen-equations
/// for every |k|_1 <= K.
Report verify_scheme(const CouplingScheme& scheme, const ParameterSet& params, int D, int K,
                     std::uint64_t seed = 0, int jobs = 1);

/// n=3 cross-check: the brute-force transition matrix between the two scheme
/// eigenbases equals the closed-form matrix of Racah values.
Report verify_cross_family(const ParameterSet& params, unsigned N, std::uint64_t seed = 0);

/// Scheme and family counts against n!(n-1)!/2^(n-1) and (2n-3)!! for n=2..n_max.
Report verify_counting(int n_max = 6);

/// Dispatch by suite name (the CLI subcommand spelling, e.g. "hahn-algebra").
/// Samples parameters when `params` is empty.
Report run_named_suite(const std::string& name, ParameterSet params, unsigned N, int D, int K,
                       std::uint64_t seed, int jobs = 1);

/// Closed-form convolution coefficient matrices (w in v, and v in w).
RationalMatrix hahn_convolution_matrix(const ParameterSet& params, unsigned N, bool forward);
RationalMatrix racah_convolution_matrix(const ParameterSet& params, unsigned N, bool forward);

} // namespace racahops
