#pragma once

#include <string>
#include <vector>

#include "racahops/exactnum.hpp"
#include "racahops/polyalg.hpp"

namespace racahops {

/// Sorted nonempty subset of {1..n} (1-based elements).
using Block = std::vector<int>;

/// Disjoint nonempty blocks covering {1..n}, ordered by minimum element.
struct SetPartition {
    std::vector<Block> blocks;

    static SetPartition discrete(int n);
    bool contains_block(const Block& b) const;
    std::string str() const; // blocks joined by "|", elements concatenated
};

struct CouplingStep {
    Block left, right; // min(left) < min(right)
    Block merged() const;
};

/// A sequence of n-1 merges from the discrete partition to {1..n}. Each step
/// fuses two blocks of the current partition; the family of union subsets is
/// pairwise nested-or-disjoint.
class CouplingScheme {
public:
    CouplingScheme(int n, std::vector<CouplingStep> steps); // validates

    int n() const { return n_; }
    std::size_t step_count() const { return steps_.size(); }
    const std::vector<CouplingStep>& steps() const { return steps_; }
    const CouplingStep& step(std::size_t b) const; // 0-based

    /// Partitions reached after 0..n-1 steps.
    const std::vector<SetPartition>& partitions() const { return partitions_; }

    /// "1|2|3 -> 12|3 -> 123"
    std::string str() const;

    /// Parse the text form above.
    static CouplingScheme parse(const std::string& text);

    friend bool operator==(const CouplingScheme& a, const CouplingScheme& b) {
        return a.n_ == b.n_ && a.key_ == b.key_;
    }
    friend bool operator<(const CouplingScheme& a, const CouplingScheme& b) { return a.key_ < b.key_; }

private:
    int n_;
    std::vector<CouplingStep> steps_;
    std::vector<SetPartition> partitions_;
    std::vector<std::vector<int>> key_; // canonical: flattened steps
};

/// All coupling schemes on {1..n}, in lexicographic order of the block-pair
/// indices chosen at each step. Guarded to 2 <= n <= 7.
std::vector<CouplingScheme> enumerate_schemes(int n);

/// The index sets of S_Gamma: the n-1 union subsets in step order.
std::vector<Block> commutative_family(const CouplingScheme& scheme);

/// Distinct commutative families (as canonically sorted sets of subsets).
std::vector<std::vector<Block>> dedupe_families(const std::vector<CouplingScheme>& schemes);

enum class Precedence { LeftOf, RightOf, Equal, Unrelated };

std::string precedence_name(Precedence p);

/// Relation between steps a and b (1-based, a <= b): LeftOf iff the union of
/// step a is contained in the left block of step b, RightOf for the right.
Precedence precedence(const CouplingScheme& scheme, int a, int b);

/// The shifted parameter pair (lambda_I_b + 2 sum_{a<_L b} k_a,
///                              lambda_J_b + 2 sum_{a<_R b} k_a) per step.
std::vector<std::pair<Rational, Rational>> shifted_parameters(const CouplingScheme& scheme,
                                                              const std::vector<int>& kvec,
                                                              const ParameterSet& params);

/// Common eigenvector v_{k1..k_{n-1}}: product over steps of homogenised
/// Jacobi factors in x_I, x_J with shifted parameters. Homogeneous of total
/// degree |k|_1 over the variables x1..xn.
MultiPoly scheme_eigenvector(const CouplingScheme& scheme, const std::vector<int>& kvec,
                             const ParameterSet& params,
                             std::shared_ptr<const VarSet> vars = nullptr);

/// Eigenvalue of C'_{I_b u J_b} (step index b, 1-based) on v_k:
/// S(S + lambda_I + lambda_J - 1) with S = sum_{a preceq b} k_a.
Rational scheme_eigenvalue(const CouplingScheme& scheme, int b, const std::vector<int>& kvec,
                           const ParameterSet& params);

/// Experimental distance utility on the graph of commutative families (two
/// families adjacent iff they differ by exactly one subset); the adjacency
/// rule is an artifact-level convention. BFS distance, -1 if disconnected.
int family_graph_distance(const std::vector<Block>& a, const std::vector<Block>& b, int n);
int family_graph_diameter(int n);

} // namespace racahops
