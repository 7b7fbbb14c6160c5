#include "racahops/coupling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "racahops/errors.hpp"
#include "racahops/families.hpp"

namespace racahops {

namespace {

std::string block_str(const Block& b) {
    std::string s;
    for (int i : b)
        s += std::to_string(i);
    return s;
}

bool is_subset(const Block& a, const Block& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Block merge_blocks(const Block& a, const Block& b) {
    Block m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

} // namespace

SetPartition SetPartition::discrete(int n) {
    SetPartition p;
    for (int i = 1; i <= n; ++i)
        p.blocks.push_back({i});
    return p;
}

bool SetPartition::contains_block(const Block& b) const {
    return std::find(blocks.begin(), blocks.end(), b) != blocks.end();
}

std::string SetPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            s += "|";
        s += block_str(blocks[i]);
    }
    return s;
}

Block CouplingStep::merged() const {
    return merge_blocks(left, right);
}

CouplingScheme::CouplingScheme(int n, std::vector<CouplingStep> steps)
    : n_(n), steps_(std::move(steps)) {
    if (n_ < 2)
        throw ArityOutOfRange("coupling scheme needs n >= 2");
    if (steps_.size() != static_cast<std::size_t>(n_ - 1))
        throw Error("coupling scheme on {1.." + std::to_string(n_) + "} needs exactly " +
                    std::to_string(n_ - 1) + " steps");
    SetPartition current = SetPartition::discrete(n_);
    partitions_.push_back(current);
    for (const auto& step : steps_) {
        if (step.left.empty() || step.right.empty() || step.left.front() >= step.right.front())
            throw Error("coupling step blocks must be nonempty with min(left) < min(right)");
        if (!current.contains_block(step.left) || !current.contains_block(step.right))
            throw Error("coupling step (" + block_str(step.left) + "," + block_str(step.right) +
                        ") does not merge two blocks of " + current.str());
        SetPartition next;
        for (const auto& b : current.blocks)
            if (b != step.left && b != step.right)
                next.blocks.push_back(b);
        next.blocks.push_back(step.merged());
        std::sort(next.blocks.begin(), next.blocks.end(),
                  [](const Block& a, const Block& b) { return a.front() < b.front(); });
        current = std::move(next);
        partitions_.push_back(current);
        key_.push_back(step.left);
        key_.push_back(step.right);
    }
    if (current.blocks.size() != 1)
        throw Error("coupling scheme does not end in the trivial partition");
}

const CouplingStep& CouplingScheme::step(std::size_t b) const {
    if (b >= steps_.size())
        throw IndexOutOfRange("step index out of range");
    return steps_[b];
}

std::string CouplingScheme::str() const {
    std::string s;
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        if (i)
            s += " -> ";
        s += partitions_[i].str();
    }
    return s;
}

CouplingScheme CouplingScheme::parse(const std::string& text) {
    // split on " -> " into partitions; infer n and the merged pair per step
    std::vector<std::vector<Block>> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t arrow = text.find(" -> ", pos);
        const std::string chunk =
            arrow == std::string::npos ? text.substr(pos) : text.substr(pos, arrow - pos);
        std::vector<Block> blocks;
        std::istringstream is(chunk);
        std::string piece;
        while (std::getline(is, piece, '|')) {
            Block b;
            for (char c : piece) {
                if (c < '1' || c > '9')
                    throw ParseError("bad block '" + piece + "' in scheme text");
                b.push_back(c - '0');
            }
            std::sort(b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
        parts.push_back(std::move(blocks));
        if (arrow == std::string::npos)
            break;
        pos = arrow + 4;
    }
    if (parts.size() < 2)
        throw ParseError("scheme text needs at least two partitions");
    const int n = static_cast<int>(parts.front().size());
    std::vector<CouplingStep> steps;
    for (std::size_t s = 0; s + 1 < parts.size(); ++s) {
        // the merged pair = blocks of parts[s] absent from parts[s+1]
        std::vector<Block> gone;
        for (const auto& b : parts[s])
            if (std::find(parts[s + 1].begin(), parts[s + 1].end(), b) == parts[s + 1].end())
                gone.push_back(b);
        if (gone.size() != 2)
            throw ParseError("step " + std::to_string(s + 1) + " does not merge exactly two blocks");
        if (gone[0].front() > gone[1].front())
            std::swap(gone[0], gone[1]);
        steps.push_back({gone[0], gone[1]});
    }
    return CouplingScheme(n, std::move(steps));
}

std::vector<CouplingScheme> enumerate_schemes(int n) {
    if (n < 2 || n > 7)
        throw ArityOutOfRange("enumerate_schemes supports 2 <= n <= 7");
    std::vector<CouplingScheme> out;
    std::vector<CouplingStep> steps;
    std::vector<Block> current;
    for (int i = 1; i <= n; ++i)
        current.push_back({i});

    std::function<void()> rec = [&]() {
        if (current.size() == 1) {
            out.emplace_back(n, steps);
            return;
        }
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                CouplingStep step{current[i], current[j]};
                std::vector<Block> next;
                for (std::size_t k = 0; k < current.size(); ++k)
                    if (k != i && k != j)
                        next.push_back(current[k]);
                next.push_back(step.merged());
                std::sort(next.begin(), next.end(),
                          [](const Block& a, const Block& b) { return a.front() < b.front(); });
                std::swap(current, next);
                steps.push_back(step);
                rec();
                steps.pop_back();
                std::swap(current, next);
            }
    };
    rec();
    return out;
}

std::vector<Block> commutative_family(const CouplingScheme& scheme) {
    std::vector<Block> fam;
    for (const auto& step : scheme.steps())
        fam.push_back(step.merged());
    return fam;
}

std::vector<std::vector<Block>> dedupe_families(const std::vector<CouplingScheme>& schemes) {
    std::set<std::vector<Block>> seen;
    for (const auto& s : schemes) {
        auto fam = commutative_family(s);
        std::sort(fam.begin(), fam.end());
        seen.insert(std::move(fam));
    }
    return {seen.begin(), seen.end()};
}

std::string precedence_name(Precedence p) {
    switch (p) {
    case Precedence::LeftOf: return "LeftOf";
    case Precedence::RightOf: return "RightOf";
    case Precedence::Equal: return "Equal";
    case Precedence::Unrelated: return "Unrelated";
    }
    return "?";
}

Precedence precedence(const CouplingScheme& scheme, int a, int b) {
    const int m = static_cast<int>(scheme.step_count());
    if (a < 1 || b < 1 || a > m || b > m || a > b)
        throw IndexOutOfRange("precedence needs 1 <= a <= b <= n-1");
    if (a == b)
        return Precedence::Equal;
    const Block ua = scheme.step(a - 1).merged();
    if (is_subset(ua, scheme.step(b - 1).left))
        return Precedence::LeftOf;
    if (is_subset(ua, scheme.step(b - 1).right))
        return Precedence::RightOf;
    return Precedence::Unrelated;
}

std::vector<std::pair<Rational, Rational>> shifted_parameters(const CouplingScheme& scheme,
                                                              const std::vector<int>& kvec,
                                                              const ParameterSet& params) {
    const std::size_t m = scheme.step_count();
    if (kvec.size() != m)
        throw IndexOutOfRange("k vector must have n-1 entries");
    if (params.size() != static_cast<std::size_t>(scheme.n()))
        throw ModeArityMismatch("parameter count must equal n");
    auto lambda_of = [&](const Block& blk) {
        Rational s(0);
        for (int i : blk)
            s += params.lambda(i - 1);
        return s;
    };
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t b = 0; b < m; ++b) {
        Rational shift_left(0), shift_right(0);
        for (std::size_t a = 0; a < b; ++a) {
            const auto p = precedence(scheme, static_cast<int>(a + 1), static_cast<int>(b + 1));
            if (p == Precedence::LeftOf)
                shift_left += Rational(2L * kvec[a]);
            else if (p == Precedence::RightOf)
                shift_right += Rational(2L * kvec[a]);
        }
        out.emplace_back(lambda_of(scheme.step(b).left) + shift_left,
                         lambda_of(scheme.step(b).right) + shift_right);
    }
    return out;
}

MultiPoly scheme_eigenvector(const CouplingScheme& scheme, const std::vector<int>& kvec,
                             const ParameterSet& params, std::shared_ptr<const VarSet> vars) {
    if (!vars)
        vars = VarSet::numbered(static_cast<std::size_t>(scheme.n()));
    if (vars->size() != static_cast<std::size_t>(scheme.n()))
        throw VarSetMismatch("variable set must have n entries");
    const auto shifted = shifted_parameters(scheme, kvec, params);
    auto x_of = [&](const Block& blk) {
        MultiPoly s = MultiPoly::zero(vars);
        for (int i : blk)
            s += MultiPoly::variable(vars, static_cast<std::size_t>(i - 1));
        return s;
    };
    MultiPoly v = MultiPoly::constant(vars, Rational(1));
    for (std::size_t b = 0; b < scheme.step_count(); ++b) {
        if (kvec[b] < 0)
            throw IndexOutOfRange("k entries must be nonnegative");
        if (kvec[b] == 0)
            continue;
        v = v * homogenized_jacobi(static_cast<unsigned>(kvec[b]), shifted[b].first,
                                   shifted[b].second, x_of(scheme.step(b).left),
                                   x_of(scheme.step(b).right));
    }
    return v;
}

Rational scheme_eigenvalue(const CouplingScheme& scheme, int b, const std::vector<int>& kvec,
                           const ParameterSet& params) {
    const int m = static_cast<int>(scheme.step_count());
    if (b < 1 || b > m)
        throw IndexOutOfRange("step index out of range");
    if (kvec.size() != static_cast<std::size_t>(m))
        throw IndexOutOfRange("k vector must have n-1 entries");
    long s = 0;
    for (int a = 1; a <= b; ++a)
        if (precedence(scheme, a, b) != Precedence::Unrelated)
            s += kvec[static_cast<std::size_t>(a - 1)];
    Rational lam(0);
    for (int i : scheme.step(static_cast<std::size_t>(b - 1)).merged())
        lam += params.lambda(static_cast<std::size_t>(i - 1));
    return Rational(s) * (Rational(s) + lam - Rational(1));
}

namespace {

std::vector<Block> canonical_family(std::vector<Block> fam) {
    std::sort(fam.begin(), fam.end());
    return fam;
}

bool adjacent_families(const std::vector<Block>& a, const std::vector<Block>& b) {
    std::size_t only_a = 0, only_b = 0;
    for (const auto& blk : a)
        if (std::find(b.begin(), b.end(), blk) == b.end())
            ++only_a;
    for (const auto& blk : b)
        if (std::find(a.begin(), a.end(), blk) == a.end())
            ++only_b;
    return only_a == 1 && only_b == 1;
}

} // namespace

int family_graph_distance(const std::vector<Block>& a, const std::vector<Block>& b, int n) {
    const auto families = dedupe_families(enumerate_schemes(n));
    const auto start = canonical_family(a);
    const auto goal = canonical_family(b);
    std::map<std::vector<Block>, int> dist;
    std::queue<std::vector<Block>> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        const auto cur = q.front();
        q.pop();
        if (cur == goal)
            return dist[cur];
        for (const auto& next : families)
            if (!dist.count(next) && adjacent_families(cur, next)) {
                dist[next] = dist[cur] + 1;
                q.push(next);
            }
    }
    return -1;
}

int family_graph_diameter(int n) {
    const auto families = dedupe_families(enumerate_schemes(n));
    int best = 0;
    for (const auto& a : families)
        for (const auto& b : families) {
            const int d = family_graph_distance(a, b, n);
            if (d < 0)
                return -1;
            best = std::max(best, d);
        }
    return best;
}

} // namespace racahops
