#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scalar/polynomial.hpp"

namespace wb {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Nonvanishing conditions picked up while dividing by pivots.
class Assumptions {
public:
    /// Records p ≠ 0. Monomials split into one condition per parameter;
    /// constants are ignored.
    void add(const Poly& p);
    void merge(const Assumptions& o);
    const std::vector<Poly>& conditions() const { return conds_; }
    bool empty() const { return conds_.empty(); }
    std::vector<std::string> render() const;

private:
    std::vector<Poly> conds_;
};

struct Elimination {
    PolyMatrix rows;
    std::vector<int> pivot_cols;  ///< pivot column of row k for k < rank
    int rank = 0;
    Assumptions assumptions;
};

/// Gauss-Jordan elimination over the fraction field of Q[params], kept
/// fraction-free. Pivots are searched in columns [0, search_cols); constant
/// pivots are preferred, then monomials, then the sparsest polynomial.
Elimination eliminate(PolyMatrix m, int search_cols);

/// Rank of a rational matrix.
int rational_rank(std::vector<std::vector<Rational>> m);
/// Rank after substituting a full point for every parameter.
int rank_at(const PolyMatrix& m, const Assignment& point);
/// Deterministic pseudo-random rational points for the given parameters.
std::vector<Assignment> sample_points(const std::vector<Param>& params, int count, unsigned seed = 20240611u);
std::vector<Param> matrix_parameters(const PolyMatrix& m);

struct SolveResult {
    bool consistent = false;
    int rank_a = 0;
    int rank_aug = 0;
    /// x = numerators / denominator, free unknowns set to zero.
    std::vector<Poly> numerators;
    Poly denominator = Poly(1);
    Assumptions assumptions;
    /// Row index of the reduced system with 0 = nonzero when inconsistent.
    std::optional<int> witness_row;
    /// Ranks at random points agree with the symbolic ranks.
    bool generic_check = true;
};

SolveResult solve(const PolyMatrix& a, const std::vector<Poly>& b);

struct RankResult {
    int rank = 0;
    Assumptions assumptions;
    bool generic_check = true;
};

RankResult generic_rank(const PolyMatrix& m);

} // namespace wb
