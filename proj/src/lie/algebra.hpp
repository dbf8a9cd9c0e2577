#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie/tensor.hpp"

namespace wb {

/// Sparse linear combination of basis indices.
using LinComb = std::vector<std::pair<int, Poly>>;

/// Lie superalgebra given by graded structure constants c_{ij}^k.
///
/// Only [e_i, e_j] for i < j and [e_i, e_i] for odd e_i are stored by the
/// user; the full table is completed by graded antisymmetry
/// [x, y] = −(−1)^{|x||y|} [y, x]. Odd-odd brackets are the symmetric
/// brackets {x, y}. The Jacobi identity is not assumed; see verify_jacobi.
class LieSuperAlgebra {
public:
    class Builder {
    public:
        /// `parity` 1 builds an odd 2-cochain table instead of a bracket.
        Builder(std::string name, BasisPtr basis, int parity = 0);
        /// Sets [e_i, e_j] (and its graded-antisymmetric partner).
        Builder& set(int i, int j, const TensorElement& value);
        Builder& set(int i, int j, const LinComb& value);
        Builder& set(const std::string& a, const std::string& b, const LinComb& value);
        /// True if [e_i, e_j] was already set (in either order).
        bool is_set(int i, int j) const;
        LieSuperAlgebra build() const;

    private:
        std::string name_;
        BasisPtr basis_;
        std::vector<LinComb> table_;
        std::vector<bool> set_;
        int parity_ = 0;
    };

    const std::string& name() const { return name_; }
    const BasisPtr& basis() const { return basis_; }
    int dim() const { return basis_->size(); }
    /// Parity of the table viewed as a 2-cochain; 0 for every Lie bracket.
    int parity() const { return parity_; }

    /// [e_i, e_j] as a sparse combination.
    const LinComb& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
    /// Parameters occurring in the structure constants.
    std::vector<Param> parameters() const;

    /// Structural equality of the structure constants (names ignored).
    friend bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

    /// Same constants under a new name.
    LieSuperAlgebra renamed(std::string name) const;

private:
    LieSuperAlgebra() = default;

    std::string name_;
    BasisPtr basis_;
    std::vector<LinComb> table_;
    int parity_ = 0;
};

/// Bilinear extension of the structure constants to degree-1 elements.
TensorElement bracket(const LieSuperAlgebra& A, const TensorElement& x, const TensorElement& y);
TensorElement bracket_basis(const LieSuperAlgebra& A, int i, int j);
/// ad_x acting on a degree-1 element, with x a basis element.
TensorElement ad(const LieSuperAlgebra& A, int x, const TensorElement& v);

struct JacobiReport {
    bool pass = true;
    /// First basis triple (i ≤ j ≤ k) with a nonzero graded jacobiator.
    std::optional<std::array<int, 3>> witness;
    TensorElement residual;
};

/// Graded jacobiator (−1)^{|x||z|}[x,[y,z]] + cyclic on every basis triple.
TensorElement jacobiator(const LieSuperAlgebra& A, int i, int j, int k);
JacobiReport verify_jacobi(const LieSuperAlgebra& A);

/// Structure constants a1·c1 + a2·c2 on a shared basis.
LieSuperAlgebra pencil(const LieSuperAlgebra& m1, const LieSuperAlgebra& m2, const Poly& a1, const Poly& a2,
                       std::string name = {});

LieSuperAlgebra substitute(const LieSuperAlgebra& A, const Assignment& a);

/// Bracket table rendered as DSL `bracket [a,b] = ...;` lines.
std::vector<std::string> bracket_lines(const LieSuperAlgebra& A);

} // namespace wb
