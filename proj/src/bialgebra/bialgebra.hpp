#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie/algebra.hpp"

namespace wb {

/// Linear map δ: g → g⊗g given on basis elements.
struct Cobracket {
    BasisPtr basis;
    std::vector<TensorElement> delta;

    friend bool operator==(const Cobracket&, const Cobracket&) = default;
};

/// ad_x on a tensor of any degree: Σ_slots (Koszul sign) [x, slot].
TensorElement ad_tensor(const LieSuperAlgebra& A, int x, const TensorElement& t);
TensorElement ad_tensor(const LieSuperAlgebra& A, const TensorElement& x, const TensorElement& t);

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23].
TensorElement schouten(const LieSuperAlgebra& A, const TensorElement& r);

struct InvarianceReport {
    bool pass = true;
    std::optional<int> witness;  ///< basis x with ad_x(t) ≠ 0
    TensorElement residual;
};

InvarianceReport check_invariant(const LieSuperAlgebra& A, const TensorElement& t);
bool check_cybe(const LieSuperAlgebra& A, const TensorElement& r);
/// Symmetric part ad-invariant and [[r,r]] ad-invariant.
bool check_mcybe(const LieSuperAlgebra& A, const TensorElement& r);

/// δ(x) = (ad_x⊗1 + 1⊗ad_x)(r) on every basis element.
Cobracket cobracket_from_r(const LieSuperAlgebra& A, const TensorElement& r);
Cobracket zero_cobracket(const BasisPtr& basis);

struct PairWitness {
    bool pass = true;
    std::optional<std::pair<int, int>> witness;
    TensorElement residual;
};

/// δ([x,y]) = x·δ(y) − (−1)^{|x||y|} y·δ(x) on all basis pairs.
PairWitness check_cocycle_compat(const LieSuperAlgebra& A, const Cobracket& d);

struct CoJacobiReport {
    bool pass = true;
    std::optional<int> witness;
    TensorElement residual;
};

/// Cyclic graded sum of (δ⊗id)δ(x) vanishes for every basis x.
CoJacobiReport check_cojacobi(const Cobracket& d);

/// Basis of hatted names `hat_<name>` with inherited parities.
BasisPtr dual_basis(const BasisPtr& basis);

/// Bracket on the dual space: ⟨[ê_i, ê_j], e_k⟩ = ⟨ê_i⊗ê_j, δ(e_k)⟩,
/// pairing without Koszul sign. Throws StructuralError if δ is not
/// graded antisymmetric.
LieSuperAlgebra dual_algebra(const Cobracket& d, std::string name, BasisPtr dual = nullptr);

/// (exp(s·ad_z) ⊗ exp(s·ad_z))(r), a polynomial in the parameter s.
/// UnsupportedInput if ad_z is not nilpotent or z is odd.
TensorElement adjoint_twist_r(const LieSuperAlgebra& A, const TensorElement& r, int z, Param s);

bool decompose_check(const TensorElement& full, const TensorElement& r1, const TensorElement& r2);
/// Specialization param ↦ 0.
TensorElement limit_r(const TensorElement& r, Param p);

} // namespace wb
