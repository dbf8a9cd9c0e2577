#pragma once

#include <array>
#include <optional>
#include <string>

#include "bialgebra/bialgebra.hpp"
#include "cohomology/cochain.hpp"
#include "cohomology/linsolve.hpp"

namespace wb {

/// (d1ψ)(x,y) = [ψx, y] + (−1)^{|ψ||x|}[x, ψy] − ψ[x,y].
Cochain2 d1(const LieSuperAlgebra& A, const Cochain1& psi);

/// (d2φ)(x,y,z) = Σ_cyclic (−1)^{|x||z|} ([x, φ(y,z)] + φ(x, [y,z])) for even φ.
TensorElement d2(const LieSuperAlgebra& A, const Cochain2& phi, int i, int j, int k);

struct CocycleReport {
    bool pass = true;
    std::optional<std::array<int, 3>> witness;
    TensorElement residual;
};

CocycleReport is_cocycle2(const LieSuperAlgebra& A, const Cochain2& phi);

struct CoboundaryResult {
    bool found = false;
    /// ψ = numerator / denominator; a constant denominator is folded in.
    Cochain1 numerator;
    Poly denominator = Poly(1);
    int rank_a = 0;
    int rank_aug = 0;
    Assumptions assumptions;
    bool generic_check = true;
    /// d1(numerator) == denominator·φ was re-checked.
    bool verified = false;
    std::string reason;

    std::string certificate() const;
};

/// Exact solve of d1ψ = φ for even ψ. Unknowns ordered by (source, target),
/// free unknowns set to zero.
CoboundaryResult solve_coboundary(const LieSuperAlgebra& A, const Cochain2& phi);

/// Pencil μ1 + t·μ2 satisfies Jacobi identically in a fresh parameter t.
JacobiReport compatible_pair(const LieSuperAlgebra& m1, const LieSuperAlgebra& m2);

/// x ↦ (ad_x⊗1 + 1⊗ad_x) r built from the matrices of ad_x and r.
/// Throws StructuralError if it disagrees with cobracket_from_r.
Cobracket coboundary_in_wedge(const LieSuperAlgebra& A, const TensorElement& r);

struct CohomologyReport {
    int cochain1_dim = 0;
    int cochain2_dim = 0;
    int kernel_d1 = 0;
    int kernel_dim = 0;  ///< dim Z²
    int image_dim = 0;   ///< dim B²
    int quotient_dim = 0;
    Assumptions assumptions;
    bool generic_check = true;
};

/// Even H² with adjoint coefficients. UnsupportedInput above 12 dimensions.
CohomologyReport h2_dim(const LieSuperAlgebra& A);

} // namespace wb
