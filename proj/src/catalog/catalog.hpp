#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bialgebra/bialgebra.hpp"
#include "cohomology/cochain.hpp"

namespace wb {

/// sl(N) on H12, H23, ..., H(N-1)N followed by E_ij (i ≠ j) in lexicographic order.
LieSuperAlgebra make_sl(int n);
/// gl(N) on matrix units; `prefix` names them (E_ij or Y_ij).
LieSuperAlgebra make_gl(int n, const std::string& prefix = "E");
/// {h, x | [h, x] = 2x}.
LieSuperAlgebra make_borel();

/// Generator names used by make_sl.
std::string sl_h_name(int n, int k);
std::string sl_e_name(int n, int i, int j);

/// Drinfeld–Jimbo r-matrix over sl(N): inverse-Cartan Cartan part plus 2h Σ_{k<l} E_lk⊗E_kl.
TensorElement make_rdj(int n, Param h);
/// −ξ(H_1N∧E_1N + 2 Σ_{k=2}^{N−1} E_1k∧E_kN).
TensorElement make_rjordan(int n, Param xi);
/// Both parts written out in a single pass, independently of the two above.
TensorElement make_rfull(int n, Param h, Param xi);
/// H_1N = Σ_k H_{k,k+1} as an element of sl(N).
TensorElement sl_h1n(int n);

LieSuperAlgebra make_dual_standard(int n, Param h);
LieSuperAlgebra make_dual_jordan(int n, Param xi);

struct DoublePieces {
    LieSuperAlgebra g1, g2, g1dual, g2dual;
    TensorElement r;  ///< θ(X₊⊗X₋ + H⊗H′) over the g1/g2 basis
};

DoublePieces make_double_pieces(Param theta);

struct OspPieces {
    LieSuperAlgebra algebra;  ///< h, Xp, Xm even; vp, vm odd
    LieSuperAlgebra mu1;      ///< on hat_ basis, as printed
    LieSuperAlgebra mu2;
    Cochain1 psi;             ///< hat_ basis, as printed
};

OspPieces make_osp12();

/// Literal transcription of the μ′ tables on the Y_ij basis of gl(N).
struct MuPrimeLine {
    std::string text;
    int instances = 0;  ///< index tuples meeting the printed condition
    int assigned = 0;
    int zero = 0;       ///< instances whose value vanishes
    int conflicts = 0;
    bool vacuous() const { return instances == 0; }
};

struct MuPrimeReport {
    int n = 0;
    std::vector<MuPrimeLine> lines;
    std::vector<std::string> conflicts;
    JacobiReport jacobi;
    /// Dual of gl(N) under the jordanian r at ξ = 1, with Y_ij paired to
    /// E_ij ("direct") or to E_ji ("transposed"); empty if neither matches.
    std::string jordan_match;
    /// mu' + t·(dual of gl(N) under the standard r at h = 1) is Lie, per pairing.
    bool std_compatible_direct = false;
    bool std_compatible_transposed = false;
};

LieSuperAlgebra make_mu_prime(int n, MuPrimeReport* report = nullptr);
MuPrimeReport mu_prime_report(int n);

// ------------------------------------------------------------------ registry

struct CatalogEntry {
    enum class Kind { Algebra, Tensor, Cochain1 };

    std::string name;
    Kind kind = Kind::Algebra;
    std::string description;
    /// The entry itself for Kind::Algebra, otherwise the algebra it lives on.
    std::optional<LieSuperAlgebra> algebra;
    std::optional<TensorElement> tensor;
    std::optional<Cochain1> cochain;
};

std::vector<std::string> catalog_names();
/// DefinitionError for an unknown name.
CatalogEntry catalog_get(const std::string& name);

} // namespace wb
