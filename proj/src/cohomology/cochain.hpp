#pragma once

#include <string>
#include <vector>

#include "lie/algebra.hpp"

namespace wb {

/// Linear map g → g given on basis elements, homogeneous of `parity`.
class Cochain1 {
public:
    Cochain1() = default;
    Cochain1(std::string name, BasisPtr basis, std::vector<TensorElement> images, int parity = 0);

    static Cochain1 zero(BasisPtr basis, int parity = 0);
    static Cochain1 identity(BasisPtr basis);
    /// Inner derivation ad_z.
    static Cochain1 inner(const LieSuperAlgebra& A, int z);

    const std::string& name() const { return name_; }
    const BasisPtr& basis() const { return basis_; }
    int parity() const { return parity_; }
    const TensorElement& image(int i) const { return images_[static_cast<std::size_t>(i)]; }
    TensorElement apply(const TensorElement& v) const;

    Cochain1 scaled(const Poly& c) const;
    friend bool operator==(const Cochain1& a, const Cochain1& b);

    /// `a -> image;` lines in basis order, zero images included.
    std::vector<std::string> lines() const;

private:
    std::string name_;
    BasisPtr basis_;
    std::vector<TensorElement> images_;
    int parity_ = 0;
};

/// Graded-antisymmetric bilinear map g×g → g. Shares the storage of a
/// bracket table; the Jacobi identity is not implied.
using Cochain2 = LieSuperAlgebra;

} // namespace wb
