#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "scalar/polynomial.hpp"

namespace wb {

/// Z2 grading of a basis element. Parameters are always even.
enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline int sign_of(int parity_product)
{
    return (parity_product & 1) ? -1 : 1;
}

/// Ordered generator names with parities. The order doubles as PBW order.
class GradedBasis {
public:
    using Entry = std::pair<std::string, Parity>;

    static std::shared_ptr<const GradedBasis> make(std::vector<Entry> entries);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    /// 0 for even, 1 for odd.
    int parity(int i) const { return static_cast<int>(parities_[i]); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;
    /// Index of `name`; DefinitionError if absent.
    int index(const std::string& name) const;

    friend bool operator==(const GradedBasis& a, const GradedBasis& b)
    {
        return a.names_ == b.names_ && a.parities_ == b.parities_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Parity> parities_;
    std::unordered_map<std::string, int> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

bool same_basis(const BasisPtr& a, const BasisPtr& b);

/// Sparse element of V, V⊗V or V⊗V⊗V over a graded basis V, with
/// polynomial coefficients. Unused index slots are zero.
class TensorElement {
public:
    using Index = std::array<int, 3>;

    TensorElement() = default;
    TensorElement(BasisPtr basis, int degree);
    static TensorElement basis_vector(BasisPtr basis, int i);
    static TensorElement basis_vector(BasisPtr basis, const std::string& name);

    const BasisPtr& basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Index, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Index& idx) const;
    /// Parity of the basis tensor at `idx`.
    int parity_of(const Index& idx) const;

    void add(const Index& idx, const Poly& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Poly& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Poly& c, TensorElement a) { return a *= c; }
    friend TensorElement operator*(TensorElement a, const Poly& c) { return a *= c; }
    friend TensorElement operator-(TensorElement a) { return a *= Poly(-1); }
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    /// Applies `f` to every coefficient, dropping zeros.
    template <class F>
    TensorElement map_coefficients(F&& f) const
    {
        TensorElement r(basis_, degree_);
        for (const auto& [idx, c] : terms_)
            r.add(idx, f(c));
        return r;
    }

    /// DSL-compatible rendering, e.g. `1/2*h H12 (x) H12 + 2*h E21 (x) E12`.
    std::string to_string() const;

private:
    void check_compatible(const TensorElement& o) const;

    BasisPtr basis_;
    int degree_ = 1;
    std::map<Index, Poly> terms_;
};

/// x⊗y (degrees add, at most 3).
TensorElement tensor_product(const TensorElement& x, const TensorElement& y);
/// x⊗y − (−1)^{|x||y|} y⊗x for degree-1 x, y; no 1/2 factor.
TensorElement wedge(const TensorElement& x, const TensorElement& y);
/// Graded flip a⊗b ↦ (−1)^{|a||b|} b⊗a.
TensorElement flip(const TensorElement& t);
/// (t + flip t)/2 and (t − flip t)/2.
TensorElement symmetric_part(const TensorElement& t);
TensorElement antisymmetric_part(const TensorElement& t);
/// Cyclic slot shift a⊗b⊗c ↦ (−1)^{|c|(|a|+|b|)} c⊗a⊗b.
TensorElement cyclic_shift(const TensorElement& t);

TensorElement substitute(const TensorElement& t, const Assignment& a);
TensorElement substitute(const TensorElement& t, const std::map<std::string, Rational>& a);
TensorElement truncate(const TensorElement& t, const TruncationOrder& o);
/// Coefficient of p^e in every slot coefficient.
TensorElement coefficient(const TensorElement& t, Param p, unsigned e);

/// Scalar c with a = c·b (a, b over the same basis), if one exists.
std::optional<Poly> proportionality(const TensorElement& a, const TensorElement& b);

} // namespace wb
