#include "cohomology/cohomology.hpp"

#include <map>

#include "errors.hpp"

namespace wb {

// ---------------------------------------------------------------- Cochain1

Cochain1::Cochain1(std::string name, BasisPtr basis, std::vector<TensorElement> images, int parity)
    : name_(std::move(name)), basis_(std::move(basis)), images_(std::move(images)), parity_(parity & 1)
{
    const auto& B = *basis_;
    if (static_cast<int>(images_.size()) != B.size())
        throw DefinitionError("cochain " + name_ + " needs one image per basis element");
    for (int i = 0; i < B.size(); ++i) {
        auto& im = images_[static_cast<std::size_t>(i)];
        if (!im.basis())
            im = TensorElement(basis_, 1);
        if (im.degree() != 1 || !same_basis(im.basis(), basis_))
            throw UsageError("cochain " + name_ + ": image of " + B.name(i) + " is not an element of the algebra");
        for (const auto& [idx, c] : im.terms())
            if (B.parity(idx[0]) != ((B.parity(i) + parity_) & 1))
                throw DefinitionError("cochain " + name_ + ": image of " + B.name(i) + " has the wrong parity");
    }
}

Cochain1 Cochain1::zero(BasisPtr basis, int parity)
{
    std::vector<TensorElement> ims(static_cast<std::size_t>(basis->size()), TensorElement(basis, 1));
    return Cochain1("0", basis, std::move(ims), parity);
}

Cochain1 Cochain1::identity(BasisPtr basis)
{
    std::vector<TensorElement> ims;
    for (int i = 0; i < basis->size(); ++i)
        ims.push_back(TensorElement::basis_vector(basis, i));
    return Cochain1("id", basis, std::move(ims), 0);
}

Cochain1 Cochain1::inner(const LieSuperAlgebra& A, int z)
{
    std::vector<TensorElement> ims;
    for (int i = 0; i < A.dim(); ++i)
        ims.push_back(bracket_basis(A, z, i));
    return Cochain1("ad_" + A.basis()->name(z), A.basis(), std::move(ims), A.basis()->parity(z));
}

TensorElement Cochain1::apply(const TensorElement& v) const
{
    if (v.degree() != 1 || !same_basis(v.basis(), basis_))
        throw UsageError("cochain " + name_ + " applied to a foreign element");
    TensorElement r(basis_, 1);
    for (const auto& [idx, c] : v.terms())
        r += c * image(idx[0]);
    return r;
}

Cochain1 Cochain1::scaled(const Poly& c) const
{
    Cochain1 r = *this;
    for (auto& im : r.images_)
        im *= c;
    return r;
}

bool operator==(const Cochain1& a, const Cochain1& b)
{
    return same_basis(a.basis_, b.basis_) && a.parity_ == b.parity_ && a.images_ == b.images_;
}

std::vector<std::string> Cochain1::lines() const
{
    std::vector<std::string> out;
    for (int i = 0; i < basis_->size(); ++i)
        out.push_back(basis_->name(i) + " -> " + image(i).to_string() + ";");
    return out;
}

// ------------------------------------------------------------- differentials

Cochain2 d1(const LieSuperAlgebra& A, const Cochain1& psi)
{
    if (!same_basis(A.basis(), psi.basis()))
        throw UsageError("d1: cochain " + psi.name() + " is not defined on " + A.name());
    const auto& B = *A.basis();
    auto e = [&](int n) { return TensorElement::basis_vector(A.basis(), n); };
    LieSuperAlgebra::Builder b("d1(" + psi.name() + ")", A.basis(), psi.parity());
    for (int i = 0; i < A.dim(); ++i)
        for (int j = i; j < A.dim(); ++j) {
            if (i == j && B.parity(i) == 0)
                continue;
            TensorElement v = bracket(A, psi.image(i), e(j));
            v += Poly(sign_of(psi.parity() * B.parity(i))) * bracket(A, e(i), psi.image(j));
            v -= psi.apply(bracket_basis(A, i, j));
            b.set(i, j, v);
        }
    return b.build();
}

TensorElement d2(const LieSuperAlgebra& A, const Cochain2& phi, int i, int j, int k)
{
    if (!same_basis(A.basis(), phi.basis()))
        throw UsageError("d2: cochain " + phi.name() + " is not defined on " + A.name());
    if (phi.parity() != 0)
        throw UnsupportedInput("d2 is implemented for even 2-cochains only");
    const auto& B = *A.basis();
    auto e = [&](int n) { return TensorElement::basis_vector(A.basis(), n); };
    auto term = [&](int x, int y, int z) {
        TensorElement t = bracket(A, e(x), bracket_basis(phi, y, z));
        t += bracket(phi, e(x), bracket_basis(A, y, z));
        return Poly(sign_of(B.parity(x) * B.parity(z))) * t;
    };
    return term(i, j, k) + term(j, k, i) + term(k, i, j);
}

CocycleReport is_cocycle2(const LieSuperAlgebra& A, const Cochain2& phi)
{
    CocycleReport rep;
    rep.residual = TensorElement(A.basis(), 1);
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                auto t = d2(A, phi, i, j, k);
                if (!t.is_zero()) {
                    rep.pass = false;
                    rep.witness = std::array<int, 3>{i, j, k};
                    rep.residual = std::move(t);
                    return rep;
                }
            }
    return rep;
}

// --------------------------------------------------------- coordinate maps

namespace {

using Coord2 = std::array<int, 3>;  // (i, j, target) with i ≤ j

std::vector<std::pair<int, int>> c1_coords(const GradedBasis& B)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < B.size(); ++i)
        for (int k = 0; k < B.size(); ++k)
            if (B.parity(i) == B.parity(k))
                out.emplace_back(i, k);
    return out;
}

std::vector<Coord2> c2_coords(const GradedBasis& B)
{
    std::vector<Coord2> out;
    for (int i = 0; i < B.size(); ++i)
        for (int j = i; j < B.size(); ++j) {
            if (i == j && B.parity(i) == 0)
                continue;
            for (int k = 0; k < B.size(); ++k)
                if (B.parity(k) == ((B.parity(i) + B.parity(j)) & 1))
                    out.push_back({i, j, k});
        }
    return out;
}

std::vector<std::array<int, 4>> c3_coords(const GradedBasis& B)
{
    std::vector<std::array<int, 4>> out;
    int n = B.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                for (int m = 0; m < n; ++m)
                    if (B.parity(m) == ((B.parity(i) + B.parity(j) + B.parity(k)) & 1))
                        out.push_back({i, j, k, m});
    return out;
}

Cochain1 unit_cochain1(const BasisPtr& basis, int i, int k)
{
    std::vector<TensorElement> ims;
    for (int s = 0; s < basis->size(); ++s)
        ims.push_back(s == i ? TensorElement::basis_vector(basis, k) : TensorElement(basis, 1));
    return Cochain1("e", basis, std::move(ims), 0);
}

Cochain2 unit_cochain2(const BasisPtr& basis, const Coord2& c)
{
    LieSuperAlgebra::Builder b("e", basis);
    b.set(c[0], c[1], LinComb{{c[2], Poly(1)}});
    return b.build();
}

Poly coord_of(const Cochain2& phi, const Coord2& c)
{
    for (const auto& [k, v] : phi.bracket(c[0], c[1]))
        if (k == c[2])
            return v;
    return Poly();
}

PolyMatrix d1_matrix(const LieSuperAlgebra& A)
{
    const auto& B = *A.basis();
    auto cols = c1_coords(B);
    auto rows = c2_coords(B);
    std::map<Coord2, int> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of[rows[r]] = static_cast<int>(r);
    PolyMatrix M(rows.size(), std::vector<Poly>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Cochain2 img = d1(A, unit_cochain1(A.basis(), cols[c].first, cols[c].second));
        for (const auto& rc : rows) {
            Poly v = coord_of(img, rc);
            if (!v.is_zero())
                M[static_cast<std::size_t>(row_of[rc])][c] = std::move(v);
        }
    }
    return M;
}

PolyMatrix d2_matrix(const LieSuperAlgebra& A)
{
    const auto& B = *A.basis();
    auto cols = c2_coords(B);
    auto rows = c3_coords(B);
    std::map<std::array<int, 4>, int> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of[rows[r]] = static_cast<int>(r);
    PolyMatrix M(rows.size(), std::vector<Poly>(cols.size()));
    int n = B.size();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Cochain2 phi = unit_cochain2(A.basis(), cols[c]);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    TensorElement t = d2(A, phi, i, j, k);
                    for (const auto& [idx, v] : t.terms())
                        M[static_cast<std::size_t>(row_of.at({i, j, k, idx[0]}))][c] = v;
                }
    }
    return M;
}

Cochain2 scaled2(const Cochain2& phi, const Poly& s)
{
    LieSuperAlgebra::Builder b(phi.name(), phi.basis(), phi.parity());
    const auto& B = *phi.basis();
    for (int i = 0; i < phi.dim(); ++i)
        for (int j = i; j < phi.dim(); ++j) {
            if (i == j && B.parity(i) == 0)
                continue;
            LinComb v;
            for (const auto& [k, c] : phi.bracket(i, j))
                v.emplace_back(k, c * s);
            b.set(i, j, v);
        }
    return b.build();
}

} // namespace

std::string CoboundaryResult::certificate() const
{
    return "rank d1-system = " + std::to_string(rank_a) + ", rank augmented = " + std::to_string(rank_aug);
}

CoboundaryResult solve_coboundary(const LieSuperAlgebra& A, const Cochain2& phi)
{
    if (!same_basis(A.basis(), phi.basis()))
        throw UsageError("coboundary: " + phi.name() + " and " + A.name() + " live on different bases");
    if (phi.parity() != 0)
        throw UnsupportedInput("coboundary: odd 2-cochains are not supported");
    const auto& B = *A.basis();
    auto cols = c1_coords(B);
    auto rows = c2_coords(B);
    PolyMatrix M = d1_matrix(A);
    std::vector<Poly> rhs;
    for (const auto& rc : rows)
        rhs.push_back(coord_of(phi, rc));

    SolveResult S = solve(M, rhs);
    CoboundaryResult R;
    R.rank_a = S.rank_a;
    R.rank_aug = S.rank_aug;
    R.assumptions = S.assumptions;
    R.generic_check = S.generic_check;
    if (!S.consistent) {
        bool cocycle = is_cocycle2(A, phi).pass;
        R.reason = cocycle ? "inconsistent system: " + R.certificate()
                           : "not a 2-cocycle; inconsistent system: " + R.certificate();
        return R;
    }
    std::vector<TensorElement> ims(static_cast<std::size_t>(B.size()), TensorElement(A.basis(), 1));
    for (std::size_t c = 0; c < cols.size(); ++c)
        ims[static_cast<std::size_t>(cols[c].first)].add({cols[c].second, 0, 0}, S.numerators[c]);
    Cochain1 num("psi", A.basis(), std::move(ims), 0);
    Poly den = S.denominator;
    if (den.is_constant()) {
        num = num.scaled(Poly(1 / den.constant_term()));
        den = Poly(1);
    }
    R.found = true;
    R.numerator = num;
    R.denominator = den;
    R.verified = d1(A, num) == scaled2(phi, den);
    if (!R.verified)
        throw StructuralError("coboundary: solution failed the d1 re-check");
    return R;
}

JacobiReport compatible_pair(const LieSuperAlgebra& m1, const LieSuperAlgebra& m2)
{
    if (!same_basis(m1.basis(), m2.basis()))
        throw UsageError("compatible: " + m1.name() + " and " + m2.name() + " live on different bases");
    Param t = Param::intern("_pencil_t");
    return verify_jacobi(pencil(m1, m2, Poly(1), Poly::param(t)));
}

Cobracket coboundary_in_wedge(const LieSuperAlgebra& A, const TensorElement& r)
{
    if (r.degree() != 2 || !same_basis(r.basis(), A.basis()))
        throw UsageError("coboundary_in_wedge needs a degree-2 tensor over " + A.name());
    const auto& B = *A.basis();
    auto n = static_cast<std::size_t>(A.dim());
    PolyMatrix Rm(n, std::vector<Poly>(n));
    for (const auto& [idx, c] : r.terms())
        Rm[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[1])] = c;
    Cobracket d{A.basis(), {}};
    for (int x = 0; x < A.dim(); ++x) {
        PolyMatrix ad(n, std::vector<Poly>(n));
        for (int c = 0; c < A.dim(); ++c)
            for (const auto& [a, v] : A.bracket(x, c))
                ad[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = v;
        TensorElement t(A.basis(), 2);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Poly s;
                for (std::size_t c = 0; c < n; ++c) {
                    if (!ad[a][c].is_zero() && !Rm[c][b].is_zero())
                        s += ad[a][c] * Rm[c][b];
                    if (!Rm[a][c].is_zero() && !ad[b][c].is_zero())
                        s += Poly(sign_of(B.parity(x) * B.parity(static_cast<int>(a)))) * Rm[a][c] * ad[b][c];
                }
                t.add({static_cast<int>(a), static_cast<int>(b), 0}, s);
            }
        d.delta.push_back(std::move(t));
    }
    if (!(d == cobracket_from_r(A, r)))
        throw StructuralError("coboundary_in_wedge disagrees with cobracket_from_r");
    return d;
}

CohomologyReport h2_dim(const LieSuperAlgebra& A)
{
    if (A.dim() > 12)
        throw UnsupportedInput("h2: dimension " + std::to_string(A.dim()) + " exceeds the guard of 12");
    const auto& B = *A.basis();
    CohomologyReport R;
    R.cochain1_dim = static_cast<int>(c1_coords(B).size());
    R.cochain2_dim = static_cast<int>(c2_coords(B).size());
    RankResult r1 = generic_rank(d1_matrix(A));
    RankResult r2 = generic_rank(d2_matrix(A));
    R.image_dim = r1.rank;
    R.kernel_d1 = R.cochain1_dim - r1.rank;
    R.kernel_dim = R.cochain2_dim - r2.rank;
    R.quotient_dim = R.kernel_dim - R.image_dim;
    R.assumptions = r1.assumptions;
    R.assumptions.merge(r2.assumptions);
    R.generic_check = r1.generic_check && r2.generic_check;
    return R;
}

} // namespace wb
