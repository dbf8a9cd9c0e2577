#include "lie/algebra.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace wb {

namespace {

LinComb to_lincomb(const TensorElement& t)
{
    if (t.degree() != 1)
        throw UsageError("bracket values must be degree-1 elements");
    LinComb v;
    for (const auto& [idx, c] : t.terms())
        v.emplace_back(idx[0], c);
    return v;
}

LinComb scaled(const LinComb& v, const Poly& s)
{
    LinComb r;
    for (const auto& [k, c] : v) {
        Poly p = c * s;
        if (!p.is_zero())
            r.emplace_back(k, std::move(p));
    }
    return r;
}

LinComb canonical(const LinComb& v)
{
    std::map<int, Poly> acc;
    for (const auto& [k, c] : v)
        acc[k] += c;
    LinComb r;
    for (auto& [k, c] : acc)
        if (!c.is_zero())
            r.emplace_back(k, std::move(c));
    return r;
}

} // namespace

LieSuperAlgebra::Builder::Builder(std::string name, BasisPtr basis, int parity)
    : name_(std::move(name)), basis_(std::move(basis)), parity_(parity & 1)
{
    auto n = static_cast<std::size_t>(basis_->size());
    table_.resize(n * n);
    set_.assign(n * n, false);
}

LieSuperAlgebra::Builder& LieSuperAlgebra::Builder::set(int i, int j, const TensorElement& value)
{
    if (!same_basis(value.basis(), basis_))
        throw UsageError("bracket value lives over a different basis");
    return set(i, j, to_lincomb(value));
}

LieSuperAlgebra::Builder& LieSuperAlgebra::Builder::set(int i, int j, const LinComb& value)
{
    const auto& B = *basis_;
    int n = B.size();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw UsageError("bracket index out of range");
    LinComb v = canonical(value);
    int target = (B.parity(i) + B.parity(j) + parity_) & 1;
    for (const auto& [k, c] : v)
        if (B.parity(k) != target)
            throw DefinitionError("parity mismatch in [" + B.name(i) + "," + B.name(j) + "]: " + B.name(k) +
                                  " has the wrong parity");
    int s = -sign_of(B.parity(i) * B.parity(j));
    if (i == j && s == -1 && !v.empty())
        throw DefinitionError("[" + B.name(i) + "," + B.name(i) + "] must vanish for an even generator");
    table_[static_cast<std::size_t>(i * n + j)] = v;
    table_[static_cast<std::size_t>(j * n + i)] = scaled(v, Poly(s));
    set_[static_cast<std::size_t>(i * n + j)] = true;
    set_[static_cast<std::size_t>(j * n + i)] = true;
    return *this;
}

LieSuperAlgebra::Builder& LieSuperAlgebra::Builder::set(const std::string& a, const std::string& b,
                                                         const LinComb& value)
{
    return set(basis_->index(a), basis_->index(b), value);
}

bool LieSuperAlgebra::Builder::is_set(int i, int j) const
{
    return set_[static_cast<std::size_t>(i * basis_->size() + j)];
}

LieSuperAlgebra LieSuperAlgebra::Builder::build() const
{
    LieSuperAlgebra A;
    A.name_ = name_;
    A.basis_ = basis_;
    A.table_ = table_;
    A.parity_ = parity_;
    return A;
}

std::vector<Param> LieSuperAlgebra::parameters() const
{
    std::vector<Param> ps;
    for (const auto& v : table_)
        for (const auto& [k, c] : v)
            for (Param p : c.variables())
                if (std::find(ps.begin(), ps.end(), p) == ps.end())
                    ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    return ps;
}

bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b)
{
    return same_basis(a.basis_, b.basis_) && a.parity_ == b.parity_ && a.table_ == b.table_;
}

LieSuperAlgebra LieSuperAlgebra::renamed(std::string name) const
{
    LieSuperAlgebra r = *this;
    r.name_ = std::move(name);
    return r;
}

// -------------------------------------------------------------- operations

TensorElement bracket_basis(const LieSuperAlgebra& A, int i, int j)
{
    TensorElement r(A.basis(), 1);
    for (const auto& [k, c] : A.bracket(i, j))
        r.add({k, 0, 0}, c);
    return r;
}

TensorElement bracket(const LieSuperAlgebra& A, const TensorElement& x, const TensorElement& y)
{
    if (x.degree() != 1 || y.degree() != 1)
        throw UsageError("bracket needs degree-1 elements");
    if (!same_basis(x.basis(), A.basis()) || !same_basis(y.basis(), A.basis()))
        throw UsageError("bracket operands do not belong to algebra " + A.name());
    TensorElement r(A.basis(), 1);
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const auto& v = A.bracket(a[0], b[0]);
            if (v.empty())
                continue;
            Poly s = ca * cb;
            for (const auto& [k, c] : v)
                r.add({k, 0, 0}, s * c);
        }
    return r;
}

TensorElement ad(const LieSuperAlgebra& A, int x, const TensorElement& v)
{
    return bracket(A, TensorElement::basis_vector(A.basis(), x), v);
}

TensorElement jacobiator(const LieSuperAlgebra& A, int i, int j, int k)
{
    const auto& B = *A.basis();
    auto e = [&](int n) { return TensorElement::basis_vector(A.basis(), n); };
    auto term = [&](int x, int y, int z) {
        Poly s(sign_of(B.parity(x) * B.parity(z)));
        return s * bracket(A, e(x), bracket_basis(A, y, z));
    };
    return term(i, j, k) + term(j, k, i) + term(k, i, j);
}

JacobiReport verify_jacobi(const LieSuperAlgebra& A)
{
    JacobiReport rep;
    rep.residual = TensorElement(A.basis(), 1);
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                auto J = jacobiator(A, i, j, k);
                if (!J.is_zero()) {
                    rep.pass = false;
                    rep.witness = std::array<int, 3>{i, j, k};
                    rep.residual = std::move(J);
                    return rep;
                }
            }
    return rep;
}

LieSuperAlgebra pencil(const LieSuperAlgebra& m1, const LieSuperAlgebra& m2, const Poly& a1, const Poly& a2,
                       std::string name)
{
    if (!same_basis(m1.basis(), m2.basis()))
        throw UsageError("pencil of algebras on different bases");
    if (name.empty())
        name = "pencil(" + m1.name() + "," + m2.name() + ")";
    LieSuperAlgebra::Builder b(std::move(name), m1.basis());
    int n = m1.dim();
    const auto& B = *m1.basis();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && B.parity(i) == 0)
                continue;
            LinComb v = scaled(m1.bracket(i, j), a1);
            for (auto& t : scaled(m2.bracket(i, j), a2))
                v.push_back(std::move(t));
            b.set(i, j, v);
        }
    return b.build();
}

LieSuperAlgebra substitute(const LieSuperAlgebra& A, const Assignment& a)
{
    LieSuperAlgebra::Builder b(A.name(), A.basis(), A.parity());
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && A.basis()->parity(i) == 0)
                continue;
            LinComb v;
            for (const auto& [k, c] : A.bracket(i, j))
                v.emplace_back(k, substitute(c, a));
            b.set(i, j, v);
        }
    return b.build();
}

std::vector<std::string> bracket_lines(const LieSuperAlgebra& A)
{
    std::vector<std::string> lines;
    int n = A.dim();
    const auto& B = *A.basis();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto& v = A.bracket(i, j);
            if (v.empty())
                continue;
            lines.push_back("bracket [" + B.name(i) + "," + B.name(j) + "] = " + bracket_basis(A, i, j).to_string() +
                            ";");
        }
    return lines;
}

} // namespace wb
