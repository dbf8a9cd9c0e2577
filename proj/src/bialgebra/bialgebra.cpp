#include "bialgebra/bialgebra.hpp"

#include <map>

#include "errors.hpp"

namespace wb {

TensorElement ad_tensor(const LieSuperAlgebra& A, int x, const TensorElement& t)
{
    if (!same_basis(t.basis(), A.basis()))
        throw UsageError("tensor does not live over algebra " + A.name());
    const auto& B = *A.basis();
    const int px = B.parity(x);
    TensorElement r(A.basis(), t.degree());
    for (const auto& [idx, c] : t.terms()) {
        int passed = 0;  // parity of the slots to the left of s
        for (int s = 0; s < t.degree(); ++s) {
            Poly sc = c * Poly(sign_of(px * passed));
            for (const auto& [k, ck] : A.bracket(x, idx[s])) {
                auto out = idx;
                out[s] = k;
                r.add(out, sc * ck);
            }
            passed += B.parity(idx[s]);
        }
    }
    return r;
}

TensorElement ad_tensor(const LieSuperAlgebra& A, const TensorElement& x, const TensorElement& t)
{
    if (x.degree() != 1)
        throw UsageError("ad needs a degree-1 element");
    TensorElement r(A.basis(), t.degree());
    for (const auto& [idx, c] : x.terms())
        r += c * ad_tensor(A, idx[0], t);
    return r;
}

// ------------------------------------------------------------ Schouten

namespace {

// Element of the free tensor cube with words of length ≤ 2 in each slot.
// Slot s occupies key[2s], key[2s+1]; −1 marks an empty letter.
using WordKey = std::array<int, 6>;
using WordTensor = std::map<WordKey, Poly>;

int word_len(const WordKey& k, int s)
{
    return (k[2 * s] >= 0) + (k[2 * s + 1] >= 0);
}

int word_parity(const BasisPtr& B, const WordKey& k, int s)
{
    int p = 0;
    for (int q = 0; q < 2; ++q)
        if (k[2 * s + q] >= 0)
            p += B->parity(k[2 * s + q]);
    return p & 1;
}

// Places r^{ab} e_a⊗e_b into slots (s, t) of the cube.
WordTensor embed(const TensorElement& r, int s, int t)
{
    WordTensor w;
    for (const auto& [idx, c] : r.terms()) {
        WordKey k;
        k.fill(-1);
        k[2 * s] = idx[0];
        k[2 * t] = idx[1];
        w[k] += c;
    }
    return w;
}

void accumulate(WordTensor& acc, const WordKey& k, const Poly& c)
{
    if (c.is_zero())
        return;
    auto& slot = acc[k];
    slot += c;
    if (slot.is_zero())
        acc.erase(k);
}

// Koszul-signed product of two pure word tensors.
std::pair<WordKey, int> word_product(const BasisPtr& B, const WordKey& a, const WordKey& b)
{
    int sign = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            sign += word_parity(B, a, j) * word_parity(B, b, i);
    WordKey out;
    out.fill(-1);
    for (int s = 0; s < 3; ++s) {
        std::vector<int> letters;
        for (int q = 0; q < 2; ++q)
            if (a[2 * s + q] >= 0)
                letters.push_back(a[2 * s + q]);
        for (int q = 0; q < 2; ++q)
            if (b[2 * s + q] >= 0)
                letters.push_back(b[2 * s + q]);
        if (letters.size() > 2)
            throw StructuralError("schouten: word longer than two letters");
        for (std::size_t q = 0; q < letters.size(); ++q)
            out[2 * s + q] = letters[q];
    }
    return {out, sign_of(sign)};
}

int total_parity(const BasisPtr& B, const WordKey& k)
{
    return (word_parity(B, k, 0) + word_parity(B, k, 1) + word_parity(B, k, 2)) & 1;
}

void add_commutator(const BasisPtr& B, WordTensor& acc, const WordTensor& X, const WordTensor& Y)
{
    for (const auto& [kx, cx] : X)
        for (const auto& [ky, cy] : Y) {
            Poly c = cx * cy;
            auto [k1, s1] = word_product(B, kx, ky);
            accumulate(acc, k1, Poly(s1) * c);
            auto [k2, s2] = word_product(B, ky, kx);
            int swap = total_parity(B, kx) * total_parity(B, ky);
            accumulate(acc, k2, Poly(-s2 * sign_of(swap)) * c);
        }
}

// Rewrites a combination of graded commutators ab − (−1)^{|a||b|} ba in one
// slot as brackets in the algebra.
TensorElement project_to_lie(const LieSuperAlgebra& A, const WordTensor& w)
{
    const auto& B = A.basis();
    TensorElement r(B, 3);
    auto coeff = [&](const WordKey& k) {
        auto it = w.find(k);
        return it == w.end() ? Poly() : it->second;
    };
    for (const auto& [k, c] : w) {
        int slot = -1;
        for (int s = 0; s < 3; ++s) {
            int len = word_len(k, s);
            if (len == 0)
                throw StructuralError("schouten: empty tensor slot");
            if (len == 2) {
                if (slot >= 0)
                    throw StructuralError("schouten: two colliding slots");
                slot = s;
            }
        }
        if (slot < 0)
            throw StructuralError("schouten: term without a commutator slot");
        int p = k[2 * slot], q = k[2 * slot + 1];
        int pp = B->parity(p), pq = B->parity(q);
        if (p != q) {
            WordKey partner = k;
            std::swap(partner[2 * slot], partner[2 * slot + 1]);
            if (coeff(partner) + Poly(sign_of(pp * pq)) * c != Poly())
                throw StructuralError("schouten: residue is not a sum of graded commutators");
            if (p > q)
                continue;
        }
        Poly scale = c;
        if (p == q) {
            if (pp == 0)
                throw StructuralError("schouten: even square survives");
            scale *= make_rational(1, 2);
        }
        TensorElement::Index base{0, 0, 0};
        for (int s = 0; s < 3; ++s)
            base[s] = k[2 * s];
        for (const auto& [m, cm] : A.bracket(p, q)) {
            auto idx = base;
            idx[slot] = m;
            r.add(idx, scale * cm);
        }
    }
    return r;
}

} // namespace

TensorElement schouten(const LieSuperAlgebra& A, const TensorElement& r)
{
    if (r.degree() != 2)
        throw UsageError("schouten bracket needs a degree-2 tensor");
    if (!same_basis(r.basis(), A.basis()))
        throw UsageError("r-matrix does not live over algebra " + A.name());
    auto r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
    WordTensor acc;
    add_commutator(A.basis(), acc, r12, r13);
    add_commutator(A.basis(), acc, r12, r23);
    add_commutator(A.basis(), acc, r13, r23);
    return project_to_lie(A, acc);
}

InvarianceReport check_invariant(const LieSuperAlgebra& A, const TensorElement& t)
{
    InvarianceReport rep;
    rep.residual = TensorElement(A.basis(), t.degree());
    for (int x = 0; x < A.dim(); ++x) {
        auto v = ad_tensor(A, x, t);
        if (!v.is_zero()) {
            rep.pass = false;
            rep.witness = x;
            rep.residual = std::move(v);
            return rep;
        }
    }
    return rep;
}

bool check_cybe(const LieSuperAlgebra& A, const TensorElement& r)
{
    return schouten(A, r).is_zero();
}

bool check_mcybe(const LieSuperAlgebra& A, const TensorElement& r)
{
    return check_invariant(A, symmetric_part(r)).pass && check_invariant(A, schouten(A, r)).pass;
}

// ------------------------------------------------------------ cobrackets

Cobracket cobracket_from_r(const LieSuperAlgebra& A, const TensorElement& r)
{
    if (r.degree() != 2)
        throw UsageError("cobracket needs a degree-2 r-matrix");
    Cobracket d{A.basis(), {}};
    for (int x = 0; x < A.dim(); ++x)
        d.delta.push_back(ad_tensor(A, x, r));
    return d;
}

Cobracket zero_cobracket(const BasisPtr& basis)
{
    Cobracket d{basis, {}};
    for (int x = 0; x < basis->size(); ++x)
        d.delta.emplace_back(basis, 2);
    return d;
}

namespace {

TensorElement apply_delta(const Cobracket& d, const TensorElement& v)
{
    TensorElement r(d.basis, 2);
    for (const auto& [idx, c] : v.terms())
        r += c * d.delta[static_cast<std::size_t>(idx[0])];
    return r;
}

} // namespace

PairWitness check_cocycle_compat(const LieSuperAlgebra& A, const Cobracket& d)
{
    if (!same_basis(A.basis(), d.basis))
        throw UsageError("cobracket and algebra live on different bases");
    PairWitness rep;
    rep.residual = TensorElement(A.basis(), 2);
    const auto& B = *A.basis();
    for (int x = 0; x < A.dim(); ++x)
        for (int y = 0; y < A.dim(); ++y) {
            auto lhs = apply_delta(d, bracket_basis(A, x, y));
            auto rhs = ad_tensor(A, x, d.delta[static_cast<std::size_t>(y)]) -
                       Poly(sign_of(B.parity(x) * B.parity(y))) *
                           ad_tensor(A, y, d.delta[static_cast<std::size_t>(x)]);
            auto diff = lhs - rhs;
            if (!diff.is_zero()) {
                rep.pass = false;
                rep.witness = std::make_pair(x, y);
                rep.residual = std::move(diff);
                return rep;
            }
        }
    return rep;
}

CoJacobiReport check_cojacobi(const Cobracket& d)
{
    CoJacobiReport rep;
    rep.residual = TensorElement(d.basis, 3);
    for (int x = 0; x < d.basis->size(); ++x) {
        TensorElement t(d.basis, 3);
        for (const auto& [idx, c] : d.delta[static_cast<std::size_t>(x)].terms())
            t += c * tensor_product(d.delta[static_cast<std::size_t>(idx[0])],
                                    TensorElement::basis_vector(d.basis, idx[1]));
        auto t1 = cyclic_shift(t);
        auto t2 = cyclic_shift(t1);
        auto sum = t + t1 + t2;
        if (!sum.is_zero()) {
            rep.pass = false;
            rep.witness = x;
            rep.residual = std::move(sum);
            return rep;
        }
    }
    return rep;
}

BasisPtr dual_basis(const BasisPtr& basis)
{
    std::vector<GradedBasis::Entry> e;
    for (int i = 0; i < basis->size(); ++i)
        e.emplace_back("hat_" + basis->name(i), static_cast<Parity>(basis->parity(i)));
    return GradedBasis::make(std::move(e));
}

LieSuperAlgebra dual_algebra(const Cobracket& d, std::string name, BasisPtr dual)
{
    const auto& B = *d.basis;
    if (!dual)
        dual = dual_basis(d.basis);
    if (dual->size() != B.size())
        throw UsageError("dual basis has the wrong dimension");
    int n = B.size();
    std::vector<std::map<int, Poly>> table(static_cast<std::size_t>(n * n));
    for (int k = 0; k < n; ++k)
        for (const auto& [idx, c] : d.delta[static_cast<std::size_t>(k)].terms())
            table[static_cast<std::size_t>(idx[0] * n + idx[1])][k] += c;
    auto as_comb = [&](int i, int j) {
        LinComb v;
        for (const auto& [k, c] : table[static_cast<std::size_t>(i * n + j)])
            if (!c.is_zero())
                v.emplace_back(k, c);
        return v;
    };
    LieSuperAlgebra::Builder b(std::move(name), dual);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            LinComb v = as_comb(i, j), w = as_comb(j, i);
            int s = -sign_of(B.parity(i) * B.parity(j));
            LinComb expected;
            for (const auto& [k, c] : v)
                expected.emplace_back(k, Poly(s) * c);
            if (w != expected)
                throw StructuralError("cobracket value is not graded antisymmetric at (" + B.name(i) + "," +
                                      B.name(j) + ")");
            if (i == j && s == -1) {
                if (!v.empty())
                    throw StructuralError("cobracket has a symmetric even component");
                continue;
            }
            b.set(i, j, v);
        }
    return b.build();
}

// ------------------------------------------------------- adjoint twist

TensorElement adjoint_twist_r(const LieSuperAlgebra& A, const TensorElement& r, int z, Param s)
{
    const auto& B = A.basis();
    if (B->parity(z) != 0)
        throw UnsupportedInput("adjoint twist needs an even generator, " + B->name(z) + " is odd");
    int n = A.dim();
    std::vector<TensorElement> images;  // exp(s ad_z)(e_i)
    for (int i = 0; i < n; ++i) {
        auto term = TensorElement::basis_vector(B, i);
        TensorElement sum = term;
        Rational factorial = 1;
        int k = 1;
        for (; k <= n + 1; ++k) {
            term = ad(A, z, term);
            if (term.is_zero())
                break;
            factorial *= k;
            sum += (Poly::param(s, static_cast<unsigned>(k)) * Poly(1 / factorial)) * term;
        }
        if (k > n + 1)
            throw UnsupportedInput("ad_" + B->name(z) + " is not nilpotent");
        images.push_back(std::move(sum));
    }
    TensorElement out(B, 2);
    for (const auto& [idx, c] : r.terms())
        out += c * tensor_product(images[static_cast<std::size_t>(idx[0])], images[static_cast<std::size_t>(idx[1])]);
    return out;
}

bool decompose_check(const TensorElement& full, const TensorElement& r1, const TensorElement& r2)
{
    return full == r1 + r2;
}

TensorElement limit_r(const TensorElement& r, Param p)
{
    return substitute(r, Assignment{{p, Rational(0)}});
}

} // namespace wb
