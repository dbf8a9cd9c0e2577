#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog/catalog.hpp"
#include "cohomology/cohomology.hpp"
#include "cohomology/linsolve.hpp"
#include "errors.hpp"

using namespace wb;

namespace {

Param P(const char* n)
{
    return Param::intern(n);
}

Cochain1 random_even_cochain(const LieSuperAlgebra& A, std::mt19937& g)
{
    const auto& B = A.basis();
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<TensorElement> im;
    for (int i = 0; i < A.dim(); ++i) {
        TensorElement t(B, 1);
        for (int j = 0; j < A.dim(); ++j)
            if (B->parity(i) == B->parity(j))
                t.add({j, 0, 0}, Poly(coef(g)));
        im.push_back(t);
    }
    return Cochain1("rnd", B, im, 0);
}

// Plain Gauss elimination over Q, kept separate from the library solver.
int rank_q(std::vector<std::vector<Rational>> m)
{
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        auto& piv = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / piv[c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * piv[k];
        }
        ++rank;
    }
    return rank;
}

// Even cochain spaces of A at a numeric point, and the ranks of d1 and d2 there.
struct Dims {
    int c1 = 0, c2 = 0, rank_d1 = 0, rank_d2 = 0;
};

Dims dims_at(const LieSuperAlgebra& A0, const Assignment& at)
{
    auto A = substitute(A0, at);
    const auto& B = A.basis();
    int n = A.dim();
    std::vector<std::pair<int, int>> c1;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (B->parity(s) == B->parity(t))
                c1.emplace_back(s, t);
    std::vector<std::array<int, 3>> c2;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && B->parity(i) == 0)
                continue;
            for (int k = 0; k < n; ++k)
                if (((B->parity(i) + B->parity(j) + B->parity(k)) & 1) == 0)
                    c2.push_back({i, j, k});
        }
    // d1: columns are unit 1-cochains, rows are c2 coordinates
    std::vector<std::vector<Rational>> m1(c2.size(), std::vector<Rational>(c1.size(), 0));
    for (std::size_t col = 0; col < c1.size(); ++col) {
        std::vector<TensorElement> im(static_cast<std::size_t>(n), TensorElement(B, 1));
        im[static_cast<std::size_t>(c1[col].first)] = TensorElement::basis_vector(B, c1[col].second);
        auto D = d1(A, Cochain1("u", B, im, 0));
        for (std::size_t row = 0; row < c2.size(); ++row) {
            auto [i, j, k] = c2[row];
            auto v = bracket_basis(D, i, j);
            for (const auto& [idx, c] : v.terms())
                if (idx[0] == k)
                    m1[row][col] = c.constant_term();
        }
    }
    // d2: columns are unit 2-cochains, rows are (triple, output) pairs
    std::vector<std::vector<Rational>> m2;
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                triples.push_back({i, j, k});
    m2.assign(triples.size() * static_cast<std::size_t>(n), std::vector<Rational>(c2.size(), 0));
    for (std::size_t col = 0; col < c2.size(); ++col) {
        auto [a, b, c] = c2[col];
        LieSuperAlgebra::Builder u("u", B);
        u.set(a, b, {{c, Poly(1)}});
        auto phi = u.build();
        for (std::size_t t = 0; t < triples.size(); ++t) {
            auto v = d2(A, phi, triples[t][0], triples[t][1], triples[t][2]);
            for (const auto& [idx, co] : v.terms())
                m2[t * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx[0])][col] = co.constant_term();
        }
    }
    return {static_cast<int>(c1.size()), static_cast<int>(c2.size()), rank_q(m1), rank_q(m2)};
}

} // namespace

TEST_CASE("d2 after d1 vanishes")
{
    std::mt19937 g(17);
    for (const char* n : {"sl2", "sl3", "osp12", "borel", "sl2.dual.jordan", "mu1star", "double.g1"}) {
        auto A = *catalog_get(n).algebra;
        for (int it = 0; it < 4; ++it) {
            CAPTURE(n);
            CHECK(is_cocycle2(A, d1(A, random_even_cochain(A, g))).pass);
        }
    }
}

TEST_CASE("inner derivations are cocycles of degree one")
{
    for (const char* n : {"sl3", "osp12"}) {
        auto A = *catalog_get(n).algebra;
        for (int z = 0; z < A.dim(); ++z)
            if (A.basis()->parity(z) == 0) {
                auto D = d1(A, Cochain1::inner(A, z));
                CHECK(D == pencil(D, D, Poly(0), Poly(0)));
            }
    }
}

TEST_CASE("coboundary solve round trip")
{
    std::mt19937 g(23);
    for (const char* n : {"sl2", "osp12", "sl2.dual.std", "mu1star"}) {
        auto A = *catalog_get(n).algebra;
        for (int it = 0; it < 3; ++it) {
            auto phi = d1(A, random_even_cochain(A, g));
            auto s = solve_coboundary(A, phi);
            CAPTURE(n);
            REQUIRE(s.found);
            CHECK(s.verified);
            CHECK(d1(A, s.numerator) == pencil(phi, phi, s.denominator, Poly(0)));
        }
    }
}

TEST_CASE("a non-cocycle is never a coboundary")
{
    auto A = make_sl(2);
    LieSuperAlgebra::Builder b("phi", A.basis());
    b.set(0, 1, {{0, Poly(1)}});
    auto phi = b.build();
    auto c = is_cocycle2(A, phi);
    CHECK_FALSE(c.pass);
    REQUIRE(c.witness);
    CHECK_FALSE(solve_coboundary(A, phi).found);
}

TEST_CASE("sl(2) duals: compatibility and mutual cocycles")
{
    auto s = make_dual_standard(2, P("h")), j = make_dual_jordan(2, P("xi"));
    CHECK(compatible_pair(s, j).pass);
    CHECK(is_cocycle2(s, j).pass);
    CHECK(is_cocycle2(j, s).pass);
    auto a = solve_coboundary(s, j);
    CHECK(a.found);
    CHECK(a.assumptions.render() == std::vector<std::string>{"h != 0"});
    // over the rational function field the other direction trivializes too, with a pole at xi = 0
    auto b = solve_coboundary(j, s);
    CHECK(b.found);
    CHECK(b.denominator == Poly::param("xi"));
    CHECK(b.assumptions.render() == std::vector<std::string>{"xi != 0"});
}

TEST_CASE("osp(1|2): mu2* is a coboundary over mu1*, printed psi misses one entry")
{
    auto o = make_osp12();
    CHECK(compatible_pair(o.mu1, o.mu2).pass);
    CHECK(is_cocycle2(o.mu1, o.mu2).pass);
    CHECK(is_cocycle2(o.mu2, o.mu1).pass);
    auto s = solve_coboundary(o.mu1, o.mu2);
    REQUIRE(s.found);
    CHECK(s.denominator == Poly(1));
    CHECK(d1(o.mu1, s.numerator) == o.mu2);

    auto D = d1(o.mu1, o.psi);
    const auto& B = *o.mu1.basis();
    int vm = B.index("hat_vm"), Xm = B.index("hat_Xm");
    for (int i = 0; i < B.size(); ++i)
        for (int j = i; j < B.size(); ++j) {
            if (i == vm && j == vm)
                continue;
            CHECK(bracket_basis(D, i, j) == bracket_basis(o.mu2, i, j));
        }
    CHECK(bracket_basis(D, vm, vm) == Poly(12) * TensorElement::basis_vector(o.mu1.basis(), Xm));
    CHECK(bracket_basis(o.mu2, vm, vm).is_zero());
}

TEST_CASE("second cohomology dimensions against a numeric rank oracle")
{
    Assignment at{{P("xi"), make_rational(3, 2)}, {P("h"), make_rational(5, 3)}};
    for (const char* n : {"sl2.dual.jordan", "sl2.dual.std", "sl2", "borel"}) {
        auto A = *catalog_get(n).algebra;
        auto rep = h2_dim(A);
        auto d = dims_at(A, at);
        CAPTURE(n);
        CHECK(rep.cochain1_dim == d.c1);
        CHECK(rep.cochain2_dim == d.c2);
        CHECK(rep.image_dim == d.rank_d1);
        CHECK(rep.kernel_dim == d.c2 - d.rank_d2);
        CHECK(rep.quotient_dim == rep.kernel_dim - rep.image_dim);
        CHECK(rep.generic_check);
    }
    auto j = h2_dim(make_dual_jordan(2, P("xi")));
    CHECK(j.kernel_dim == 6);
    CHECK(j.image_dim == 3);
    CHECK(j.quotient_dim == 3);
    // semisimple: H2(sl2, sl2) = 0
    CHECK(h2_dim(make_sl(2)).quotient_dim == 0);
}

TEST_CASE("odd 2-cochains are out of scope")
{
    auto o = make_osp12();
    LieSuperAlgebra::Builder b("odd", o.algebra.basis(), 1);
    b.set(0, 1, {{3, Poly(1)}});
    CHECK_THROWS_AS(solve_coboundary(o.algebra, b.build()), UnsupportedInput);
}

TEST_CASE("linear solver with a parameter pivot")
{
    Poly h = Poly::param("h");
    PolyMatrix a{{h, Poly(1)}, {Poly(0), h}};
    std::vector<Poly> b{Poly(1), Poly(2)};
    auto s = solve(a, b);
    REQUIRE(s.consistent);
    // a * (numerators / denominator) == b
    for (std::size_t r = 0; r < 2; ++r) {
        Poly lhs;
        for (std::size_t c = 0; c < 2; ++c)
            lhs += a[r][c] * s.numerators[c];
        CHECK(lhs == s.denominator * b[r]);
    }
    CHECK_FALSE(s.assumptions.empty());
    PolyMatrix sing{{Poly(1), Poly(1)}, {Poly(1), Poly(1)}};
    auto t = solve(sing, {Poly(1), Poly(2)});
    CHECK_FALSE(t.consistent);
    CHECK(t.rank_a == 1);
    CHECK(t.rank_aug == 2);
}
