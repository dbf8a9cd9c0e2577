#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog/catalog.hpp"
#include "errors.hpp"

using namespace wb;

namespace {

using Mat = std::vector<std::vector<long>>;

Mat unit(int n, int i, int j)
{
    Mat m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
    return m;
}

Mat commutator(const Mat& a, const Mat& b)
{
    std::size_t n = a.size();
    Mat c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

// Matrix of each sl(N) basis element, in the order of make_sl.
std::vector<Mat> sl_matrices(int n, const GradedBasis& B)
{
    std::vector<Mat> out;
    for (int i = 0; i < B.size(); ++i) {
        for (int k = 1; k < n; ++k)
            if (B.name(i) == sl_h_name(n, k)) {
                Mat m = unit(n, k, k);
                m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = -1;
                out.push_back(m);
            }
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (a != b && B.name(i) == sl_e_name(n, a, b))
                    out.push_back(unit(n, a, b));
    }
    return out;
}

// Coordinates of a traceless matrix: off-diagonal entries directly, the
// diagonal through H_k = E_kk - E_k+1,k+1 (partial sums).
std::vector<long> coords(int n, const GradedBasis& B, const Mat& m)
{
    std::vector<long> c(static_cast<std::size_t>(B.size()), 0);
    long partial = 0;
    for (int k = 1; k < n; ++k) {
        partial += m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
        c[static_cast<std::size_t>(B.index(sl_h_name(n, k)))] = partial;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b)
                c[static_cast<std::size_t>(B.index(sl_e_name(n, a, b)))] =
                    m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    return c;
}

} // namespace

TEST_CASE("sl(N) structure constants agree with matrix commutators")
{
    for (int n : {2, 3, 4}) {
        auto A = make_sl(n);
        const auto& B = *A.basis();
        auto mats = sl_matrices(n, B);
        REQUIRE(static_cast<int>(mats.size()) == B.size());
        for (int i = 0; i < B.size(); ++i)
            for (int j = 0; j < B.size(); ++j) {
                auto want = coords(n, B, commutator(mats[static_cast<std::size_t>(i)], mats[static_cast<std::size_t>(j)]));
                auto got = bracket_basis(A, i, j);
                for (int k = 0; k < B.size(); ++k)
                    CHECK(got.coeff({k, 0, 0}) == Poly(want[static_cast<std::size_t>(k)]));
            }
    }
}

TEST_CASE("sl(2) and sl(3) sample brackets")
{
    auto s2 = make_sl(2);
    auto e = [&](const LieSuperAlgebra& A, const std::string& n) { return TensorElement::basis_vector(A.basis(), n); };
    CHECK(bracket(s2, e(s2, "H12"), e(s2, "E12")) == Poly(2) * e(s2, "E12"));
    CHECK(bracket(s2, e(s2, "H12"), e(s2, "E21")) == Poly(-2) * e(s2, "E21"));
    CHECK(bracket(s2, e(s2, "E12"), e(s2, "E21")) == e(s2, "H12"));
    auto s3 = make_sl(3);
    CHECK(bracket(s3, e(s3, "E12"), e(s3, "E23")) == e(s3, "E13"));
    auto s4 = make_sl(4);
    CHECK(bracket(s4, e(s4, "E12"), e(s4, "E34")).is_zero());
}

TEST_CASE("wedge and flip")
{
    auto B = make_osp12().algebra.basis();
    std::mt19937 g(3);
    std::uniform_int_distribution<int> pick(0, B->size() - 1);
    for (int it = 0; it < 50; ++it) {
        auto x = TensorElement::basis_vector(B, pick(g)), y = TensorElement::basis_vector(B, pick(g));
        CHECK(wedge(x, y) == -flip(wedge(x, y)));
        auto t = tensor_product(x, y);
        CHECK(flip(flip(t)) == t);
        CHECK(symmetric_part(t) + antisymmetric_part(t) == t);
        auto z = TensorElement::basis_vector(B, pick(g));
        auto u = tensor_product(t, z);
        CHECK(cyclic_shift(cyclic_shift(cyclic_shift(u))) == u);
    }
    // odd generators: v^v is symmetric in the plain sense
    auto v = TensorElement::basis_vector(B, "vp");
    CHECK(wedge(v, v) == Poly(2) * tensor_product(v, v));
}

TEST_CASE("graded jacobi on the catalog algebras")
{
    for (const char* n : {"sl2", "sl3", "sl4", "gl3", "borel", "osp12", "double.g1", "double.g2", "double.g1dual",
                          "double.g2dual", "double.pencil", "sl2.dual.std", "sl2.dual.jordan", "mu1star", "mu2star"}) {
        CAPTURE(n);
        CHECK(verify_jacobi(*catalog_get(n).algebra).pass);
    }
}

TEST_CASE("corrupted sl(2) is caught with a witness")
{
    auto B = make_sl(2).basis();
    LieSuperAlgebra::Builder b("bad", B);
    b.set(0, 1, {{1, Poly(2)}}).set(0, 2, {{2, Poly(-3)}}).set(1, 2, {{0, Poly(1)}});
    auto j = verify_jacobi(b.build());
    CHECK_FALSE(j.pass);
    REQUIRE(j.witness);
    CHECK(j.residual == TensorElement::basis_vector(B, 0));
}

TEST_CASE("builder rejects parity violations")
{
    auto B = GradedBasis::make({{"h", Parity::Even}, {"v", Parity::Odd}});
    LieSuperAlgebra::Builder b("x", B);
    CHECK_THROWS_AS(b.set(0, 1, {{0, Poly(1)}}), DefinitionError);
    CHECK_THROWS_AS(b.set(0, 0, {{0, Poly(1)}}), DefinitionError);
    CHECK_NOTHROW(b.set(1, 1, {{0, Poly(1)}}));
    CHECK_THROWS_AS(GradedBasis::make({{"a", Parity::Even}, {"a", Parity::Odd}}), DefinitionError);
}

TEST_CASE("pencil is linear in the structure constants")
{
    auto d = make_double_pieces(Param::intern("theta"));
    auto p = pencil(d.g1, d.g2, Poly(1), Poly(0));
    CHECK(p == d.g1);
    auto q = pencil(d.g1, d.g2, Poly::param("alpha1"), Poly::param("alpha2"));
    CHECK(substitute(q, Assignment{{Param::intern("alpha1"), Rational(0)}, {Param::intern("alpha2"), Rational(1)}}) == d.g2);
}
