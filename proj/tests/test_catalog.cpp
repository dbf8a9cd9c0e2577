#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "catalog/catalog.hpp"
#include "errors.hpp"
#include "uea/uea.hpp"

using namespace wb;

namespace {

Param h()
{
    return Param::intern("h");
}
Param xi()
{
    return Param::intern("xi");
}

TensorElement v(const LieSuperAlgebra& A, const std::string& n)
{
    return TensorElement::basis_vector(A.basis(), n);
}

} // namespace

TEST_CASE("standard r for N=2 as printed")
{
    auto A = make_sl(2);
    Poly hp = Poly::param(h());
    auto want = hp * make_rational(1, 2) * tensor_product(v(A, "H12"), v(A, "H12")) +
                Poly(2) * hp * tensor_product(v(A, "E21"), v(A, "E12"));
    CHECK(make_rdj(2, h()) == want);
}

TEST_CASE("standard r Cartan block is symmetric")
{
    auto r = make_rdj(3, h());
    auto A = make_sl(3);
    int a = A.basis()->index("H12"), b = A.basis()->index("H23");
    CHECK(r.coeff({a, b, 0}) == r.coeff({b, a, 0}));
    CHECK_FALSE(r.coeff({a, b, 0}).is_zero());
    CHECK(substitute(r, Assignment{{h(), Rational(0)}}).is_zero());
}

TEST_CASE("jordanian r for N=2 and N=3")
{
    auto A2 = make_sl(2);
    CHECK(make_rjordan(2, xi()) == -Poly::param(xi()) * wedge(v(A2, "H12"), v(A2, "E12")));
    auto A3 = make_sl(3);
    auto H13 = v(A3, "H12") + v(A3, "H23");
    auto want = -Poly::param(xi()) * (wedge(H13, v(A3, "E13")) + Poly(2) * wedge(v(A3, "E12"), v(A3, "E23")));
    CHECK(make_rjordan(3, xi()) == want);
}

TEST_CASE("full r decomposes and degenerates")
{
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        auto full = make_rfull(n, h(), xi());
        CHECK(full == make_rdj(n, h()) + make_rjordan(n, xi()));
        CHECK(substitute(full, Assignment{{h(), Rational(0)}}) == make_rjordan(n, xi()));
    }
}

TEST_CASE("osp(1|2) printed values")
{
    auto o = make_osp12();
    auto hat = [&](const std::string& n) { return TensorElement::basis_vector(o.mu1.basis(), "hat_" + n); };
    CHECK(bracket(o.mu1, hat("h"), hat("Xp")) == Poly(-2) * hat("Xp"));
    CHECK(bracket(o.mu2, hat("vp"), hat("vp")) == Poly(4) * hat("h"));
    CHECK(o.psi.apply(hat("h")) == -hat("Xp"));
}

TEST_CASE("osp(1|2) even generators are squares of the odd ones")
{
    auto A = make_osp12().algebra;
    auto eng = make_engine(A);
    TruncationOrder o{};
    auto g = [&](const char* n) { return UEAElement::generator(eng, o, n); };
    CHECK(Poly(4) * (g("vp") * g("vp")) == g("Xp"));
    CHECK(Poly(-4) * (g("vm") * g("vm")) == g("Xm"));
}

TEST_CASE("registry")
{
    auto names = catalog_names();
    for (const char* n : {"osp12", "r.jordan", "psi", "sl2", "mu.prime"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(catalog_get("no.such.entry"), DefinitionError);
    CHECK(catalog_get("r.dj").kind == CatalogEntry::Kind::Tensor);
    CHECK(catalog_get("psi").kind == CatalogEntry::Kind::Cochain1);
    CHECK(catalog_names() == names);
}

TEST_CASE("mu' transcription report")
{
    auto r = mu_prime_report(3);
    CHECK(r.lines.size() == 9);
    int vacuous = 0;
    for (const auto& l : r.lines)
        vacuous += l.vacuous();
    CHECK(vacuous == 1);
    CHECK(r.conflicts.empty());
    // a reported finding, not a precondition
    CHECK_FALSE(r.jacobi.pass);

    auto r2 = mu_prime_report(2);
    CHECK(r2.jacobi.pass);
    CHECK(r2.jordan_match == "direct");
    CHECK(r2.std_compatible_direct);

    auto again = mu_prime_report(3);
    CHECK(again.jordan_match == r.jordan_match);
    CHECK(again.jacobi.residual == r.jacobi.residual);
}
