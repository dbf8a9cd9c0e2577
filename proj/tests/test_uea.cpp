#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog/catalog.hpp"
#include "errors.hpp"
#include "uea/uea.hpp"

using namespace wb;

namespace {

UTerms to_terms(const UEAElement& u)
{
    return u.terms();
}

} // namespace

TEST_CASE("PBW normal form does not depend on the rewriting order")
{
    std::mt19937 g(29);
    for (const char* n : {"sl2", "sl3", "osp12", "borel", "gl3"}) {
        auto A = *catalog_get(n).algebra;
        auto eng = make_engine(A);
        std::uniform_int_distribution<int> pick(0, A.dim() - 1), len(1, 5);
        for (int it = 0; it < 25; ++it) {
            std::vector<int> w;
            for (int k = len(g); k > 0; --k)
                w.push_back(pick(g));
            CAPTURE(n);
            auto left = pbw_normalize_word(A, w, RewriteStrategy::Leftmost);
            auto right = pbw_normalize_word(A, w, RewriteStrategy::Rightmost);
            CHECK(left == right);
            CHECK(to_terms(pbw_normalize(eng, TruncationOrder{}, w)) == left);
        }
    }
}

TEST_CASE("U(g) is associative and respects the bracket")
{
    auto A = make_osp12().algebra;
    auto eng = make_engine(A);
    TruncationOrder o{};
    std::mt19937 g(31);
    std::uniform_int_distribution<int> pick(0, A.dim() - 1);
    const auto& B = *A.basis();
    for (int it = 0; it < 40; ++it) {
        int a = pick(g), b = pick(g), c = pick(g);
        auto x = UEAElement::generator(eng, o, a), y = UEAElement::generator(eng, o, b),
             z = UEAElement::generator(eng, o, c);
        CHECK((x * y) * z == x * (y * z));
        // xy - (-1)^{|x||y|} yx = [x,y]
        UEAElement br(eng, o);
        for (const auto& [k, co] : A.bracket(a, b))
            br += co * UEAElement::generator(eng, o, k);
        CHECK(x * y - Poly(sign_of(B.parity(a) * B.parity(b))) * (y * x) == br);
    }
}

TEST_CASE("coproduct is an algebra map and counital")
{
    for (const char* n : {"sl2", "osp12"}) {
        auto A = *catalog_get(n).algebra;
        auto eng = make_engine(A);
        TruncationOrder o{};
        std::mt19937 g(37);
        std::uniform_int_distribution<int> pick(0, A.dim() - 1);
        for (int it = 0; it < 20; ++it) {
            auto x = UEAElement::generator(eng, o, pick(g)) * UEAElement::generator(eng, o, pick(g));
            auto y = UEAElement::generator(eng, o, pick(g));
            CAPTURE(n);
            CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
            CHECK(counit_left(coproduct(x)) == x);
            CHECK(counit_right(coproduct(x)) == x);
        }
    }
}

TEST_CASE("exp and log are inverse up to the truncation order")
{
    auto B = make_borel();
    auto eng = make_engine(B);
    auto o = xi_order(4);
    auto u = Poly::param("xi") * UEAElement::generator(eng, o, "x");
    CHECK(log_trunc(exp_trunc(u) - u.one()) == u);
    auto F = build_jordanian_twist(3);
    CHECK(inverse(F) * F == F.one());
    CHECK_THROWS_AS(exp_trunc(UEAElement::generator(eng, o, "h")), UnsupportedInput);
}

TEST_CASE("jordanian twist against the binomial series")
{
    // exp(1/2 h (x) log(1+2 xi x)) = sum_k binom(h/2, k) (x) (2 xi x)^k
    for (int d = 1; d <= 4; ++d) {
        auto F = build_jordanian_twist(d);
        auto eng = F.engine();
        auto o = F.order();
        auto h = UEAElement::generator(eng, o, "h"), x = UEAElement::generator(eng, o, "x");
        auto one = h.one();
        TensorUEA want(eng, 2, o);
        UEAElement binom = one, power = one;
        for (int k = 0; k <= d; ++k) {
            want += TensorUEA::pure({binom, power});
            binom = Poly(make_rational(1, k + 1)) * (binom * (Poly(make_rational(1, 2)) * h - Poly(k) * one));
            power = power * (Poly(2) * Poly::param("xi") * x);
        }
        CAPTURE(d);
        CHECK(F == want);
    }
}

TEST_CASE("jordanian twist at order 2 written out")
{
    auto F = build_jordanian_twist(2);
    auto eng = F.engine();
    auto o = F.order();
    auto h = UEAElement::generator(eng, o, "h"), x = UEAElement::generator(eng, o, "x");
    Poly xi = Poly::param("xi");
    auto want = F.one() + xi * TensorUEA::pure({h, x}) - xi * xi * TensorUEA::pure({h, x * x}) +
                Poly(make_rational(1, 2)) * xi * xi * TensorUEA::pure({h * h, x * x});
    CHECK(F == want);
}

TEST_CASE("jordanian twist: cocycle, QYBE, classical limit")
{
    auto B = make_borel();
    auto hx = Poly::param("xi") * wedge(TensorElement::basis_vector(B.basis(), "h"), TensorElement::basis_vector(B.basis(), "x"));
    for (int d = 1; d <= 3; ++d) {
        auto F = build_jordanian_twist(d);
        CHECK(twist_cocycle_check(F).is_zero());
        CHECK(counit_left(F) == counit_left(F.one()));
        auto R = universal_R(F);
        CHECK(qybe_check(R).is_zero());
        auto cl = classical_limit(R);
        auto c = proportionality(cl, hx);
        REQUIRE(c);
        CHECK(*c == Poly(-1));
        CHECK(check_cybe(B, cl));
    }
}

TEST_CASE("extended twist for sl(3)")
{
    for (int d = 1; d <= 2; ++d) {
        auto F = build_extended_twist(3, d);
        CHECK(twist_cocycle_check(F).is_zero());
        auto R = universal_R(F);
        auto cl = classical_limit(R);
        CHECK(cl == make_rjordan(3, Param::intern("xi")));
        CHECK(check_cybe(make_sl(3), cl));
        CHECK(factored_R_compare(3, d).equal);
    }
    CHECK(qybe_check(universal_R(build_extended_twist(3, 2))).is_zero());
}

TEST_CASE("a linear non-twist fails the cocycle condition at second order")
{
    auto B = make_borel();
    auto x = TensorElement::basis_vector(B.basis(), "x");
    auto F = twist_from_tensor(make_engine(B), Poly::param("xi") * tensor_product(x, x), xi_order(3));
    auto res = twist_cocycle_check(F);
    REQUIRE_FALSE(res.is_zero());
    CHECK(*res.min_degree() == 2);
}
