#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "scalar/polynomial.hpp"

using namespace wb;

namespace {

Poly random_poly(std::mt19937& g, const std::vector<Param>& ps)
{
    std::uniform_int_distribution<int> coef(-5, 5), expo(0, 2), count(0, 4);
    Poly p;
    for (int t = count(g); t > 0; --t) {
        Poly m(make_rational(coef(g), 1 + expo(g)));
        for (Param q : ps)
            m *= Poly::param(q, static_cast<unsigned>(expo(g)));
        p += m;
    }
    return p;
}

} // namespace

TEST_CASE("rational literals stay exact")
{
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
    Poly a = Poly(make_rational(1, 3)) + Poly(make_rational(2, 3));
    CHECK(a == Poly(1));
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 g(7);
    std::vector<Param> ps{Param::intern("h"), Param::intern("xi")};
    for (int it = 0; it < 200; ++it) {
        Poly a = random_poly(g, ps), b = random_poly(g, ps), c = random_poly(g, ps);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
        CHECK(a * Poly(1) == a);
        Poly d = a;
        d += d;
        CHECK(d == Poly(2) * a);
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 g(11);
    Param h = Param::intern("h"), xi = Param::intern("xi");
    Assignment at{{h, make_rational(3, 7)}, {xi, make_rational(-2, 5)}};
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(g, {h, xi}), b = random_poly(g, {h, xi});
        CHECK(evaluate(a * b, at) == evaluate(a, at) * evaluate(b, at));
        CHECK(evaluate(a + b, at) == evaluate(a, at) + evaluate(b, at));
    }
}

TEST_CASE("exact division")
{
    Param h = Param::intern("h"), xi = Param::intern("xi");
    Poly a = Poly::param(h) + Poly::param(xi), b = Poly::param(h) - Poly(2);
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    CHECK_FALSE(divide_exact(a, b));
    CHECK_THROWS(divide_exact(a, Poly()));
}

TEST_CASE("truncation grades only the chosen parameters")
{
    Param h = Param::intern("h"), xi = Param::intern("xi");
    TruncationOrder t{2, {xi}};
    Poly p = Poly::param(h, 5) * Poly::param(xi, 2) + Poly::param(xi, 3);
    CHECK(truncate(p, t) == Poly::param(h, 5) * Poly::param(xi, 2));
    Poly a = Poly(1) + Poly::param(xi), b = Poly(1) - Poly::param(xi);
    CHECK(multiply_truncated(a * a, b * b, t) == truncate(a * a * b * b, t));
}

TEST_CASE("substitution and coefficients")
{
    Param h = Param::intern("h"), xi = Param::intern("xi");
    Poly p = Poly::param(h) * Poly::param(xi) + Poly(3) * Poly::param(xi, 2);
    CHECK(substitute(p, Assignment{{h, Rational(0)}}) == Poly(3) * Poly::param(xi, 2));
    CHECK(p.coefficient(xi, 1) == Poly::param(h));
    CHECK(p.coefficient(xi, 2) == Poly(3));
    CHECK_THROWS_AS(substitute(p, std::map<std::string, Rational>{{"never_declared_zz", Rational(1)}}), DefinitionError);
}

TEST_CASE("rendering is ordered by name")
{
    Poly p = Poly::param("xi") + Poly::param("h");
    CHECK(p.to_string() == "h + xi");
    CHECK((Poly(make_rational(1, 2)) * Poly::param("xi", 2)).to_string() == "1/2*xi^2");
}
