#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar/param.hpp"

namespace wb {

using Rational = mpq_class;

/// Rational p/q in lowest terms.
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Power product of parameters, sorted by parameter id, no zero exponents.
class Monomial {
public:
    using Factor = std::pair<Param, unsigned>;

    Monomial() = default;
    explicit Monomial(Param p, unsigned e = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree_in(Param p) const;
    unsigned total_degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient if `b` divides `a`.
    friend std::optional<Monomial> divide(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Lexicographic monomial order, lower parameter id most significant.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// Same monomial with `p` removed.
    Monomial without(Param p) const;
    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

/// Parameters counted toward the truncation degree and the cutoff D.
struct TruncationOrder {
    unsigned degree = 0;
    std::vector<Param> graded;

    unsigned degree_of(const Monomial& m) const;
    bool is_graded(Param p) const;
};

using Assignment = std::map<Param, Rational>;

/// Exact multivariate polynomial with rational coefficients in central
/// even parameters. Terms are kept sorted by monomial, no zero coefficients.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c);  // NOLINT: scalars promote implicitly
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    static Poly param(Param p, unsigned e = 1);
    static Poly param(std::string_view name, unsigned e = 1) { return param(Param::intern(name), e); }
    static Poly term(const Monomial& m, const Rational& c);
    /// Sums an unsorted list of terms (duplicates merged, zeros dropped).
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant coefficient (zero if absent).
    Rational constant_term() const;
    unsigned total_degree() const;
    unsigned degree_in(Param p) const;
    /// Smallest graded degree among the terms; nullopt for zero.
    std::optional<unsigned> min_degree(const TruncationOrder& t) const;
    std::vector<Param> variables() const;
    /// Leading term in the monomial order.
    const Term& leading() const { return terms_.back(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(long c, Poly a) { return a *= Rational(c); }
    friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Coefficient of p^e as a polynomial in the remaining parameters.
    Poly coefficient(Param p, unsigned e) const;
    /// Part of the polynomial with graded degree exactly `d`.
    Poly homogeneous_part(const TruncationOrder& t, unsigned d) const;
    /// Gcd of all monomials (the monomial content); one for zero.
    Monomial monomial_content() const;
    Poly divided_by(const Monomial& m) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Evaluates named parameters; unassigned parameters stay formal.
Poly substitute(const Poly& p, const Assignment& a);
/// Name-keyed variant; names never declared raise DefinitionError.
Poly substitute(const Poly& p, const std::map<std::string, Rational>& a);
/// Drops every term of graded degree > D.
Poly truncate(const Poly& p, const TruncationOrder& t);
/// Product with early pruning of terms beyond the truncation degree.
Poly multiply_truncated(const Poly& a, const Poly& b, const TruncationOrder& t);
/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Value at a full assignment; throws if a parameter is left unassigned.
Rational evaluate(const Poly& p, const Assignment& a);

} // namespace wb
