#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lie/algebra.hpp"

namespace wb {

/// Exponent vector in basis (PBW) order; odd exponents are 0 or 1.
using PBWMonomial = std::vector<unsigned>;
using UTerms = std::map<PBWMonomial, Poly>;

/// PBW rewriting for U(g). Products of normal monomials are cached.
class UEAEngine {
public:
    explicit UEAEngine(LieSuperAlgebra algebra);

    const LieSuperAlgebra& algebra() const { return algebra_; }
    int dim() const { return algebra_.dim(); }
    PBWMonomial one() const { return PBWMonomial(static_cast<std::size_t>(dim()), 0u); }
    PBWMonomial generator(int g) const;
    int parity(const PBWMonomial& m) const;
    unsigned degree(const PBWMonomial& m) const;

    /// Normal form of m·x_g.
    UTerms mul_gen(const PBWMonomial& m, int g);
    /// Normal form of a·b.
    UTerms multiply(const PBWMonomial& a, const PBWMonomial& b);

    std::string render(const PBWMonomial& m) const;

private:
    UTerms mul_gen_uncached(const PBWMonomial& m, int g);

    LieSuperAlgebra algebra_;
    std::mutex mutex_;
    std::map<std::pair<PBWMonomial, int>, UTerms> gen_cache_;
    std::map<std::pair<PBWMonomial, PBWMonomial>, UTerms> mono_cache_;
};

using EnginePtr = std::shared_ptr<UEAEngine>;

EnginePtr make_engine(const LieSuperAlgebra& algebra);

/// Element of U(g) with coefficients truncated at the graded degree D.
class UEAElement {
public:
    UEAElement(EnginePtr engine, TruncationOrder order);

    static UEAElement scalar(EnginePtr engine, TruncationOrder order, const Poly& c);
    static UEAElement generator(EnginePtr engine, TruncationOrder order, int g);
    static UEAElement generator(EnginePtr engine, TruncationOrder order, const std::string& name);

    const EnginePtr& engine() const { return engine_; }
    const TruncationOrder& order() const { return order_; }
    const UTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PBWMonomial& m, const Poly& c);

    UEAElement one() const { return scalar(engine_, order_, Poly(1)); }
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
    friend UEAElement operator*(const Poly& c, const UEAElement& a);
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

    /// Every coefficient has graded degree ≥ 1.
    bool positive_degree() const;
    std::string to_string() const;

private:
    EnginePtr engine_;
    TruncationOrder order_;
    UTerms terms_;
};

/// Element of U(g)^{⊗rank}, rank 2 or 3. Slot products carry Koszul signs.
class TensorUEA {
public:
    using Key = std::vector<PBWMonomial>;

    TensorUEA(EnginePtr engine, int rank, TruncationOrder order);

    static TensorUEA one(EnginePtr engine, int rank, TruncationOrder order);
    /// Pure tensor of its factors; rank = factors.size().
    static TensorUEA pure(const std::vector<UEAElement>& factors);

    const EnginePtr& engine() const { return engine_; }
    int rank() const { return rank_; }
    const TruncationOrder& order() const { return order_; }
    const std::map<Key, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const Poly& c);

    TensorUEA one() const { return one(engine_, rank_, order_); }
    TensorUEA& operator+=(const TensorUEA& o);
    TensorUEA& operator-=(const TensorUEA& o);
    friend TensorUEA operator+(TensorUEA a, const TensorUEA& b) { return a += b; }
    friend TensorUEA operator-(TensorUEA a, const TensorUEA& b) { return a -= b; }
    friend TensorUEA operator*(const TensorUEA& a, const TensorUEA& b);
    friend TensorUEA operator*(const Poly& c, const TensorUEA& a);
    friend bool operator==(const TensorUEA& a, const TensorUEA& b) { return a.terms_ == b.terms_; }

    bool positive_degree() const;
    /// Smallest graded degree among the coefficients.
    std::optional<unsigned> min_degree() const;
    std::string to_string(std::size_t max_terms = 0) const;

private:
    EnginePtr engine_;
    int rank_;
    TruncationOrder order_;
    std::map<Key, Poly> terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of a raw word of generators by naive adjacent rewriting,
/// independent of the cached engine.
UTerms pbw_normalize_word(const LieSuperAlgebra& A, const std::vector<int>& word, RewriteStrategy s);
/// Same word through the cached engine.
UEAElement pbw_normalize(EnginePtr engine, TruncationOrder order, const std::vector<int>& word);

/// Σ u^k/k!; UnsupportedInput unless u has positive degree.
UEAElement exp_trunc(const UEAElement& u);
/// log(1 + u) = Σ (−1)^{k+1} u^k / k.
UEAElement log_trunc(const UEAElement& u);
TensorUEA exp_trunc(const TensorUEA& u);
TensorUEA log_trunc(const TensorUEA& u);
/// (1 + G)^{-1} = Σ (−G)^k with G = F − 1.
TensorUEA inverse(const TensorUEA& f);

TensorUEA coproduct(const UEAElement& u);
/// (Δ⊗id)F and (id⊗Δ)F for F of rank 2.
TensorUEA delta_left(const TensorUEA& f);
TensorUEA delta_right(const TensorUEA& f);
/// F of rank 2 placed in legs (i, j) of a rank-3 tensor, 0-based, i < j.
TensorUEA leg(const TensorUEA& f, int i, int j);
/// τ(a⊗b) = (−1)^{|a||b|} b⊗a.
TensorUEA flip(const TensorUEA& f);
/// (ε⊗id)F and (id⊗ε)F.
UEAElement counit_left(const TensorUEA& f);
UEAElement counit_right(const TensorUEA& f);

/// exp(½ h⊗ln(1+2ξx)) on the Borel subalgebra, ξ-degree ≤ D.
TensorUEA build_jordanian_twist(int d);
/// exp(2ξ Σ_{i=2}^{N−1} E_1i⊗E_iN e^{−σ}) exp(H⊗σ), σ = ½ ln(1+2ξE_1N), H = H_1N.
TensorUEA build_extended_twist(int n, int d);
/// 1⊗1 + t for a degree-2 tensor t.
TensorUEA twist_from_tensor(EnginePtr engine, const TensorElement& t, TruncationOrder order);

/// F12·(Δ⊗id)F − F23·(id⊗Δ)F.
TensorUEA twist_cocycle_check(const TensorUEA& f);
/// flip(F)·F^{-1}.
TensorUEA universal_R(const TensorUEA& f);
/// R12 R13 R23 − R23 R13 R12.
TensorUEA qybe_check(const TensorUEA& r);
/// Degree-1 part of R − 1⊗1 as a Lie tensor. StructuralError if it
/// contains anything but products of two generators.
TensorElement classical_limit(const TensorUEA& r);

struct FactoredCompare {
    bool equal = true;
    std::optional<unsigned> failing_order;
    std::string sample;
};

/// Π_j exp(2ξ E_jN e^{−σ}⊗E_1j) exp(σ⊗H) exp(−H⊗σ) Π_j exp(−2ξ E_1j⊗E_jN e^{−σ})
/// against universal_R(build_extended_twist(N, D)).
FactoredCompare factored_R_compare(int n, int d);

TruncationOrder xi_order(int d);

} // namespace wb
