#pragma once

#include <string>
#include <vector>

#include "cohomology/cochain.hpp"
#include "dsl/session.hpp"

// One function per DSL check kind. Each returns status, witness and detail
// lines; the caller fills in the check text and timing.
namespace wb::dsl::checks {

using Strings = std::vector<std::string>;

CheckResult jacobi(const LieSuperAlgebra& A);
CheckResult cybe(const LieSuperAlgebra& A, const TensorElement& r);
CheckResult mcybe(const LieSuperAlgebra& A, const TensorElement& r);
CheckResult invariant(const LieSuperAlgebra& A, const TensorElement& t);
CheckResult cobracket(const LieSuperAlgebra& A, const TensorElement& r);
CheckResult cocycle(const LieSuperAlgebra& A, const Cochain2& phi);
CheckResult coboundary(const LieSuperAlgebra& A, const Cochain2& phi, const Strings& assumed);
CheckResult differential(const LieSuperAlgebra& A, const Cochain1& psi, const Cochain2& phi);
CheckResult compatible(const LieSuperAlgebra& a, const LieSuperAlgebra& b);
CheckResult h2(const LieSuperAlgebra& A, const Strings& assumed);
CheckResult decompose(const TensorElement& full, const TensorElement& r1, const TensorElement& r2);
CheckResult limit(const TensorElement& r, Param p, const TensorElement& target);
CheckResult adtwist(const LieSuperAlgebra& A, const TensorElement& r, int z, Param p, const TensorElement& target);
CheckResult twist_jordanian(int d);
CheckResult twist_extended(int n, int d);
CheckResult twist_linear(const LieSuperAlgebra& A, const TensorElement& t, int d);
CheckResult factored(int n, int d);
CheckResult mu_prime(int n);

/// Long renderings are cut to `limit` characters with a term count note.
std::string clip(const std::string& s, std::size_t limit = 600);

} // namespace wb::dsl::checks
