#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cohomology/cochain.hpp"
#include "dsl/ast.hpp"
#include "lie/algebra.hpp"

namespace wb::dsl {

enum class Status { Pass, Fail, Unsupported };

const char* status_name(Status s);

struct CheckResult {
    std::string check;  ///< the statement as rendered DSL
    Status status = Status::Pass;
    std::string witness;
    std::vector<std::string> details;
    std::vector<std::string> assumptions;
    double seconds = 0;
};

struct Report {
    int order = 3;
    std::vector<std::string> assumptions;  ///< from --assume
    bool timings = false;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// 0 when every check passed, 1 otherwise.
    int exit_code() const;
};

std::string render_text(const Report& r);
/// JSON tree; key order and content depend only on the inputs.
std::string render_structured(const Report& r);

struct RunOptions {
    int order = 3;
    std::vector<std::string> assumptions;
    bool timings = false;
    bool parallel = true;
};

/// An algebra-valued object together with the algebra it lives on.
struct HostedTensor {
    TensorElement tensor;
    LieSuperAlgebra host;
};

struct HostedCochain {
    Cochain1 cochain;
    LieSuperAlgebra host;
};

/// Loaded definitions plus the checks, resolved at load time.
///
/// Names resolve to user declarations first, then to catalog entries.
/// Inside an algebra context, generator names shadow parameters.
class Session {
public:
    explicit Session(RunOptions opts = {});

    /// Throws SourceError; the session keeps whatever loaded before the error.
    void load(const WorkbenchFile& f);
    void load_text(const std::string& text);

    Report run() const;

    RunOptions& options() { return opts_; }
    const RunOptions& options() const { return opts_; }
    std::size_t check_count() const { return checks_.size(); }

    const LieSuperAlgebra& algebra(const std::string& name) const;
    const HostedTensor& tensor(const std::string& name) const;
    const HostedCochain& cochain(const std::string& name) const;

private:
    struct Prepared {
        std::string text;
        std::function<CheckResult(const RunOptions&)> run;
    };

    void declare(const std::string& name, Pos pos);
    void load_algebra(const AlgebraDecl& d);
    void load_tensor(const TensorDecl& d);
    void load_cochain(const CochainDecl& d);
    void load_check(const CheckStmt& c);

    LieSuperAlgebra find_algebra(const std::string& name, Pos pos) const;
    HostedTensor find_tensor(const std::string& name, Pos pos) const;
    HostedCochain find_cochain(const std::string& name, Pos pos) const;

    struct Value;
    Value eval(const Expr& e, const BasisPtr& basis) const;
    TensorElement eval_tensor(const Expr& e, const BasisPtr& basis, int degree) const;

    RunOptions opts_;
    std::set<std::string> params_;
    std::set<std::string> names_;
    std::map<std::string, LieSuperAlgebra> algebras_;
    std::map<std::string, HostedTensor> tensors_;
    std::map<std::string, HostedCochain> cochains_;
    std::string last_algebra_;
    std::vector<Prepared> checks_;
};

/// Runs each check body and fills in status on errors (UnsupportedInput
/// becomes Unsupported, any other failure becomes Fail).
CheckResult guarded(const std::string& text, const std::function<CheckResult()>& body, bool timings);

/// DSL text that reproduces a catalog entry (with its host algebra).
std::string export_entry(const std::string& name);

} // namespace wb::dsl
