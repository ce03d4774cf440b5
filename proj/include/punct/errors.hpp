#pragma once

#include <stdexcept>
#include <string>

namespace punct {

// Base of every error thrown by the library. `code()` is a stable
// module-qualified identifier the CLI prints verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct InfeasibleIndex : Error {
    explicit InfeasibleIndex(const std::string& w) : Error("foundations/infeasible-index", w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("copies/budget-exceeded", w) {}
};

struct NotFoundWithinBudget : Error {
    explicit NotFoundWithinBudget(const std::string& w) : Error("copies/not-found-within-budget", w) {}
};

struct MissingBaseAddition : Error {
    explicit MissingBaseAddition(const std::string& w) : Error("lift/missing-base-addition", w) {}
};

struct MissingBasePow : Error {
    explicit MissingBasePow(const std::string& w) : Error("lift/missing-base-pow", w) {}
};

struct ParseError : Error {
    ParseError(const std::string& w, std::size_t position)
        : Error("levitz/parse-error", w + " (at offset " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

struct EvalOverflow : Error {
    explicit EvalOverflow(const std::string& w) : Error("levitz/eval-overflow", w) {}
};

struct CodeOverflow : Error {
    explicit CodeOverflow(const std::string& w) : Error("levitz/code-overflow", w) {}
};

struct NotAdditivePrime : Error {
    explicit NotAdditivePrime(const std::string& w) : Error("levitz/not-additive-prime", w) {}
};

struct ComparisonContractViolated : Error {
    explicit ComparisonContractViolated(const std::string& w)
        : Error("levitz/comparison-contract-violated", w) {}
};

struct InvalidRequirement : Error {
    explicit InvalidRequirement(const std::string& w) : Error("island/invalid-requirement", w) {}
};

struct InvalidOpponentTable : Error {
    explicit InvalidOpponentTable(const std::string& w) : Error("island/invalid-opponent-table", w) {}
};

struct FamilyContractViolated : Error {
    explicit FamilyContractViolated(const std::string& w) : Error("island/family-contract-violated", w) {}
};

struct ConstantPolynomial : Error {
    explicit ConstantPolynomial(const std::string& w) : Error("island/constant-polynomial", w) {}
};

struct EngineLimitExceeded : Error {
    explicit EngineLimitExceeded(const std::string& w) : Error("island/engine-limit-exceeded", w) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& w) : Error("cli/usage", w) {}
};

} // namespace punct
