#pragma once

#include <stdexcept>
#include <string>

namespace fakemu {

// Base of every error thrown by the library. `code()` is a stable
// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("budget_exceeded", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error("consistency_error", what) {}
};

struct NumericFailure : Error {
    explicit NumericFailure(const std::string& what) : Error("numeric_failure", what) {}
};

}  // namespace fakemu
