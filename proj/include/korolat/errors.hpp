#pragma once

#include <stdexcept>
#include <string>

namespace korolat {

// Error kinds map onto CLI exit codes: input errors exit 2, blown work
// budgets exit 3, internal guards exit 4.
enum class Errc {
    NotPrime,
    NonDivisorOrder,
    ZeroRepresentative,
    OutOfRange,
    OutOfDomain,
    NoBranch,
    DimensionMismatch,
    EmptyInput,
    EmptySample,
    BadArity,
    CapExceeded,
    BudgetExceeded,
    SpectralMismatch,
    TableMismatch,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

    bool is_budget() const {
        return code_ == Errc::CapExceeded || code_ == Errc::BudgetExceeded;
    }
    bool is_internal() const {
        return code_ == Errc::SpectralMismatch || code_ == Errc::TableMismatch ||
               code_ == Errc::Internal;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace korolat
