#pragma once

#include <stdexcept>
#include <string>

namespace vgp {

enum class ErrorKind {
    // validation (exit code 2)
    InvalidParams,
    HorizonError,
    OutOfStrip,
    OutOfDomain,
    DomainError,
    StripError,
    LengthError,
    FracRange,
    BracketError,
    NoBracket,
    GridError,
    NotSolvable,
    InputError,
    // numerical (exit code 3)
    NonFiniteSample,
    BranchFailure,
    TailError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    bool numerical() const {
        return kind_ == ErrorKind::NonFiniteSample || kind_ == ErrorKind::BranchFailure ||
               kind_ == ErrorKind::TailError;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace vgp
