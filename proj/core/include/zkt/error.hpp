#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkt {

/// Every failure the library can report. Names are stable: they appear in
/// CLI output, replay files and scenario expectations.
enum class Errc {
    // crypto / model
    ZeroKey,
    PathLengthMismatch,
    TreeFull,
    IndexOutOfRange,
    WrongKey,
    NotOwner,
    Overflow,
    // circuits
    ConstraintViolation,
    UnknownCircuit,
    // token contract
    IssuerViolation,
    ProofRejected,
    TypeMismatch,
    DuplicateCommitment,
    UnknownIssuerRoot,
    StaleRoot,
    DoubleSpend,
    GrabberReuse,
    ParamMismatch,
    OwnerNotContract,
    InsufficientBalance,
    MissingNft,
    NotAuthority,
    NotDelegate,
    // dvp
    UnknownTokenType,
    InnerTransferFailed,
    // tooling
    ParseError,
    ScenarioAssertionFailed,
};

std::string_view errcName(Errc code) noexcept;

/// Parses a name produced by errcName. Returns false if unknown.
bool errcFromName(std::string_view name, Errc& out) noexcept;

class Error : public std::runtime_error {
public:
    explicit Error(Errc code, std::string detail = {});

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errcName(code_); }

    /// For ConstraintViolation this is the failed constraint's name.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace zkt
