#include "zkt/error.hpp"

#include <array>
#include <utility>

namespace zkt {
namespace {

constexpr std::array<std::pair<Errc, std::string_view>, 27> kNames{{
    {Errc::ZeroKey, "ZeroKey"},
    {Errc::PathLengthMismatch, "PathLengthMismatch"},
    {Errc::TreeFull, "TreeFull"},
    {Errc::IndexOutOfRange, "IndexOutOfRange"},
    {Errc::WrongKey, "WrongKey"},
    {Errc::NotOwner, "NotOwner"},
    {Errc::Overflow, "Overflow"},
    {Errc::ConstraintViolation, "ConstraintViolation"},
    {Errc::UnknownCircuit, "UnknownCircuit"},
    {Errc::IssuerViolation, "IssuerViolation"},
    {Errc::ProofRejected, "ProofRejected"},
    {Errc::TypeMismatch, "TypeMismatch"},
    {Errc::DuplicateCommitment, "DuplicateCommitment"},
    {Errc::UnknownIssuerRoot, "UnknownIssuerRoot"},
    {Errc::StaleRoot, "StaleRoot"},
    {Errc::DoubleSpend, "DoubleSpend"},
    {Errc::GrabberReuse, "GrabberReuse"},
    {Errc::ParamMismatch, "ParamMismatch"},
    {Errc::OwnerNotContract, "OwnerNotContract"},
    {Errc::InsufficientBalance, "InsufficientBalance"},
    {Errc::MissingNft, "MissingNft"},
    {Errc::NotAuthority, "NotAuthority"},
    {Errc::NotDelegate, "NotDelegate"},
    {Errc::UnknownTokenType, "UnknownTokenType"},
    {Errc::InnerTransferFailed, "InnerTransferFailed"},
    {Errc::ParseError, "ParseError"},
    {Errc::ScenarioAssertionFailed, "ScenarioAssertionFailed"},
}};

std::string describe(Errc code, const std::string& detail) {
    std::string out(errcName(code));
    if (!detail.empty()) {
        out += ": ";
        out += detail;
    }
    return out;
}

}  // namespace

std::string_view errcName(Errc code) noexcept {
    for (const auto& [c, n] : kNames) {
        if (c == code) return n;
    }
    return "Unknown";
}

bool errcFromName(std::string_view name, Errc& out) noexcept {
    for (const auto& [c, n] : kNames) {
        if (n == name) {
            out = c;
            return true;
        }
    }
    return false;
}

Error::Error(Errc code, std::string detail)
    : std::runtime_error(describe(code, detail)), code_(code), detail_(std::move(detail)) {}

}  // namespace zkt
