#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moutard {

enum class ErrorKind {
    ZeroSeed,
    SeedNotInKernel,
    NotCoKernel,
    NotClosed,
    ProportionalSeeds,
    NoAffineMatch,
    NotHomogeneous,
    OddDegree,
    NonPositiveLeadingForm,
    Inconclusive,
    PoleTooClose,
    InvalidArgument,
    ParseError,
    AssertionFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library failure tagged with its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace moutard
