#include "moutard/error.hpp"

namespace moutard {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroSeed: return "ZeroSeed";
        case ErrorKind::SeedNotInKernel: return "SeedNotInKernel";
        case ErrorKind::NotCoKernel: return "NotCoKernel";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::ProportionalSeeds: return "ProportionalSeeds";
        case ErrorKind::NoAffineMatch: return "NoAffineMatch";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::OddDegree: return "OddDegree";
        case ErrorKind::NonPositiveLeadingForm: return "NonPositiveLeadingForm";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::PoleTooClose: return "PoleTooClose";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::AssertionFailed: return "AssertionFailed";
    }
    return "Unknown";
}

}  // namespace moutard
