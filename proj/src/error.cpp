#include "zc/error.hpp"

namespace zc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAtOne: return "PoleAtOne";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NearSingularity: return "NearSingularity";
    case ErrorKind::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::MissedZeroSuspected: return "MissedZeroSuspected";
    case ErrorKind::AmbiguousHeight: return "AmbiguousHeight";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::SingularityOnPath: return "SingularityOnPath";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::BoundarySingularity: return "BoundarySingularity";
    case ErrorKind::TableTooShort: return "TableTooShort";
    case ErrorKind::DegenerateProduct: return "DegenerateProduct";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::DenominatorVanished: return "DenominatorVanished";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorKind kind, const std::string& message) {
  return std::string(to_string(kind)) + ": " + message;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(compose(kind, message)), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::complex<double> where)
    : std::runtime_error(compose(kind, message)), kind_(kind), where_(where) {}

Error::Error(ErrorKind kind, const std::string& message, long index)
    : std::runtime_error(compose(kind, message)), kind_(kind), index_(index) {}

}  // namespace zc
