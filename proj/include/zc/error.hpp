#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zc {

enum class ErrorKind {
  PoleAtOne,
  PrecisionExhausted,
  NearSingularity,
  PoleAtNonpositiveInteger,
  ZeroArgument,
  MissedZeroSuspected,
  AmbiguousHeight,
  DomainError,
  FormatError,
  ChecksumMismatch,
  SingularityOnPath,
  ToleranceNotMet,
  BoundarySingularity,
  TableTooShort,
  DegenerateProduct,
  DegenerateStep,
  DenominatorVanished,
  MissingTable,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the toolkit. The kind is the stable part of the
/// contract; `where()` names the offending point (a zero, the pole, a
/// quadrature node) and `index()` carries a step or line number when one is
/// meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, std::complex<double> where);
  Error(ErrorKind kind, const std::string& message, long index);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::complex<double>>& where() const noexcept { return where_; }
  const std::optional<long>& index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::complex<double>> where_;
  std::optional<long> index_;
};

}  // namespace zc
