#include "zc/precision.hpp"

#include <cmath>
#include <string>

#include "zc/error.hpp"

namespace zc {

void PrecisionConfig::validate() const {
  if (working_digits < 1)
    throw Error(ErrorKind::DomainError, "working_digits must be positive");
  if (working_digits > 34)
    throw Error(ErrorKind::PrecisionExhausted,
                "working_digits " + std::to_string(working_digits) +
                    " exceeds the binary128 limit of 34");
  if (!(target_abs_tol > 0) || !std::isfinite(target_abs_tol))
    throw Error(ErrorKind::DomainError, "target_abs_tol must be positive and finite");
  if (euler_maclaurin_terms < 1)
    throw Error(ErrorKind::DomainError, "euler_maclaurin_terms must be positive");
  if (cutoff_N < 1) throw Error(ErrorKind::DomainError, "cutoff_N must be positive");
  if (!(exclusion_radius > 0) || !(flag_radius >= exclusion_radius))
    throw Error(ErrorKind::DomainError, "need 0 < exclusion_radius <= flag_radius");
}

}  // namespace zc
