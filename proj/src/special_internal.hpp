#pragma once

#include "zc/precision.hpp"

namespace zc::detail {

struct ZetaEval {
  cplx zeta;
  cplx dzeta;
  double zeta_err = 0;
  double dzeta_err = 0;
};

/// zeta and zeta' with error estimates, without comparing them to the
/// tolerance. Still refuses the pole and non-finite input.
ZetaEval zeta_pair_unchecked(cplx s, const PrecisionConfig& cfg);

}  // namespace zc::detail
