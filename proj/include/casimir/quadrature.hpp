#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "casimir/errors.hpp"

namespace casimir {

/// Value of an integral (or of a derived quantity such as a force obtained
/// by differencing integrals) together with a conservative absolute error
/// estimate and the number of integrand evaluations spent.
struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

namespace quad {

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;       // pure relative control by default
  int max_intervals = 20000;  // subdivision budget before giving up
};

/// Globally adaptive Gauss-Kronrod 7/15 integration of f over [lo, hi].
/// Bisects the interval with the largest error estimate until the summed
/// estimate meets max(abs_tol, rel_tol*|result|).  Deterministic: interval
/// selection ties break on creation order.  Throws QuadratureNonConvergence
/// when the subdivision budget is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const Options& opts = {});

/// Same, but with caller-supplied initial breakpoints (ascending, first=lo,
/// last=hi).  Used to pre-split integrands with a known sharp peak so the
/// adaptive refinement starts near it.
QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const Options& opts = {});

}  // namespace quad

}  // namespace casimir
