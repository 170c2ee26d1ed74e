#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace casimir::quad {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK dqk15 coefficients).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
  double lo, hi;
  double value;
  double error;
  std::uint64_t seq;  // creation order, tie-breaker for determinism
};

struct SegmentLess {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.seq > y.seq;  // older segment wins ties
  }
};

// One GK15 panel.  Error estimate follows the QUADPACK recipe: the raw
// |K15-G7| difference is rescaled against the integrand's deviation from
// its mean so that the estimate stays conservative on smooth integrands.
Segment evaluate_panel(const std::function<double(double)>& f, double lo,
                       double hi, std::uint64_t seq) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  const double fc = f(center);
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }

  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double fsum = fv[j] + fv[14 - j];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }

  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double min_err = std::numeric_limits<double>::min();
  if (resabs > min_err / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return Segment{lo, hi, value, err, seq};
}

}  // namespace

QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const Options& opts) {
  std::priority_queue<Segment, std::vector<Segment>, SegmentLess> heap;
  std::uint64_t seq = 0;
  std::size_t evals = 0;

  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Segment s = evaluate_panel(f, breakpoints[i], breakpoints[i + 1], seq++);
    evals += 15;
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }

  int intervals = static_cast<int>(breakpoints.size()) - 1;
  double floor_err = 0.0;  // error stuck on roundoff-width intervals
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (intervals >= opts.max_intervals) {
      throw QuadratureNonConvergence(
          "adaptive quadrature: interval budget exhausted before reaching "
          "the requested tolerance");
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // interval at roundoff width; its estimate cannot improve
      total_err -= worst.error;
      floor_err += worst.error;
      if (heap.empty()) break;
      continue;
    }
    Segment left = evaluate_panel(f, worst.lo, mid, seq++);
    Segment right = evaluate_panel(f, mid, worst.hi, seq++);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  return QuadratureResult{total, total_err + floor_err, evals};
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const Options& opts) {
  const double pts[2] = {lo, hi};
  return integrate_segmented(f, pts, opts);
}

}  // namespace casimir::quad
