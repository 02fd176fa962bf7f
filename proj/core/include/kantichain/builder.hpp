#pragma once

// k-antichains in the unit square: k glued curves, one per band between
// consecutive members of a nested envelope family.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kantichain/lemma.hpp"
#include "kantichain/monotone.hpp"
#include "kantichain/report.hpp"

namespace kantichain {

struct BuildOptions {
  StopCriteria stop;
  long depth = 64;
  SalemParams salem{kDefaultGluingP};
  /// Superellipse exponents p_1 > ... > p_2k. Empty selects default_schedule(k).
  std::vector<double> schedule;
  double tolerance = kDefaultTolerance;
};

struct KAntichainModel {
  long k = 0;
  /// f_1 > f_2 > ... > f_2k on (0,1).
  std::vector<DecreasingBijection> envelopes;
  /// curves[i] lies between envelopes[2i+1] (below) and envelopes[2i] (above).
  std::vector<GluedCurve> curves;
  std::vector<LengthBracket> curve_lengths;
  LengthBracket total_length;
};

/// p_i = 2k + 2 - i for i = 1..2k, i.e. 2k+1 down to 2. With double-precision
/// abscissae this reaches the 0.02 truncation target up to k = 3; larger k need
/// a flatter custom schedule.
std::vector<double> default_schedule(long k);

std::vector<DecreasingBijection> envelope_family(long k);

/// Superellipses with the given strictly decreasing exponents (even count,
/// each >= 1); the pointwise order is spot-checked at x = 0.1, ..., 0.9.
std::vector<DecreasingBijection> envelope_family(const std::vector<double>& exponents);

/// Runs the band construction on (f_{2i}, f_{2i-1}) for every i, in parallel.
/// A failing curve aborts the build with its 1-based index in the message.
KAntichainModel build(long k, const BuildOptions& options = {});

/// Sampled checks: per-curve strict decrease, band containment, per-curve
/// antichain, band disjointness at 100 shared abscissae, and a longest chain of
/// exactly k once vertical stacks at those abscissae are added.
VerificationReport verify(const KAntichainModel& m, std::size_t samples_per_curve,
                          std::uint64_t seed);

/// CSV "curve_index,x,y", a uniform grid of per_curve points on each curve's
/// domain, 17 significant digits.
std::string export_points(const KAntichainModel& m, std::size_t per_curve);

}  // namespace kantichain
