#include "kantichain/builder.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "format.hpp"
#include "kantichain/parallel.hpp"
#include "kantichain/poset.hpp"
#include "kantichain/sampling.hpp"

namespace kantichain {

namespace {

constexpr std::size_t kSharedAbscissae = 100;

}  // namespace

std::vector<double> default_schedule(long k) {
  if (k < 1) throw InputError("k must be a positive integer");
  std::vector<double> p;
  for (long i = 1; i <= 2 * k; ++i) p.push_back(static_cast<double>(2 * k + 2 - i));
  return p;
}

std::vector<DecreasingBijection> envelope_family(long k) {
  return envelope_family(default_schedule(k));
}

std::vector<DecreasingBijection> envelope_family(const std::vector<double>& exponents) {
  if (exponents.empty() || exponents.size() % 2 != 0) {
    throw InputError("envelope schedule needs an even, positive number of exponents");
  }
  std::vector<DecreasingBijection> family;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0 && !(exponents[i] < exponents[i - 1])) {
      throw InputError("envelope exponents must be strictly decreasing");
    }
    family.push_back(superellipse(exponents[i]));
  }
  for (int j = 1; j <= 9; ++j) {
    const double x = 0.1 * j;
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
      if (!(family[i](x) > family[i + 1](x))) {
        throw InputError("envelope family not strictly ordered at x = " + detail::g17(x));
      }
    }
  }
  return family;
}

KAntichainModel build(long k, const BuildOptions& options) {
  if (k < 1) throw InputError("k must be a positive integer");
  if (!options.salem.singular()) throw InputError("the glued pieces need p != 1/2");
  const std::vector<double> schedule =
      options.schedule.empty() ? default_schedule(k) : options.schedule;
  if (schedule.size() != static_cast<std::size_t>(2 * k)) {
    throw InputError("schedule must hold 2k exponents");
  }

  KAntichainModel model;
  model.k = k;
  model.envelopes = envelope_family(schedule);

  const auto n = static_cast<std::size_t>(k);
  std::vector<std::optional<LemmaConstruction>> parts(n);
  std::vector<std::string> failures(n);
  parallel_for(n, [&](std::size_t i) {
    try {
      const EnvelopePair band =
          EnvelopePair::make(model.envelopes[2 * i + 1], model.envelopes[2 * i]);
      parts[i] = construct_lemma(band, options.stop, options.salem, options.depth,
                                 options.tolerance);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i].empty()) {
      throw NumericalError("curve " + std::to_string(i + 1) + ": " + failures[i]);
    }
  }

  double lower = 0.0;
  double upper = 0.0;
  for (auto& part : parts) {
    model.curves.push_back(std::move(part->curve));
    model.curve_lengths.push_back(part->length);
    lower += part->length.lower;
    upper += part->length.upper;
  }
  model.total_length = {lower, upper, LengthMethod::inscribed_exact, options.depth};
  return model;
}

namespace {

struct Sample {
  double x;
  double y;
  std::size_t curve;
  std::size_t piece;
};

// Product order on samples, except that two samples of one staircase piece with
// equal doubles are incomparable: the piece is strictly decreasing, so the tie
// is rounding of y_a > y_b.
bool below(const Sample& a, const Sample& b) {
  if (!(a.x <= b.x && a.y <= b.y)) return false;
  return !(a.curve == b.curve && a.piece == b.piece && a.x != b.x && a.y == b.y);
}

// Longest path through `below`. A path is a chain whenever the relation is
// transitive on it; otherwise this can only overcount.
std::size_t longest_sample_chain(std::vector<Sample> pts) {
  std::sort(pts.begin(), pts.end(), [](const Sample& a, const Sample& b) {
    return std::tie(a.x, a.y, a.curve) < std::tie(b.x, b.y, b.curve);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Sample& a, const Sample& b) {
                          return a.x == b.x && a.y == b.y && a.curve == b.curve;
                        }),
            pts.end());
  std::vector<std::size_t> best(pts.size(), 1);
  std::size_t longest = 0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] + 1 > best[j] && below(pts[i], pts[j])) best[j] = best[i] + 1;
    }
    longest = std::max(longest, best[j]);
  }
  return longest;
}

}  // namespace

VerificationReport verify(const KAntichainModel& m, std::size_t samples_per_curve,
                          std::uint64_t seed) {
  VerificationReport report;
  const auto k = static_cast<std::size_t>(std::max(m.k, 0L));
  if (m.k < 1 || m.curves.size() != k || m.envelopes.size() != 2 * k) {
    report.add("structure", false, "expected k curves and 2k envelopes");
    return report;
  }
  if (samples_per_curve < 2) throw InputError("need at least two samples per curve");

  UniformSampler rng(seed);
  std::vector<std::string> monotone, band, antichain;
  std::vector<Sample> all_points;
  std::size_t ties = 0;

  for (std::size_t i = 0; i < k; ++i) {
    const GluedCurve& c = m.curves[i];
    const DecreasingBijection& g = m.envelopes[2 * i + 1];
    const DecreasingBijection& h = m.envelopes[2 * i];
    const std::string label = "curve " + std::to_string(i + 1);
    const Interval d = c.domain();

    std::vector<double> xs(samples_per_curve);
    for (auto& x : xs) x = std::min(rng.next(d.lo, d.hi), d.hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) ys[j] = c.eval(xs[j]);

    std::vector<Sample> pts;
    std::size_t inversions = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      pts.push_back({xs[j], ys[j], i, c.locate(xs[j])});
      if (j + 1 < xs.size() && xs[j] < xs[j + 1]) {
        if (ys[j] < ys[j + 1]) {
          ++inversions;
        } else if (ys[j] == ys[j + 1]) {
          // Equal doubles inside one staircase piece are below resolution,
          // not a violation; across pieces they are.
          if (c.locate(xs[j]) == c.locate(xs[j + 1])) {
            ++ties;
          } else {
            ++inversions;
          }
        }
      }
      const double x = xs[j];
      const double y = ys[j];
      constexpr double tol = kContainmentTolerance;
      const bool inside = y + tol >= g.eval(std::min(x + tol, 1.0)) &&
                          y - tol <= h.eval(std::max(x - tol, 0.0));
      if (!inside) {
        band.push_back(label + " leaves its band at x = " + detail::g17(x));
      }
    }
    if (inversions > 0) {
      monotone.push_back(label + ": " + std::to_string(inversions) + " increasing step(s)");
    }
    const std::size_t own_chain = longest_sample_chain(pts);
    if (own_chain != 1) {
      antichain.push_back(label + ": longest chain " + std::to_string(own_chain));
    }
    all_points.insert(all_points.end(), pts.begin(), pts.end());
  }
  report.add_all("monotonicity", monotone,
                 ties == 0 ? std::string("strictly decreasing on all samples")
                           : std::to_string(ties) + " equal-value pair(s) below double resolution");
  report.add_all("band containment", band, "all samples inside their bands");
  report.add_all("per-curve antichain", antichain, "every curve sample is an antichain");

  double lo = 0.0;
  double hi = 1.0;
  for (const auto& c : m.curves) {
    lo = std::max(lo, c.domain().lo);
    hi = std::min(hi, c.domain().hi);
  }
  if (!(lo < hi)) {
    report.add("band disjointness", false, "curves have no common domain");
    report.add("chain bound", false, "no shared abscissae for vertical stacks");
    return report;
  }
  std::vector<std::string> disjoint;
  for (std::size_t j = 0; j < kSharedAbscissae; ++j) {
    const double x = lo + (hi - lo) * (0.05 + 0.9 * static_cast<double>(j) /
                                                  static_cast<double>(kSharedAbscissae - 1));
    for (std::size_t i = 0; i < k; ++i) {
      const double y = m.curves[i].eval(x);
      all_points.push_back({x, y, i, m.curves[i].locate(x)});
      if (i + 1 < k) {
        const double below = m.curves[i + 1].eval(x);
        if (!(m.envelopes[2 * i + 1](x) > m.envelopes[2 * i + 2](x)) || !(y > below)) {
          disjoint.push_back("bands " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                             " meet at x = " + detail::g17(x));
        }
      }
    }
  }
  report.add_all("band disjointness", disjoint,
                 std::to_string(kSharedAbscissae) + " shared abscissae");

  const std::size_t chain = longest_sample_chain(all_points);
  report.add("chain bound", chain == k,
             "longest chain " + std::to_string(chain) + " over " + std::to_string(all_points.size()) +
                 " points (expected " + std::to_string(k) + ")");
  return report;
}

std::string export_points(const KAntichainModel& m, std::size_t per_curve) {
  if (per_curve < 2) throw InputError("per_curve must be at least 2");
  std::string out = "curve_index,x,y\n";
  for (std::size_t i = 0; i < m.curves.size(); ++i) {
    const GluedCurve& c = m.curves[i];
    const Interval d = c.domain();
    for (std::size_t j = 0; j < per_curve; ++j) {
      const double x = j + 1 == per_curve
                           ? d.hi
                           : d.lo + d.width() * (static_cast<double>(j) / (per_curve - 1));
      out += std::to_string(i + 1) + "," + detail::g17(x) + "," + detail::g17(c.eval(x)) + "\n";
    }
  }
  return out;
}

}  // namespace kantichain
