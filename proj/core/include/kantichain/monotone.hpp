#pragma once

// Strictly decreasing continuous bijections between closed intervals, and
// length estimates for their graphs.

#include <cstddef>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "kantichain/errors.hpp"

namespace kantichain {

inline constexpr double kDefaultTolerance = 1e-12;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Evaluation rule behind a DecreasingBijection. Implementations live in
/// monotone.cpp; callers build functions through the factories below.
class DecreasingRule {
 public:
  virtual ~DecreasingRule() = default;
  /// Value at x (already inside the domain) within absolute error `tol`.
  virtual double value(double x, double tol) const = 0;
  virtual nlohmann::json descriptor() const = 0;
  virtual bool singular() const = 0;
};

/// An immutable strictly decreasing continuous bijection [a,b] -> [c,d] with
/// f(a) = d and f(b) = c. Copies share the underlying rule.
class DecreasingBijection {
 public:
  DecreasingBijection(Interval domain, Interval range, std::shared_ptr<const DecreasingRule> rule);

  const Interval& domain() const { return domain_; }
  const Interval& range() const { return range_; }

  /// f(x) within `tol`. Throws InputError outside the domain.
  double eval(double x, double tol = kDefaultTolerance) const;
  double operator()(double x) const { return eval(x); }

  /// False for the regular families; true for Salem staircases with p != 1/2
  /// and their affine images.
  bool singular() const { return rule_->singular(); }

  /// {"kind": ..., "params": {...}}
  nlohmann::json descriptor() const { return rule_->descriptor(); }

 private:
  Interval domain_;
  Interval range_;
  std::shared_ptr<const DecreasingRule> rule_;
};

/// Parameter of the Bernoulli-measure staircase: the mass placed on the right
/// half of every dyadic interval.
class SalemParams {
 public:
  explicit SalemParams(double p = 0.25);
  double p() const { return p_; }
  bool singular() const { return p_ != 0.5; }

 private:
  double p_;
};

enum class LengthMethod { inscribed_sampled, inscribed_exact, quadrature };

std::string to_string(LengthMethod m);
LengthMethod length_method_from_string(const std::string& s);

/// Bounds on the H^1 measure of a monotone graph.
struct LengthBracket {
  double lower = 0.0;
  double upper = 0.0;
  LengthMethod method = LengthMethod::inscribed_exact;
  long depth = 0;

  double gap() const { return upper - lower; }
};

/// x -> (1 - x^p)^(1/p) on [0,1]: the quarter of the unit l^p sphere.
DecreasingBijection superellipse(double p);

/// x -> 1 - S_p(x), where S_p is the distribution function of the Bernoulli(p)
/// digit measure: S_p(x) = (1-p) S_p(2x) on [0,1/2] and
/// (1-p) + p S_p(2x-1) on [1/2,1].
DecreasingBijection salem_decreasing(SalemParams params);

/// The pointwise average (g + h)/2 of two bijections with equal domain and range.
DecreasingBijection pointwise_average(const DecreasingBijection& g, const DecreasingBijection& h);

/// f carried onto [x1,x2] -> [y1,y2] by affine maps on both axes, so that
/// x1 -> y2 and x2 -> y1. The endpoint values are returned exactly.
DecreasingBijection affine_conjugate(const DecreasingBijection& f, Interval target_x,
                                     Interval target_y);

/// Rebuilds a function from its descriptor.
DecreasingBijection bijection_from_descriptor(const nlohmann::json& descriptor);

double eval_at(const DecreasingBijection& f, double x, double tol = kDefaultTolerance);

/// Bisection bracket [lo, hi] around the preimage of y: f(lo) >= y >= f(hi) as
/// evaluated at tolerance tol/4, with lo and hi adjacent doubles (or equal at
/// the range endpoints). Throws InputError when y is outside the range.
Interval preimage_bracket(const DecreasingBijection& f, double y, double tol = kDefaultTolerance);

/// x with |f(x) - y| <= tol. Throws NumericalError when f is too steep near the
/// preimage for double-precision x to meet tol.
double invert_at(const DecreasingBijection& f, double y, double tol = kDefaultTolerance);

inline constexpr long kMaxSampledDepth = 26;
inline constexpr long kMaxExactDepth = 10'000'000;

/// Inscribed polyline through the graph over the uniform 2^depth partition of
/// the domain; upper is the semiperimeter (b-a)+(d-c).
LengthBracket inscribed_length_sampled(const DecreasingBijection& f, long depth);

/// Closed form of the same polyline for the Salem staircase on the unit square.
/// A depth-m dyadic cell whose address has j ones carries increment
/// p^j (1-p)^(m-j), so the sum collapses to m+1 binomially weighted terms.
LengthBracket inscribed_length_exact(SalemParams params, long depth);

/// Inscribed length of the staircase carried onto a width x height rectangle.
/// Returned as (width + height) - deficit with each deficit term positive,
/// which keeps the value at or below the semiperimeter in floating point.
double inscribed_length_scaled(SalemParams params, long depth, double width, double height);

/// Arc length of the superellipse graph by adaptive Gauss-Kronrod on the flat
/// half [0, 2^(-1/p)], doubled by the x <-> y symmetry.
double superellipse_arclength(double p, double tol = 1e-10);

/// Thrown by superellipse_arclength when the error estimate stays above tol.
class QuadratureError : public NumericalError {
 public:
  QuadratureError(const std::string& what, double lower, double upper)
      : NumericalError(what), lower_(lower), upper_(upper) {}
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace kantichain
