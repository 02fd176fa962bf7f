#pragma once

// A strictly decreasing curve of length 2 threaded between two decreasing
// envelopes g < h: staircase pieces glued along a chain of rectangles that
// sit inside the band W(g,h) = {(x,y) : g(x) <= y <= h(x)} and each touch its
// boundary.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kantichain/monotone.hpp"
#include "kantichain/report.hpp"

namespace kantichain {

/// Slack for containment and touching checks. Well above the 1e-12 evaluation
/// tolerance so the touching test is meaningful.
inline constexpr double kContainmentTolerance = 1e-9;

/// Staircase parameter used for glued pieces when none is given. A depth-64
/// inscribed polyline of S_0.1 is within 1.3e-4 of the semiperimeter; S_0.25
/// at the same depth is still 0.029 short.
inline constexpr double kDefaultGluingP = 0.1;

/// Two decreasing bijections of [0,1] with g < h on (0,1).
class EnvelopePair {
 public:
  /// Checks both functions map 0 -> 1 and 1 -> 0 and that g < h on a
  /// 1000-point grid plus 1000 seeded random points. Where both values lie
  /// within 1e-12 of 0 or 1 double evaluation cannot separate them and only
  /// g <= h is required.
  static EnvelopePair make(DecreasingBijection lower, DecreasingBijection upper,
                           std::uint64_t seed = 0);

  const DecreasingBijection& lower() const { return g_; }
  const DecreasingBijection& upper() const { return h_; }

  /// True when (x, y) is within `tol` of W(g,h) in the max-norm.
  bool contains(double x, double y, double tol = kContainmentTolerance) const;

 private:
  EnvelopePair(DecreasingBijection g, DecreasingBijection h) : g_(std::move(g)), h_(std::move(h)) {}

  DecreasingBijection g_;
  DecreasingBijection h_;
};

/// Axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi]. A decreasing piece
/// spans it from the upper-left to the lower-right corner.
class Rectangle {
 public:
  Rectangle(double x_lo, double x_hi, double y_lo, double y_hi);

  /// Rectangle with upper-left corner (ul_x, ul_y) and lower-right corner
  /// (lr_x, lr_y).
  static Rectangle from_corners(double ul_x, double ul_y, double lr_x, double lr_y);

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  double y_lo() const { return y_lo_; }
  double y_hi() const { return y_hi_; }
  double width() const { return x_hi_ - x_lo_; }
  double height() const { return y_hi_ - y_lo_; }
  double semiperimeter() const { return width() + height(); }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
};

struct StopCriteria {
  std::size_t max_steps = 500;
  double target_truncation = 0.02;
};

/// The two rectangle chains leaving x = 1/2 towards the corners (0,1) and
/// (1,0), with midline values stored next to each abscissa.
struct SequencePair {
  std::vector<double> xs;   // 1/2 = xs[0] > xs[1] > ... > 0
  std::vector<double> fxs;  // midline at xs
  std::vector<double> ys;   // 1/2 = ys[0] < ys[1] < ... < 1
  std::vector<double> fys;  // midline at ys
  double tolerance = kDefaultTolerance;

  /// Semiperimeters of the two uncovered corner boxes
  /// [0, x_N] x [f(x_N), 1] and [y_M, 1] x [0, f(y_M)].
  double truncation_error() const;

  std::size_t x_pieces() const { return xs.empty() ? 0 : xs.size() - 1; }
  std::size_t y_pieces() const { return ys.empty() ? 0 : ys.size() - 1; }

  /// [xs[n+1], xs[n]] x [fxs[n], fxs[n+1]]
  Rectangle x_rectangle(std::size_t n) const;
  /// [ys[n], ys[n+1]] x [fys[n+1], fys[n]]
  Rectangle y_rectangle(std::size_t n) const;
};

/// The function D on the truncated domain [xs.back(), ys.back()]: one affine
/// image of the staircase per rectangle, ordered left to right.
class GluedCurve {
 public:
  struct Piece {
    Rectangle rect;
    DecreasingBijection fn;
  };

  /// Checks that pieces abut, agree at joints, and fill their rectangles.
  GluedCurve(std::vector<Piece> pieces, double truncation_error, SalemParams salem);

  const std::vector<Piece>& pieces() const { return pieces_; }
  double truncation_error() const { return truncation_error_; }
  const SalemParams& salem() const { return salem_; }
  Interval domain() const;

  /// Index of the piece whose x-interval holds x (the left one at a joint).
  std::size_t locate(double x) const;
  double eval(double x, double tol = kDefaultTolerance) const;

 private:
  std::vector<Piece> pieces_;
  double truncation_error_;
  SalemParams salem_;
};

DecreasingBijection midline(const EnvelopePair& e);

/// Runs x_{n+1} = max{g^-1(f(x_n)), f^-1(h(x_n))} and its mirror
/// y_{n+1} = min{h^-1(f(y_n)), f^-1(g(y_n))}, advancing whichever side has
/// the larger uncovered corner box, until the truncation error reaches the
/// target or max_steps steps were taken. Preimages take the bisection bracket
/// end that keeps the new rectangle inside W. Throws NumericalError when a
/// step moves by less than 1e-15.
SequencePair build_sequences(const EnvelopePair& e, const StopCriteria& stop,
                             double tol = kDefaultTolerance);

/// Ordering of both sequences, containment of every rectangle in W(g,h) at its
/// corners and `samples` perimeter points, and contact of at least one corner
/// with the graph of g or h, all at kContainmentTolerance.
VerificationReport validate_rectangles(const EnvelopePair& e, const SequencePair& s,
                                       std::size_t samples = 16);

/// Throws VerificationError when validate_rectangles fails and InputError for
/// p = 1/2.
GluedCurve glue(const EnvelopePair& e, const SequencePair& s, SalemParams p);

/// lower: exact depth-m inscribed length summed over pieces.
/// upper: piece semiperimeters plus the truncation error, which telescopes to 2.
LengthBracket curve_length(const GluedCurve& c, long depth);

/// Everything produced by one run of the construction.
struct LemmaConstruction {
  SequencePair sequences;
  VerificationReport rectangles;
  GluedCurve curve;
  LengthBracket length;
};

LemmaConstruction construct_lemma(const EnvelopePair& e, const StopCriteria& stop, SalemParams p,
                                  long depth, double tol = kDefaultTolerance);

/// "x,y" rows on a uniform grid over the curve's domain, 17 significant digits.
std::string export_curve_samples(const GluedCurve& c, std::size_t count);

}  // namespace kantichain
