#include "kantichain/lemma.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "format.hpp"
#include "kantichain/sampling.hpp"
#include "summation.hpp"

namespace kantichain {

namespace {

constexpr double kUnresolvable = 1e-12;
constexpr double kStagnation = 1e-15;

bool on_unit_square(const DecreasingBijection& f) {
  return f.domain() == Interval{0.0, 1.0} && f.range() == Interval{0.0, 1.0};
}

// The graph of a continuous decreasing fn meets the max-norm box of radius tol
// around (x, y) iff it is above the box's lower edge at the left side and below
// its upper edge at the right side.
bool near_graph(const DecreasingBijection& fn, double x, double y, double tol) {
  const Interval& d = fn.domain();
  if (x < d.lo - tol || x > d.hi + tol) return false;
  const double xl = std::clamp(x - tol, d.lo, d.hi);
  const double xr = std::clamp(x + tol, d.lo, d.hi);
  return fn.eval(xl) >= y - tol && fn.eval(xr) <= y + tol;
}

std::string point_string(double x, double y) {
  return "(" + detail::g17(x) + ", " + detail::g17(y) + ")";
}

}  // namespace

EnvelopePair EnvelopePair::make(DecreasingBijection lower, DecreasingBijection upper,
                                std::uint64_t seed) {
  if (!on_unit_square(lower) || !on_unit_square(upper)) {
    throw InputError("envelopes must map [0,1] onto [0,1]");
  }
  for (const auto* f : {&lower, &upper}) {
    if (f->eval(0.0) != 1.0 || f->eval(1.0) != 0.0) {
      throw InputError("envelopes must send 0 to 1 and 1 to 0");
    }
  }
  auto check = [&](double x) {
    const double gv = lower.eval(x);
    const double hv = upper.eval(x);
    if (gv < hv) return;
    const bool unresolved = gv == hv && (std::min(gv, hv) >= 1.0 - kUnresolvable ||
                                         std::max(gv, hv) <= kUnresolvable);
    if (!unresolved) {
      throw InputError("envelope pair needs g < h on (0,1); fails at x = " + detail::g17(x) +
                       " with g = " + detail::g17(gv) + ", h = " + detail::g17(hv));
    }
  };
  constexpr int kGrid = 1000;
  for (int i = 1; i <= kGrid; ++i) check(static_cast<double>(i) / (kGrid + 1));
  UniformSampler rng(seed);
  for (int i = 0; i < kGrid; ++i) {
    const double x = rng.next();
    if (x > 0.0) check(x);
  }
  return EnvelopePair(std::move(lower), std::move(upper));
}

bool EnvelopePair::contains(double x, double y, double tol) const {
  if (x < -tol || x > 1.0 + tol) return false;
  const double xl = std::clamp(x - tol, 0.0, 1.0);
  const double xr = std::clamp(x + tol, 0.0, 1.0);
  return y + tol >= g_.eval(xr) && y - tol <= h_.eval(xl);
}

Rectangle::Rectangle(double x_lo, double x_hi, double y_lo, double y_hi)
    : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
    throw InputError("degenerate rectangle [" + detail::g17(x_lo) + ", " + detail::g17(x_hi) +
                     "] x [" + detail::g17(y_lo) + ", " + detail::g17(y_hi) + "]");
  }
}

Rectangle Rectangle::from_corners(double ul_x, double ul_y, double lr_x, double lr_y) {
  return Rectangle(ul_x, lr_x, lr_y, ul_y);
}

double SequencePair::truncation_error() const {
  return xs.back() + (1.0 - fxs.back()) + (1.0 - ys.back()) + fys.back();
}

Rectangle SequencePair::x_rectangle(std::size_t n) const {
  return Rectangle::from_corners(xs.at(n + 1), fxs.at(n + 1), xs.at(n), fxs.at(n));
}

Rectangle SequencePair::y_rectangle(std::size_t n) const {
  return Rectangle::from_corners(ys.at(n), fys.at(n), ys.at(n + 1), fys.at(n + 1));
}

GluedCurve::GluedCurve(std::vector<Piece> pieces, double truncation_error, SalemParams salem)
    : pieces_(std::move(pieces)), truncation_error_(truncation_error), salem_(salem) {
  if (pieces_.empty()) throw InputError("a glued curve needs at least one piece");
  if (!(truncation_error_ >= 0.0)) throw InputError("truncation error must be non-negative");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& [rect, fn] = pieces_[i];
    if (fn.domain() != Interval{rect.x_lo(), rect.x_hi()} ||
        fn.range() != Interval{rect.y_lo(), rect.y_hi()}) {
      throw InputError("piece " + std::to_string(i) + " does not span its rectangle");
    }
    if (i + 1 < pieces_.size()) {
      const Rectangle& next = pieces_[i + 1].rect;
      if (rect.x_hi() != next.x_lo()) {
        throw InputError("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " do not abut");
      }
      if (rect.y_lo() != next.y_hi()) {
        throw InputError("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " disagree at their joint");
      }
    }
  }
}

Interval GluedCurve::domain() const {
  return {pieces_.front().rect.x_lo(), pieces_.back().rect.x_hi()};
}

std::size_t GluedCurve::locate(double x) const {
  if (!domain().contains(x)) {
    throw InputError("x = " + detail::g17(x) + " outside the glued domain");
  }
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Piece& p, double v) { return p.rect.x_hi() < v; });
  return static_cast<std::size_t>(it - pieces_.begin());
}

double GluedCurve::eval(double x, double tol) const { return pieces_[locate(x)].fn.eval(x, tol); }

DecreasingBijection midline(const EnvelopePair& e) {
  return pointwise_average(e.lower(), e.upper());
}

SequencePair build_sequences(const EnvelopePair& e, const StopCriteria& stop, double tol) {
  if (stop.max_steps == 0) throw InputError("max_steps must be positive");
  if (!(stop.target_truncation > 0.0)) throw InputError("target truncation must be positive");
  const DecreasingBijection& g = e.lower();
  const DecreasingBijection& h = e.upper();
  const DecreasingBijection f = midline(e);

  SequencePair s;
  s.tolerance = tol;
  const double f_half = f.eval(0.5, tol);
  s.xs = {0.5};
  s.fxs = {f_half};
  s.ys = {0.5};
  s.fys = {f_half};

  for (std::size_t step = 1; step <= stop.max_steps; ++step) {
    if (s.truncation_error() <= stop.target_truncation) break;
    const double x_box = s.xs.back() + (1.0 - s.fxs.back());
    const double y_box = (1.0 - s.ys.back()) + s.fys.back();
    if (x_box >= y_box) {
      const double x = s.xs.back();
      // The upper bracket end keeps the lower-left corner above g and the
      // upper-right corner below h.
      const double next = std::max(preimage_bracket(g, s.fxs.back(), tol).hi,
                                   preimage_bracket(f, h.eval(x, tol), tol).hi);
      if (next >= x - kStagnation) {
        throw NumericalError("x-sequence stagnated at step " + std::to_string(step) +
                             " (x = " + detail::g17(x) + ")");
      }
      s.xs.push_back(next);
      s.fxs.push_back(f.eval(next, tol));
    } else {
      const double y = s.ys.back();
      const double next = std::min(preimage_bracket(h, s.fys.back(), tol).lo,
                                   preimage_bracket(f, g.eval(y, tol), tol).lo);
      if (next <= y + kStagnation) {
        throw NumericalError("y-sequence stagnated at step " + std::to_string(step) +
                             " (y = " + detail::g17(y) + ")");
      }
      s.ys.push_back(next);
      s.fys.push_back(f.eval(next, tol));
    }
  }
  return s;
}

VerificationReport validate_rectangles(const EnvelopePair& e, const SequencePair& s,
                                       std::size_t samples) {
  constexpr double tol = kContainmentTolerance;
  VerificationReport report;

  std::vector<std::string> order;
  if (s.xs.empty() || s.ys.empty() || s.xs.size() != s.fxs.size() ||
      s.ys.size() != s.fys.size()) {
    report.add("ordering", false, "sequence and value lists are empty or of unequal length");
    return report;
  }
  if (s.xs[0] != 0.5 || s.ys[0] != 0.5) order.push_back("sequences must start at 1/2");
  for (std::size_t n = 0; n + 1 < s.xs.size(); ++n) {
    if (!(s.xs[n + 1] < s.xs[n]) || !(s.fxs[n + 1] > s.fxs[n])) {
      order.push_back("x-sequence not strictly monotone at index " + std::to_string(n + 2));
    }
  }
  for (std::size_t n = 0; n + 1 < s.ys.size(); ++n) {
    if (!(s.ys[n + 1] > s.ys[n]) || !(s.fys[n + 1] < s.fys[n])) {
      order.push_back("y-sequence not strictly monotone at index " + std::to_string(n + 2));
    }
  }
  if (!(s.xs.back() > 0.0) || !(s.ys.back() < 1.0)) {
    order.push_back("sequences must stay inside (0,1)");
  }
  report.add_all("ordering", order,
                 std::to_string(s.xs.size()) + " x-terms, " + std::to_string(s.ys.size()) +
                     " y-terms");
  if (!order.empty()) return report;

  std::vector<std::string> containment;
  std::vector<std::string> touching;
  auto check_rect = [&](const Rectangle& r, const std::string& label) {
    const std::array<std::pair<const char*, std::array<double, 2>>, 4> corners{{
        {"upper-left", {r.x_lo(), r.y_hi()}},
        {"upper-right", {r.x_hi(), r.y_hi()}},
        {"lower-left", {r.x_lo(), r.y_lo()}},
        {"lower-right", {r.x_hi(), r.y_lo()}},
    }};
    bool touches = false;
    for (const auto& [name, c] : corners) {
      if (!e.contains(c[0], c[1], tol)) {
        containment.push_back(label + ": " + name + " corner " + point_string(c[0], c[1]) +
                              " outside W(g,h)");
      }
      touches = touches || near_graph(e.lower(), c[0], c[1], tol) ||
                near_graph(e.upper(), c[0], c[1], tol);
    }
    if (!touches) touching.push_back(label + ": no corner on the graph of g or h");
    for (std::size_t k = 0; k < samples; ++k) {
      const double t = 4.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
      const auto edge = static_cast<int>(t);
      const double u = t - edge;
      double x = 0.0, y = 0.0;
      switch (edge) {
        case 0: x = r.x_lo() + u * r.width(); y = r.y_hi(); break;
        case 1: x = r.x_hi(); y = r.y_hi() - u * r.height(); break;
        case 2: x = r.x_hi() - u * r.width(); y = r.y_lo(); break;
        default: x = r.x_lo(); y = r.y_lo() + u * r.height(); break;
      }
      if (!e.contains(x, y, tol)) {
        containment.push_back(label + ": boundary point " + point_string(x, y) +
                              " outside W(g,h)");
      }
    }
  };
  for (std::size_t n = 0; n < s.x_pieces(); ++n) {
    check_rect(s.x_rectangle(n), "x-rectangle " + std::to_string(n + 1));
  }
  for (std::size_t n = 0; n < s.y_pieces(); ++n) {
    check_rect(s.y_rectangle(n), "y-rectangle " + std::to_string(n + 1));
  }
  const std::string count = std::to_string(s.x_pieces() + s.y_pieces()) + " rectangles";
  report.add_all("containment", containment, count);
  report.add_all("touching", touching, count);
  return report;
}

GluedCurve glue(const EnvelopePair& e, const SequencePair& s, SalemParams p) {
  if (!p.singular()) throw InputError("gluing needs a singular staircase (p != 1/2)");
  VerificationReport report = validate_rectangles(e, s);
  if (!report.passed()) {
    throw VerificationError("rectangle validation failed", std::move(report));
  }
  const DecreasingBijection staircase = salem_decreasing(p);
  std::vector<GluedCurve::Piece> pieces;
  pieces.reserve(s.x_pieces() + s.y_pieces());
  auto add = [&](const Rectangle& r) {
    pieces.push_back({r, affine_conjugate(staircase, {r.x_lo(), r.x_hi()}, {r.y_lo(), r.y_hi()})});
  };
  for (std::size_t n = s.x_pieces(); n-- > 0;) add(s.x_rectangle(n));
  for (std::size_t n = 0; n < s.y_pieces(); ++n) add(s.y_rectangle(n));
  return GluedCurve(std::move(pieces), s.truncation_error(), p);
}

LengthBracket curve_length(const GluedCurve& c, long depth) {
  std::vector<double> lower;
  std::vector<double> semi;
  lower.reserve(c.pieces().size());
  semi.reserve(c.pieces().size());
  for (const auto& piece : c.pieces()) {
    lower.push_back(
        inscribed_length_scaled(c.salem(), depth, piece.rect.width(), piece.rect.height()));
    semi.push_back(piece.rect.semiperimeter());
  }
  return {detail::pairwise_sum(lower), detail::pairwise_sum(semi) + c.truncation_error(),
          LengthMethod::inscribed_exact, depth};
}

LemmaConstruction construct_lemma(const EnvelopePair& e, const StopCriteria& stop, SalemParams p,
                                  long depth, double tol) {
  SequencePair seq = build_sequences(e, stop, tol);
  VerificationReport rects = validate_rectangles(e, seq);
  GluedCurve curve = glue(e, seq, p);
  LengthBracket length = curve_length(curve, depth);
  return {std::move(seq), std::move(rects), std::move(curve), length};
}

std::string export_curve_samples(const GluedCurve& c, std::size_t count) {
  if (count < 2) throw InputError("need at least two samples");
  const Interval d = c.domain();
  std::string out = "x,y\n";
  for (std::size_t j = 0; j < count; ++j) {
    const double x =
        j + 1 == count ? d.hi : d.lo + d.width() * (static_cast<double>(j) / (count - 1));
    out += detail::g17(x) + "," + detail::g17(c.eval(x)) + "\n";
  }
  return out;
}

}  // namespace kantichain
