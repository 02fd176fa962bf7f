#include "kantichain/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "summation.hpp"

namespace kantichain {

namespace {

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
}

class SuperellipseRule final : public DecreasingRule {
 public:
  explicit SuperellipseRule(double p) : p_(p) {}

  double value(double x, double) const override {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    if (p_ == 1.0) return 1.0 - x;
    // 1 - x^p through expm1 keeps full relative accuracy as x -> 1.
    const double u = -std::expm1(p_ * std::log(x));
    return std::pow(u, 1.0 / p_);
  }

  nlohmann::json descriptor() const override {
    return {{"kind", "superellipse"}, {"params", {{"p", p_}}}};
  }

  bool singular() const override { return false; }

 private:
  double p_;
};

class SalemRule final : public DecreasingRule {
 public:
  explicit SalemRule(SalemParams params) : p_(params.p()) {}

  double value(double x, double tol) const override {
    if (p_ == 0.5) return 1.0 - x;
    const double left = 1.0 - p_;
    const double stop = 2.0 * tol;
    double acc = 0.0;  // S_p mass of the cells to the left of x
    double w = 1.0;    // mass of the current cell
    double u = x;      // position inside the current cell; doubling is exact
    for (;;) {
      if (u <= 0.0) break;
      if (u >= 1.0) {
        acc += w;
        break;
      }
      if (w <= stop) {
        acc += 0.5 * w;
        break;
      }
      if (u < 0.5) {
        w *= left;
        u *= 2.0;
      } else {
        acc += w * left;
        w *= p_;
        u = 2.0 * u - 1.0;
      }
    }
    return 1.0 - acc;
  }

  nlohmann::json descriptor() const override {
    return {{"kind", "salem"}, {"params", {{"p", p_}, {"singular", p_ != 0.5}}}};
  }

  bool singular() const override { return p_ != 0.5; }

 private:
  double p_;
};

class AffineRule final : public DecreasingRule {
 public:
  AffineRule(DecreasingBijection inner, Interval x, Interval y)
      : inner_(std::move(inner)), x_(x), y_(y) {}

  double value(double x, double tol) const override {
    if (x <= x_.lo) return y_.hi;
    if (x >= x_.hi) return y_.lo;
    const Interval& a = inner_.domain();
    const Interval& c = inner_.range();
    const double u = std::clamp(a.lo + (x - x_.lo) / x_.width() * a.width(), a.lo, a.hi);
    const double v = inner_.eval(u, tol * c.width() / y_.width());
    const double y = y_.lo + (v - c.lo) / c.width() * y_.width();
    return std::clamp(y, y_.lo, y_.hi);
  }

  nlohmann::json descriptor() const override {
    return {{"kind", "affine"},
            {"params",
             {{"x", {x_.lo, x_.hi}}, {"y", {y_.lo, y_.hi}}, {"inner", inner_.descriptor()}}}};
  }

  bool singular() const override { return inner_.singular(); }

 private:
  DecreasingBijection inner_;
  Interval x_;
  Interval y_;
};

class AverageRule final : public DecreasingRule {
 public:
  AverageRule(DecreasingBijection g, DecreasingBijection h) : g_(std::move(g)), h_(std::move(h)) {}

  double value(double x, double tol) const override {
    return 0.5 * (g_.eval(x, tol) + h_.eval(x, tol));
  }

  nlohmann::json descriptor() const override {
    return {{"kind", "midline"}, {"params", {{"g", g_.descriptor()}, {"h", h_.descriptor()}}}};
  }

  bool singular() const override { return false; }

 private:
  DecreasingBijection g_;
  DecreasingBijection h_;
};

Interval interval_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("interval must be a two-element array");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

DecreasingBijection::DecreasingBijection(Interval domain, Interval range,
                                         std::shared_ptr<const DecreasingRule> rule)
    : domain_(domain), range_(range), rule_(std::move(rule)) {
  if (!(domain_.lo < domain_.hi) || !(range_.lo < range_.hi)) {
    throw InputError("domain and range must be non-degenerate intervals");
  }
  if (!rule_) throw InputError("missing evaluation rule");
}

double DecreasingBijection::eval(double x, double tol) const {
  require_tolerance(tol);
  if (!domain_.contains(x)) {
    throw InputError("x = " + std::to_string(x) + " outside the domain");
  }
  return rule_->value(x, tol);
}

SalemParams::SalemParams(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("Salem parameter p must lie in (0,1)");
}

std::string to_string(LengthMethod m) {
  switch (m) {
    case LengthMethod::inscribed_sampled: return "inscribed-sampled";
    case LengthMethod::inscribed_exact: return "inscribed-exact";
    case LengthMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

LengthMethod length_method_from_string(const std::string& s) {
  if (s == "inscribed-sampled") return LengthMethod::inscribed_sampled;
  if (s == "inscribed-exact") return LengthMethod::inscribed_exact;
  if (s == "quadrature") return LengthMethod::quadrature;
  throw InputError("unknown length method '" + s + "'");
}

DecreasingBijection superellipse(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("superellipse exponent must be >= 1");
  return {{0.0, 1.0}, {0.0, 1.0}, std::make_shared<SuperellipseRule>(p)};
}

DecreasingBijection salem_decreasing(SalemParams params) {
  return {{0.0, 1.0}, {0.0, 1.0}, std::make_shared<SalemRule>(params)};
}

DecreasingBijection pointwise_average(const DecreasingBijection& g, const DecreasingBijection& h) {
  if (g.domain() != h.domain() || g.range() != h.range()) {
    throw InputError("averaged functions must share domain and range");
  }
  return {g.domain(), g.range(), std::make_shared<AverageRule>(g, h)};
}

DecreasingBijection affine_conjugate(const DecreasingBijection& f, Interval target_x,
                                     Interval target_y) {
  if (!(target_x.lo < target_x.hi) || !(target_y.lo < target_y.hi)) {
    throw InputError("affine_conjugate needs non-degenerate target intervals");
  }
  return {target_x, target_y, std::make_shared<AffineRule>(f, target_x, target_y)};
}

DecreasingBijection bijection_from_descriptor(const nlohmann::json& d) {
  const std::string kind = d.at("kind").get<std::string>();
  const auto& params = d.at("params");
  if (kind == "superellipse") return superellipse(params.at("p").get<double>());
  if (kind == "salem") return salem_decreasing(SalemParams(params.at("p").get<double>()));
  if (kind == "affine") {
    return affine_conjugate(bijection_from_descriptor(params.at("inner")),
                            interval_from_json(params.at("x")), interval_from_json(params.at("y")));
  }
  if (kind == "midline") {
    return pointwise_average(bijection_from_descriptor(params.at("g")),
                             bijection_from_descriptor(params.at("h")));
  }
  throw InputError("unknown function kind '" + kind + "'");
}

double eval_at(const DecreasingBijection& f, double x, double tol) { return f.eval(x, tol); }

Interval preimage_bracket(const DecreasingBijection& f, double y, double tol) {
  require_tolerance(tol);
  const Interval& dom = f.domain();
  const Interval& rng = f.range();
  if (!rng.contains(y)) throw InputError("y = " + std::to_string(y) + " outside the range");
  if (y == rng.hi) return {dom.lo, dom.lo};
  if (y == rng.lo) return {dom.hi, dom.hi};
  const double eval_tol = 0.25 * tol;
  double lo = dom.lo;
  double hi = dom.hi;
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (f.eval(mid, eval_tol) >= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

double invert_at(const DecreasingBijection& f, double y, double tol) {
  const Interval b = preimage_bracket(f, y, tol);
  const double eval_tol = 0.25 * tol;
  const double r_lo = std::abs(f.eval(b.lo, eval_tol) - y);
  const double r_hi = std::abs(f.eval(b.hi, eval_tol) - y);
  const double x = r_lo <= r_hi ? b.lo : b.hi;
  if (std::min(r_lo, r_hi) > tol - eval_tol) {
    throw NumericalError("preimage of y = " + std::to_string(y) +
                         " is not resolvable to the requested tolerance in double precision");
  }
  return x;
}

LengthBracket inscribed_length_sampled(const DecreasingBijection& f, long depth) {
  if (depth < 0) throw InputError("depth must be non-negative");
  if (depth > kMaxSampledDepth) {
    throw InputError("sampled depth " + std::to_string(depth) + " exceeds the evaluation budget (" +
                     std::to_string(kMaxSampledDepth) + ")");
  }
  constexpr double kSampleTol = 1e-15;
  constexpr std::size_t kBlock = 4096;
  const std::size_t cells = std::size_t{1} << depth;
  const Interval& dom = f.domain();
  auto node = [&](std::size_t i) {
    return i == cells ? dom.hi : dom.lo + dom.width() * (static_cast<double>(i) / cells);
  };

  std::vector<double> block_sums;
  std::vector<double> segs;
  segs.reserve(std::min(cells, kBlock));
  double x0 = node(0);
  double y0 = f.eval(x0, kSampleTol);
  for (std::size_t i = 1; i <= cells; ++i) {
    const double x1 = node(i);
    const double y1 = f.eval(x1, kSampleTol);
    segs.push_back(std::hypot(x1 - x0, y0 - y1));
    x0 = x1;
    y0 = y1;
    if (segs.size() == kBlock || i == cells) {
      block_sums.push_back(detail::pairwise_sum(segs));
      segs.clear();
    }
  }
  return {detail::pairwise_sum(block_sums), dom.width() + f.range().width(),
          LengthMethod::inscribed_sampled, depth};
}

double inscribed_length_scaled(SalemParams params, long depth, double width, double height) {
  if (depth < 0) throw InputError("depth must be non-negative");
  if (depth > kMaxExactDepth) throw InputError("exact depth exceeds " + std::to_string(kMaxExactDepth));
  if (!(width > 0.0) || !(height > 0.0)) throw InputError("rectangle sides must be positive");
  const auto m = static_cast<std::size_t>(depth);
  const double log_p = std::log(params.p());
  const double log_q = std::log1p(-params.p());

  // log m!, accumulated in a fixed order.
  std::vector<double> log_fact(m + 1, 0.0);
  for (std::size_t i = 2; i <= m; ++i) log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));

  // Each segment is hypot(a, b) with a the cell width and b its height; the
  // a's sum to width and the b's to height, so length = width + height minus
  // the sum of a + b - hypot(a, b) = 2 min / (1 + r + sqrt(1 + r^2)), r = min/max.
  const double log_a = std::log(width) - static_cast<double>(m) * std::numbers::ln2;
  std::vector<double> deficit(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const double log_b = std::log(height) + static_cast<double>(j) * log_p +
                         static_cast<double>(m - j) * log_q;
    const double log_min = std::min(log_a, log_b);
    const double r = std::exp(-std::abs(log_a - log_b));
    const double log_count = log_fact[m] - log_fact[j] - log_fact[m - j];
    deficit[j] = std::exp(log_count + std::numbers::ln2 + log_min -
                          std::log(1.0 + r + std::sqrt(1.0 + r * r)));
  }
  return (width + height) - detail::pairwise_sum(deficit);
}

LengthBracket inscribed_length_exact(SalemParams params, long depth) {
  return {inscribed_length_scaled(params, depth, 1.0, 1.0), 2.0, LengthMethod::inscribed_exact,
          depth};
}

double superellipse_arclength(double p, double tol) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("superellipse exponent must be >= 1");
  require_tolerance(tol);
  if (p == 1.0) return std::numbers::sqrt2;
  const double split = std::exp2(-1.0 / p);
  auto speed = [p](double x) {
    if (x <= 0.0) return 1.0;
    const double log_x = std::log(x);
    const double slope =
        std::exp((p - 1.0) * log_x + (1.0 / p - 1.0) * std::log1p(-std::exp(p * log_x)));
    return std::hypot(1.0, slope);
  };
  double error = 0.0;
  double l1 = 0.0;
  const double half = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      speed, 0.0, split, 30, 0.25 * tol, &error, &l1);
  if (!(2.0 * error <= tol)) {
    throw QuadratureError("superellipse arc length did not reach tolerance " + std::to_string(tol),
                          2.0 * (half - error), 2.0 * (half + error));
  }
  return 2.0 * half;
}

}  // namespace kantichain
