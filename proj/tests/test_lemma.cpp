#include <doctest.h>

#include <cmath>

#include "kantichain/errors.hpp"
#include "kantichain/lemma.hpp"
#include "kantichain/sampling.hpp"
#include "oracles.hpp"

using namespace kantichain;
using doctest::Approx;

namespace {

EnvelopePair line_circle() { return EnvelopePair::make(superellipse(1), superellipse(2)); }

double f_ref(double x) { return 0.5 * ((1.0 - x) + std::sqrt(1.0 - x * x)); }

bool has_failure(const VerificationReport& r, const std::string& check, const std::string& text) {
  const auto* c = r.find(check);
  return c != nullptr && !c->passed && c->detail.find(text) != std::string::npos;
}

}  // namespace

TEST_CASE("envelope pairs") {
  CHECK_NOTHROW(line_circle());
  CHECK_THROWS_AS(EnvelopePair::make(superellipse(1), superellipse(1)), InputError);
  CHECK_THROWS_AS(EnvelopePair::make(superellipse(2), superellipse(1)), InputError);
  CHECK_THROWS_AS(EnvelopePair::make(affine_conjugate(superellipse(1), {0, 0.5}, {0, 1}),
                                     superellipse(2)),
                  InputError);
  const auto e = line_circle();
  CHECK(e.contains(0.5, 0.6));
  CHECK_FALSE(e.contains(0.5, 0.9));
  CHECK_FALSE(e.contains(0.5, 0.4));
}

TEST_CASE("midline") {
  const auto f = midline(line_circle());
  CHECK(f(0.5) == Approx((0.5 + std::sqrt(3.0) / 2) / 2).epsilon(1e-14));
  CHECK(f(0.5) == Approx(0.6830127).epsilon(1e-7));
  CHECK(f(0.0) == 1.0);
  CHECK(f(1.0) == 0.0);
  for (int t = 1; t < 20; ++t) {
    const double x = t / 20.0;
    CHECK(f(x) > 1.0 - x);
    CHECK(f(x) < std::sqrt(1.0 - x * x));
  }
}

TEST_CASE("first sequence steps") {
  const auto e = line_circle();
  const SequencePair s = build_sequences(e, {1, 1.0});
  REQUIRE(s.xs.size() + s.ys.size() >= 3);
  CHECK(s.xs[0] == 0.5);
  CHECK(s.ys[0] == 0.5);

  const SequencePair s2 = build_sequences(e, {2, 1e-9});
  REQUIRE(s2.xs.size() >= 2);
  REQUIRE(s2.ys.size() >= 2);

  const double f_half = f_ref(0.5);
  const double via_g = 1.0 - f_half;
  const double via_f = oracle::bisect_decreasing(f_ref, std::sqrt(3.0) / 2, 0.0, 1.0);
  CHECK(via_f < via_g);
  CHECK(std::abs(s2.xs[1] - std::max(via_g, via_f)) <= 1e-9);
  CHECK(std::abs(s2.xs[1] - (0.75 - std::sqrt(3.0) / 4)) <= 1e-9);

  const double via_h = std::sqrt(1.0 - f_half * f_half);
  const double via_f2 = oracle::bisect_decreasing(f_ref, 0.5, 0.0, 1.0);
  CHECK(std::abs(via_f2 - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(via_f2 < via_h);
  CHECK(std::abs(s2.ys[1] - std::min(via_h, via_f2)) <= 1e-9);
  CHECK(std::abs(s2.fxs[1] - f_ref(s2.xs[1])) <= 1e-12);
}

TEST_CASE("sequence bookkeeping") {
  const auto e = line_circle();
  const SequencePair s = build_sequences(e, {});
  CHECK(s.truncation_error() <= 0.02);
  for (std::size_t i = 0; i < s.xs.size(); ++i) CHECK(std::abs(s.fxs[i] - f_ref(s.xs[i])) <= 1e-11);
  for (std::size_t i = 0; i < s.ys.size(); ++i) CHECK(std::abs(s.fys[i] - f_ref(s.ys[i])) <= 1e-11);
  const double expected = s.xs.back() + (1 - s.fxs.back()) + (1 - s.ys.back()) + s.fys.back();
  CHECK(s.truncation_error() == expected);

  // More steps shrink the uncovered corners.
  double prev = 1e9;
  for (double target : {0.2, 0.05, 0.02, 0.005}) {
    const double t = build_sequences(e, {10000, target}).truncation_error();
    CHECK(t <= target);
    CHECK(t <= prev);
    prev = t;
  }
  CHECK_THROWS_AS(build_sequences(e, {0, 0.02}), InputError);
  CHECK_THROWS_AS(build_sequences(e, {10, 0.0}), InputError);
}

TEST_CASE("validate_rectangles accepts the construction and rejects bad sequences") {
  const auto e = line_circle();
  const auto f = midline(e);
  const SequencePair s = build_sequences(e, {});
  REQUIRE(s.xs.size() >= 3);
  CHECK(validate_rectangles(e, s).passed());

  SequencePair shrunk = s;
  shrunk.xs.resize(2);
  shrunk.fxs.resize(2);
  shrunk.xs[1] = s.xs[1] / 2;
  shrunk.fxs[1] = f(shrunk.xs[1]);
  const auto r1 = validate_rectangles(e, shrunk);
  CHECK_FALSE(r1.passed());
  CHECK(has_failure(r1, "containment", "x-rectangle 1:"));

  SequencePair inner = s;
  inner.xs[1] = (s.xs[0] + s.xs[1]) / 2;
  inner.fxs[1] = f(inner.xs[1]);
  const auto r2 = validate_rectangles(e, inner);
  CHECK_FALSE(r2.passed());
  CHECK(has_failure(r2, "touching", "x-rectangle 1:"));

  SequencePair unordered = s;
  std::swap(unordered.xs[1], unordered.xs[2]);
  CHECK(has_failure(validate_rectangles(e, unordered), "ordering", "x-sequence"));

  CHECK_THROWS_AS(glue(e, shrunk, SalemParams{0.25}), VerificationError);
}

TEST_CASE("glued curve structure") {
  const auto e = line_circle();
  const auto f = midline(e);
  const SequencePair s = build_sequences(e, {});
  const GluedCurve c = glue(e, s, SalemParams{0.25});

  CHECK(c.pieces().size() == s.x_pieces() + s.y_pieces());
  CHECK(c.domain().lo == s.xs.back());
  CHECK(c.domain().hi == s.ys.back());
  CHECK(c.eval(0.5) == s.fxs[0]);
  CHECK(c.eval(0.5) == Approx(0.6830127).epsilon(1e-7));
  for (std::size_t i = 0; i < s.xs.size(); ++i) CHECK(c.eval(s.xs[i]) == s.fxs[i]);
  for (std::size_t i = 0; i < s.ys.size(); ++i) CHECK(c.eval(s.ys[i]) == s.fys[i]);
  for (std::size_t i = 0; i + 1 < c.pieces().size(); ++i) {
    CHECK(c.pieces()[i].rect.x_hi() == c.pieces()[i + 1].rect.x_lo());
  }
  CHECK(c.truncation_error() == s.truncation_error());
  CHECK_THROWS_AS(c.eval(s.xs.back() / 2), InputError);
  CHECK_THROWS_AS(glue(e, s, SalemParams{0.5}), InputError);
  (void)f;
}

TEST_CASE("glued curve stays in the band and decreases") {
  const auto e = line_circle();
  const GluedCurve c = glue(e, build_sequences(e, {}), SalemParams{kDefaultGluingP});
  const double d = kContainmentTolerance;
  const Interval dom = c.domain();
  UniformSampler rng(77);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(rng.next(dom.lo, dom.hi));
  int outside = 0;
  for (double x : xs) {
    const double y = c.eval(x);
    const double g = 1.0 - std::min(x + d, 1.0);
    const double h = std::sqrt(std::max(0.0, 1.0 - std::pow(std::max(x - d, 0.0), 2)));
    if (!(y + d >= g && y - d <= h)) ++outside;
  }
  CHECK(outside == 0);

  std::sort(xs.begin(), xs.end());
  // Equal doubles are tolerated only inside one piece, where the staircase is
  // strictly decreasing but narrower than the spacing of doubles.
  int rises = 0, ties = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) continue;
    const double a = c.eval(xs[i]), b = c.eval(xs[i + 1]);
    if (a < b || (a == b && c.locate(xs[i]) != c.locate(xs[i + 1]))) ++rises;
    if (a == b) ++ties;
  }
  CHECK(rises == 0);
  CHECK(ties < 100);
}

TEST_CASE("curve length bracket") {
  const auto e = line_circle();
  const GluedCurve c = glue(e, build_sequences(e, {}), SalemParams{kDefaultGluingP});
  const double n = static_cast<double>(c.pieces().size());

  double prev = 0.0;
  for (long m : {0L, 4L, 16L, 32L, 64L, 128L}) {
    const LengthBracket b = curve_length(c, m);
    CHECK(b.lower >= prev);
    CHECK(b.lower <= b.upper);
    CHECK(std::abs(b.upper - 2.0) <= 1e-12);
    CHECK(b.upper <= 2.0 + n * 1e-9);
    prev = b.lower;
  }
  CHECK(curve_length(c, 64).lower >= 2.0 - 0.02 - 0.01);
}

TEST_CASE("single-piece curve matches the exact formula") {
  const SalemParams p{0.25};
  const GluedCurve c({{Rectangle(0, 1, 0, 1), salem_decreasing(p)}}, 0.0, p);
  for (long m : {0L, 1L, 10L, 256L}) {
    const LengthBracket b = curve_length(c, m);
    CHECK(b.lower == Approx(inscribed_length_exact(p, m).lower).epsilon(1e-14));
    CHECK(b.upper == 2.0);
  }
}

TEST_CASE("glued curves reject malformed pieces") {
  const SalemParams p{0.25};
  const auto s = salem_decreasing(p);
  CHECK_THROWS_AS(GluedCurve({}, 0.0, p), InputError);
  CHECK_THROWS_AS(GluedCurve({{Rectangle(0, 0.5, 0, 1), s}}, 0.0, p), InputError);
  const auto a = affine_conjugate(s, {0, 0.5}, {0.5, 1});
  const auto b = affine_conjugate(s, {0.6, 1}, {0, 0.5});
  CHECK_THROWS_AS(GluedCurve({{Rectangle(0, 0.5, 0.5, 1), a}, {Rectangle(0.6, 1, 0, 0.5), b}}, 0.0, p),
                  InputError);
  CHECK_THROWS_AS(Rectangle(0.5, 0.5, 0, 1), InputError);
  CHECK(Rectangle::from_corners(0.1, 0.9, 0.4, 0.2) == Rectangle(0.1, 0.4, 0.2, 0.9));
}

TEST_CASE("construct_lemma and curve export") {
  const auto e = line_circle();
  const LemmaConstruction lc = construct_lemma(e, {}, SalemParams{kDefaultGluingP}, 64);
  CHECK(lc.rectangles.passed());
  CHECK(lc.length.lower >= 1.97);
  const std::string csv = export_curve_samples(lc.curve, 5);
  CHECK(csv.rfind("x,y\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK(csv == export_curve_samples(lc.curve, 5));
}
