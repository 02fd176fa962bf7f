#include <doctest.h>

#include <cmath>

#include "kantichain/builder.hpp"
#include "kantichain/errors.hpp"
#include "kantichain/poset.hpp"

using namespace kantichain;

namespace {

const KAntichainModel& model(long k) {
  static std::vector<KAntichainModel> cache;
  for (const auto& m : cache) {
    if (m.k == k) return m;
  }
  cache.push_back(build(k));
  return cache.back();
}

}  // namespace

TEST_CASE("default schedule") {
  CHECK(default_schedule(1) == std::vector<double>{3, 2});
  CHECK(default_schedule(2) == std::vector<double>{5, 4, 3, 2});
  CHECK_THROWS_AS(default_schedule(0), InputError);

  const auto fam = envelope_family(2);
  REQUIRE(fam.size() == 4);
  CHECK(fam[0](0.5) > fam[1](0.5));
  CHECK(fam[0](0.5) == doctest::Approx(std::pow(1 - std::pow(0.5, 5), 0.2)));
  CHECK(fam[0](0.5) == doctest::Approx(0.9937).epsilon(1e-4));
  CHECK(fam[2](0.5) == doctest::Approx(0.9565).epsilon(1e-4));
  CHECK(fam[3](0.5) == doctest::Approx(0.8660).epsilon(1e-4));
  CHECK(fam[2](0.5) > fam[3](0.5));

  CHECK_THROWS_AS(envelope_family(std::vector<double>{3, 2, 1}), InputError);
  CHECK_THROWS_AS(envelope_family(std::vector<double>{2, 3}), InputError);
  CHECK_THROWS_AS(envelope_family(std::vector<double>{}), InputError);
}

TEST_CASE("models for k = 1..3") {
  for (long k = 1; k <= 3; ++k) {
    const KAntichainModel& m = model(k);
    CHECK(m.k == k);
    CHECK(m.envelopes.size() == static_cast<std::size_t>(2 * k));
    CHECK(m.curves.size() == static_cast<std::size_t>(k));
    REQUIRE(m.curve_lengths.size() == static_cast<std::size_t>(k));
    double lower = 0.0, upper = 0.0;
    for (const auto& b : m.curve_lengths) {
      CHECK(b.lower >= 2.0 - 0.03);
      lower += b.lower;
      upper += b.upper;
    }
    CHECK(m.total_length.lower == lower);
    CHECK(m.total_length.upper == upper);
    CHECK(m.total_length.lower >= 2.0 * k - k * 0.03);
    CHECK(m.total_length.upper <= 2.0 * k + 1e-9);

    const VerificationReport r = verify(m, 1000, 3);
    CHECK(r.passed());
    const auto* chain = r.find("chain bound");
    REQUIRE(chain != nullptr);
    CHECK(chain->detail.find("longest chain " + std::to_string(k) + " ") != std::string::npos);
    REQUIRE(r.find("band disjointness") != nullptr);
    CHECK(r.find("band disjointness")->passed);
  }
}

TEST_CASE("sampled model points form a k-antichain") {
  const KAntichainModel& m = model(2);
  std::vector<RealPoint> pts;
  for (const auto& c : m.curves) {
    const Interval d = c.domain();
    for (int i = 0; i <= 40; ++i) {
      const double x = std::min(d.lo + d.width() * i / 40.0, d.hi);
      pts.push_back(RealPoint{x, c.eval(x)});
    }
  }
  const PointSet s(2, pts);
  CHECK(longest_chain(s).length == 2);
  CHECK(is_k_antichain(s, 2));
  CHECK(peel(s).layers.size() == 2);
}

TEST_CASE("a duplicated curve breaks the model") {
  KAntichainModel m = model(2);
  m.curves[1] = m.curves[0];
  const VerificationReport r = verify(m, 500, 1);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("band containment") != nullptr);
  CHECK_FALSE(r.find("band containment")->passed);
}

TEST_CASE("build options") {
  CHECK_THROWS_AS(build(0), InputError);
  BuildOptions half;
  half.salem = SalemParams{0.5};
  CHECK_THROWS_AS(build(1, half), InputError);
  BuildOptions wrong;
  wrong.schedule = {4, 3, 2, 1};
  CHECK_THROWS_AS(build(1, wrong), InputError);

  BuildOptions custom;
  custom.schedule = {6, 2};
  const KAntichainModel m = build(1, custom);
  CHECK(m.envelopes[0](0.5) == doctest::Approx(std::pow(1 - std::pow(0.5, 6), 1.0 / 6)));
  CHECK(verify(m, 400, 0).passed());
}

TEST_CASE("verification and export are deterministic") {
  const KAntichainModel& m = model(2);
  CHECK(verify(m, 300, 9).to_json() == verify(m, 300, 9).to_json());
  const std::string csv = export_points(m, 10);
  CHECK(csv == export_points(m, 10));
  CHECK(csv.rfind("curve_index,x,y\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 10);
  CHECK_THROWS_AS(export_points(m, 1), InputError);
  CHECK_THROWS_AS(verify(m, 1, 0), InputError);
}

TEST_CASE("thread count does not change the model") {
  setenv("ANTICHAIN_THREADS", "1", 1);
  const KAntichainModel serial = build(2);
  unsetenv("ANTICHAIN_THREADS");
  const KAntichainModel& par = model(2);
  CHECK(serial.total_length.lower == par.total_length.lower);
  CHECK(export_points(serial, 50) == export_points(par, 50));
}
