#include <doctest.h>

#include "kantichain/errors.hpp"
#include "kantichain/json_io.hpp"
#include "kantichain/sampling.hpp"

using namespace kantichain;
using nlohmann::json;

TEST_CASE("point sets round trip") {
  UniformSampler rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<RealPoint> v;
    for (int i = 0; i < trial; ++i) {
      std::vector<double> c(n);
      for (auto& x : c) x = rng.next();
      v.emplace_back(std::move(c));
    }
    const PointSet s(n, v);
    const json j = to_json(s);
    CHECK(point_set_from_json(json::parse(j.dump())) == s);
  }
  const json square = to_json(lattice_cube(2));
  CHECK(square["n"] == 2);
  CHECK(square["points"].size() == 4);
}

TEST_CASE("point set parse errors") {
  CHECK_THROWS_AS(point_set_from_json(json::parse(R"({"points": [[0.1, 0.2]]})")), InputError);
  CHECK_THROWS_AS(point_set_from_json(json::parse(R"({"n": 2, "points": [[0.1]]})")), InputError);
  CHECK_THROWS_AS(point_set_from_json(json::parse(R"({"n": 1, "points": [[1.5]]})")), InputError);
  CHECK_THROWS_AS(point_set_from_json(json::parse(R"({"n": "two", "points": []})")), InputError);
  CHECK_THROWS_AS(point_set_from_json(json::parse("[]")), InputError);
}

TEST_CASE("peeling and chain results") {
  const json p = to_json(peel(lattice_cube(2)));
  REQUIRE(p["layers"].size() == 3);
  CHECK(p["layers"][1] == json::parse("[[0.0, 1.0], [1.0, 0.0]]"));
  const json c = to_json(longest_chain(lattice_cube(2)));
  CHECK(c["length"] == 3);
}

TEST_CASE("length brackets round trip") {
  const LengthBracket b = inscribed_length_exact(SalemParams{0.25}, 37);
  const json j = to_json(b);
  CHECK(j["method"] == "inscribed-exact");
  CHECK(j["depth"] == 37);
  const LengthBracket back = length_bracket_from_json(json::parse(j.dump()));
  CHECK(back.lower == b.lower);
  CHECK(back.upper == b.upper);
  CHECK(back.method == b.method);
  CHECK(back.depth == b.depth);
  CHECK_THROWS_AS(length_bracket_from_json(json::parse(R"({"lower": 1})")), InputError);
}

TEST_CASE("glued curves and models round trip") {
  const auto e = EnvelopePair::make(superellipse(1), superellipse(2));
  const GluedCurve c = glue(e, build_sequences(e, {}), SalemParams{0.1});
  const GluedCurve c2 = glued_curve_from_json(json::parse(to_json(c).dump()));
  REQUIRE(c2.pieces().size() == c.pieces().size());
  CHECK(c2.truncation_error() == c.truncation_error());
  for (double x : {c.domain().lo, 0.1, 0.3, 0.5, 0.77, c.domain().hi}) CHECK(c2.eval(x) == c.eval(x));
  CHECK(to_json(c2) == to_json(c));

  const KAntichainModel m = build(1);
  const json mj = to_json(m);
  const KAntichainModel m2 = model_from_json(json::parse(mj.dump()));
  CHECK(to_json(m2) == mj);
  CHECK(export_points(m2, 25) == export_points(m, 25));

  json broken = mj;
  broken["curves"] = json::array();
  CHECK_THROWS_AS(model_from_json(broken), InputError);
  CHECK_THROWS_AS(glued_curve_from_json(json::parse(R"({"p": 0.1})")), InputError);
}
