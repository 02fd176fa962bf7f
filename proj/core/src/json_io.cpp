#include "kantichain/json_io.hpp"

#include <string>

namespace kantichain {

namespace {

template <typename F>
auto parsing(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const RealPoint& p) { return p.coords(); }

nlohmann::json to_json(const PointSet& s) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : s) pts.push_back(to_json(p));
  return {{"n", s.dimension()}, {"points", std::move(pts)}};
}

PointSet point_set_from_json(const nlohmann::json& j) {
  return parsing("point set", [&] {
    const auto& n_field = j.at("n");
    if (!n_field.is_number_integer() || n_field.get<long>() < 1) {
      throw InputError("point set field \"n\" must be a positive integer");
    }
    const auto n = n_field.get<std::size_t>();
    const auto& pts = j.at("points");
    if (!pts.is_array()) throw InputError("point set field \"points\" must be an array");
    std::vector<RealPoint> points;
    points.reserve(pts.size());
    for (const auto& p : pts) {
      if (!p.is_array()) throw InputError("each point must be an array of numbers");
      std::vector<double> coords;
      for (const auto& c : p) {
        if (!c.is_number()) throw InputError("coordinates must be numbers");
        coords.push_back(c.get<double>());
      }
      points.emplace_back(std::move(coords));
    }
    return PointSet(n, std::move(points));
  });
}

nlohmann::json to_json(const PeelingResult& r) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : r.layers) layers.push_back(to_json(layer).at("points"));
  return {{"layers", std::move(layers)}};
}

nlohmann::json to_json(const ChainResult& r) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& p : r.witness) witness.push_back(to_json(p));
  return {{"length", r.length}, {"witness", std::move(witness)}};
}

nlohmann::json to_json(const LengthBracket& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"method", to_string(b.method)},
          {"depth", b.depth}};
}

LengthBracket length_bracket_from_json(const nlohmann::json& j) {
  return parsing("length bracket", [&] {
    return LengthBracket{j.at("lower").get<double>(), j.at("upper").get<double>(),
                         length_method_from_string(j.at("method").get<std::string>()),
                         j.at("depth").get<long>()};
  });
}

nlohmann::json to_json(const SequencePair& s) {
  return {{"xs", s.xs},
          {"f_xs", s.fxs},
          {"ys", s.ys},
          {"f_ys", s.fys},
          {"tolerance", s.tolerance},
          {"truncation_error", s.truncation_error()}};
}

nlohmann::json to_json(const Rectangle& r) {
  return {{"x_lo", r.x_lo()}, {"x_hi", r.x_hi()}, {"y_lo", r.y_lo()}, {"y_hi", r.y_hi()}};
}

nlohmann::json to_json(const GluedCurve& c) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& piece : c.pieces()) {
    pieces.push_back({{"rect", to_json(piece.rect)}, {"function", piece.fn.descriptor()}});
  }
  return {{"p", c.salem().p()},
          {"truncation_error", c.truncation_error()},
          {"pieces", std::move(pieces)}};
}

GluedCurve glued_curve_from_json(const nlohmann::json& j) {
  return parsing("glued curve", [&] {
    std::vector<GluedCurve::Piece> pieces;
    for (const auto& piece : j.at("pieces")) {
      const auto& r = piece.at("rect");
      pieces.push_back({Rectangle(r.at("x_lo").get<double>(), r.at("x_hi").get<double>(),
                                  r.at("y_lo").get<double>(), r.at("y_hi").get<double>()),
                        bijection_from_descriptor(piece.at("function"))});
    }
    return GluedCurve(std::move(pieces), j.at("truncation_error").get<double>(),
                      SalemParams(j.at("p").get<double>()));
  });
}

nlohmann::json to_json(const KAntichainModel& m) {
  nlohmann::json envelopes = nlohmann::json::array();
  for (const auto& f : m.envelopes) envelopes.push_back(f.descriptor());
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : m.curves) curves.push_back(to_json(c));
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& b : m.curve_lengths) lengths.push_back(to_json(b));
  return {{"k", m.k},
          {"envelopes", std::move(envelopes)},
          {"curves", std::move(curves)},
          {"curve_lengths", std::move(lengths)},
          {"total_length", to_json(m.total_length)}};
}

KAntichainModel model_from_json(const nlohmann::json& j) {
  return parsing("k-antichain model", [&] {
    KAntichainModel m;
    m.k = j.at("k").get<long>();
    for (const auto& d : j.at("envelopes")) m.envelopes.push_back(bijection_from_descriptor(d));
    for (const auto& c : j.at("curves")) m.curves.push_back(glued_curve_from_json(c));
    for (const auto& b : j.at("curve_lengths")) {
      m.curve_lengths.push_back(length_bracket_from_json(b));
    }
    m.total_length = length_bracket_from_json(j.at("total_length"));
    const auto k = static_cast<std::size_t>(m.k);
    if (m.k < 1 || m.envelopes.size() != 2 * k || m.curves.size() != k ||
        m.curve_lengths.size() != k) {
      throw InputError("model needs k >= 1, 2k envelopes, k curves and k curve lengths");
    }
    return m;
  });
}

}  // namespace kantichain
