#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kantichain/builder.hpp"
#include "kantichain/errors.hpp"
#include "kantichain/json_io.hpp"
#include "kantichain/lemma.hpp"
#include "kantichain/monotone.hpp"
#include "kantichain/poset.hpp"
#include "kantichain/report.hpp"

namespace kantichain::cli {

namespace {

using nlohmann::json;

// Families larger than this are summarized by their size only.
constexpr long kMaxListedFamilyDimension = 12;

json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

struct BuildFlags {
  long k = 1;
  double trunc = 0.02;
  long depth = 64;
  double p = kDefaultGluingP;
  std::size_t steps = 500;
  std::vector<double> schedule;

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "number of curves")->check(CLI::PositiveNumber);
    cmd->add_option("--trunc", trunc, "target truncation error per curve")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--depth", depth, "inscribed-length depth per piece")
        ->check(CLI::Range(0L, kMaxExactDepth));
    cmd->add_option("--p", p, "staircase parameter of the glued pieces")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--steps", steps, "maximum sequence steps per curve")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--schedule", schedule,
                    "superellipse exponents p_1 > ... > p_2k (default 2k+1 down to 2)");
  }

  BuildOptions options() const {
    BuildOptions o;
    o.stop = {steps, trunc};
    o.depth = depth;
    o.salem = SalemParams(p);
    o.schedule = schedule;
    return o;
  }
};

KAntichainModel load_or_build(const std::string& model_path, const BuildFlags& flags) {
  if (!model_path.empty()) return model_from_json(read_json(model_path));
  return build(flags.k, flags.options());
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-antichains: extremal bounds, peeling, and length-2k constructions", "kantichain"};
  app.require_subcommand(1);

  long n = 0, k = 0;
  std::string input;
  std::string out_path;

  auto* erdos = app.add_subcommand("erdos", "Erdos bound and extremal family for {0,1}^n");
  erdos->add_option("--n", n, "cube dimension")->required();
  erdos->add_option("--k", k, "chain bound")->required();

  auto* brute = app.add_subcommand("brute", "exhaustive maximum k-antichain in {0,1}^n, n <= 4");
  brute->add_option("--n", n, "cube dimension")->required();
  brute->add_option("--k", k, "chain bound")->required();

  auto* peel_cmd = app.add_subcommand("peel", "split a point set into antichain layers");
  peel_cmd->add_option("input", input, "point set JSON (default stdin)");

  auto* verify_cmd = app.add_subcommand("verify", "check that a point set is a k-antichain");
  verify_cmd->add_option("--k", k, "chain bound")->required();
  verify_cmd->add_option("input", input, "point set JSON (default stdin)");

  double p = 0.25;
  long depth = 0;
  std::string method = "exact";
  auto* salem_cmd = app.add_subcommand("salem-length", "inscribed length of a Salem staircase");
  salem_cmd->add_option("--p", p, "staircase parameter in (0,1)");
  salem_cmd->add_option("--depth", depth, "dyadic depth")->required();
  salem_cmd->add_option("--method", method, "exact or sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));

  double lp = 2.0;
  double tol = 1e-10;
  auto* lp_cmd = app.add_subcommand("lp-length", "arc length of the quarter l^p circle");
  lp_cmd->add_option("--p", lp, "exponent >= 1")->required();
  lp_cmd->add_option("--tol", tol, "absolute tolerance");

  BuildFlags flags;
  double g_p = 1.0, h_p = 2.0;
  std::size_t curve_samples = 0;
  auto* lemma_cmd = app.add_subcommand("lemma-build", "glue a length-2 curve between two envelopes");
  lemma_cmd->add_option("--trunc", flags.trunc, "target truncation error")
      ->check(CLI::PositiveNumber);
  lemma_cmd->add_option("--depth", flags.depth, "inscribed-length depth per piece");
  lemma_cmd->add_option("--p", flags.p, "staircase parameter of the glued pieces");
  lemma_cmd->add_option("--steps", flags.steps, "maximum sequence steps");
  lemma_cmd->add_option("--g-p", g_p, "exponent of the lower envelope");
  lemma_cmd->add_option("--h-p", h_p, "exponent of the upper envelope");
  lemma_cmd->add_option("--samples", curve_samples, "write this many x,y curve samples");
  lemma_cmd->add_option("--out", out_path, "CSV path for --samples (default stdout)");

  auto* kbuild = app.add_subcommand("kantichain-build", "build a k-antichain of length near 2k");
  flags.attach(kbuild);

  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  auto* kverify = app.add_subcommand("kantichain-verify", "sampled checks of a k-antichain model");
  flags.attach(kverify);
  kverify->add_option("--samples", samples, "random samples per curve");
  kverify->add_option("--seed", seed, "sampling seed");
  kverify->add_option("model", input, "model JSON from kantichain-build (default: build one)");

  std::size_t per_curve = 0;
  auto* export_cmd = app.add_subcommand("export", "CSV points of a k-antichain model");
  flags.attach(export_cmd);
  export_cmd->add_option("--per-curve", per_curve, "grid points per curve")->required();
  export_cmd->add_option("--out", out_path, "CSV path (default stdout)");
  export_cmd->add_option("model", input, "model JSON from kantichain-build (default: build one)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (erdos->parsed()) {
      const BigInt bound = erdos_bound(n, k);
      json result{{"n", n}, {"k", k}, {"bound", big_to_json(bound)}};
      if (n <= kMaxListedFamilyDimension) {
        const PointSet family = erdos_extremal(n, k);
        result["family"] = to_json(family);
        result["family_size"] = family.size();
        result["is_k_antichain"] = is_k_antichain(family, k);
      } else {
        result["family"] = nullptr;
        result["family_size"] = big_to_json(bound);
      }
      emit(out, result);
    } else if (brute->parsed()) {
      const std::uint64_t best = brute_force_max(n, k);
      emit(out, {{"n", n}, {"k", k}, {"max", best}});
    } else if (peel_cmd->parsed()) {
      const PointSet s = point_set_from_json(read_json(input));
      json result = to_json(peel(s));
      result["n"] = s.dimension();
      emit(out, result);
    } else if (verify_cmd->parsed()) {
      const PointSet s = point_set_from_json(read_json(input));
      const ChainResult chain = longest_chain(s);
      const bool ok = is_k_antichain(s, k);
      emit(out, {{"k", k},
                 {"size", s.size()},
                 {"longest_chain", chain.length},
                 {"witness", to_json(chain).at("witness")},
                 {"is_k_antichain", ok}});
      return ok ? kSuccess : kVerificationFailed;
    } else if (salem_cmd->parsed()) {
      const SalemParams params(p);
      const LengthBracket b = method == "exact"
                                  ? inscribed_length_exact(params, depth)
                                  : inscribed_length_sampled(salem_decreasing(params), depth);
      json result = to_json(b);
      result["p"] = p;
      emit(out, result);
    } else if (lp_cmd->parsed()) {
      try {
        const double length = superellipse_arclength(lp, tol);
        emit(out, {{"p", lp}, {"tol", tol}, {"length", length}});
      } catch (const QuadratureError& e) {
        err << "error: " << e.what() << " (bracket [" << e.lower() << ", " << e.upper() << "])\n";
        return kVerificationFailed;
      }
    } else if (lemma_cmd->parsed()) {
      if (curve_samples > 0 && out_path.empty()) throw InputError("--samples needs --out");
      const EnvelopePair band = EnvelopePair::make(superellipse(g_p), superellipse(h_p));
      const SequencePair seq = build_sequences(band, {flags.steps, flags.trunc});
      const VerificationReport rects = validate_rectangles(band, seq);
      json result{{"envelopes", {{"g", band.lower().descriptor()}, {"h", band.upper().descriptor()}}},
                  {"sequences", to_json(seq)},
                  {"rectangles", rects.to_json()}};
      if (!rects.passed()) {
        emit(out, result);
        return kVerificationFailed;
      }
      const GluedCurve curve = glue(band, seq, SalemParams(flags.p));
      result["curve"] = to_json(curve);
      result["pieces"] = curve.pieces().size();
      result["length"] = to_json(curve_length(curve, flags.depth));
      emit(out, result);
      if (curve_samples > 0) {
        write_text(out_path, export_curve_samples(curve, curve_samples), out);
      }
    } else if (kbuild->parsed()) {
      emit(out, to_json(build(flags.k, flags.options())));
    } else if (kverify->parsed()) {
      const KAntichainModel model = load_or_build(input, flags);
      const VerificationReport report = verify(model, samples, seed);
      emit(out, {{"k", model.k},
                 {"samples", samples},
                 {"seed", seed},
                 {"total_length", to_json(model.total_length)},
                 {"report", report.to_json()}});
      return report.passed() ? kSuccess : kVerificationFailed;
    } else if (export_cmd->parsed()) {
      const KAntichainModel model = load_or_build(input, flags);
      write_text(out_path, export_points(model, per_curve), out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    emit(out, {{"report", e.report().to_json()}});
    return kVerificationFailed;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

}  // namespace kantichain::cli
