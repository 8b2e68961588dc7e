// Command-line front end: parse a matrix-polynomial input file (or generate
// a seeded random instance), run the requested analyses, and print a text or
// structured report.
//
// Exit codes: 0 success, 1 identity-check failure or analysis diagnostic,
// 2 parse/usage error, 3 identically singular input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "opcurve/analyze.hpp"
#include "opcurve/errors.hpp"
#include "opcurve/instance_gen.hpp"
#include "opcurve/io.hpp"

namespace {

using namespace opcurve;

// Inputs of the form random:<kind>:<n> draw a seeded instance instead of
// reading a file; <kind> is one of pencil, curve, split.
MatrixPolynomial load_input(const std::string& spec, std::uint64_t seed) {
  if (spec.rfind("random:", 0) != 0) return parse_input_file(spec);
  const std::string rest = spec.substr(7);
  const auto colon = rest.find(':');
  const std::string kind = rest.substr(0, colon);
  std::size_t n = 2;
  if (colon != std::string::npos) {
    try {
      const int parsed = std::stoi(rest.substr(colon + 1));
      if (parsed < 1 || parsed > 4) throw std::out_of_range("n");
      n = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
      throw ParseError("random instance size must be an integer in 1..4");
    }
  }
  InstanceGenerator gen(seed);
  if (kind == "pencil") return gen.pencil(n);
  if (kind == "curve") return gen.degree_two_curve(n);
  if (kind == "split")
    return MatrixPolynomial::pencil_from_operator(gen.split_operator(n).t);
  throw ParseError("unknown random instance kind: " + kind +
                   " (expected pencil, curve or split)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact spectral analysis of matrix polynomials: eigenvalue "
      "multiplicities, intersection indices against the singular-matrix "
      "hypersurface, and Bezout bookkeeping over the rationals"};
  app.require_subcommand(1);

  std::string input;
  std::string at_text;
  std::string format = "text";
  unsigned max_truncation = 64;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd, bool takes_at) {
    cmd->add_option("input", input,
                    "input file (JSON) or random:<kind>:<n>")
        ->required();
    if (takes_at)
      cmd->add_option("--at", at_text, "target eigenvalue, e.g. 3 or -1/2");
    cmd->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--max-truncation", max_truncation,
                    "bound for m-adic stabilization (default 64)");
    cmd->add_option("--seed", seed, "seed for random: inputs");
  };

  struct Entry {
    Subcommand subcommand;
    const char* description;
    bool takes_at;
  };
  const Entry entries[] = {
      {Subcommand::kSpectrum, "finite spectrum and square-free factors", false},
      {Subcommand::kMultiplicity, "algebraic multiplicities", true},
      {Subcommand::kAdmissible, "admissibility and entry-gcd witnesses", false},
      {Subcommand::kIntersect, "affine intersection indices", true},
      {Subcommand::kResolve, "resolution intersection indices", true},
      {Subcommand::kBezout, "finite plus infinity Bezout bookkeeping", false},
      {Subcommand::kClassical, "classical spectral identity for pencils",
       false},
      {Subcommand::kAll, "every analysis", true},
  };
  for (const auto& entry : entries)
    add_common(app.add_subcommand(subcommand_name(entry.subcommand),
                                  entry.description),
               entry.takes_at);

  CLI11_PARSE(app, argc, argv);

  AnalysisRequest request;
  for (const auto& entry : entries)
    if (app.get_subcommand(subcommand_name(entry.subcommand))->parsed())
      request.subcommand = entry.subcommand;
  request.max_truncation = max_truncation;

  try {
    if (!at_text.empty()) {
      try {
        request.at = parse_rational(at_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    const MatrixPolynomial L = load_input(input, seed);
    const AnalysisOutcome outcome = analyze(L, request);
    if (format == "structured")
      std::cout << outcome.report.dump(2) << "\n";
    else
      std::cout << outcome.text;
    return outcome.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadRequestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StabilizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
