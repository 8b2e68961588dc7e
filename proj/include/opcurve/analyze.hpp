#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opcurve/classical.hpp"
#include "opcurve/errors.hpp"
#include "opcurve/geometry.hpp"
#include "opcurve/io.hpp"
#include "opcurve/madic.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/projective.hpp"
#include "opcurve/rational.hpp"

namespace opcurve {

enum class Subcommand {
  kSpectrum,
  kMultiplicity,
  kAdmissible,
  kIntersect,
  kResolve,
  kBezout,
  kClassical,
  kAll,
};

inline const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kSpectrum: return "spectrum";
    case Subcommand::kMultiplicity: return "multiplicity";
    case Subcommand::kAdmissible: return "admissible";
    case Subcommand::kIntersect: return "intersect";
    case Subcommand::kResolve: return "resolve";
    case Subcommand::kBezout: return "bezout";
    case Subcommand::kClassical: return "classical";
    case Subcommand::kAll: return "all";
  }
  return "";
}

struct AnalysisRequest {
  Subcommand subcommand = Subcommand::kAll;
  std::optional<Rational> at;
  unsigned max_truncation = 64;
};

// Exit codes: 0 all requested identity checks hold, 1 some check failed,
// 3 identically singular input. (2 is the caller's parse/usage error code.)
struct AnalysisOutcome {
  Json report;
  std::string text;
  int exit_code = 0;
};

namespace detail {

class ReportBuilder {
 public:
  Json& report() { return report_; }
  std::ostringstream& text() { return text_; }

  void check(const std::string& name, bool holds) {
    Json entry;
    entry["name"] = name;
    entry["holds"] = holds;
    checks_.push_back(std::move(entry));
    if (!holds) all_hold_ = false;
  }

  void finish() {
    report_["checks"] = checks_;
    report_["checks_passed"] = all_hold_;
    text_ << "checks passed: " << (all_hold_ ? "yes" : "NO") << "\n";
  }

  bool all_hold() const { return all_hold_; }

 private:
  Json report_;
  std::ostringstream text_;
  Json checks_ = Json::array();
  bool all_hold_ = true;
};

inline bool wants(Subcommand request, Subcommand section) {
  return request == section || request == Subcommand::kAll;
}

}  // namespace detail

// Run the requested analyses on L and assemble the machine-readable report
// and its plain-text rendering. Identical inputs produce byte-identical
// structured reports.
inline AnalysisOutcome analyze(const MatrixPolynomial& L,
                               const AnalysisRequest& request) {
  detail::ReportBuilder out;
  Json& r = out.report();
  std::ostringstream& text = out.text();

  const std::size_t n = L.size();
  const std::size_t d = L.degree();
  r["subcommand"] = subcommand_name(request.subcommand);
  r["input"] = matrix_polynomial_to_json(L);
  r["n"] = n;
  r["degree"] = d;
  const UniPoly det = determinant(L);
  r["determinant"] = to_string(det);
  r["identically_singular"] = det.is_zero();
  text << "n = " << n << ", entry degree d = " << d << ", d*n = " << d * n
       << "\n";
  text << "det(L) = " << to_string(det) << "\n";

  const bool wants_admissible =
      detail::wants(request.subcommand, Subcommand::kAdmissible) ||
      detail::wants(request.subcommand, Subcommand::kIntersect);
  std::optional<bool> admissible;
  if (wants_admissible) admissible = is_admissible(L);

  if (det.is_zero()) {
    r["note"] =
        "determinant vanishes identically: the spectrum is the whole field";
    text << "determinant vanishes identically: the spectrum is the whole "
            "field\n";
    if (admissible) {
      r["admissible"] = *admissible;
      text << "admissible: " << (*admissible ? "yes" : "no") << "\n";
    }
    out.finish();
    AnalysisOutcome outcome;
    outcome.report = out.report();
    outcome.text = text.str();
    outcome.exit_code = 3;
    return outcome;
  }

  const SpectrumReport spec = spectrum(L);
  const LocalMultiplicityOptions local_options{request.max_truncation};

  // Eigenvalues under analysis: --at if given, otherwise every rational
  // eigenvalue.
  std::vector<Rational> targets;
  if (request.at) {
    targets.push_back(*request.at);
  } else {
    for (const auto& [value, mult] : spec.rational_eigenvalues)
      targets.push_back(value);
    const bool needs_target =
        request.subcommand == Subcommand::kMultiplicity ||
        request.subcommand == Subcommand::kIntersect ||
        request.subcommand == Subcommand::kResolve;
    if (targets.empty() && needs_target)
      throw BadRequestError(
          "no rational eigenvalues to analyze; pass --at <rational>");
  }

  if (detail::wants(request.subcommand, Subcommand::kSpectrum)) {
    Json section;
    Json eigenvalues = Json::array();
    for (const auto& [value, mult] : spec.rational_eigenvalues) {
      Json e;
      e["lambda"] = to_string(value);
      e["multiplicity"] = mult;
      eigenvalues.push_back(std::move(e));
    }
    section["rational_eigenvalues"] = std::move(eigenvalues);
    Json factors = Json::array();
    std::int64_t weighted = 0;
    for (const auto& [factor, mult] : spec.factor_table) {
      Json f;
      f["factor"] = to_string(factor);
      f["multiplicity"] = mult;
      factors.push_back(std::move(f));
      weighted += mult * *factor.degree();
    }
    section["square_free_factors"] = std::move(factors);
    section["total_finite_multiplicity"] = spec.total_finite_multiplicity;
    r["spectrum"] = std::move(section);
    out.check("factor degrees account for deg det",
              weighted == spec.total_finite_multiplicity);

    text << "spectrum: ";
    if (spec.rational_eigenvalues.empty()) text << "no rational eigenvalues";
    for (const auto& [value, mult] : spec.rational_eigenvalues)
      text << to_string(value) << " (multiplicity " << mult << ") ";
    text << "; total finite multiplicity " << spec.total_finite_multiplicity
         << "\n";
  }

  if (admissible &&
      (request.subcommand == Subcommand::kAdmissible ||
       request.subcommand == Subcommand::kAll)) {
    r["admissible"] = *admissible;
    text << "admissible: " << (*admissible ? "yes" : "no") << "\n";
    Json witnesses = Json::array();
    std::vector<Rational> sample = targets;
    if (sample.empty()) sample.push_back(Rational(0));
    for (const auto& value : sample) {
      Json w;
      w["lambda"] = to_string(value);
      bool matches = false;
      try {
        const UniPoly gcd = entry_difference_gcd(L, value);
        const UniPoly expected =
            UniPoly::variable() - UniPoly(value);
        matches = gcd == expected;
        w["entry_gcd"] = to_string(gcd);
        w["expected"] = to_string(expected);
        w["matches"] = matches;
      } catch (const std::domain_error&) {
        w["entry_gcd"] = "undefined (constant curve)";
        w["matches"] = false;
      }
      if (*admissible)
        out.check("entry gcd at " + to_string(value) + " is (lambda - " +
                      to_string(value) + ")",
                  matches);
      else if (!matches)
        w["expected_for_non_admissible"] = true;
      text << "  entry gcd at " << to_string(value) << ": "
           << w["entry_gcd"].get<std::string>()
           << (matches ? " (as an admissible curve requires)"
                       : " (mismatch; curve is not admissible)")
           << "\n";
      witnesses.push_back(std::move(w));
    }
    r["entry_gcd_witnesses"] = std::move(witnesses);
  }

  if (detail::wants(request.subcommand, Subcommand::kMultiplicity)) {
    Json section = Json::array();
    for (const auto& value : targets) {
      Json e;
      e["lambda"] = to_string(value);
      e["multiplicity"] = ord_at(det, value).value();
      text << "multiplicity at " << to_string(value) << ": "
           << ord_at(det, value).value() << "\n";
      section.push_back(std::move(e));
    }
    r["multiplicities"] = std::move(section);
  }

  if (detail::wants(request.subcommand, Subcommand::kIntersect)) {
    Json section = Json::array();
    for (const auto& value : targets) {
      const std::int64_t mult = ord_at(det, value).value();
      const std::int64_t index =
          intersection_index_affine(L, value, local_options);
      Json e;
      e["lambda"] = to_string(value);
      e["algebraic_multiplicity"] = mult;
      e["affine_index"] = index;
      const bool matches = index == mult;
      e["matches"] = matches;
      if (*admissible) {
        out.check("affine index at " + to_string(value) +
                      " equals the multiplicity",
                  matches);
      } else if (!matches) {
        e["expected_for_non_admissible"] = true;
      }
      text << "affine intersection index at " << to_string(value) << ": "
           << index << " (multiplicity " << mult << ")"
           << (matches ? ""
                       : (*admissible ? " MISMATCH"
                                      : " mismatch, expected: curve is not "
                                        "admissible"))
           << "\n";
      section.push_back(std::move(e));
    }
    r["affine_intersections"] = std::move(section);
  }

  if (detail::wants(request.subcommand, Subcommand::kResolve)) {
    Json section = Json::array();
    for (const auto& value : targets) {
      const std::int64_t mult = ord_at(det, value).value();
      const std::int64_t index =
          intersection_index_resolution(L, value, local_options);
      Json e;
      e["lambda"] = to_string(value);
      e["algebraic_multiplicity"] = mult;
      e["resolution_index"] = index;
      const bool matches = index == mult;
      e["matches"] = matches;
      out.check("resolution index at " + to_string(value) +
                    " equals the multiplicity",
                matches);
      text << "resolution intersection index at " << to_string(value) << ": "
           << index << " (multiplicity " << mult << ")"
           << (matches ? "" : " MISMATCH") << "\n";
      section.push_back(std::move(e));
    }
    r["resolution_intersections"] = std::move(section);
  }

  if (detail::wants(request.subcommand, Subcommand::kBezout)) {
    const BezoutReport bz = bezout_check(L);
    Json section;
    section["finite_sum"] = bz.finite_sum;
    section["infinity_multiplicity"] = bz.infinity_multiplicity;
    section["meets_infinity"] = bz.meets_infinity;
    section["total"] = bz.total;
    section["dn"] = static_cast<std::int64_t>(bz.d * bz.n);
    section["identity_holds"] = bz.identity_holds;
    r["bezout"] = std::move(section);
    out.check("finite multiplicities plus infinity equal d*n",
              bz.identity_holds);
    text << "bezout: finite " << bz.finite_sum << " + infinity "
         << bz.infinity_multiplicity << " = " << bz.total << " (d*n = "
         << bz.d * bz.n << ")" << (bz.identity_holds ? "" : " MISMATCH")
         << "\n";
  }

  if (detail::wants(request.subcommand, Subcommand::kClassical)) {
    Json section;
    const bool applicable = L.degree() == 1 && L.is_monic();
    section["applicable"] = applicable;
    if (!applicable) {
      section["note"] = "input is not a monic pencil lambda*I - T";
      text << "classical: not applicable (input is not a monic pencil)\n";
    } else {
      const RationalMatrix t = Rational(-1) * L.coefficients()[0];
      const ClassicalSummary summary = verify_spectral_identity(t);
      section["split"] = summary.split;
      if (!summary.split) {
        section["note"] =
            "characteristic polynomial does not split over the rationals";
        text << "classical: characteristic polynomial does not split over "
                "the rationals\n";
      } else {
        Json eigenvalues = Json::array();
        for (const auto& e : summary.eigenvalues) {
          Json entry;
          entry["lambda"] = to_string(e.eigenvalue);
          entry["nu"] = e.nu;
          entry["generalized_dim"] = e.generalized_dim;
          entry["char_poly_ord"] = e.char_poly_ord;
          eigenvalues.push_back(std::move(entry));
          text << "classical at " << to_string(e.eigenvalue) << ": nu = "
               << e.nu << ", generalized eigenspace dim = "
               << e.generalized_dim << ", char poly order = "
               << e.char_poly_ord << "\n";
        }
        section["eigenvalues"] = std::move(eigenvalues);
        section["multiplicity_sum"] = summary.multiplicity_sum;
        section["generalized_dim_sum"] = summary.generalized_dim_sum;
        section["identity_holds"] = summary.identity_holds;
        out.check("classical multiplicities sum to n and match dimensions",
                  summary.identity_holds);
        text << "classical sums: multiplicities " << summary.multiplicity_sum
             << ", generalized dims " << summary.generalized_dim_sum
             << " (n = " << n << ")\n";
      }
    }
    r["classical"] = std::move(section);
  }

  out.finish();
  AnalysisOutcome outcome;
  outcome.report = out.report();
  outcome.text = text.str();
  outcome.exit_code = out.all_hold() ? 0 : 1;
  return outcome;
}

}  // namespace opcurve
