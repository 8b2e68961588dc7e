#pragma once

#include <cstdint>
#include <vector>

#include "opcurve/errors.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// Determinant in the chart at infinity: with d the entrywise degree of L and
// det(L) = sum c_j lambda^j, this is mu^{dn} det(L(1/mu)) = sum c_j mu^{dn-j}.
inline UniPoly reversed_det(const MatrixPolynomial& L) {
  const UniPoly det = determinant(L);
  if (det.is_zero())
    throw IdenticallySingularError(
        "reversed determinant of identically singular curve");
  const std::size_t dn = L.degree() * L.size();
  std::vector<Rational> reversed(dn + 1, Rational(0));
  for (int j = 0; j <= *det.degree(); ++j)
    reversed[dn - static_cast<std::size_t>(j)] = det.coefficient(j);
  return UniPoly::from_coefficients(std::move(reversed));
}

// Order of vanishing at mu = 0 of the reversed determinant; this is the
// Bezout contribution of the point at infinity, and equals
// d*n - deg det(L).
inline std::int64_t infinity_multiplicity(const MatrixPolynomial& L) {
  return ord_at(reversed_det(L), Rational(0)).value();
}

struct ProjectiveSpectrum {
  SpectrumReport finite;
  bool identically_singular = false;
  bool meets_infinity = false;
  std::int64_t infinity_multiplicity = 0;
};

inline ProjectiveSpectrum projective_spectrum(const MatrixPolynomial& L) {
  ProjectiveSpectrum out;
  out.finite = spectrum(L);
  out.identically_singular = out.finite.identically_singular;
  if (out.identically_singular) return out;
  out.infinity_multiplicity = infinity_multiplicity(L);
  out.meets_infinity = out.infinity_multiplicity >= 1;
  return out;
}

// Bookkeeping for the completed Bezout identity: the finite multiplicities
// (deg det) plus the contribution at infinity must total d*n. When the curve
// stays off the hypersurface at infinity the finite sum alone reaches d*n.
struct BezoutReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::int64_t finite_sum = 0;
  std::int64_t infinity_multiplicity = 0;
  bool meets_infinity = false;
  std::int64_t total = 0;
  bool identity_holds = false;  // total == d*n
};

inline BezoutReport bezout_check(const MatrixPolynomial& L) {
  const UniPoly det = determinant(L);
  if (det.is_zero())
    throw IdenticallySingularError("Bezout check of identically singular curve");
  BezoutReport report;
  report.n = L.size();
  report.d = L.degree();
  report.finite_sum = *det.degree();
  report.infinity_multiplicity = infinity_multiplicity(L);
  report.meets_infinity = report.infinity_multiplicity >= 1;
  report.total = report.finite_sum + report.infinity_multiplicity;
  report.identity_holds =
      report.total == static_cast<std::int64_t>(report.d * report.n);
  return report;
}

}  // namespace opcurve
