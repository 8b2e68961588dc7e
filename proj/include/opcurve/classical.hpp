#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// Least nu >= 1 with ker (lambda0*I - T)^nu = ker (lambda0*I - T)^(nu+1).
// The kernel dimensions strictly increase up to nu and are constant after,
// so nu <= n always.
inline unsigned nu_index(const RationalMatrix& t, const Rational& lambda0) {
  if (!t.is_square()) throw std::domain_error("nu index of non-square matrix");
  const std::size_t n = t.rows();
  const RationalMatrix a =
      lambda0 * RationalMatrix::identity(n) - t;
  std::size_t previous = nullspace_dim(a);
  if (previous == 0)
    throw std::domain_error("nu index: not an eigenvalue");
  RationalMatrix power = a;
  for (unsigned mu = 1; mu <= n; ++mu) {
    power = power * a;
    const std::size_t next = nullspace_dim(power);
    if (next == previous) return mu;
    previous = next;
  }
  throw std::logic_error("kernel chain failed to stabilize by n");
}

// dim ker (lambda0*I - T)^nu(lambda0): the generalized eigenspace dimension.
inline std::size_t multiplicity_via_nullspace(const RationalMatrix& t,
                                              const Rational& lambda0) {
  const unsigned nu = nu_index(t, lambda0);
  const RationalMatrix a = lambda0 * RationalMatrix::identity(t.rows()) - t;
  return nullspace_dim(matrix_power(a, nu));
}

struct ClassicalReport {
  Rational eigenvalue;
  unsigned nu = 0;
  std::size_t generalized_dim = 0;
  std::int64_t char_poly_ord = 0;
};

struct ClassicalSummary {
  bool split = false;  // char poly splits over the rationals
  UniPoly char_poly;
  std::vector<ClassicalReport> eigenvalues;
  std::size_t generalized_dim_sum = 0;
  std::int64_t multiplicity_sum = 0;
  bool identity_holds = false;  // both sums equal n, per-eigenvalue dims agree
};

// Per-eigenvalue (nu, generalized dimension, char-poly order) together with
// the sum checks. Matrices whose characteristic polynomial does not split
// over the rationals are reported as unsupported rather than processed.
inline ClassicalSummary verify_spectral_identity(const RationalMatrix& t) {
  if (!t.is_square())
    throw std::domain_error("spectral identity of non-square matrix");
  const std::size_t n = t.rows();
  ClassicalSummary summary;
  summary.char_poly = determinant(MatrixPolynomial::pencil_from_operator(t));
  const auto roots = rational_roots(summary.char_poly);
  std::int64_t rational_mult_sum = 0;
  for (const auto& [root, mult] : roots) rational_mult_sum += mult;
  summary.split = rational_mult_sum == static_cast<std::int64_t>(n);
  if (!summary.split) return summary;

  summary.identity_holds = true;
  for (const auto& [root, mult] : roots) {
    ClassicalReport report;
    report.eigenvalue = root;
    report.nu = nu_index(t, root);
    report.generalized_dim = multiplicity_via_nullspace(t, root);
    report.char_poly_ord = ord_at(summary.char_poly, root).value();
    summary.generalized_dim_sum += report.generalized_dim;
    summary.multiplicity_sum += report.char_poly_ord;
    if (static_cast<std::int64_t>(report.generalized_dim) !=
        report.char_poly_ord)
      summary.identity_holds = false;
    summary.eigenvalues.push_back(std::move(report));
  }
  if (summary.generalized_dim_sum != n ||
      summary.multiplicity_sum != static_cast<std::int64_t>(n))
    summary.identity_holds = false;
  return summary;
}

}  // namespace opcurve
