#include <catch2/catch.hpp>

#include <random>

#include "helpers.hpp"
#include "opcurve/madic.hpp"

using namespace opcurve;
using opcurve::testing::mpoly;
using opcurve::testing::random_mpoly;

TEST_CASE("local multiplicity at isolated points") {
  SECTION("simple zero on the line") {
    CHECK(local_multiplicity({mpoly(1, {{{1}, 1}})}, {rational(0)}) == 1);
  }
  SECTION("order-three zero on the line") {
    CHECK(local_multiplicity({mpoly(1, {{{3}, 1}})}, {rational(0)}) == 3);
  }
  SECTION("translated simple zero") {
    CHECK(local_multiplicity({mpoly(1, {{{1}, 1}, {{0}, -7}})},
                             {rational(7)}) == 1);
  }
  SECTION("point off the variety has multiplicity zero") {
    CHECK(local_multiplicity({mpoly(1, {{{1}, 1}})}, {rational(2)}) == 0);
  }
  SECTION("curve against the 2x2 determinant surface") {
    // x*t - y*z together with x - y^2 + 1, y - z, t at the point
    // (-1, 0, 0, 0): length two.
    const std::vector<MultiPoly> gens = {
        mpoly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}),
        mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 2, 0, 0}, -1}, {{0, 0, 0, 0}, 1}}),
        mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
        mpoly(4, {{{0, 0, 0, 1}, 1}})};
    const std::vector<Rational> point = {rational(-1), rational(0),
                                         rational(0), rational(0)};
    const auto result = local_multiplicity_profile(gens, point);
    CHECK(result.value == 2);
    // Stabilization soundness: the next two levels repeat the value.
    CHECK(madic_dimension(gens, point, result.stabilized_at + 2) ==
          result.value);
    CHECK(madic_dimension(gens, point, result.stabilized_at + 3) ==
          result.value);
  }
}

TEST_CASE("non-isolated points are diagnosed") {
  // A line through the origin: dimensions grow forever.
  CHECK_THROWS_AS(
      local_multiplicity({mpoly(2, {{{1, 0}, 1}})}, {rational(0), rational(0)},
                         {.max_truncation = 12}),
      StabilizationError);
}

TEST_CASE("Macaulay-matrix dimensions on known quotients") {
  // <y^2, x, y - z, t> at the origin of (x, y, z, t): basis {1, y}.
  const std::vector<MultiPoly> gens = {
      mpoly(4, {{{0, 2, 0, 0}, 1}}), mpoly(4, {{{1, 0, 0, 0}, 1}}),
      mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
      mpoly(4, {{{0, 0, 0, 1}, 1}})};
  CHECK(quotient_dimension_truncated(gens, 3) == 2);
  // <x, y> at level 1: only the constant survives.
  CHECK(quotient_dimension_truncated(
            {mpoly(2, {{{1, 0}, 1}}), mpoly(2, {{{0, 1}, 1}})}, 1) == 1);
  // <x^3> in one variable caps at {1, x, x^2}.
  CHECK(quotient_dimension_truncated({mpoly(1, {{{3}, 1}})}, 5) == 3);
  CHECK(quotient_dimension_truncated({mpoly(1, {{{3}, 1}})}, 2) == 2);
}

TEST_CASE("Groebner and Macaulay dimension engines agree") {
  std::mt19937_64 rng(777);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t nvars = 2 + rng() % 3;
    std::vector<MultiPoly> gens;
    const std::size_t count = 2 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) {
      MultiPoly g = random_mpoly(rng, nvars, 3, 3);
      // Strip constants so the origin stays on the variety most of the time.
      g.add_term(Monomial(nvars), -g.coefficient(Monomial(nvars)));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    for (unsigned N = 1; N <= 4; ++N) {
      CHECK(truncated_quotient_dimension(gens, N) ==
            quotient_dimension_truncated(gens, N));
      ++compared;
    }
  }
  CHECK(compared >= 80);
}

TEST_CASE("truncated dimensions match a full basis with adjoined powers") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t nvars = 2 + rng() % 2;
    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < 2; ++k) {
      MultiPoly g = random_mpoly(rng, nvars, 2, 3);
      g.add_term(Monomial(nvars), -g.coefficient(Monomial(nvars)));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    for (unsigned N = 1; N <= 3; ++N) {
      std::vector<MultiPoly> adjoined = gens;
      for (const auto& m : monomials_of_degree(nvars, N))
        adjoined.push_back(MultiPoly::term(m, Rational(1)));
      const auto G = buchberger(adjoined, MonomialOrder::grevlex());
      CHECK(quotient_dimension(G) == truncated_quotient_dimension(gens, N));
    }
  }
}
