#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "opcurve/groebner.hpp"

using namespace opcurve;
using opcurve::testing::equal_ideals;
using opcurve::testing::mpoly;
using opcurve::testing::random_mpoly;

TEST_CASE("normal form rewrites against a basis") {
  SECTION("single-step rewrite, lex") {
    // <x - y^2>, x > y
    const auto G = buchberger({mpoly(2, {{{1, 0}, 1}, {{0, 2}, -1}})},
                              MonomialOrder::lex());
    CHECK(normal_form(mpoly(2, {{{1, 0}, 1}}), G) == mpoly(2, {{{0, 2}, 1}}));
  }
  SECTION("members reduce to zero") {
    // <y^2, x+1, y-z, t> in (x, y, z, t)
    const auto G = buchberger(
        {mpoly(4, {{{0, 2, 0, 0}, 1}}),
         mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}),
         mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
         mpoly(4, {{{0, 0, 0, 1}, 1}})},
        MonomialOrder::grevlex());
    CHECK(normal_form(mpoly(4, {{{0, 2, 0, 0}, 1}}), G).is_zero());
  }
  SECTION("ambient mismatch is refused") {
    const auto G = buchberger({mpoly(2, {{{1, 0}, 1}})}, MonomialOrder::lex());
    CHECK_THROWS_AS(normal_form(mpoly(3, {{{1, 0, 0}, 1}}), G),
                    std::domain_error);
  }
}

TEST_CASE("normal form of lambda under the graph ideal of a quadratic curve") {
  // Ring (lambda, x, y, z, t); generators x - (lambda^2 - 1), y - lambda,
  // z - lambda, t; eliminate lambda first.
  const std::vector<MultiPoly> gens = {
      mpoly(5, {{{0, 1, 0, 0, 0}, 1}, {{2, 0, 0, 0, 0}, -1}, {{0, 0, 0, 0, 0}, 1}}),
      mpoly(5, {{{0, 0, 1, 0, 0}, 1}, {{1, 0, 0, 0, 0}, -1}}),
      mpoly(5, {{{0, 0, 0, 1, 0}, 1}, {{1, 0, 0, 0, 0}, -1}}),
      mpoly(5, {{{0, 0, 0, 0, 1}, 1}})};
  const auto G = buchberger(gens, MonomialOrder::block_elimination(1));
  const MultiPoly lambda = mpoly(5, {{{1, 0, 0, 0, 0}, 1}});
  const MultiPoly nf = normal_form(lambda, G);
  CHECK(!nf.involves_variable(0));
  // With z the smallest of y, z under the tail order, the normal form is z.
  CHECK(nf == mpoly(5, {{{0, 0, 0, 1, 0}, 1}}));
}

TEST_CASE("buchberger on textbook inputs") {
  SECTION("principal monomial ideal") {
    const auto G = buchberger({mpoly(2, {{{1, 0}, 3}})}, MonomialOrder::grevlex());
    REQUIRE(G.size() == 1);
    CHECK(G.generators()[0] == mpoly(2, {{{1, 0}, 1}}));
  }
  SECTION("x - y^2 + 1, y - z, t under grevlex") {
    const auto G = buchberger(
        {mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 2, 0, 0}, -1}, {{0, 0, 0, 0}, 1}}),
         mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
         mpoly(4, {{{0, 0, 0, 1}, 1}})},
        MonomialOrder::grevlex());
    // Reduced basis: z^2 - x - 1, y - z, t
    REQUIRE(G.size() == 3);
    CHECK(G.generators()[0] ==
          mpoly(4, {{{0, 0, 2, 0}, 1}, {{1, 0, 0, 0}, -1}, {{0, 0, 0, 0}, -1}}));
    CHECK(G.generators()[1] ==
          mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}));
    CHECK(G.generators()[2] == mpoly(4, {{{0, 0, 0, 1}, 1}}));
  }
  SECTION("x^2 - y, x^3 - x under lex") {
    const auto G = buchberger(
        {mpoly(2, {{{2, 0}, 1}, {{0, 1}, -1}}),
         mpoly(2, {{{3, 0}, 1}, {{1, 0}, -1}})},
        MonomialOrder::lex());
    REQUIRE(G.size() == 3);
    CHECK(G.generators()[0] == mpoly(2, {{{2, 0}, 1}, {{0, 1}, -1}}));
    CHECK(G.generators()[1] == mpoly(2, {{{1, 1}, 1}, {{1, 0}, -1}}));
    CHECK(G.generators()[2] == mpoly(2, {{{0, 2}, 1}, {{0, 1}, -1}}));
  }
  SECTION("unit ideal collapses to 1") {
    const auto G = buchberger(
        {mpoly(1, {{{1}, 1}}), mpoly(1, {{{1}, 1}, {{0}, 1}})},
        MonomialOrder::lex());
    REQUIRE(G.size() == 1);
    CHECK(G.generators()[0] == mpoly(1, {{{0}, 1}}));
  }
}

TEST_CASE("reduced bases are canonical and self-consistent") {
  std::mt19937_64 rng(404);
  int interesting = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t nvars = 2 + rng() % 2;
    std::vector<MultiPoly> gens;
    const std::size_t count = 2 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) {
      MultiPoly g = random_mpoly(rng, nvars, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    ++interesting;
    const MonomialOrder order =
        (trial % 2 == 0) ? MonomialOrder::grevlex() : MonomialOrder::lex();
    const auto G = buchberger(gens, order);

    // Input generators are members.
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());

    // Normal form is idempotent.
    const MultiPoly probe = random_mpoly(rng, nvars, 3, 4);
    const MultiPoly nf = normal_form(probe, G);
    CHECK(normal_form(nf, G) == nf);

    // Every S-polynomial reduces to zero.
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        const MultiPoly s =
            s_polynomial(G.generators()[i], G.generators()[j], order);
        CHECK(normal_form(s, G).is_zero());
      }

    // Reduced basis invariants: monic, and no generator's monomial lies in
    // the leading-term ideal of the others.
    for (std::size_t i = 0; i < G.size(); ++i) {
      const auto& gi = G.generators()[i];
      CHECK(gi.coefficient(G.leading_monomial(i)) == 1);
      for (const auto& [m, c] : gi.terms())
        for (std::size_t j = 0; j < G.size(); ++j) {
          if (i == j) continue;
          CHECK(!G.leading_monomial(j).divides(m));
        }
    }

    // Shuffled generators give the identical reduced basis.
    std::vector<MultiPoly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens.front() * random_mpoly(rng, nvars, 1, 2));
    const auto G2 = buchberger(shuffled, order);
    CHECK(G.generators() == G2.generators());
  }
  CHECK(interesting >= 20);
}

TEST_CASE("elimination computes contractions") {
  SECTION("parametrized parabola-like curve") {
    // eliminate lambda from <x - (lambda^2 - 1), y - lambda, z - lambda, t>
    const std::vector<MultiPoly> gens = {
        mpoly(5, {{{0, 1, 0, 0, 0}, 1}, {{2, 0, 0, 0, 0}, -1}, {{0, 0, 0, 0, 0}, 1}}),
        mpoly(5, {{{0, 0, 1, 0, 0}, 1}, {{1, 0, 0, 0, 0}, -1}}),
        mpoly(5, {{{0, 0, 0, 1, 0}, 1}, {{1, 0, 0, 0, 0}, -1}}),
        mpoly(5, {{{0, 0, 0, 0, 1}, 1}})};
    const auto contraction = eliminate(gens, 1);
    const std::vector<MultiPoly> expected = {
        mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 2, 0, 0}, -1}, {{0, 0, 0, 0}, 1}}),
        mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
        mpoly(4, {{{0, 0, 0, 1}, 1}})};
    CHECK(equal_ideals(contraction, expected));
    // Contraction members lie in the full ideal, as do their products with
    // random subring polynomials.
    const auto full = buchberger(gens, MonomialOrder::block_elimination(1));
    std::mt19937_64 rng(2);
    for (const auto& g : contraction) {
      CHECK(normal_form(g.with_vars_prepended(1), full).is_zero());
      const MultiPoly factor = random_mpoly(rng, 4, 2, 3);
      CHECK(normal_form((g * factor).with_vars_prepended(1), full).is_zero());
    }
  }
  SECTION("diagonal of the line") {
    const auto got = eliminate({mpoly(3, {{{0, 1, 0}, 1}, {{1, 0, 0}, -1}}),
                                mpoly(3, {{{0, 0, 1}, 1}, {{1, 0, 0}, -1}})},
                               1);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == mpoly(2, {{{1, 0}, 1}, {{0, 1}, -1}}));
  }
  SECTION("transcendental image gives the zero ideal") {
    const auto got =
        eliminate({mpoly(2, {{{0, 1}, 1}, {{2, 0}, -1}})}, 1);
    CHECK(got.empty());
  }
}

TEST_CASE("quotient dimensions") {
  SECTION("dimension two point") {
    const auto G = buchberger(
        {mpoly(4, {{{0, 2, 0, 0}, 1}}),
         mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}),
         mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
         mpoly(4, {{{0, 0, 0, 1}, 1}})},
        MonomialOrder::grevlex());
    CHECK(quotient_dimension(G) == 2);
  }
  SECTION("origin in the plane") {
    const auto G = buchberger({mpoly(2, {{{1, 0}, 1}}), mpoly(2, {{{0, 1}, 1}})},
                              MonomialOrder::grevlex());
    CHECK(quotient_dimension(G) == 1);
  }
  SECTION("a line is not zero-dimensional") {
    const auto G = buchberger({mpoly(2, {{{1, 0}, 1}})}, MonomialOrder::grevlex());
    CHECK(quotient_dimension(G).is_infinite());
  }
  SECTION("unit ideal has the zero ring as quotient") {
    const auto G = buchberger({mpoly(2, {{{0, 0}, 2}})}, MonomialOrder::grevlex());
    CHECK(quotient_dimension(G) == 0);
  }
  SECTION("curve ideal plus the determinant surface cuts out a fat point") {
    // <x t - y z, x - y^2 + 1, y - z, t> supports the single point
    // (-1, 0, 0, 0) with length two.
    const auto G = buchberger(
        {mpoly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}),
         mpoly(4, {{{1, 0, 0, 0}, 1}, {{0, 2, 0, 0}, -1}, {{0, 0, 0, 0}, 1}}),
         mpoly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 1, 0}, -1}}),
         mpoly(4, {{{0, 0, 0, 1}, 1}})},
        MonomialOrder::grevlex());
    CHECK(quotient_dimension(G) == 2);
  }
}
