#include <catch2/catch.hpp>

#include "helpers.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/unipoly.hpp"

using namespace opcurve;
using opcurve::testing::mpoly;

TEST_CASE("term maps stay normalized") {
  MultiPoly p = mpoly(2, {{{1, 0}, 2}, {{0, 1}, 3}});
  MultiPoly q = mpoly(2, {{{1, 0}, -2}, {{0, 1}, 1}});
  const MultiPoly sum = p + q;
  CHECK(sum == mpoly(2, {{{0, 1}, 4}}));
  CHECK(sum.term_count() == 1);
  CHECK((p - p).is_zero());
}

TEST_CASE("multiplication distributes and tracks degrees") {
  const MultiPoly a = mpoly(2, {{{1, 0}, 1}, {{0, 1}, 1}});   // x + y
  const MultiPoly b = mpoly(2, {{{1, 0}, 1}, {{0, 1}, -1}});  // x - y
  CHECK(a * b == mpoly(2, {{{2, 0}, 1}, {{0, 2}, -1}}));
  CHECK((a * b).total_degree() == 2);
  CHECK(a.min_degree() == 1);
  CHECK(mpoly(2, {{{0, 0}, 5}, {{2, 1}, 1}}).min_degree() == 0);
}

TEST_CASE("monomial orders") {
  const MonomialOrder lex = MonomialOrder::lex();
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  const Monomial x2({2, 0, 0}), xy({1, 1, 0}), y2({0, 2, 0}), z3({0, 0, 3});
  // lex ignores total degree
  CHECK(lex.greater(x2, z3));
  CHECK(lex.greater(x2, xy));
  CHECK(lex.greater(xy, y2));
  // grevlex is degree first
  CHECK(grevlex.greater(z3, x2));
  CHECK(grevlex.greater(x2, xy));
  CHECK(grevlex.greater(xy, y2));
  // block order: anything touching the first block dominates
  const MonomialOrder block = MonomialOrder::block_elimination(1);
  CHECK(block.greater(Monomial({1, 0, 0}), Monomial({0, 5, 2})));
  CHECK(block.greater(Monomial({0, 0, 3}), Monomial({0, 2, 0})));
}

TEST_CASE("orders are multiplicative with 1 minimal") {
  std::mt19937_64 rng(17);
  for (const MonomialOrder& order :
       {MonomialOrder::lex(), MonomialOrder::grevlex(),
        MonomialOrder::block_elimination(2)}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<unsigned> ea(4), eb(4), ec(4);
      for (int v = 0; v < 4; ++v) {
        ea[v] = rng() % 4;
        eb[v] = rng() % 4;
        ec[v] = rng() % 4;
      }
      const Monomial a(ea), b(eb), c(ec), one(4);
      if (!(a == one)) CHECK(order.greater(a, one));
      if (order.less(a, b)) CHECK(order.less(a * c, b * c));
      CHECK(order.compare(a, b) == -order.compare(b, a));
    }
  }
}

TEST_CASE("evaluation and substitution") {
  // p = x^2 y - 3
  const MultiPoly p = mpoly(2, {{{2, 1}, 1}, {{0, 0}, -3}});
  CHECK(p.evaluate({rational(2), rational(5)}) == 17);
  // substitute x -> s, y -> s^2 - 1 gives s^4 - s^2 - 3
  const UniPoly s = UniPoly::variable();
  const UniPoly got = p.substitute_univariate({s, s * s - UniPoly(Rational(1))});
  CHECK(got == UniPoly::from_coefficients(
                   {Rational(-3), Rational(0), Rational(-1), Rational(0),
                    Rational(1)}));
}

TEST_CASE("translation shifts the origin exactly") {
  // p = x^2 + y, translated by (1, -2): (x+1)^2 + y - 2 = x^2 + 2x + y - 1
  const MultiPoly p = mpoly(2, {{{2, 0}, 1}, {{0, 1}, 1}});
  const MultiPoly moved = p.translated({rational(1), rational(-2)});
  CHECK(moved ==
        mpoly(2, {{{2, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 1}, {{0, 0}, -1}}));
  // Translating back restores the polynomial.
  CHECK(moved.translated({rational(-1), rational(2)}) == p);
  // The translated polynomial evaluates consistently.
  CHECK(moved.evaluate({rational(3), rational(7)}) ==
        p.evaluate({rational(4), rational(5)}));
}

TEST_CASE("variable prepending and dropping") {
  const MultiPoly p = mpoly(2, {{{1, 1}, 2}, {{0, 0}, -1}});
  const MultiPoly lifted = p.with_vars_prepended(1);
  CHECK(lifted.nvars() == 3);
  CHECK(!lifted.involves_variable(0));
  CHECK(lifted.with_leading_vars_dropped(1) == p);
  const MultiPoly uses_first = mpoly(2, {{{1, 0}, 1}});
  CHECK_THROWS_AS(uses_first.with_leading_vars_dropped(1), std::domain_error);
}

TEST_CASE("truncation below a degree") {
  const MultiPoly p =
      mpoly(2, {{{2, 1}, 1}, {{1, 1}, 4}, {{0, 0}, -2}});
  CHECK(p.truncated_below_degree(3) == mpoly(2, {{{1, 1}, 4}, {{0, 0}, -2}}));
  CHECK(p.truncated_below_degree(1) == mpoly(2, {{{0, 0}, -2}}));
  CHECK(p.truncated_below_degree(4) == p);
}

TEST_CASE("rendering") {
  const MultiPoly p = mpoly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}});
  CHECK(to_string(p, {"x", "y", "z", "t"}) == "x*t - y*z");
  CHECK(to_string(MultiPoly(2), {"x", "y"}) == "0");
  CHECK(to_string(mpoly(1, {{{2}, -1}, {{0}, 5}}), {"u"}) == "-u^2 + 5");
}
