#include "helpers.hpp"
#include "pcert/errors.hpp"
#include "pcert/newton_puiseux.hpp"
#include "pcert/unipoly.hpp"

#include <doctest.h>

#include <numeric>

using namespace pcert;
using testing::P;
using testing::Q;
using testing::S;
using testing::T;

namespace {

Order residual(const MultiPoly& q, const PuiseuxPoly& y) {
  const std::vector<PuiseuxPoly> arg{PuiseuxPoly::identity(y.center()), y};
  return substitute(q, arg).order();
}

// Undetermined coefficients: solve q(t, y0 + c1 t + ... + ck t^k) = O(t^(k+1))
// one coefficient at a time. The coefficient of t^i is linear in c_i with
// slope dq/dY(xi), so each step is a single division.
PuiseuxPoly linear_lift(const MultiPoly& q, const Rational& center, const Rational& y0, unsigned k) {
  const std::vector<Rational> xi{center, y0};
  const Rational slope = q.partial(1).evaluate(xi);
  PuiseuxPoly y = PuiseuxPoly::constant(center, y0);
  for (unsigned i = 1; i <= k; ++i) {
    const Rational r = substitute(q, std::vector<PuiseuxPoly>{PuiseuxPoly::identity(center), y}).coefficient(i);
    y = y + PuiseuxPoly::monomial(center, -r / slope, i);
  }
  return y;
}

int mult_at(const MultiPoly& q, const Rational& center, const Rational& y0) {
  const std::vector<MultiPoly> images{MultiPoly::constant(2, center), MultiPoly::variable(2, 1)};
  const MultiPoly r = compose(q, images);
  std::vector<Rational> c(r.is_zero() ? 0 : r.degree_in(1) + 1);
  for (const auto& [e, v] : r.terms())
    c[e[1]] = v;
  return root_multiplicity(UniPoly(c), y0);
}

} // namespace

TEST_CASE("newton_polygon_edges examples") {
  const auto cusp = newton_polygon_edges(P("x2^2 - x1^3"), 0);
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].exponent == Q("3/2"));
  CHECK(cusp[0].slope() == Q("-3/2"));
  CHECK(cusp[0].polynomial == UniPoly({-1, 0, 1}));
  CHECK(cusp[0].left == 0);
  CHECK(cusp[0].right == 2);

  const auto line = newton_polygon_edges(P("x2 - x1"), 0);
  REQUIRE(line.size() == 1);
  CHECK(line[0].exponent == Q("1"));

  // x1^2 (x2 - 1)^3 recentered at Y = 1 is t^2 Y^3: Y^3 divides, a vertical edge only.
  const auto vertical = newton_polygon_edges(P("x1^2*(x2 - 1)^3"), 0, 1);
  REQUIRE(vertical.size() == 1);
  CHECK_FALSE(vertical[0].exponent.has_value());
  CHECK(vertical[0].right == 3);

  // Two slopes: Y (Y - t)(Y - t^2) at 0.
  const auto two = newton_polygon_edges(P("x2*(x2 - x1)*(x2 - x1^2)"), 0);
  REQUIRE(two.size() == 3);
  CHECK_FALSE(two[0].exponent.has_value());
  CHECK(two[1].exponent == Q("2"));
  CHECK(two[2].exponent == Q("1"));

  CHECK_THROWS_AS(newton_polygon_edges(P("0"), 0), PreconditionError);
}

TEST_CASE("expand_branches: cusp") {
  const MultiPoly q = P("x2^2 - x1^3");
  const auto branches = expand_branches(q, 0, 0, 5);
  REQUIRE(branches.size() == 1);
  const Branch& b = branches[0];
  CHECK(b.ramification == 2);
  CHECK(b.multiplicity == 1);
  CHECK(b.status == BranchStatus::exact);
  CHECK((b.expansion == S("0", {{"3/2", "1"}}) || b.expansion == S("0", {{"3/2", "-1"}})));
  CHECK(residual(q, b.expansion) > Order(Q("5")));
}

TEST_CASE("expand_branches: regular branch from a linear polynomial") {
  const MultiPoly q = P("x2 - 1 + x1 + x1^2");
  const auto branches = expand_branches(q, 0, 1, 10);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].expansion == S("0", {{"0", "1"}, {"1", "-1"}, {"2", "-1"}}));
  CHECK(branches[0].status == BranchStatus::exact);
  CHECK(branches[0].residual_order.is_infinite());

  const auto flat = expand_branches(P("x2 - 1"), 0, 1, 3);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].expansion == PuiseuxPoly::constant(0, 1));
  CHECK(flat[0].status == BranchStatus::exact);
  CHECK(flat[0].residual_order.is_infinite());
}

TEST_CASE("expand_branches: irrational obstruction") {
  const auto branches = expand_branches(P("x2^2 - 2*x1^2"), 0, 0, 4);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].status == BranchStatus::irrational_obstruction);
  CHECK(branches[0].multiplicity * branches[0].ramification == 2);
  CHECK(branches[0].expansion.is_zero());
}

TEST_CASE("expand_branches: non-polynomial branches are truncated with the residual contract") {
  // y = t/(1 - t) is not a polynomial; the expansion stops past the precision.
  const MultiPoly q = P("x2*(1 - x1) - x1");
  const auto branches = expand_branches(q, 0, 0, 6);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].status == BranchStatus::truncated);
  CHECK(branches[0].expansion.truncated(Q("6")) ==
        S("0", {{"1", "1"}, {"2", "1"}, {"3", "1"}, {"4", "1"}, {"5", "1"}, {"6", "1"}}));
  CHECK(residual(q, branches[0].expansion) > Order(Q("6")));
  CHECK(branches[0].residual_order == residual(q, branches[0].expansion));
}

TEST_CASE("expand_branches: shifted center and ramified second term") {
  // (y - 1 - (t-2))^2 - (t-2)^3 at (2, 1): y = 1 + (t-2) +- (t-2)^(3/2).
  const MultiPoly q = P("(x2 - 1 - (x1 - 2))^2 - (x1 - 2)^3");
  const auto branches = expand_branches(q, 2, 1, 4);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].ramification == 2);
  CHECK(branches[0].expansion.truncated(Q("1")) == S("2", {{"0", "1"}, {"1", "1"}}));
  CHECK(abs(branches[0].expansion.coefficient(Q("3/2"))) == 1);
  CHECK(residual(q, branches[0].expansion) > Order(Q("4")));
}

TEST_CASE("expand_branches: branch count matches the multiplicity") {
  for (const char* text : {"x2*(x2 - x1)*(x2 + x1^2)", "(x2^2 - x1^3)*(x2 - x1)", "x2^3 - x1^2 + x1^5*x2",
                           "(x2 - x1)*(x2 - x1 - x1^2)", "x2^4 - x1^3*x2 + x1^7"}) {
    const MultiPoly q = P(text);
    const auto branches = expand_branches(q, 0, 0, 6);
    int total = 0;
    for (const auto& b : branches) {
      total += b.multiplicity * static_cast<int>(b.ramification.get_si());
      if (b.status != BranchStatus::irrational_obstruction)
        CHECK_MESSAGE(residual(q, b.expansion) > Order(Q("6")), text);
    }
    CHECK_MESSAGE(total == mult_at(q, 0, 0), text);
  }
}

TEST_CASE("expand_branches preconditions") {
  CHECK_THROWS_AS(expand_branches(P("x2 - 1"), 0, 0, 3), PreconditionError);
  CHECK_THROWS_AS(expand_branches(P("x1*x2"), 0, 0, 3), PreconditionError);
  CHECK_THROWS_AS(expand_branches(P("x2"), 0, 0, 0), PreconditionError);
  CHECK_THROWS_AS(expand_branches(P("x2"), 0, 0, -1), PreconditionError);
}

TEST_CASE("regular_lift examples") {
  CHECK(regular_lift(P("x2 - 1 + x1 + x1^3"), 0, 1, 5) == S("0", {{"0", "1"}, {"1", "-1"}, {"3", "-1"}}));
  CHECK(regular_lift(P("x2 - x1"), 0, 0, 2) == T());
  const MultiPoly q = P("x2^2 - x2 + x1");
  CHECK(regular_lift(q, 0, 0, 3) == S("0", {{"1", "1"}, {"2", "1"}, {"3", "2"}}));
  CHECK(regular_lift(q, 0, 0, 3) == linear_lift(q, 0, 0, 3));
  CHECK_THROWS_AS(regular_lift(P("x2^2 - x1"), 0, 0, 3), PreconditionError);
  CHECK_THROWS_AS(regular_lift(P("x2 - 1"), 0, 0, 3), PreconditionError);
}

TEST_CASE("regular_lift matches undetermined coefficients and expand_branches") {
  for (const char* text : {"x2^3 + x2 - x1 + x1^2*x2", "2*x2 - x1^2 + x2^2*x1 - 3*x1*x2", "(x2 + 1)^2*x1 + x2"}) {
    const MultiPoly q = P(text);
    const auto lift = regular_lift(q, 0, 0, 8);
    CHECK_MESSAGE(lift == linear_lift(q, 0, 0, 8), text);
    const auto branches = expand_branches(q, 0, 0, 8);
    REQUIRE(branches.size() == 1);
    CHECK_MESSAGE(branches[0].expansion.truncated(Q("8")) == lift, text);
  }
  // Non-zero center.
  const MultiPoly q = P("x2^2 + x1*x2 - 2");
  const Rational center = 1, y0 = 1;
  CHECK(regular_lift(q, center, y0, 6) == linear_lift(q, center, y0, 6));
}
