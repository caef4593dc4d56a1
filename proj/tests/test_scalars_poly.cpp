#include "helpers.hpp"
#include "pcert/errors.hpp"
#include "pcert/resultant.hpp"
#include "pcert/unipoly.hpp"

#include <doctest.h>

using namespace pcert;
using testing::P;
using testing::Q;

TEST_CASE("rational parsing and canonical printing") {
  CHECK(to_string(Q("6/4")) == "3/2");
  CHECK(to_string(Q("-6/4")) == "-3/2");
  CHECK(to_string(Q("0/5")) == "0");
  CHECK(to_string(Q("7")) == "7");
  CHECK(Q("4/2").get_den() == 1);
  CHECK_THROWS_AS(Q(""), ParseError);
  CHECK_THROWS_AS(Q("1/0"), ParseError);
  CHECK_THROWS_AS(Q("1/-2"), ParseError);
  CHECK_THROWS_AS(Q("1.5"), ParseError);
  CHECK(floor(Q("-3/2")) == -2);
  CHECK(ceil(Q("-3/2")) == -1);
  CHECK(exact_root(Q("8/27"), 3) == Q("2/3"));
  CHECK(exact_root(Q("4"), 2) == Q("2"));
  CHECK_FALSE(exact_root(Q("2"), 2).has_value());
  CHECK_FALSE(exact_root(Q("-4"), 2).has_value());
  CHECK(exact_root(Q("-8"), 3) == Q("-2"));
}

TEST_CASE("poly_parse examples") {
  const MultiPoly f = P("x2 - 1 + x1 + x1^3");
  CHECK(f.term_count() == 4);
  CHECK(f.coefficient({3, 0}) == 1);
  CHECK(f.coefficient({0, 0}) == -1);

  const MultiPoly zero = P("0");
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());

  // Hand expansion: (x1 - 2 x2)^2 = x1^2 - 4 x1 x2 + 4 x2^2.
  MultiPoly expected(2);
  expected.add_term({2, 0}, 1);
  expected.add_term({1, 1}, -4);
  expected.add_term({0, 2}, 4);
  CHECK(P("(x1 - 2*x2)^2") == expected);
}

TEST_CASE("poly_parse grammar details") {
  CHECK(P("-x1^2") == -P("x1^2"));
  CHECK(P("2^3*x1") == P("8*x1"));
  CHECK(P("1/2*x1 + 1/2*x1") == P("x1"));
  CHECK(P("x1^(2)") == P("x1*x1"));
  CHECK(P("((x1))") == P("x1"));
  CHECK(P("x1 - x1").is_zero());
  CHECK_THROWS_AS(P("x3"), ParseError);
  CHECK_THROWS_AS(P("x1 x2"), ParseError);
  CHECK_THROWS_AS(P("x1^-1"), ParseError);
  CHECK_THROWS_AS(P("(x1 + 1"), ParseError);
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  try {
    P("x1 + y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("print then parse is the identity") {
  const std::vector<std::string> names{"x1", "x2", "x3"};
  for (const char* text : {"3*x1^2*x2 - 1/2*x2 + 4", "-(x1 - x2)^3*(x3 + 2/3)", "x1*x2*x3 - 7", "0", "-5/3"}) {
    const MultiPoly f = parse_polynomial(text, names);
    CHECK(parse_polynomial(f.to_string(names), names) == f);
  }
  CHECK(P("x2 + x1^2 - 1/2").to_string(default_variable_names(2)) == "x1^2 + x2 - 1/2");
}

TEST_CASE("degree_in examples") {
  CHECK(P("x1^2*(x2 - 1)^3").degree_in(0) == 2);
  CHECK(P("5").degree_in(0) == 0);
  CHECK(P("x1*x2 + x2^4").degree_in(1) == 4);
  CHECK_THROWS_AS(P("0").degree_in(0), std::domain_error);
  CHECK(P("x1^2*x2 + x2^4").total_degree() == 4);
}

TEST_CASE("multipoly evaluation, derivative and composition") {
  const MultiPoly f = P("x1^2*x2 - 3*x2 + 1");
  const std::vector<Rational> pt{Q("2"), Q("1/3")};
  CHECK(f.evaluate(pt) == Q("4/3") - 1 + 1);
  CHECK(f.partial(0) == P("2*x1*x2"));
  CHECK(f.partial(1) == P("x1^2 - 3"));
  const std::vector<MultiPoly> images{P("x1 + x2"), P("x1")};
  CHECK(compose(P("x1*x2"), images) == P("x1^2 + x1*x2"));
  CHECK_THROWS(P("x1") + P("x1", 3));
}

TEST_CASE("resultant_y examples") {
  // Two linear factors: Res = difference of the roots, up to sign.
  const UniPoly r = resultant_y(P("x2 - 1 + x1 + x1^2"), P("x2 - 1 + x1 + x1^3"));
  const UniPoly expected({0, 0, 1, -1});
  CHECK((r == expected || r == -expected));
  CHECK(root_multiplicity(r, 0) == 2);

  CHECK(resultant_y(P("x2 - x1"), P("x2 - x1")).is_zero());

  const UniPoly r2 = resultant_y(P("x2^2 - x1"), P("x2"));
  const UniPoly minus_x(std::vector<Rational>{0, -1});
  CHECK((r2 == minus_x || r2 == -minus_x));

  CHECK_THROWS_AS(resultant_y(P("x1"), P("x2")), PreconditionError);
  CHECK_THROWS_AS(resultant_y(P("0"), P("x2")), PreconditionError);
  CHECK_THROWS_AS(resultant_y(P("x2", 3), P("x2", 3)), PreconditionError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  const char* pairs[][2] = {{"x2^3 - x1*x2 + 2", "x1*x2^2 - x1^2 + x2"},
                            {"(x2 - x1)^2*(x2 + 1)", "x2^2 + x1^3"},
                            {"3*x2^4 - x1", "x1^2*x2^2 - 5*x2 + x1"},
                            {"x1*x2 - 1", "x1^2*x2^3 + x2 - 7/2"}};
  for (auto& pq : pairs) {
    const MultiPoly f = P(pq[0]), g = P(pq[1]);
    CHECK(resultant_y(f, g) == resultant_y_sylvester(f, g));
  }
}

TEST_CASE("gcd_bivariate examples") {
  CHECK(gcd_bivariate(P("x1^2*(x2 - 1)^2"), P("x1^3*(x2 - 1)^2")) == P("x1^2*(x2 - 1)^2"));
  const MultiPoly f = P("2*x2^2*x1 - 4*x1 + x2");
  CHECK(gcd_bivariate(f, f) == normalize_bivariate(f));
  CHECK(gcd_bivariate(P("x2^2 - x1"), P("x2 + 1")) == P("1"));
  CHECK(gcd_bivariate(P("(x2 - x1)*(x2 + 3)"), P("(2*x2 - 2*x1)*(x1 + 1)")) == P("x2 - x1"));
  // Normalized: primitive over Z, positive leading coefficient under lex X2 > X1.
  CHECK(normalize_bivariate(P("-1/2*x2 + 1/3*x1")) == P("3*x2 - 2*x1"));
  CHECK_THROWS_AS(gcd_bivariate(P("0"), P("x2")), PreconditionError);
  CHECK(divide_bivariate(P("x2^2 - x1^2"), P("x2 - x1")) == P("x2 + x1"));
  CHECK_FALSE(divide_bivariate(P("x2^2 + x1"), P("x2 - x1")).has_value());
}

TEST_CASE("root_multiplicity examples") {
  CHECK(root_multiplicity(UniPoly(std::vector<Rational>{0, 0, -1, 1}), 0) == 2);
  CHECK(root_multiplicity(UniPoly(Rational(1)), Q("5")) == 0);
  CHECK(root_multiplicity(pow(UniPoly::linear_factor(Q("1/2")), 3), Q("1/2")) == 3);
  CHECK_THROWS_AS(root_multiplicity(UniPoly(), 0), std::domain_error);
}

TEST_CASE("univariate helpers") {
  const UniPoly p = UniPoly::linear_factor(Q("2/3")) * UniPoly::linear_factor(Q("-5")) *
                    UniPoly::linear_factor(Q("-5")) * UniPoly({1, 0, 1});
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rational, int>{Q("-5"), 2});
  CHECK(roots[1] == std::pair<Rational, int>{Q("2/3"), 1});
  CHECK(rational_roots(UniPoly({-2, 0, 1})).empty());
  CHECK(gcd(p, UniPoly({1, 0, 1})) == UniPoly({1, 0, 1}));
  auto [quot, rem] = divmod(p, UniPoly({1, 0, 1}));
  CHECK(rem.is_zero());
  CHECK(quot * UniPoly({1, 0, 1}) == p);
  CHECK(UniPoly({1, 2, 1}).taylor_shift(Q("-1")) == UniPoly({0, 0, 1}));
  const auto f = factor_integer(Integer("600851475143"));
  CHECK(f.size() == 4);
  CHECK(f.back().first == 6857);
}
