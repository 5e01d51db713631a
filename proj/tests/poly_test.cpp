#include "geoinv/poly.hpp"

#include "reference_fixtures.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace geoinv;
using namespace test_util;

namespace {

PointCloud unit_square() {
  PointCloud c(2);
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0}) c.add(std::vector<double>{x, y});
  return c;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("evaluation fixtures on the unit square") {
  const MomentTable t = central_moments(unit_square(), 2);
  const auto d22 = product_basis(2, {{2, 2}});
  const auto affine = fixture_polynomial(d22, InvariantClass::affine, 4, fixtures::kAffine2D_v22);
  CHECK(evaluate(affine, t) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));

  const auto d12 = product_basis(2, {{2, 1}});
  const auto trace = fixture_polynomial(d12, InvariantClass::rotation, 0, fixtures::kRot2D_v12);
  CHECK(evaluate(trace, t) == doctest::Approx(8.0).epsilon(1e-14));

  const auto mu11 = fixture_polynomial(d12, InvariantClass::scale, 2, "1:11");
  CHECK(evaluate(mu11, t) == 0.0);
}

TEST_CASE("evaluation error paths") {
  const auto d22 = product_basis(2, {{2, 2}});
  const auto inv = fixture_polynomial(d22, InvariantClass::affine, 4, fixtures::kAffine2D_v22);
  const MomentTable low = central_moments(unit_square(), 1);
  CHECK_THROWS_WITH_AS(evaluate(inv, low), doctest::Contains("insufficient-order"), std::out_of_range);
  const MomentTable t3 = central_moments(random_cloud(3, 10, 1), 2);
  CHECK_THROWS_WITH_AS(evaluate(inv, t3), doctest::Contains("dimension-mismatch"), std::invalid_argument);
}

TEST_CASE("exact evaluation agrees with doubles on exact inputs") {
  const auto d22 = product_basis(2, {{2, 2}});
  const auto inv = fixture_polynomial(d22, InvariantClass::affine, 4, fixtures::kAffine2D_v22);
  RationalMomentTable t;
  t.dim = 2;
  t.values[{0, 0}] = 4;
  t.values[{1, 0}] = 0;
  t.values[{0, 1}] = 0;
  t.values[{2, 0}] = 4;
  t.values[{1, 1}] = 0;
  t.values[{0, 2}] = 4;
  CHECK(evaluate_exact(inv, t) == Rat(1, 16));
}

TEST_CASE("serialize and parse round trip exactly") {
  const auto target = product_basis(2, {{2, 1}, {5, 2}});
  auto invs = affine_invariants(target);
  auto rots = rotation_invariants(product_basis(2, {{2, 1}}));
  invs.insert(invs.end(), rots.begin(), rots.end());
  auto scales = scale_invariants(product_basis(2, {{2, 2}}));
  invs.insert(invs.end(), scales.begin(), scales.end());
  // fractional and multi-digit coefficients wired in deliberately
  invs.back().terms[0].second = Rat(-22, 7);
  invs.front().terms[0].second = Rat(Int("123456789012345678901234567890"), Int(982451653));

  const std::string doc = serialize(invs, 2);
  const auto parsed = parse_invariants(doc);
  REQUIRE(parsed.size() == invs.size());
  for (size_t i = 0; i < invs.size(); ++i) CHECK(parsed[i] == invs[i]);
  CHECK(serialize(parsed, 2) == doc);  // byte-identical
}

TEST_CASE("empty list serializes to a valid header-only document") {
  const std::string doc = serialize({}, 3);
  CHECK(doc == "geoinv v1 dim=3\n");
  CHECK(parse_invariants(doc).empty());
}

TEST_CASE("fixture serialization matches the documented grammar") {
  const auto d22 = product_basis(2, {{2, 2}});
  const auto inv = fixture_polynomial(d22, InvariantClass::affine, 4, fixtures::kAffine2D_v22);
  CHECK(serialize({&inv, 1}, 2) ==
        "geoinv v1 dim=2\n"
        "\n"
        "class=affine d=4 desc=(2,2)\n"
        "term 1/1 (2,0)^1 (0,2)^1\n"
        "term -1/1 (1,1)^2\n");
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse_invariants("geoinv v2 dim=2\n"), UnsupportedVersionError);
  CHECK_THROWS_WITH_AS(parse_invariants("geoinv v1\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_invariants("geoinv v1 dim=2\n\nterm 1/1 (2,0)^1\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_AS(parse_invariants("geoinv v1 dim=2\n\nclass=affine d=4 desc=(2,2)\n"), ParseError);
  CHECK_THROWS_AS(
      parse_invariants("geoinv v1 dim=2\n\nclass=affine d=4 desc=(2,2)\nterm 1 (2,0)^1\n"), ParseError);
  CHECK_THROWS_AS(
      parse_invariants("geoinv v1 dim=2\n\nclass=affine d=4 desc=(2,2)\nterm 1/1 (2,0,0)^1\n"), ParseError);
  try {
    parse_invariants("geoinv v1 dim=2\n\nclass=affine d=4 desc=(2,2)\nterm 1/0 (2,0)^1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("evaluation is multiplicative over expand_product") {
  const auto d2 = product_basis(2, {{2, 1}});
  const auto d5 = product_basis(2, {{5, 2}});
  const auto target = product_basis(2, {{2, 1}, {5, 2}});
  const auto a = rotation_invariants(d2)[0];
  const auto b = fixture_polynomial(d5, InvariantClass::rotation, 0, fixtures::kRot2D_v25_2);
  const auto beta = expand_product(a, b, target);

  InvariantPolynomial combined;
  combined.dim = 2;
  combined.cls = InvariantClass::rotation;
  combined.desc_parts = target.parts();
  for (int i = 0; i < target.size(); ++i)
    if (beta[static_cast<size_t>(i)] != 0)
      combined.terms.emplace_back(target.entries()[static_cast<size_t>(i)], beta[static_cast<size_t>(i)]);

  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const MomentTable t = central_moments(normalized_cloud(random_cloud(2, 120, seed)), 5);
    const double lhs = evaluate(a, t) * evaluate(b, t);
    const double rhs = evaluate(combined, t);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1.0));
  }
}

}  // TEST_SUITE
