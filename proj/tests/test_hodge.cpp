#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twk/hodge.hpp"

using namespace twk;
using namespace twk::hodge;

namespace {

using G = GaussianRational;

Subspace span(std::vector<std::vector<G>> rows) { return Subspace::from_rows(rows); }

PureHodgeStructure elliptic() { return PureHodgeStructure(2, 1, 1, {span({{1, G::i()}})}); }
PureHodgeStructure trivial() { return PureHodgeStructure(1, 0, 0, {Subspace::identity(1), Subspace(0, 1)}); }

}  // namespace

TEST_CASE("purity examples") {
  CHECK(validate_pure(elliptic()).valid);
  CHECK(validate_pure(trivial()).valid);
  const PureHodgeStructure real_line(2, 1, 1, {span({{1, 0}})});
  const auto report = validate_pure(real_line);
  CHECK_FALSE(report.valid);
  CHECK(report.failing_p == 1);
  CHECK_THROWS_AS(hodge_numbers(real_line), DomainError);
  // Non-nested filtration.
  CHECK_THROWS_AS(PureHodgeStructure(2, 1, 0, {span({{1, 0}}), span({{0, 1}})}), DomainError);
  CHECK_THROWS_AS(PureHodgeStructure(2, 1, 1, {span({{1, 0}, {2, 0}})}), DomainError);
}

TEST_CASE("hodge numbers") {
  CHECK(hodge_numbers(elliptic()) == std::vector<HodgeNumber>{{0, 1, 1}, {1, 0, 1}});
  CHECK(hodge_numbers(trivial()) == std::vector<HodgeNumber>{{0, 0, 1}});
  const PureHodgeStructure tate_pair(2, 2, 1, {Subspace::identity(2), Subspace(0, 2)});
  CHECK(hodge_numbers(tate_pair) == std::vector<HodgeNumber>{{1, 1, 2}});
}

TEST_CASE("twistor images") {
  CHECK(to_twistor(elliptic()) == TwistorBundleType({{Rational(1) / 2, 1}}));
  CHECK(to_twistor(elliptic()).rank() == 2);
  CHECK(to_twistor(trivial()) == TwistorBundleType({{0, 1}}));
  const PureHodgeStructure three(3, 2, 1, {Subspace::identity(3), Subspace(0, 3)});
  REQUIRE(validate_pure(three).valid);
  CHECK(to_twistor(three) == TwistorBundleType({{1, 3}}));
}

TEST_CASE("equivariant weights") {
  auto eq = to_equivariant(elliptic());
  CHECK(eq.weights == std::vector<std::pair<int, std::size_t>>{{1, 1}, {0, 1}});
  CHECK(from_equivariant(eq) == std::vector<HodgeNumber>{{0, 1, 1}, {1, 0, 1}});
  CHECK(to_equivariant(trivial()).weights == std::vector<std::pair<int, std::size_t>>{{0, 1}});

  const PureHodgeStructure abelian(4, 1, 1, {span({{1, G::i(), 0, 0}, {0, 0, 1, G::i()}})});
  REQUIRE(validate_pure(abelian).valid);
  CHECK(to_equivariant(abelian).weights == std::vector<std::pair<int, std::size_t>>{{1, 2}, {0, 2}});

  EquivariantTwistorStructure bad{TwistorBundleType({{Rational(1) / 2, 1}}), {{1, 2}}};
  CHECK_THROWS_AS(from_equivariant(bad), DomainError);
  bad.weights = {{1, 1}, {2, 1}};
  CHECK_THROWS_AS(from_equivariant(bad), DomainError);
}

TEST_CASE("bundle type arithmetic") {
  const TwistorBundleType half({{Rational(1) / 2, 1}});
  CHECK(half.degree() == 1);
  CHECK(half.rank() == 2);
  const TwistorBundleType one({{1, 1}});
  CHECK(one.dual() == TwistorBundleType({{-1, 1}}));
  const TwistorBundleType s = sum(TwistorBundleType({{0, 1}}), one);
  CHECK(s.rank() == 2);
  CHECK(s.degree() == 1);
  CHECK(s.slope_total() == Rational(1) / 2);
  CHECK_THROWS_AS(TwistorBundleType({{Rational(1) / 3, 1}}), DomainError);
  CHECK_THROWS_AS(TwistorBundleType().slope_total(), DomainError);
  CHECK(sum(half, half) == TwistorBundleType({{Rational(1) / 2, 2}}));
  CHECK(half.dual().degree() == -1);
}

TEST_CASE("descent obstruction") {
  CHECK(descent_obstruction(0) == 1);
  CHECK(descent_obstruction(1) == -1);
  CHECK(descent_obstruction(2) == 1);
  CHECK(descent_obstruction(-3) == -1);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) CHECK(descent_obstruction(a + b) == descent_obstruction(a) * descent_obstruction(b));
  // Parity rule: integer slopes (even degree per rank-1 summand) descend.
  for (int twice = -8; twice <= 8; ++twice) {
    const Rational slope = Rational(twice) / 2;
    CHECK((summand_rank(slope) == 1) == (descent_obstruction(twice) == 1));
  }
}

TEST_CASE("random structures round trip") {
  std::mt19937_64 rng(37);
  int generated = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (int w = -4; w <= 4; ++w) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto h = random_pure(n, w, rng, 400);
        if (!h) {
          // Odd weight forces even dimension; nothing else should be rejected
          // every time.
          CHECK((w % 2 != 0 && n % 2 != 0));
          continue;
        }
        ++generated;
        INFO("n = " << n << ", w = " << w);
        if (w % 2 != 0) CHECK(n % 2 == 0);
        const auto numbers = hodge_numbers(*h);
        std::size_t total = 0;
        for (const auto& hn : numbers) {
          total += hn.h;
          CHECK(hn.p + hn.q == w);
          const auto mirror = std::find_if(numbers.begin(), numbers.end(),
                                           [&](const HodgeNumber& o) { return o.p == hn.q; });
          REQUIRE(mirror != numbers.end());
          CHECK(mirror->h == hn.h);
        }
        CHECK(total == n);
        const auto eq = to_equivariant(*h);
        CHECK(from_equivariant(eq) == numbers);
        for (const auto& s : eq.type.summands()) {
          CHECK(2 * s.slope == Rational(w));
          CHECK(summand_rank(s.slope) == (w % 2 == 0 ? 1u : 2u));
        }
        CHECK(eq.type.rank() == n);
        // JSON round trip.
        const auto back = PureHodgeStructure::from_json(h->to_json());
        CHECK(hodge_numbers(back) == numbers);
      }
    }
  CHECK(generated > 100);
}

TEST_CASE("json input") {
  const auto j = nlohmann::json::parse(R"({"n": 2, "w": 1, "filtration": [{"p": 1, "basis": [[1, "i"]]}]})");
  const auto h = PureHodgeStructure::from_json(j);
  CHECK(hodge_numbers(h) == hodge_numbers(elliptic()));
  CHECK_THROWS_AS(PureHodgeStructure::from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(PureHodgeStructure::from_json(nlohmann::json::parse(
                      R"({"n": 2, "w": 1, "filtration": [{"p": 1, "basis": [[1]]}]})")),
                  ParseError);
}
