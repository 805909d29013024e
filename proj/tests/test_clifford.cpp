#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twk/clifford.hpp"

using namespace twk;
using namespace twk::clifford;

namespace {

AlgebraType type(Base b, std::size_t m, bool doubled = false) { return {b, m, doubled}; }

std::vector<Rational> random_element(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> x(dim);
  for (auto& c : x) c = d(rng);
  return x;
}

}  // namespace

TEST_CASE("blade multiplication") {
  const auto a = CliffordAlgebra::construct(1, 2);
  CHECK(a.dimension() == 8);
  // e1^2 = +1, e2^2 = e3^2 = -1.
  CHECK(a.multiply_blades(0b001, 0b001).sign == 1);
  CHECK(a.multiply_blades(0b010, 0b010).sign == -1);
  CHECK(a.multiply_blades(0b100, 0b100).sign == -1);
  // e2 e1 = -e1 e2.
  CHECK(a.multiply_blades(0b001, 0b010).sign == 1);
  CHECK(a.multiply_blades(0b010, 0b001).sign == -1);
  CHECK(a.multiply_blades(0b010, 0b001).blade == 0b011);
  CHECK_THROWS_AS(CliffordAlgebra::construct(7, 6), ResourceError);
  CHECK_THROWS_AS(CliffordAlgebra::construct(-1, 2), DomainError);
}

TEST_CASE("Cliff(0,2) satisfies the quaternion relations") {
  const auto a = CliffordAlgebra::construct(0, 2);
  std::vector<Rational> i(4, Rational(0)), j(4, Rational(0));
  i[0b01] = 1;
  j[0b10] = 1;
  const auto k = a.multiply(i, j);
  std::vector<Rational> minus_one(4, Rational(0));
  minus_one[0] = -1;
  CHECK(a.multiply(i, i) == minus_one);
  CHECK(a.multiply(j, j) == minus_one);
  CHECK(a.multiply(k, k) == minus_one);
  std::vector<Rational> minus_k = k;
  for (auto& c : minus_k) c = -c;
  CHECK(a.multiply(j, i) == minus_k);
}

TEST_CASE("associativity spot check") {
  std::mt19937_64 rng(5);
  for (auto [r, s] : {std::pair{2, 1}, std::pair{0, 4}, std::pair{3, 2}}) {
    const auto a = CliffordAlgebra::construct(r, s);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_element(rng, a.dimension());
      const auto y = random_element(rng, a.dimension());
      const auto z = random_element(rng, a.dimension());
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
    }
  }
}

TEST_CASE("oracle examples") {
  CHECK(classify_oracle(0, 0) == type(Base::R, 1));
  CHECK(classify_oracle(1, 0) == type(Base::R, 1, true));
  CHECK(classify_oracle(0, 1) == type(Base::C, 1));
  CHECK(classify_oracle(0, 2) == type(Base::H, 1));
  CHECK(classify_oracle(1, 1) == type(Base::R, 2));
  CHECK(classify_oracle(0, 3) == type(Base::H, 1, true));
  // Pauli algebra: positive squares in three generators give M(2,C).
  CHECK(classify_oracle(3, 0) == type(Base::C, 2));
  CHECK(classify_oracle(0, 4) == type(Base::H, 2));
  CHECK(classify_oracle(0, 4).str() == "M(2,H)");
  CHECK(classify_oracle(1, 0).str() == "R+R");
  CHECK_THROWS_AS(classify_oracle(5, 4), ResourceError);
}

TEST_CASE("fast classification matches the oracle") {
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      INFO("r = " << r << ", s = " << n - r);
      CHECK(classify(r, n - r) == classify_oracle(r, n - r));
    }
}

TEST_CASE("dimension bookkeeping") {
  for (int n = 0; n <= 12; ++n)
    for (int r = 0; r <= n; ++r) CHECK(classify(r, n - r).real_dimension() == (std::size_t{1} << n));
  CHECK_THROWS_AS(classify(13, 0), ResourceError);
}

TEST_CASE("base type depends only on (s - r) mod 8") {
  std::map<int, std::pair<Base, bool>> seen;
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) {
      const AlgebraType t = classify(r, n - r);
      const int k = sbr_class(r, n - r);
      auto [it, inserted] = seen.emplace(k, std::pair{t.base, t.doubled});
      if (!inserted) CHECK(it->second == std::pair{t.base, t.doubled});
    }
  CHECK(seen.size() == 8);
  CHECK(classify(4, 4) == type(Base::R, 16));
}

TEST_CASE("super-Brauer residues") {
  CHECK(sbr_class(0, 1) == 1);
  CHECK(sbr_class(1, 0) == 7);
  CHECK(sbr_class(4, 4) == 0);
  for (int r1 = 0; r1 < 5; ++r1)
    for (int s1 = 0; s1 < 5; ++s1)
      for (int r2 = 0; r2 < 5; ++r2)
        for (int s2 = 0; s2 < 5; ++s2)
          CHECK((sbr_class(r1, s1) + sbr_class(r2, s2)) % 8 == sbr_class(r1 + r2, s1 + s2));
}

TEST_CASE("complexification") {
  CHECK(complexify_type(1, 1) == type(Base::C, 2));
  CHECK(complexify_type(0, 0) == type(Base::C, 1));
  CHECK(complexify_type(2, 1) == type(Base::C, 2, true));
  CHECK(complexify_type(2, 1).str() == "M(2,C)+M(2,C)");
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const AlgebraType real = n <= 6 ? classify_oracle(r, n - r) : classify(r, n - r);
      CHECK(complexify(real) == complexify_type(r, n - r));
    }
}
