#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twk/symbols.hpp"

using namespace twk;

namespace {

struct SymbolRow {
  int a, b;
  long p;
  int symbol;
};

// Frozen from the norm-group enumeration in tests/oracles/hilbert_norms.py.
const std::vector<SymbolRow> kNormOracle = {
#include "data/hilbert_table.inc"
};

const Place kInf = Place::infinite();

}  // namespace

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, kInf) == -1);
  for (long p : {2L, 3L, 5L, 7L})
    for (int b : {-6, -1, 2, 5, 12}) CHECK(hilbert_symbol(1, b, Place::finite(p)) == 1);
  for (long p : {3L, 5L, 7L, 11L, 13L}) CHECK(hilbert_symbol(p, smallest_nonresidue(p), Place::finite(p)) == -1);
  CHECK_THROWS_AS(hilbert_symbol(0, 1, kInf), DomainError);
}

TEST_CASE("closed form and brute-force oracle match the frozen norm table") {
  for (const auto& row : kNormOracle) {
    INFO("(" << row.a << "," << row.b << ")_" << row.p);
    CHECK(hilbert_symbol(row.a, row.b, Place::finite(row.p)) == row.symbol);
    CHECK(hilbert_symbol_oracle(row.a, row.b, row.p) == row.symbol);
  }
}

TEST_CASE("oracle examples") {
  CHECK(hilbert_symbol_oracle(2, 3, 5) == hilbert_symbol(2, 3, Place::finite(5)));
  CHECK(hilbert_symbol_oracle(1, 1, 3) == 1);
  CHECK(hilbert_symbol_oracle(3, 2, 3) == -1);
}

TEST_CASE("symmetry, bimultiplicativity and square-class invariance") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-40, 40);
  auto nz = [&] {
    int x = 0;
    while (x == 0) x = d(rng);
    return Rational(x);
  };
  const std::vector<Place> places{kInf, Place::finite(2), Place::finite(3), Place::finite(5), Place::finite(7),
                                  Place::finite(11), Place::finite(13)};
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = nz(), b1 = nz(), b2 = nz(), s = nz();
    for (const Place& v : places) {
      CHECK(hilbert_symbol(a, b1, v) == hilbert_symbol(b1, a, v));
      CHECK(hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
      CHECK(hilbert_symbol(a * s * s, b1, v) == hilbert_symbol(a, b1, v));
    }
  }
  // The non-residue u may be replaced by any u * square.
  for (long p : {3L, 5L, 7L, 11L}) {
    const long u = smallest_nonresidue(p);
    for (long s = 1; s < 6; ++s) {
      if (s % p == 0) continue;
      CHECK(hilbert_symbol(p, u * s * s, Place::finite(p)) == -1);
    }
  }
}

TEST_CASE("classify_quaternion examples") {
  CHECK(classify_quaternion(-1, -1, kInf) == QuaternionClass::Division);
  CHECK(classify_quaternion(1, 1, kInf) == QuaternionClass::Split);
  CHECK(classify_quaternion(5, 2, Place::finite(5)) == QuaternionClass::Division);
}

TEST_CASE("brauer classes") {
  const BrauerClass2 h = brauer_class(-1, -1);
  CHECK(h.ramified == std::set<Place>{kInf, Place::finite(2)});
  CHECK(brauer_mul(h, h).is_trivial());
  CHECK(brauer_class(1, 17).is_trivial());
  for (int a = -12; a <= 12; ++a)
    for (int b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      CHECK(brauer_class(a, b).ramified.size() % 2 == 0);
    }
}

TEST_CASE("hilbert reciprocity examples") {
  auto r = hilbert_reciprocity(-1, -1);
  CHECK(r.product == 1);
  REQUIRE(r.symbols.size() == 2);
  CHECK(r.symbols[0] == std::pair<Place, int>{kInf, -1});
  CHECK(r.symbols[1] == std::pair<Place, int>{Place::finite(2), -1});

  r = hilbert_reciprocity(1, 17);
  for (const auto& [v, s] : r.symbols) CHECK(s == 1);

  r = hilbert_reciprocity(3, 5);
  CHECK(r.product == 1);
  std::map<std::string, int> m;
  for (const auto& [v, s] : r.symbols) m[v.str()] = s;
  CHECK(m["3"] == -1);
  CHECK(m["5"] == -1);
  CHECK(m["2"] == 1);
}

TEST_CASE("quadratic reciprocity examples") {
  auto r = quadratic_reciprocity(3, 5);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);
  r = quadratic_reciprocity(5, 13);
  CHECK(r.legendre_pq == r.legendre_qp);
  CHECK(r.holds);
  r = quadratic_reciprocity(3, 7);
  CHECK(r.lhs == -1);
  CHECK(r.rhs == -1);
  CHECK(r.derived == -1);
  CHECK(r.holds);
  CHECK_THROWS_AS(quadratic_reciprocity(3, 3), DomainError);
  CHECK_THROWS_AS(quadratic_reciprocity(2, 3), DomainError);
}

TEST_CASE("conic point examples") {
  auto pt = conic_point(-1, -1, kInf, Rational(-1));
  REQUIRE(pt.has_value());
  const auto& c = std::get<ProjTriple<RealQuadratic>>(*pt);
  CHECK(c.coords[0] == RealQuadratic(1, 0, -1));
  CHECK(c.coords[1] == RealQuadratic(0, 1, -1));
  CHECK(c.coords[2] == RealQuadratic(0, 0, -1));
  const auto conj = galois_conjugate(*pt);
  CHECK(std::get<ProjTriple<RealQuadratic>>(conj).coords[1] == RealQuadratic(0, -1, -1));
  CHECK_FALSE(is_fixed(*pt));

  pt = conic_point(1, 1, Place::finite(5));
  REQUIRE(pt.has_value());
  const auto& q = std::get<ProjTriple<PAdic>>(*pt);
  CHECK(q.coords[0].is_exact_zero());
  CHECK(q.coords[1].representative() == 1);
  CHECK(q.coords[2].representative() == 1);
  CHECK(is_fixed(*pt));

  pt = conic_point(3, 2, Place::finite(3), Rational(3), 6);
  REQUIRE(pt.has_value());
  const auto& e = std::get<ProjTriple<QuadExtElement>>(*pt);
  CHECK(e.coords[0].re().is_exact_zero());
  CHECK(e.coords[1].im().is_exact_zero());
  CHECK(e.coords[2].im().is_exact_zero());
  CHECK(on_conic(*pt, 3, 2));
  CHECK_FALSE(is_fixed(*pt));

  CHECK_FALSE(conic_point(3, 2, Place::finite(3)).has_value());
  CHECK_FALSE(conic_point(-1, -1, kInf).has_value());
  CHECK_THROWS_AS(conic_point(3, 2, Place::finite(3), Rational(4)), DomainError);
}

TEST_CASE("real conic points are exact") {
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      if (a == 0 || b == 0) continue;
      const auto pt = conic_point(a, b, kInf);
      CHECK(pt.has_value() == (hilbert_symbol(a, b, kInf) == 1));
      if (pt) {
        CHECK(on_conic(*pt, a, b));
        CHECK(is_fixed(*pt));
      }
    }
}

TEST_CASE("base conic points exist iff split; extension points always exist") {
  const std::map<long, std::vector<Rational>> extensions{
      {2, {-1, 2, -2, 5}}, {3, {2, 3, 6}}, {5, {2, 5, 10}}, {7, {3, 7, 21}}};
  for (const auto& [p, ds] : extensions) {
    for (int a = -6; a <= 6; ++a)
      for (int b = -6; b <= 6; ++b) {
        if (a == 0 || b == 0) continue;
        INFO("a = " << a << ", b = " << b << ", p = " << p);
        const int s = hilbert_symbol(a, b, Place::finite(p));
        const auto base = conic_point(a, b, Place::finite(p), std::nullopt, 6);
        CHECK(base.has_value() == (s == 1));
        if (base) CHECK(on_conic(*base, a, b));
        for (const Rational& d : ds) {
          const auto pt = conic_point(a, b, Place::finite(p), d, 6);
          REQUIRE(pt.has_value());
          CHECK(on_conic(*pt, a, b));
          if (s == -1) CHECK_FALSE(is_fixed(*pt));
        }
      }
  }
}
