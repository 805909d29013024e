#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twk/quadforms.hpp"

using namespace twk;

namespace {

const Place kInf = Place::infinite();

std::vector<Rational> random_diag(std::mt19937_64& rng, std::size_t n, int bound = 10) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Rational> out;
  while (out.size() < n) {
    const int x = d(rng);
    if (x != 0) out.emplace_back(x);
  }
  return out;
}

// Random symmetric nondegenerate Gram matrix, as P^T D P for unimodular-ish P.
QuadraticForm random_form(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix<Rational> p = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) p(i, j) = d(rng);
  while (determinant(p).is_zero()) p(0, 0) += 1;
  const QuadraticForm base = QuadraticForm::diagonal(random_diag(rng, n));
  return QuadraticForm(p.transpose() * base.gram() * p);
}

bool brute_isotropic(const std::vector<Rational>& diag, long p) {
  std::vector<BigInt> coeffs;
  for (const Rational& x : diag) coeffs.push_back(x.numerator() * x.denominator());
  const long depth = std::max(6L, default_search_depth(coeffs, p));
  return find_local_zero(coeffs, p, depth).has_value();
}

}  // namespace

TEST_CASE("diagonalize examples") {
  CHECK(diagonalize(QuadraticForm::diagonal({1, 1, 1})) == std::vector<Rational>{1, 1, 1});
  const QuadraticForm h(Matrix<Rational>::from_rows({{0, 1}, {1, 0}}));
  const auto d = diagonalize(h);
  REQUIRE(d.size() == 2);
  CHECK(is_square(-(d[0] * d[1]), kInf));
  CHECK(squarefree_part(d[0] * d[1]) == -1);
  CHECK(diagonalize(QuadraticForm::diagonal({2, 3})) == std::vector<Rational>{2, 3});
  CHECK_THROWS_AS(diagonalize(QuadraticForm(Matrix<Rational>::from_rows({{1, 1}, {1, 1}}))), DomainError);
  CHECK_THROWS_AS(QuadraticForm(Matrix<Rational>::from_rows({{1, 2}, {0, 1}})), DomainError);
}

TEST_CASE("hasse invariant examples") {
  CHECK(hasse_invariant(QuadraticForm::diagonal({1, 1, 1}), kInf) == 1);
  CHECK(hasse_invariant(QuadraticForm::diagonal({-1, -1}), kInf) == -1);
  // (2,3)_3 (2,6)_3 (3,6)_3 = (-1)(-1)(+1) from the norm-group table.
  CHECK(hasse_invariant(QuadraticForm::diagonal({2, 3, 6}), Place::finite(3)) == 1);
}

TEST_CASE("hasse invariant does not depend on the diagonalization") {
  std::mt19937_64 rng(41);
  const std::vector<Place> places{kInf, Place::finite(2), Place::finite(3), Place::finite(5), Place::finite(7)};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const QuadraticForm f = random_form(rng, n);
    const auto fwd = diagonalize(f, PivotOrder::Forward);
    const auto rev = diagonalize(f, PivotOrder::Reverse);
    Rational pf = 1, pr = 1;
    for (std::size_t i = 0; i < n; ++i) {
      pf *= fwd[i];
      pr *= rev[i];
    }
    CHECK(squarefree_part(pf) == squarefree_part(pr));
    for (const Place& v : places) CHECK(hasse_invariant(fwd, v) == hasse_invariant(rev, v));
  }
}

TEST_CASE("isotropy examples") {
  CHECK_FALSE(is_isotropic(QuadraticForm::diagonal({1, 1, 1}), kInf));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) CHECK(is_isotropic(random_diag(rng, 5), Place::finite(7)));
  for (long p : {2L, 3L, 5L}) CHECK(is_isotropic(QuadraticForm::hyperbolic_plane(), Place::finite(p)));
  CHECK(is_isotropic(QuadraticForm::hyperbolic_plane(), kInf));
}

TEST_CASE("isotropy criteria agree with the digit search") {
  std::mt19937_64 rng(7);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const auto diag = random_diag(rng, n);
      INFO("p = " << p << ", n = " << n);
      CHECK(is_isotropic(diag, Place::finite(p)) == brute_isotropic(diag, p));
    }
  }
  // Rank 5 is always isotropic, confirmed by search.
  CHECK(brute_isotropic({1, 1, 1, 1, 1}, 7));
  CHECK(brute_isotropic({1, 1, 1, 1, 1}, 2));
}

TEST_CASE("witt decomposition examples") {
  auto w = witt_decompose(QuadraticForm::diagonal({1, -1, 1, -1}), Place::finite(5));
  CHECK(w.kernel.dim() == 0);
  CHECK(w.hyperbolic_count == 2);
  w = witt_decompose(QuadraticForm::diagonal({1, 1, 1}), kInf);
  CHECK(w.kernel.dim() == 3);
  CHECK(w.hyperbolic_count == 0);
  w = witt_decompose(QuadraticForm::diagonal({1, 1, 1, 1, 1}), Place::finite(7));
  CHECK(w.hyperbolic_count >= 1);
  CHECK(w.kernel.dim() + 2 * w.hyperbolic_count == 5);
}

TEST_CASE("witt decomposition is consistent with invariants") {
  std::mt19937_64 rng(13);
  for (long p : {2L, 3L, 5L}) {
    const Place v = Place::finite(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 7;
      const QuadraticForm f = QuadraticForm::diagonal(random_diag(rng, n));
      const auto w = witt_decompose(f, v);
      CHECK(w.kernel.dim() <= 4);
      CHECK(w.kernel.dim() + 2 * w.hyperbolic_count == n);
      if (w.kernel.dim() > 0) CHECK_FALSE(is_isotropic(w.kernel, v));
      CHECK(witt_equivalent(f, w.kernel, v));
    }
  }
}

TEST_CASE("witt equivalence") {
  const QuadraticForm f = QuadraticForm::diagonal({1, 2, 3});
  CHECK(witt_equivalent(with_hyperbolic(f, 1), f));
  CHECK(witt_equivalent(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({2, 2})));
  CHECK_FALSE(witt_equivalent(QuadraticForm::diagonal({1, 1}), QuadraticForm::diagonal({3, 3})));
  CHECK(rank_mod_2(f) == 1);
  CHECK_FALSE(witt_equivalent(f, QuadraticForm::diagonal({1, 2})));

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const QuadraticForm a = QuadraticForm::diagonal(random_diag(rng, 2));
    const QuadraticForm b = random_form(rng, 2);
    const QuadraticForm c = QuadraticForm::diagonal(random_diag(rng, 2));
    CHECK(witt_equivalent(a, a));
    CHECK(witt_equivalent(a, b) == witt_equivalent(b, a));
    if (witt_equivalent(a, b) && witt_equivalent(b, c)) CHECK(witt_equivalent(a, c));
    // f + (-f) is hyperbolic.
    CHECK(witt_equivalent(orthogonal_sum(a, negated(a)), QuadraticForm::diagonal({})));
    const auto before = witt_invariants(a);
    const auto after = witt_invariants(with_hyperbolic(a, 1));
    CHECK(before.rank_mod_2 == after.rank_mod_2);
  }
}

TEST_CASE("pfister forms") {
  const QuadraticForm p1 = pfister3(1, 5, 7);
  CHECK(witt_equivalent(p1, QuadraticForm::diagonal({})));
  const auto s = signature(pfister3(-1, -1, -1));
  CHECK(s.positive == 8);
  CHECK(s.negative == 0);
  const auto t = signature(pfister3(1, -1, -1));
  CHECK(t.positive == 4);
  CHECK(t.negative == 4);

  std::mt19937_64 rng(29);
  const std::vector<Place> places{kInf, Place::finite(2), Place::finite(3), Place::finite(5)};
  for (int trial = 0; trial < 50; ++trial) {
    const auto abc = random_diag(rng, 3, 12);
    const QuadraticForm q = pfister3(abc[0], abc[1], abc[2]);
    for (const Place& v : places) CHECK(i2_invariant(q, v) == 1);
  }
}

TEST_CASE("I^2 invariant is additive") {
  std::mt19937_64 rng(31);
  const std::vector<Place> places{kInf, Place::finite(2), Place::finite(3), Place::finite(5)};
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const QuadraticForm a = QuadraticForm::diagonal(random_diag(rng, 2 + 2 * (trial % 2)));
    const QuadraticForm b = QuadraticForm::diagonal(random_diag(rng, 2));
    for (const Place& v : places) {
      int ea = 0, eb = 0;
      try {
        ea = i2_invariant(a, v);
        eb = i2_invariant(b, v);
      } catch (const DomainError&) {
        continue;
      }
      CHECK(i2_invariant(orthogonal_sum(a, b), v) == ea * eb);
      ++tested;
    }
  }
  CHECK(tested >= 20);
}
