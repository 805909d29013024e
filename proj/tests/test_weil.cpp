#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "twk/weil.hpp"

using namespace twk;
using namespace twk::weil;

namespace {

const Place kInf = Place::infinite();

double dist(const UnitaryOp& a, const UnitaryOp& b) { return (a - b).norm(); }

UnitaryOp to_float(const CycloMatrix& m) {
  UnitaryOp out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j].to_complex();
  return out;
}

HeisenbergElement random_heis(std::mt19937_64& rng, long n) {
  std::uniform_int_distribution<long> d(0, n - 1);
  return heisenberg(d(rng), d(rng), d(rng), n);
}

// All q = x a^2 + y ab + z b^2 over Z/N making the SL(2) map an automorphism.
std::vector<std::array<long, 3>> solve_correction(long a, long b, long c, long d, long n) {
  std::vector<std::array<long, 3>> out;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      for (long z = 0; z < n; ++z) {
        auto act = [&](const HeisenbergElement& h) {
          const long q = x * h.a * h.a + y * h.a * h.b + z * h.b * h.b;
          return heisenberg(a * h.a + b * h.b, c * h.a + d * h.b, h.c + q, n);
        };
        bool ok = true;
        for (long a1 = 0; a1 < n && ok; ++a1)
          for (long b1 = 0; b1 < n && ok; ++b1)
            for (long a2 = 0; a2 < n && ok; ++a2)
              for (long b2 = 0; b2 < n && ok; ++b2) {
                const auto h1 = heisenberg(a1, b1, 0, n), h2 = heisenberg(a2, b2, 0, n);
                ok = act(heis_mul(h1, h2)) == heis_mul(act(h1), act(h2));
              }
        if (ok) out.push_back({x, y, z});
      }
  return out;
}

}  // namespace

TEST_CASE("heisenberg group law") {
  const auto p = heisenberg(1, 0, 0, 5), q = heisenberg(0, 1, 0, 5);
  CHECK(heis_mul(p, q) == heisenberg(1, 1, 1, 5));
  CHECK(heis_mul(p, heis_inv(p)) == heisenberg(0, 0, 0, 5));
  CHECK(heis_commutator(p, q) == heisenberg(0, 0, 1, 5));
  CHECK_THROWS_AS(heis_mul(p, heisenberg(0, 1, 0, 7)), DomainError);
  std::mt19937_64 rng(3);
  for (long n : {2L, 3L, 4L, 6L, 7L}) {
    for (int t = 0; t < 50; ++t) {
      const auto g = random_heis(rng, n), h = random_heis(rng, n), k = random_heis(rng, n);
      CHECK(heis_mul(heis_mul(g, h), k) == heis_mul(g, heis_mul(h, k)));
      CHECK(heis_mul(heis_inv(g), g) == heisenberg(0, 0, 0, n));
      const auto c = heis_commutator(g, h);
      CHECK(c.a == 0);
      CHECK(c.b == 0);
    }
  }
}

TEST_CASE("schrodinger representation") {
  const UnitaryOp z = schrodinger(heisenberg(0, 0, 1, 3));
  CHECK(dist(z, std::polar(1.0, 2 * std::numbers::pi / 3) * UnitaryOp::Identity(3, 3)) < kTolerance);
  const UnitaryOp shift = schrodinger(heisenberg(1, 0, 0, 3));
  UnitaryOp expect = UnitaryOp::Zero(3, 3);
  expect(0, 1) = expect(1, 2) = expect(2, 0) = 1;
  CHECK(dist(shift, expect) < kTolerance);

  for (long n : {3L, 4L, 5L}) {
    const auto p = schrodinger(heisenberg(1, 0, 0, n)), q = schrodinger(heisenberg(0, 1, 0, n));
    const UnitaryOp comm = p * q * p.inverse() * q.inverse();
    CHECK(dist(comm, std::polar(1.0, 2 * std::numbers::pi / n) * UnitaryOp::Identity(n, n)) < kTolerance);
  }
  const auto p4 = schrodinger(heisenberg(1, 0, 0, 4)), q4 = schrodinger(heisenberg(0, 1, 0, 4));
  CHECK(dist(p4 * q4 * p4.adjoint() * q4.adjoint(), Complex(0, 1) * UnitaryOp::Identity(4, 4)) < kTolerance);

  std::mt19937_64 rng(5);
  for (long n : {2L, 3L, 5L, 7L, 11L}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_heis(rng, n), h = random_heis(rng, n);
      CHECK(dist(schrodinger(g) * schrodinger(h), schrodinger(heis_mul(g, h))) < kTolerance);
      CHECK(dist(schrodinger(g) * schrodinger(g).adjoint(), UnitaryOp::Identity(n, n)) < kTolerance);
    }
  }
}

TEST_CASE("exact cyclotomic mode is the oracle of the float path") {
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<BigInt>{1, 1, 1, 1, 1});
  // 1 + zeta + ... + zeta^4 = 0 in Q(zeta_5).
  Cyclotomic s(5);
  for (long k = 0; k < 5; ++k) s += Cyclotomic::zeta(5, k);
  CHECK(s == Cyclotomic(5));

  std::mt19937_64 rng(7);
  for (long n : {2L, 3L, 4L, 5L, 6L, 7L}) {
    for (int t = 0; t < 10; ++t) {
      const auto g = random_heis(rng, n), h = random_heis(rng, n);
      const auto exact = cyclo_mul(schrodinger_exact(g), schrodinger_exact(h));
      const auto want = schrodinger_exact(heis_mul(g, h));
      CHECK(exact == want);
      CHECK(dist(to_float(exact), schrodinger(g) * schrodinger(h)) < kTolerance);
    }
  }
  CHECK_THROWS_AS(schrodinger_exact(heisenberg(0, 0, 0, 11)), ResourceError);
}

TEST_CASE("irreducibility and Stone-von Neumann") {
  for (long n : {3L, 5L, 7L}) {
    const auto r = svn_check(n);
    CHECK(r.schur_dimension == 1);
    CHECK(r.momentum_dimension == 1);
    CHECK(r.random_dimension == 1);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(svn_check(9), DomainError);
  // Central characters differ: no intertwiner.
  const long n = 5;
  std::vector<UnitaryOp> a, b;
  for (const auto& g : {heisenberg(1, 0, 0, n), heisenberg(0, 1, 0, n), heisenberg(0, 0, 1, n)}) {
    a.push_back(schrodinger(g));
    b.push_back(schrodinger(heisenberg(g.a, 2 * g.b, 2 * g.c, n)));
  }
  CHECK(intertwiner_dimension(a, b) == 0);
}

TEST_CASE("SL(2) action") {
  const auto id = sl2(1, 0, 0, 1, 5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto h = random_heis(rng, 5);
    CHECK(sl2_act(id, h) == h);
  }
  CHECK(sl2_act(sl2(0, -1, 1, 0, 5), heisenberg(1, 0, 0, 5)) == heisenberg(0, 1, 0, 5));
  CHECK(sl2_act(sl2(0, 1, -1, 0, 5), heisenberg(1, 0, 0, 5)) == heisenberg(0, -1, 0, 5));
  CHECK_THROWS_AS(sl2(1, 1, 1, 1, 5), DomainError);
  CHECK_THROWS_AS(sl2(1, 0, 0, 1, 4), DomainError);

  for (long n : {3L, 5L, 7L, 11L}) {
    for (int t = 0; t < 30; ++t) {
      const auto g = random_sl2(n, rng), k = random_sl2(n, rng);
      const auto h1 = random_heis(rng, n), h2 = random_heis(rng, n);
      CHECK(sl2_act(g, heis_mul(h1, h2)) == heis_mul(sl2_act(g, h1), sl2_act(g, h2)));
      // Left action: g (k h) = (g k) h, central part included.
      CHECK(sl2_act(g, sl2_act(k, h1)) == sl2_act(sl2_mul(g, k), h1));
    }
  }
}

TEST_CASE("central correction matches the solved automorphism condition") {
  std::mt19937_64 rng(13);
  for (long n : {3L, 5L}) {
    for (int t = 0; t < 4; ++t) {
      const SL2 g = random_sl2(n, rng);
      const auto solutions = solve_correction(g.a, g.b, g.c, g.d, n);
      REQUIRE(solutions.size() == 1);
      const long half = (n + 1) / 2;
      CHECK(solutions[0][0] == (half * g.a % n) * g.c % n);
      CHECK(solutions[0][1] == ((g.a * g.d - 1) % n + n) % n);
      CHECK(solutions[0][2] == (half * g.b % n) * g.d % n);
      // The closed form is the solved one.
      const auto h = heisenberg(1, 1, 0, n);
      const long q = (solutions[0][0] + solutions[0][1] + solutions[0][2]) % n;
      CHECK(sl2_act(g, h).c == q);
    }
  }
}

TEST_CASE("intertwiners and the cocycle") {
  const long n = 5;
  const UnitaryOp u = intertwiner(sl2(0, 1, -1, 0, n));
  UnitaryOp fourier(n, n);
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) fourier(x, y) = std::polar(1.0 / std::sqrt(5.0), 2 * std::numbers::pi * x * y / 5);
  // Equal up to a phase.
  const Complex overlap = (fourier.adjoint() * u).trace() / static_cast<double>(n);
  CHECK(std::abs(std::abs(overlap) - 1) < kTolerance);
  CHECK(dist(u, overlap * fourier) < 1e-8);

  std::mt19937_64 rng(17);
  const SL2 id = sl2(1, 0, 0, 1, n);
  for (int t = 0; t < 10; ++t) {
    const SL2 g = random_sl2(n, rng), h = random_sl2(n, rng), k = random_sl2(n, rng);
    const auto c_id = cocycle(id, g);
    CHECK(std::abs(c_id.value - Complex(1)) < kCocycleTolerance);
    const auto cgh = cocycle(g, h);
    CHECK(std::abs(std::abs(cgh.value) - 1) < kCocycleTolerance);
    CHECK(cgh.residual < kCocycleTolerance);
    const Complex lhs = cgh.value * cocycle(sl2_mul(g, h), k).value;
    const Complex rhs = cocycle(g, sl2_mul(h, k)).value * cocycle(h, k).value;
    CHECK(std::abs(lhs - rhs) < kCocycleTolerance);
    // Intertwining property on generators.
    const UnitaryOp ug = intertwiner(g);
    for (const auto& x : {heisenberg(1, 0, 0, n), heisenberg(0, 1, 0, n)})
      CHECK(dist(ug * schrodinger(x) * ug.adjoint(), schrodinger(sl2_act(g, x))) < 1e-8);
  }
}

TEST_CASE("gauss sums") {
  CHECK(std::abs(gauss_sum(5, 1) - Complex(std::sqrt(5.0), 0)) < kTolerance);
  for (long p = 3; p < 50; ++p) {
    if (!is_prime(p)) continue;
    const Complex g1 = gauss_sum(p, 1);
    CHECK(std::abs(std::norm(g1) - static_cast<double>(p)) < kTolerance * p);
    for (long a = 1; a < p; ++a) CHECK(std::abs(gauss_sum(p, a) - static_cast<double>(legendre_symbol(a, p)) * g1) < kTolerance * p);
  }
  for (long p : {3L, 5L, 7L}) {
    const Cyclotomic g = gauss_sum_exact(p, 1);
    CHECK(g * g.conj() == Cyclotomic(p, p));
    // g^2 = (-1/p) p.
    CHECK(g * g == Cyclotomic(p, legendre_symbol(-1, p) * p));
    for (long a = 1; a < p; ++a) {
      CHECK(gauss_sum_exact(p, a) == Cyclotomic(p, legendre_symbol(a, p)) * g);
      CHECK(std::abs(gauss_sum_exact(p, a).to_complex() - gauss_sum(p, a)) < kTolerance);
    }
  }
  CHECK_THROWS_AS(gauss_sum(9, 1), DomainError);
  CHECK_THROWS_AS(gauss_sum(5, 10), DomainError);
}

TEST_CASE("maslov index") {
  const LagrangianLine x(1, 0), y(0, 1), d(1, 1);
  const auto m = maslov_index(x, y, d);
  CHECK(m.signature == -1);
  CHECK(m.invariants.dimension == 3);
  CHECK(maslov_index(y, x, d).signature == 1);
  CHECK_THROWS_AS(maslov_index(x, x, d), DomainError);
  CHECK_THROWS_AS(maslov_index(x, LagrangianLine(2, 0), d), DomainError);

  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> r(-6, 6);
  auto line = [&] {
    while (true) {
      const int a = r(rng), b = r(rng);
      if (a != 0 || b != 0) return LagrangianLine(a, b);
    }
  };
  const std::vector<Place> places{kInf, Place::finite(2), Place::finite(3), Place::finite(5)};
  int tested = 0;
  for (int t = 0; t < 200 && tested < 40; ++t) {
    const auto l1 = line(), l2 = line(), l3 = line(), l4 = line();
    const std::vector<LagrangianLine> ls{l1, l2, l3, l4};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (omega(ls[i], ls[j]).is_zero()) distinct = false;
    if (!distinct) continue;
    ++tested;
    const auto f123 = maslov_form(l1, l2, l3);
    // Antisymmetry under a transposition.
    CHECK(witt_equivalent(maslov_form(l2, l1, l3), negated(f123)));
    // Chain condition.
    const QuadraticForm chain = orthogonal_sum(orthogonal_sum(f123, negated(maslov_form(l1, l2, l4))),
                                               orthogonal_sum(maslov_form(l1, l3, l4), negated(maslov_form(l2, l3, l4))));
    for (const Place& v : places) CHECK(witt_equivalent(chain, QuadraticForm::diagonal({}), v));
    CHECK(witt_equivalent(chain, QuadraticForm::diagonal({})));
    // Symplectic invariance.
    const Rational ga = 2, gb = 3, gc = 1, gd = 2;  // det 1
    const auto m1 = maslov_index(l1, l2, l3);
    const auto m2 = maslov_index(transform(l1, ga, gb, gc, gd), transform(l2, ga, gb, gc, gd), transform(l3, ga, gb, gc, gd));
    CHECK(m1.form.gram() == m2.form.gram());
    CHECK(m1.signature == m2.signature);
    CHECK(m1.invariants.hasse == m2.invariants.hasse);
  }
  CHECK(tested >= 20);
}
