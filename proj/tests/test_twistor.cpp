#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twk/twistor.hpp"

using namespace twk;
using namespace twk::twistor;

namespace {

using G = GaussianRational;

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned seed) : rng(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rational(num(rng)) / Rational(den(rng));
  }
  G gaussian() { return G(rational(), rational()); }
  ProjPoint point(std::size_t n) {
    while (true) {
      std::vector<G> z;
      for (std::size_t k = 0; k < n; ++k) z.push_back(gaussian());
      if (std::any_of(z.begin(), z.end(), [](const G& w) { return !w.is_zero(); })) return ProjPoint(z);
    }
  }
  Quat quat() { return hamilton(rational(), rational(), rational(), rational()); }
  QuatProjPoint quat_point() {
    while (true) {
      Quat a = quat(), b = quat();
      if (!a.is_zero() || !b.is_zero()) return QuatProjPoint(a, b);
    }
  }
  QuatMatrix invertible() {
    while (true) {
      QuatMatrix g{{{quat(), quat()}, {quat(), quat()}}};
      if (is_invertible(g)) return g;
    }
  }
};

Matrix<Rational> identity4() { return Matrix<Rational>::identity(4); }

}  // namespace

TEST_CASE("real structures on CP^1") {
  CHECK(rho_tw(ProjPoint({1, 0})) == ProjPoint({0, 1}));
  const ProjPoint p({G(1, 1), 2});
  CHECK(rho(p) == ProjPoint({G(1, -1), 2}));
  CHECK(rho(p).coords()[0] == G(1, -1));
  // rho_tw^2 = -1 on coordinates, identity on points.
  const ProjPoint twice = rho_tw(rho_tw(p));
  CHECK(twice.coords()[0] == -p.coords()[0]);
  CHECK(twice == p);
  CHECK(is_fixed_rho(ProjPoint({1, 1})));
  CHECK_FALSE(is_fixed_rho(ProjPoint({G::i(), 1})));
  CHECK(is_fixed_rho(ProjPoint({G::i(), G::i()})));
}

TEST_CASE("rho_tw has no fixed points on sampled points") {
  Sampler s(3);
  std::vector<ProjPoint> pts;
  for (int k = 0; k < 1000; ++k) pts.push_back(s.point(k % 2 ? 2 : 4));
  const auto report = fixed_point_check(pts);
  CHECK(report.samples == 1000);
  CHECK(report.rho_tw_fixed == 0);
  for (const auto& p : pts) {
    CHECK(rho(rho(p)) == p);
    CHECK(rho_tw(rho_tw(p)) == p);
  }
}

TEST_CASE("jmul is left multiplication by j and matches rho_tw") {
  CHECK(jmul(1, 0) == std::pair<G, G>{0, 1});
  CHECK(jmul(G::i(), 0) == std::pair<G, G>{0, G(0, -1)});
  Sampler s(5);
  for (int k = 0; k < 200; ++k) {
    const G z1 = s.gaussian(), z2 = s.gaussian();
    const auto [w1, w2] = jmul(z1, z2);
    CHECK(jmul(w1, w2) == std::pair<G, G>{-z1, -z2});
    CHECK(std::pair<G, G>{w1, w2} == std::pair<G, G>{-z2.conj(), z1.conj()});
  }
}

TEST_CASE("quaternion literals") {
  CHECK(parse_quat("1+2i-3j+1/2k").coeffs() == hamilton(1, 2, -3, Rational(1) / 2).coeffs());
  CHECK(parse_quat("-j").coeffs() == hamilton(0, 0, -1, 0).coeffs());
  CHECK(parse_quat("2*k").coeffs() == hamilton(0, 0, 0, 2).coeffs());
  CHECK_THROWS_AS(parse_quat("1+x"), ParseError);
  CHECK(QuatProjPoint::parse("j;1") == QuatProjPoint(hamilton(0, 0, 1), hamilton(1)));
}

TEST_CASE("twistor projection") {
  CHECK(pi(ProjPoint({0, 0, G(2, 1), 3})) == QuatProjPoint(hamilton(0), hamilton(1)));
  CHECK(pi(ProjPoint({1, 0, 0, 0})) == QuatProjPoint(hamilton(1), hamilton(0)));
  Sampler s(7);
  for (int k = 0; k < 200; ++k) {
    const ProjPoint p = s.point(4);
    CHECK(pi(rho_tw(p)) == pi(p));
    const G lambda = s.gaussian();
    if (!lambda.is_zero()) {
      std::vector<G> scaled;
      for (const G& z : p.coords()) scaled.push_back(lambda * z);
      CHECK(pi(ProjPoint(scaled)) == pi(p));
    }
    CHECK(fiber(pi(p)).contains(p));
  }
}

TEST_CASE("fibers are real lines") {
  const auto f0 = fiber(QuatProjPoint(hamilton(0), hamilton(1)));
  CHECK(f0 == ProjLine(Matrix<G>::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}})));
  const auto f1 = fiber(QuatProjPoint(hamilton(1), hamilton(0)));
  CHECK(f1 == ProjLine(Matrix<G>::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK_FALSE(is_real_line(Matrix<G>::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}})));
  CHECK(is_real_line(Matrix<G>::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK_THROWS_AS(is_real_line(Matrix<G>::from_rows({{1, 0, 0, 0}, {2, 0, 0, 0}})), DomainError);

  Sampler s(11);
  for (int k = 0; k < 100; ++k) {
    const QuatProjPoint q = s.quat_point();
    const ProjLine line = fiber(q);
    CHECK(is_real_line(line));
    CHECK(pi(line.point(0)) == q);
    CHECK(pi(line.point(1)) == q);
    // Pluecker relation p01 p23 - p02 p13 + p03 p12 = 0.
    const auto pl = line.plucker();
    CHECK((pl[0] * pl[5] - pl[1] * pl[4] + pl[2] * pl[3]).is_zero());
    // A random point of the line maps to q.
    const G a = s.gaussian(), b = s.gaussian();
    if (a.is_zero() && b.is_zero()) continue;
    std::vector<G> v;
    for (std::size_t c = 0; c < 4; ++c) v.push_back(a * line.basis()(0, c) + b * line.basis()(1, c));
    CHECK(pi(ProjPoint(v)) == q);
  }
}

TEST_CASE("real lines project to a single point") {
  Sampler s(13);
  int found = 0;
  for (int k = 0; k < 200; ++k) {
    // span{v, rho_tw v} is always a real line.
    const ProjPoint p = s.point(4);
    const ProjPoint q = rho_tw(p);
    auto rows = p.coords();
    rows.insert(rows.end(), q.coords().begin(), q.coords().end());
    const Matrix<G> basis(2, 4, rows);
    REQUIRE(rank(basis) == 2);
    CHECK(is_real_line(basis));
    CHECK(pi(p) == pi(q));
    ++found;
  }
  CHECK(found == 200);
}

TEST_CASE("GL(2,H) action") {
  const Quat one = hamilton(1), zero = hamilton(0), j = hamilton(0, 0, 1);
  const QuatMatrix id{{{one, zero}, {zero, one}}};
  const QuatProjPoint x(one, one);
  CHECK(gl2h_act(id, x) == x);
  const QuatMatrix dj{{{j, zero}, {zero, one}}};
  CHECK(gl2h_act(dj, x) == QuatProjPoint(j, one));
  const QuatMatrix singular{{{one, one}, {one, one}}};
  CHECK_FALSE(is_invertible(singular));
  CHECK_THROWS_AS(gl2h_act(singular, x), DomainError);

  Sampler s(17);
  for (int k = 0; k < 50; ++k) {
    const QuatMatrix g = s.invertible();
    const ProjPoint p = s.point(4);
    CHECK(pi(gl2h_act(g, p)) == gl2h_act(g, pi(p)));
    CHECK(rho_tw(gl2h_act(g, p)) == gl2h_act(g, rho_tw(p)));
  }
}

TEST_CASE("sphere of complex structures") {
  const Matrix<Rational> i = complex_structure({1, 0, 0});
  const Matrix<Rational> jm = complex_structure({0, 1, 0});
  const Matrix<Rational> k = complex_structure({0, 0, 1});
  const Matrix<Rational> minus_id = Rational(-1) * identity4();
  CHECK(i * i == minus_id);
  CHECK(i * jm == k);
  const Matrix<Rational> j35 = complex_structure({Rational(3) / 5, Rational(4) / 5, 0});
  CHECK(j35 * j35 == minus_id);
  CHECK_THROWS_AS(complex_structure({1, 1, 0}), DomainError);

  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int t = 0; t < 50; ++t) {
    const SpherePoint x = sphere_point(Rational(d(rng)) / 3, Rational(d(rng)) / 4);
    const Matrix<Rational> jx = complex_structure(x);
    CHECK(jx * jx == minus_id);
    CHECK(jx.transpose() * jx == identity4());
    CHECK(jx == x[0] * i + x[1] * jm + x[2] * k);
  }
}

TEST_CASE("Pauli eigenlines") {
  CHECK(pauli_eigenline({0, 0, 1}) == ProjPoint({1, 0}));
  CHECK(pauli_eigenline({1, 0, 0}) == ProjPoint({1, 1}));
  CHECK(pauli_eigenline({0, 0, -1}) == ProjPoint({0, 1}));
  CHECK(pauli_eigenline({0, 0, 1}, -1) == ProjPoint({0, 1}));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const SpherePoint x = sphere_point(Rational(d(rng)) / 2, Rational(d(rng)) / 3);
    // M = [[x3, x1 - i x2], [x1 + i x2, -x3]] applied to the eigenline.
    for (int sign : {1, -1}) {
      const auto v = pauli_eigenline(x, sign).coords();
      const G w(x[0], x[1]);
      const G m0 = G(x[2]) * v[0] + w.conj() * v[1];
      const G m1 = w * v[0] - G(x[2]) * v[1];
      CHECK(m0 == G(sign) * v[0]);
      CHECK(m1 == G(sign) * v[1]);
    }
  }
}

TEST_CASE("clutching degrees") {
  const auto plus = clutching_degree(LineFamily::PauliPlus);
  CHECK(plus.degree == 1);
  CHECK(plus.residual < 1e-6);
  CHECK(plus.max_increment < 1.5707963267948966);
  CHECK(clutching_degree(LineFamily::PauliMinus).degree == -1);
  CHECK(clutching_degree(LineFamily::Constant).degree == 0);
  CHECK_THROWS_AS(clutching_degree(LineFamily::PauliPlus, 3), DomainError);
}
