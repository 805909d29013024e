#include "twk/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "twk/clifford.hpp"
#include "twk/hodge.hpp"
#include "twk/quadforms.hpp"
#include "twk/quaternion.hpp"
#include "twk/symbols.hpp"
#include "twk/twistor.hpp"
#include "twk/weil.hpp"

namespace twk::acceptance {
namespace {

constexpr std::size_t kMaxDetails = 5;

class Tally {
 public:
  explicit Tally(Result& r) : r_(r) {}

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.details.size() < kMaxDetails) r_.details.push_back(describe());
  }

 private:
  Result& r_;
};

std::string str(const Rational& x) { return x.str(); }

std::mt19937_64 criterion_rng(const Options& o, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

// AC1
void hilbert_reciprocity_all(const Options& o, Tally& t) {
  const int bound = o.quick ? 20 : 50;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b) {
      if (a == 0 || b == 0) continue;
      const auto report = hilbert_reciprocity(a, b);
      int product = 1;
      for (const auto& [place, s] : report.symbols) product *= s;
      t.check(product == 1 && report.product == 1,
              [&] { return "product of local symbols is -1 for (" + std::to_string(a) + ", " + std::to_string(b) + ")"; });
    }
}

// AC2
void symbol_oracle(const Options& o, Tally& t) {
  const std::vector<long> primes = o.quick ? std::vector<long>{2, 3, 5} : std::vector<long>{2, 3, 5, 7, 11, 13};
  const int m_bound = o.quick ? 5 : 10;
  for (long p : primes) {
    std::vector<Rational> values;
    for (int alpha = 0; alpha <= 2; ++alpha)
      for (int m = -m_bound; m <= m_bound; ++m)
        if (m != 0) values.emplace_back(BigInt(ipow(p, alpha) * m));
    for (const Rational& a : values)
      for (const Rational& b : values) {
        const int closed = hilbert_symbol(a, b, Place::finite(p));
        const int oracle = hilbert_symbol_oracle(a, b, p);
        t.check(closed == oracle, [&] {
          return "(" + str(a) + ", " + str(b) + ")_" + std::to_string(p) + ": closed form " + std::to_string(closed) +
                 ", oracle " + std::to_string(oracle);
        });
      }
  }
}

// AC3
void quadratic_reciprocity_all(const Options& o, Tally& t) {
  const auto primes = primes_up_to(o.quick ? 40 : 100);
  for (long p : primes)
    for (long q : primes) {
      if (p == 2 || q == 2 || p == q) continue;
      const auto rec = quadratic_reciprocity(p, q);
      const int sign = ((p - 1) * (q - 1) / 4) % 2 == 0 ? 1 : -1;
      // Independent recomputation from the local symbols of reciprocity.
      int others = 1;
      for (const auto& [place, s] : hilbert_reciprocity(p, q).symbols)
        if (place.is_infinite() || (place.prime() != p && place.prime() != q)) others *= s;
      const int lhs = legendre_symbol(p, q) * legendre_symbol(q, p);
      t.check(rec.holds && lhs == sign && rec.lhs == lhs && rec.rhs == sign && rec.derived == lhs && others == lhs,
              [&] { return "reciprocity fails for (" + std::to_string(p) + ", " + std::to_string(q) + ")"; });
    }
}

// AC4
void division_consistency(const Options& o, Tally& t) {
  const int bound = o.quick ? 5 : 10;
  const std::vector<Place> places{Place::infinite(), Place::finite(2), Place::finite(3), Place::finite(5),
                                  Place::finite(7)};
  for (const Place& v : places)
    for (int a = -bound; a <= bound; ++a)
      for (int b = -bound; b <= bound; ++b) {
        if (a == 0 || b == 0) continue;
        const bool division = classify_quaternion(a, b, v) == QuaternionClass::Division;
        const auto point = conic_point(a, b, v, std::nullopt, 6);
        const bool zero_divisor = v.is_infinite() ? find_zero_divisor_real(a, b).has_value()
                                                  : find_zero_divisor_padic(a, b, v.prime(), 6).has_value();
        bool on = true;
        if (point) on = on_conic(*point, a, b);
        t.check(division == !point.has_value() && division == !zero_divisor && on, [&] {
          return "(" + std::to_string(a) + ", " + std::to_string(b) + ") at " + v.str() + ": division " +
                 std::to_string(division) + ", conic point " + std::to_string(point.has_value()) + ", zero divisor " +
                 std::to_string(zero_divisor);
        });
      }
  for (long p : {3L, 5L, 7L}) {
    const long u = smallest_nonresidue(p);
    t.check(classify_quaternion(p, u, Place::finite(p)) == QuaternionClass::Division,
            [&] { return "(p, u / Q_" + std::to_string(p) + ") splits"; });
  }
}

// AC5
void galois_fixed_points(const Options& o, Tally& t) {
  const std::size_t wanted = o.quick ? 30 : 100;
  const long precision = 6;
  const std::map<long, std::vector<Rational>> extensions{
      {2, {-1, 2, -2, 5}}, {3, {2, 3, 6}}, {5, {2, 5, 10}}, {7, {3, 7, 21}}};
  std::size_t found = 0;
  for (int a = -10; a <= 10 && found < wanted; ++a)
    for (int b = a; b <= 10 && found < wanted; ++b) {
      if (a == 0 || b == 0) continue;
      for (const auto& [p, ds] : extensions) {
        if (found >= wanted) break;
        if (hilbert_symbol(a, b, Place::finite(p)) != -1) continue;
        const Rational& d = ds[static_cast<std::size_t>(a + b + 20) % ds.size()];
        ++found;
        const auto pt = conic_point(a, b, Place::finite(p), d, precision);
        t.check(pt.has_value(), [&] { return "no extension point for (" + std::to_string(a) + ", " + std::to_string(b) + ") at " + std::to_string(p); });
        if (!pt) continue;
        const auto conj = galois_conjugate(*pt);
        t.check(on_conic(*pt, a, b) && on_conic(conj, a, b) && !is_fixed(*pt), [&] {
          return "extension point " + conic_point_str(*pt) + " for (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") at " + std::to_string(p) + " is fixed or off the conic";
        });
      }
    }
  t.check(found == wanted, [&] { return "only " + std::to_string(found) + " division instances"; });
}

// AC6
void clifford_all(const Options& o, Tally& t) {
  using namespace clifford;
  const int oracle_bound = o.quick ? 4 : 6;
  for (int n = 0; n <= oracle_bound; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto fast = classify(r, n - r), slow = classify_oracle(r, n - r);
      t.check(fast == slow, [&] {
        return "Cliff(" + std::to_string(r) + "," + std::to_string(n - r) + "): " + fast.str() + " vs oracle " + slow.str();
      });
    }
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto c = complexify(classify(r, n - r));
      AlgebraType want;
      want.base = Base::C;
      want.m = std::size_t{1} << (n / 2);
      want.doubled = n % 2 == 1;
      t.check(c == want && c == complexify_type(r, n - r), [&] {
        return "complexified Cliff(" + std::to_string(r) + "," + std::to_string(n - r) + ") = " + c.str();
      });
    }
  std::map<int, Base> base_by_class;
  std::map<int, bool> doubled_by_class;
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto type = classify(r, n - r);
      const int k = (((n - r) - r) % 8 + 8) % 8;
      const auto [it, fresh] = base_by_class.emplace(k, type.base);
      const auto [jt, fresh2] = doubled_by_class.emplace(k, type.doubled);
      t.check((fresh || it->second == type.base) && (fresh2 || jt->second == type.doubled) &&
                  type.real_dimension() == (std::size_t{1} << n),
              [&] { return "Cliff(" + std::to_string(r) + "," + std::to_string(n - r) + ") breaks periodicity: " + type.str(); });
    }
  t.check(base_by_class.size() == 8, [] { return "fewer than 8 residue classes seen"; });
}

// AC7
void twistor_identities(const Options& o, Tally& t) {
  using namespace twistor;
  using G = GaussianRational;
  auto rng = criterion_rng(o, 7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto rational = [&] { return Rational(num(rng)) / Rational(den(rng)); };
  auto gaussian = [&] { return G(rational(), rational()); };
  auto point = [&](std::size_t n) {
    while (true) {
      std::vector<G> z;
      for (std::size_t k = 0; k < n; ++k) z.push_back(gaussian());
      for (const G& w : z)
        if (!w.is_zero()) return ProjPoint(z);
    }
  };
  auto quat = [&] { return hamilton(rational(), rational(), rational(), rational()); };

  const int samples = o.quick ? 200 : 1000;
  std::vector<ProjPoint> pts;
  for (int k = 0; k < samples; ++k) pts.push_back(point(k % 2 ? 2 : 4));
  const auto report = fixed_point_check(pts);
  t.check(report.samples == pts.size() && report.rho_tw_fixed == 0,
          [&] { return std::to_string(report.rho_tw_fixed) + " rho_tw fixed points"; });
  for (const auto& p : pts) {
    t.check(rho_tw(rho_tw(p)) == p && !(rho_tw(p) == p), [&] { return "rho_tw fails on " + p.str(); });
    // jmul on each quaternionic coordinate pair is rho_tw.
    std::vector<G> via_j;
    for (std::size_t c = 0; c < p.size(); c += 2) {
      const auto [w1, w2] = jmul(p.coords()[c], p.coords()[c + 1]);
      via_j.push_back(w1);
      via_j.push_back(w2);
    }
    t.check(via_j == rho_tw(p).coords(), [&] { return "jmul differs from rho_tw on " + p.str(); });
  }

  const int group_samples = o.quick ? 20 : 50;
  for (int k = 0; k < group_samples; ++k) {
    QuatMatrix g{{{quat(), quat()}, {quat(), quat()}}};
    while (!is_invertible(g)) g = QuatMatrix{{{quat(), quat()}, {quat(), quat()}}};
    const ProjPoint p = point(4);
    t.check(pi(gl2h_act(g, p)) == gl2h_act(g, pi(p)), [&] { return "pi does not commute with g at " + p.str(); });
  }

  for (int k = 0; k < group_samples; ++k) {
    Quat q1 = quat(), q2 = quat();
    while (q1.is_zero() && q2.is_zero()) q1 = quat();
    const QuatProjPoint q(q1, q2);
    const ProjLine line = fiber(q);
    const ProjPoint a = line.point(0), b = line.point(1);
    const G s = gaussian(), u = gaussian();
    bool constant = pi(a) == q && pi(b) == q;
    if (!s.is_zero() || !u.is_zero()) {
      std::vector<G> v;
      for (std::size_t c = 0; c < 4; ++c) v.push_back(s * a.coords()[c] + u * b.coords()[c]);
      constant = constant && pi(ProjPoint(v)) == q;
    }
    t.check(is_real_line(line) && line.contains(rho_tw(a)) && line.contains(rho_tw(b)) && constant,
            [&] { return "fiber over " + q.str() + " is not rho_tw-stable or not pi-constant"; });
  }
}

// AC8
void bundle_degree(const Options&, Tally& t) {
  using namespace twistor;
  const std::vector<std::pair<LineFamily, int>> cases{
      {LineFamily::PauliPlus, 1}, {LineFamily::PauliMinus, -1}, {LineFamily::Constant, 0}};
  for (const auto& [family, want] : cases) {
    const auto r = clutching_degree(family);
    t.check(r.degree == want && r.residual < 1e-6, [&] {
      return "family degree " + std::to_string(r.degree) + " (want " + std::to_string(want) +
             "), residual " + std::to_string(r.residual);
    });
  }
}

// AC9
void hodge_round_trip(const Options& o, Tally& t) {
  using namespace hodge;
  auto rng = criterion_rng(o, 9);
  const int wanted = o.quick ? 50 : 200;
  std::vector<std::pair<std::size_t, int>> shapes;
  for (std::size_t n = 1; n <= 6; ++n)
    for (int w = -4; w <= 4; ++w)
      if (w % 2 == 0 || n % 2 == 0) shapes.emplace_back(n, w);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  int generated = 0;
  while (generated < wanted) {
    const auto [n, w] = shapes[pick(rng)];
    const auto h = random_pure(n, w, rng);
    t.check(h.has_value(), [&, n = n, w = w] { return "no pure structure drawn for n = " + std::to_string(n) + ", w = " + std::to_string(w); });
    if (!h) continue;
    ++generated;
    const auto shape = [&, n = n, w = w] { return "n = " + std::to_string(n) + ", w = " + std::to_string(w); };
    t.check(validate_pure(*h).valid, [&] { return "impure structure, " + shape(); });
    const auto numbers = hodge_numbers(*h);
    const auto type = to_twistor(*h);
    const Rational slope = Rational(w) / 2;
    const std::size_t expected_rank = (w % 2 == 0) ? 1 : 2;
    std::size_t count = 0;
    bool slopes_ok = true;
    for (const auto& s : type.summands()) {
      count += s.multiplicity;
      slopes_ok = slopes_ok && s.slope == slope && summand_rank(s.slope) == expected_rank;
    }
    t.check(slopes_ok && count == n / expected_rank && type.rank() == n,
            [&] { return "bundle type has wrong slopes or ranks, " + shape(); });
    t.check(from_equivariant(to_equivariant(*h)) == numbers, [&] { return "equivariant round trip differs, " + shape(); });
  }
  for (long d = -12; d <= 12; ++d) {
    const int parity = (d % 2 == 0) ? 1 : -1;
    t.check(descent_obstruction(d) == parity, [&] { return "descent obstruction wrong at d = " + std::to_string(d); });
  }
}

// AC10
void weil_model(const Options& o, Tally& t) {
  using namespace weil;
  using std::numbers::pi;
  for (long n : {2L, 3L, 4L, 5L, 7L}) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        const auto c = heis_commutator(heisenberg(a, 0, 0, n), heisenberg(0, b, 0, n));
        const Complex want = std::polar(1.0, 2 * pi * static_cast<double>(a * b) / static_cast<double>(n));
        const UnitaryOp m = schrodinger(c);
        const double residual = (m - want * UnitaryOp::Identity(n, n)).norm();
        t.check(c.a == 0 && c.b == 0 && residual < kTolerance, [&] {
          return "commutator scalar wrong at N = " + std::to_string(n) + ", a = " + std::to_string(a) +
                 ", b = " + std::to_string(b);
        });
      }
  }
  const auto c4 = heis_commutator(heisenberg(1, 0, 0, 4), heisenberg(0, 1, 0, 4));
  t.check(std::abs(schrodinger(c4)(0, 0) - Complex(0, 1)) < kTolerance, [] { return "N = 4 commutator is not i"; });
  const auto exact = schrodinger_exact(c4);
  t.check(exact[0][0] == Cyclotomic::zeta(4, 1), [] { return "exact N = 4 commutator is not zeta_4"; });

  for (long n : {3L, 5L, 7L}) {
    const auto r = svn_check(n, o.seed);
    t.check(r.passed, [&] { return "Stone-von Neumann check fails at N = " + std::to_string(n); });
  }

  auto rng = criterion_rng(o, 10);
  const long n = 5;
  const int triples = o.quick ? 10 : 40;
  for (int k = 0; k < triples; ++k) {
    const SL2 g = random_sl2(n, rng), h = random_sl2(n, rng), l = random_sl2(n, rng);
    const auto cgh = cocycle(g, h);
    const auto cghl = cocycle(sl2_mul(g, h), l);
    const auto cg_hl = cocycle(g, sl2_mul(h, l));
    const auto chl = cocycle(h, l);
    const double identity = std::abs(cgh.value * cghl.value - cg_hl.value * chl.value);
    t.check(std::abs(std::abs(cgh.value) - 1) < kCocycleTolerance && cgh.residual < kCocycleTolerance &&
                identity < kCocycleTolerance,
            [&] { return "cocycle identity residual " + std::to_string(identity); });
  }

  for (long p = 3; p < 50; ++p) {
    if (!is_prime(p)) continue;
    const Complex g1 = gauss_sum(p, 1);
    t.check(std::abs(std::norm(g1) - static_cast<double>(p)) < 1e-9,
            [&] { return "|g(1)|^2 != p at p = " + std::to_string(p); });
    for (long a = 1; a < p; ++a) {
      const double residual = std::abs(gauss_sum(p, a) - static_cast<double>(legendre_symbol(a, p)) * g1);
      t.check(residual < 1e-9, [&] { return "twist law fails at p = " + std::to_string(p) + ", a = " + std::to_string(a); });
    }
  }
}

// AC11
void maslov_witt(const Options& o, Tally& t) {
  using namespace weil;
  auto rng = criterion_rng(o, 11);
  std::uniform_int_distribution<int> coord(-6, 6);
  auto line = [&] {
    while (true) {
      const int a = coord(rng), b = coord(rng);
      if (a != 0 || b != 0) return LagrangianLine(a, b);
    }
  };
  const std::vector<Place> places{Place::finite(3), Place::finite(5)};
  const QuadraticForm zero = QuadraticForm::diagonal({});
  auto null_everywhere = [&](const QuadraticForm& f) {
    bool ok = witt_equivalent(f, zero);
    for (const Place& v : places) ok = ok && witt_equivalent(f, zero, v);
    return ok;
  };
  const int quadruples = o.quick ? 30 : 100;
  for (int done = 0; done < quadruples;) {
    const std::vector<LagrangianLine> l{line(), line(), line(), line()};
    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (omega(l[i], l[j]).is_zero()) distinct = false;
    if (!distinct) continue;
    ++done;
    const auto f = maslov_form(l[0], l[1], l[2]);
    for (const auto& swapped : {maslov_form(l[1], l[0], l[2]), maslov_form(l[0], l[2], l[1]), maslov_form(l[2], l[1], l[0])})
      t.check(null_everywhere(orthogonal_sum(swapped, f)), [] { return "transposition does not negate the Maslov class"; });
    const auto chain = orthogonal_sum(orthogonal_sum(f, negated(maslov_form(l[0], l[1], l[3]))),
                                      orthogonal_sum(maslov_form(l[0], l[2], l[3]), negated(maslov_form(l[1], l[2], l[3]))));
    t.check(null_everywhere(chain), [] { return "chain condition fails"; });
  }

  std::uniform_int_distribution<int> entry(-3, 3), diag(-10, 10);
  const std::vector<Place> hasse_places{Place::infinite(), Place::finite(2), Place::finite(3), Place::finite(5),
                                        Place::finite(7)};
  const int forms = o.quick ? 30 : 100;
  for (int k = 0; k < forms; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    Matrix<Rational> p = Matrix<Rational>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) p(i, j) = entry(rng);
    while (determinant(p).is_zero()) p(0, 0) += 1;
    std::vector<Rational> d;
    while (d.size() < n) {
      const int x = diag(rng);
      if (x != 0) d.emplace_back(x);
    }
    const QuadraticForm f(p.transpose() * QuadraticForm::diagonal(d).gram() * p);
    const auto fwd = diagonalize(f, PivotOrder::Forward);
    const auto rev = diagonalize(f, PivotOrder::Reverse);
    bool same = true;
    for (const Place& v : hasse_places) {
      same = same && hasse_invariant(fwd, v) == hasse_invariant(rev, v) && hasse_invariant(fwd, v) == hasse_invariant(d, v);
    }
    t.check(same, [] { return "Hasse invariant depends on the diagonalization"; });
  }
}

struct Criterion {
  std::string id;
  std::string title;
  double limit;
  std::function<void(const Options&, Tally&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"AC1", "Hilbert reciprocity", 10, hilbert_reciprocity_all},
      {"AC2", "symbol oracle agreement", 60, symbol_oracle},
      {"AC3", "quadratic reciprocity", 0, quadratic_reciprocity_all},
      {"AC4", "division, split and conic consistency", 0, division_consistency},
      {"AC5", "Galois action on conic points", 0, galois_fixed_points},
      {"AC6", "Clifford classification", 120, clifford_all},
      {"AC7", "twistor identities", 0, twistor_identities},
      {"AC8", "bundle degree", 1, bundle_degree},
      {"AC9", "Hodge round trip", 0, hodge_round_trip},
      {"AC10", "finite Weil model", 0, weil_model},
      {"AC11", "Maslov and Witt", 0, maslov_witt},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : criteria()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

Result run_criterion(const std::string& id, const Options& options) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    Result r;
    r.id = c.id;
    r.title = c.title;
    r.time_limit = c.limit;
    Tally tally(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(options, tally);
    } catch (const std::exception& e) {
      ++r.failures;
      r.details.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = r.failures == 0 && (r.time_limit == 0 || r.seconds < r.time_limit);
    if (r.failures == 0 && !r.passed) r.details.push_back("time limit exceeded");
    return r;
  }
  throw ParseError("unknown criterion: " + id);
}

std::vector<Result> run_all(const Options& options, bool parallel) {
  std::vector<Result> out;
  if (!parallel) {
    for (const auto& id : criterion_ids()) out.push_back(run_criterion(id, options));
    return out;
  }
  std::vector<std::future<Result>> jobs;
  for (const auto& id : criterion_ids())
    jobs.push_back(std::async(std::launch::async, [id, options] { return run_criterion(id, options); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string summary_line(const Result& r) {
  std::ostringstream s;
  s << std::left << std::setw(5) << r.id << (r.passed ? "PASS" : "FAIL") << "  " << std::right << std::setw(7)
    << r.checks << " checks  " << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.time_limit > 0) s << " (limit " << std::setprecision(0) << r.time_limit << " s)";
  s << "  " << r.title;
  for (const auto& d : r.details) s << "\n      " << d;
  return s.str();
}

}  // namespace twk::acceptance
