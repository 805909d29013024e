#include "twk/weil.hpp"

#include <cmath>
#include <numbers>

#include "twk/errors.hpp"

namespace twk::weil {

namespace {

long mod(long x, long n) { return ((x % n) + n) % n; }

Complex psi(long t, long n) {
  const double angle = 2 * std::numbers::pi * static_cast<double>(mod(t, n)) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

void check_same(const HeisenbergElement& g, const HeisenbergElement& h) {
  if (g.modulus != h.modulus) throw DomainError("Heisenberg elements with different moduli");
}

void check_odd_prime(long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

void check_float_modulus(long n) {
  if (n > kMaxFloatModulus) throw ResourceError("modulus above " + std::to_string(kMaxFloatModulus));
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<Rational> poly_mod_monic(std::vector<Rational> a, const std::vector<BigInt>& m) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t k = a.size(); k-- > deg;) {
    const Rational lead = a[k];
    if (lead.is_zero()) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[k - deg + j] -= lead * Rational(m[j]);
  }
  a.resize(std::min(a.size(), deg));
  return a;
}

std::vector<HeisenbergElement> generators(long n) {
  return {heisenberg(1, 0, 0, n), heisenberg(0, 1, 0, n), heisenberg(0, 0, 1, n)};
}

}  // namespace

HeisenbergElement heisenberg(long a, long b, long c, long modulus) {
  if (modulus < 2) throw DomainError("Heisenberg modulus must be at least 2");
  return {mod(a, modulus), mod(b, modulus), mod(c, modulus), modulus};
}

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  check_same(g, h);
  const long n = g.modulus;
  return heisenberg(g.a + h.a, g.b + h.b, g.c + h.c + mod(g.a * h.b, n), n);
}

HeisenbergElement heis_inv(const HeisenbergElement& g) {
  return heisenberg(-g.a, -g.b, -g.c + mod(g.a * g.b, g.modulus), g.modulus);
}

HeisenbergElement heis_commutator(const HeisenbergElement& g, const HeisenbergElement& h) {
  return heis_mul(heis_mul(heis_mul(g, h), heis_inv(g)), heis_inv(h));
}

// ---------------------------------------------------------------------------

std::vector<BigInt> cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<BigInt> div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<BigInt> q(num.size() - dd, BigInt(0));
    for (std::size_t k = num.size(); k-- > dd;) {
      const BigInt lead = num[k];
      q[k - dd] = lead;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= lead * div[j];
    }
    num = q;
  }
  return num;
}

Cyclotomic::Cyclotomic(long modulus, Rational constant) : n_(modulus), c_(static_cast<std::size_t>(modulus), Rational(0)) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  c_[0] = std::move(constant);
}

Cyclotomic Cyclotomic::zeta(long modulus, long k) {
  Cyclotomic z(modulus);
  z.c_[static_cast<std::size_t>(mod(k, modulus))] = 1;
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out(n_);
  for (long k = 0; k < n_; ++k) out.c_[static_cast<std::size_t>(mod(-k, n_))] = c_[static_cast<std::size_t>(k)];
  return out;
}

Complex Cyclotomic::to_complex() const {
  Complex z = 0;
  for (long k = 0; k < n_; ++k) z += c_[static_cast<std::size_t>(k)].to_double() * psi(k, n_);
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) throw DomainError("cyclotomic moduli differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) throw DomainError("cyclotomic moduli differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) throw DomainError("cyclotomic moduli differ");
  Cyclotomic out(a.n_);
  for (long i = 0; i < a.n_; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (long j = 0; j < a.n_; ++j)
      out.c_[static_cast<std::size_t>((i + j) % a.n_)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return false;
  const auto rem = poly_mod_monic((a - b).c_, cyclotomic_polynomial(a.n_));
  return std::all_of(rem.begin(), rem.end(), [](const Rational& x) { return x.is_zero(); });
}

CycloMatrix cyclo_mul(const CycloMatrix& x, const CycloMatrix& y) {
  const std::size_t n = x.size();
  const long modulus = x.front().front().modulus();
  CycloMatrix out(n, std::vector<Cyclotomic>(y.front().size(), Cyclotomic(modulus)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < y.size(); ++k)
      for (std::size_t j = 0; j < y.front().size(); ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

// ---------------------------------------------------------------------------

UnitaryOp schrodinger(const HeisenbergElement& g) {
  const long n = g.modulus;
  check_float_modulus(n);
  UnitaryOp u = UnitaryOp::Zero(n, n);
  for (long x = 0; x < n; ++x) u(x, mod(x + g.a, n)) = psi(g.c + g.b * x, n);
  return u;
}

CycloMatrix schrodinger_exact(const HeisenbergElement& g) {
  const long n = g.modulus;
  if (n > kMaxExactModulus) throw ResourceError("exact mode supports N <= " + std::to_string(kMaxExactModulus));
  CycloMatrix u(static_cast<std::size_t>(n), std::vector<Cyclotomic>(static_cast<std::size_t>(n), Cyclotomic(n)));
  for (long x = 0; x < n; ++x)
    u[static_cast<std::size_t>(x)][static_cast<std::size_t>(mod(x + g.a, n))] = Cyclotomic::zeta(n, g.c + g.b * x);
  return u;
}

UnitaryOp momentum_model(const HeisenbergElement& g) {
  const long n = g.modulus;
  check_float_modulus(n);
  UnitaryOp u = UnitaryOp::Zero(n, n);
  for (long y = 0; y < n; ++y) u(y, mod(y - g.b, n)) = psi(g.c + g.a * y - g.a * g.b, n);
  return u;
}

UnitaryOp random_unitary(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  UnitaryOp m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  Eigen::HouseholderQR<UnitaryOp> qr(m);
  return qr.householderQ() * UnitaryOp::Identity(n, n);
}

std::size_t intertwiner_dimension(const std::vector<UnitaryOp>& a, const std::vector<UnitaryOp>& b,
                                  std::vector<UnitaryOp>* basis) {
  if (a.empty() || a.size() != b.size()) throw DomainError("intertwiner system needs matching generator lists");
  const Eigen::Index n = a.front().rows();
  const UnitaryOp id = UnitaryOp::Identity(n, n);
  Eigen::MatrixXcd system(static_cast<Eigen::Index>(a.size()) * n * n, n * n);
  for (std::size_t k = 0; k < a.size(); ++k)
    system.block(static_cast<Eigen::Index>(k) * n * n, 0, n * n, n * n) =
        kron(a[k].transpose(), id) - kron(id, b[k]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double threshold = kTolerance * std::max(1.0, sigma(0));
  std::size_t nullity = static_cast<std::size_t>(n * n - sigma.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k)
    if (sigma(k) < threshold) ++nullity;
  if (basis) {
    basis->clear();
    const auto& v = svd.matrixV();
    for (Eigen::Index k = n * n - static_cast<Eigen::Index>(nullity); k < n * n; ++k)
      basis->push_back(Eigen::Map<const UnitaryOp>(v.col(k).data(), n, n));
  }
  return nullity;
}

SvnReport svn_check(long modulus, std::uint64_t seed) {
  check_odd_prime(modulus);
  check_float_modulus(modulus);
  std::mt19937_64 rng(seed);
  const UnitaryOp v = random_unitary(modulus, rng);
  std::vector<UnitaryOp> pi, rho, conjugated;
  for (const auto& g : generators(modulus)) {
    pi.push_back(schrodinger(g));
    rho.push_back(momentum_model(g));
    conjugated.push_back(v * rho.back() * v.adjoint());
  }
  SvnReport report;
  report.modulus = modulus;
  report.schur_dimension = intertwiner_dimension(pi, pi);
  report.momentum_dimension = intertwiner_dimension(pi, rho);
  report.random_dimension = intertwiner_dimension(pi, conjugated);
  report.passed = report.schur_dimension == 1 && report.momentum_dimension == 1 && report.random_dimension == 1;
  return report;
}

// ---------------------------------------------------------------------------

SL2 sl2(long a, long b, long c, long d, long modulus) {
  if (modulus < 3 || modulus % 2 == 0) throw DomainError("SL(2) action needs an odd modulus");
  SL2 g{mod(a, modulus), mod(b, modulus), mod(c, modulus), mod(d, modulus), modulus};
  if (mod(g.a * g.d - g.b * g.c, modulus) != 1) throw DomainError("matrix does not have determinant 1");
  return g;
}

SL2 sl2_mul(const SL2& g, const SL2& h) {
  if (g.modulus != h.modulus) throw DomainError("SL(2) elements with different moduli");
  return sl2(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d, g.modulus);
}

SL2 random_sl2(long modulus, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, modulus - 1);
  while (true) {
    const long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (mod(a * e - b * c, modulus) == 1) return sl2(a, b, c, e, modulus);
  }
}

HeisenbergElement sl2_act(const SL2& g, const HeisenbergElement& h) {
  if (g.modulus != h.modulus) throw DomainError("SL(2) element and Heisenberg element have different moduli");
  const long n = g.modulus;
  const long half = (n + 1) / 2;
  const long a = h.a, b = h.b;
  long q = mod(mod(half * g.a, n) * mod(g.c * mod(a * a, n), n), n);
  q += mod(mod(g.a * g.d - 1, n) * mod(a * b, n), n);
  q += mod(mod(half * g.b, n) * mod(g.d * mod(b * b, n), n), n);
  return heisenberg(g.a * a + g.b * b, g.c * a + g.d * b, h.c + q, n);
}

UnitaryOp intertwiner(const SL2& g) {
  const long n = g.modulus;
  check_float_modulus(n);
  std::vector<UnitaryOp> a, b;
  for (const auto& x : generators(n)) {
    a.push_back(schrodinger(x));
    b.push_back(schrodinger(sl2_act(g, x)));
  }
  std::vector<UnitaryOp> basis;
  if (intertwiner_dimension(a, b, &basis) != 1) throw InternalError("intertwiner space is not one-dimensional");
  UnitaryOp u = basis.front() * (std::sqrt(static_cast<double>(n)) / basis.front().norm());
  for (Eigen::Index r = 0; r < n; ++r) {
    const Complex z = u(r, 0);
    if (std::abs(z) > 1e-6) {
      u *= std::conj(z) / std::abs(z);
      break;
    }
  }
  if ((u * u.adjoint() - UnitaryOp::Identity(n, n)).norm() > kTolerance * n)
    throw InternalError("intertwiner is not unitary");
  return u;
}

CocycleValue cocycle(const SL2& g, const SL2& h) {
  const UnitaryOp ug = intertwiner(g);
  const UnitaryOp uh = intertwiner(h);
  const UnitaryOp ugh = intertwiner(sl2_mul(g, h));
  const double n = static_cast<double>(g.modulus);
  const UnitaryOp prod = ug * uh;
  CocycleValue out;
  out.value = (prod * ugh.adjoint()).trace() / n;
  out.residual = (prod - out.value * ugh).norm() / std::sqrt(n);
  if (out.residual > kCocycleTolerance) throw InternalError("intertwiner product is not a scalar multiple");
  return out;
}

Complex gauss_sum(long p, long a) {
  check_odd_prime(p);
  if (mod(a, p) == 0) throw DomainError("Gauss sum needs a nonzero residue");
  Complex s = 0;
  for (long x = 0; x < p; ++x) s += psi(mod(a * mod(x * x, p), p), p);
  return s;
}

Cyclotomic gauss_sum_exact(long p, long a) {
  check_odd_prime(p);
  if (p > kMaxExactModulus) throw ResourceError("exact Gauss sums support p <= " + std::to_string(kMaxExactModulus));
  if (mod(a, p) == 0) throw DomainError("Gauss sum needs a nonzero residue");
  Cyclotomic s(p);
  for (long x = 0; x < p; ++x) s += Cyclotomic::zeta(p, a * x * x);
  return s;
}

// ---------------------------------------------------------------------------

LagrangianLine::LagrangianLine(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x.is_zero() && y.is_zero()) throw DomainError("a line needs a nonzero spanning vector");
}

Rational omega(const LagrangianLine& l, const LagrangianLine& m) { return l.x * m.y - l.y * m.x; }

QuadraticForm maslov_form(const LagrangianLine& l1, const LagrangianLine& l2, const LagrangianLine& l3) {
  const Rational w12 = omega(l1, l2), w23 = omega(l2, l3), w31 = omega(l3, l1);
  if (w12.is_zero() || w23.is_zero() || w31.is_zero()) throw DomainError("Maslov index needs pairwise distinct lines");
  Matrix<Rational> g(3, 3);
  g(0, 1) = g(1, 0) = w12 / 2;
  g(1, 2) = g(2, 1) = w23 / 2;
  g(2, 0) = g(0, 2) = w31 / 2;
  return QuadraticForm(g);
}

MaslovIndex maslov_index(const LagrangianLine& l1, const LagrangianLine& l2, const LagrangianLine& l3) {
  QuadraticForm f = maslov_form(l1, l2, l3);
  const Signature s = signature(f);
  WittInvariants inv = witt_invariants(f);
  return {std::move(f), std::move(inv), static_cast<int>(s.positive) - static_cast<int>(s.negative)};
}

LagrangianLine transform(const LagrangianLine& l, const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d) {
  if ((a * d - b * c).is_zero()) throw DomainError("singular transformation");
  return LagrangianLine(a * l.x + b * l.y, c * l.x + d * l.y);
}

}  // namespace twk::weil
