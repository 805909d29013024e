#pragma once

// Finite Heisenberg groups over Z/N, the Schroedinger representation on
// functions on Z/N, SL(2, Z/N) intertwiners and their cocycle, Gauss sums,
// and the Maslov index of three lines in the symplectic plane.
//
// Group law (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), central character
// psi(t) = exp(2 pi i t / N), (pi(a,b,c) f)(x) = psi(c + b x) f(x + a).

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "twk/numbers.hpp"
#include "twk/quadforms.hpp"

namespace twk::weil {

using Complex = std::complex<double>;
using UnitaryOp = Eigen::MatrixXcd;

constexpr double kTolerance = 1e-9;
constexpr double kCocycleTolerance = 1e-8;
constexpr long kMaxFloatModulus = 23;
constexpr long kMaxExactModulus = 7;

struct HeisenbergElement {
  long a = 0, b = 0, c = 0;
  long modulus = 2;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// Reduces a, b, c into [0, N). DomainError for N < 2.
HeisenbergElement heisenberg(long a, long b, long c, long modulus);
HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heis_inv(const HeisenbergElement& g);
/// g h g^-1 h^-1.
HeisenbergElement heis_commutator(const HeisenbergElement& g, const HeisenbergElement& h);

/// Element of Q(zeta_N) stored in Q[x]/(x^N - 1); equality is decided
/// modulo the cyclotomic polynomial Phi_N.
class Cyclotomic {
 public:
  explicit Cyclotomic(long modulus, Rational constant = 0);
  static Cyclotomic zeta(long modulus, long k);

  long modulus() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// zeta -> zeta^-1.
  Cyclotomic conj() const;
  Complex to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  long n_;
  std::vector<Rational> c_;
};

/// Integer coefficients of Phi_N, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(long n);

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;
CycloMatrix cyclo_mul(const CycloMatrix& x, const CycloMatrix& y);

/// pi(g) as an N x N matrix acting on column vectors f = (f(0), ..., f(N-1)).
UnitaryOp schrodinger(const HeisenbergElement& g);
/// Exact version, N <= 7.
CycloMatrix schrodinger_exact(const HeisenbergElement& g);

/// Dimension of {T : T A_k = B_k T for all k}, by SVD with relative
/// threshold 1e-9; the basis of the solution space is returned when wanted.
std::size_t intertwiner_dimension(const std::vector<UnitaryOp>& a, const std::vector<UnitaryOp>& b,
                                  std::vector<UnitaryOp>* basis = nullptr);

/// Second model (rho(a,b,c) f)(y) = psi(c + a y - a b) f(y - b).
UnitaryOp momentum_model(const HeisenbergElement& g);
/// Haar-ish random unitary from a QR factorization.
UnitaryOp random_unitary(long n, std::mt19937_64& rng);

struct SvnReport {
  long modulus = 0;
  std::size_t schur_dimension = 0;     ///< commutant of pi
  std::size_t momentum_dimension = 0;  ///< intertwiners pi -> momentum model
  std::size_t random_dimension = 0;    ///< intertwiners pi -> conjugated momentum model
  bool passed = false;
};
/// N odd prime; DomainError otherwise.
SvnReport svn_check(long modulus, std::uint64_t seed = 1);

struct SL2 {
  long a = 1, b = 0, c = 0, d = 1;  ///< [[a, b], [c, d]]
  long modulus = 3;
  friend bool operator==(const SL2&, const SL2&) = default;
};
/// Reduces entries mod N. DomainError if det != 1 mod N or N is even.
SL2 sl2(long a, long b, long c, long d, long modulus);
SL2 sl2_mul(const SL2& g, const SL2& h);
SL2 random_sl2(long modulus, std::mt19937_64& rng);

/// (a', b') = g (a, b) on column vectors and c' = c + q(a, b) with
/// q = 2^-1 g11 g21 a^2 + (g11 g22 - 1) a b + 2^-1 g12 g22 b^2, the unique
/// correction making the map an automorphism. g -> sl2_act(g, .) is a
/// homomorphism, so U_g U_h is a scalar multiple of U_gh.
HeisenbergElement sl2_act(const SL2& g, const HeisenbergElement& h);

/// U with U pi(x) U^-1 = pi(sl2_act(g, x)), unitary, first nonzero entry of
/// the first column positive real. InternalError if the solution space is
/// not one-dimensional.
UnitaryOp intertwiner(const SL2& g);

struct CocycleValue {
  Complex value;
  double residual = 0;  ///< ||U_g U_h - c U_gh|| / sqrt(N)
};
/// U_g U_h = c U_gh; InternalError if the residual exceeds 1e-8.
CocycleValue cocycle(const SL2& g, const SL2& h);

/// Sum over x mod p of exp(2 pi i a x^2 / p); p odd prime, a != 0 mod p.
Complex gauss_sum(long p, long a);
/// Exact value in Q(zeta_p), p <= 7.
Cyclotomic gauss_sum_exact(long p, long a);

/// A line in the symplectic plane spanned by a nonzero rational vector.
struct LagrangianLine {
  Rational x, y;
  /// DomainError for the zero vector.
  LagrangianLine(Rational x_, Rational y_);
};
/// x1 y2 - y1 x2.
Rational omega(const LagrangianLine& l, const LagrangianLine& m);

/// sum over cyclic pairs of omega(v_i, v_j) t_i t_j, off-diagonal Gram
/// entries halved. DomainError for coincident lines.
QuadraticForm maslov_form(const LagrangianLine& l1, const LagrangianLine& l2, const LagrangianLine& l3);

struct MaslovIndex {
  QuadraticForm form;
  WittInvariants invariants;
  int signature = 0;  ///< positive - negative over R
};
MaslovIndex maslov_index(const LagrangianLine& l1, const LagrangianLine& l2, const LagrangianLine& l3);

/// Image of the line under [[a, b], [c, d]] acting on column vectors.
LagrangianLine transform(const LagrangianLine& l, const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d);

}  // namespace twk::weil
