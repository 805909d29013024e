#pragma once

// Exact scalars: rationals, places of Q, p-adic numbers with tracked
// precision, quadratic extensions, Hensel lifting and the local zero search
// used as the brute-force oracle for local solvability.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twk/errors.hpp"

namespace twk {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : q_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses `-?[0-9]+(/[0-9]+)?`.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, long e);
/// Returns s with s*s == x, if x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

// ---------------------------------------------------------------------------
// Integer helpers

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);
/// Distinct prime divisors of |n| (trial division), ascending. n != 0.
std::vector<BigInt> prime_divisors(const BigInt& n);
/// Distinct primes dividing numerator or denominator of x, ascending.
std::vector<long> prime_support(const Rational& x);
/// Signed squarefree integer in the same class of Q*/Q*^2 as x. x != 0.
BigInt squarefree_part(const Rational& x);
BigInt ipow(long base, unsigned long e);
/// v_p(n) for n != 0.
long valuation(const BigInt& n, long p);
BigInt mod(const BigInt& a, const BigInt& m);
BigInt inverse_mod(const BigInt& a, const BigInt& m);
/// Smallest positive quadratic non-residue modulo an odd prime.
long smallest_nonresidue(long p);

// ---------------------------------------------------------------------------
// Places

class Place {
 public:
  static Place infinite() { return Place(0); }
  /// Throws DomainError unless p is prime.
  static Place finite(long p);
  /// `inf` or a decimal prime.
  static Place parse(std::string_view text);

  bool is_infinite() const { return p_ == 0; }
  long prime() const;
  std::string str() const;

  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  explicit Place(long p) : p_(p) {}
  long p_ = 0;
};

struct ValuationResult {
  long valuation;
  Rational unit;  ///< x = p^valuation * unit, p divides neither part of unit
};

/// Throws ValuationOfZeroError for x == 0.
ValuationResult padic_valuation(const Rational& x, long p);
/// |x|_p = p^(-v_p(x)); 0 for x == 0.
Rational padic_norm(const Rational& x, long p);
/// |x|_inf.
Rational real_norm(const Rational& x);

/// Euler criterion: a^((p-1)/2) mod p mapped to {-1, 0, 1}.
int legendre_symbol(const BigInt& a, long p);

/// Square test in the completion at `place`. Throws DomainError for 0.
bool is_square(const Rational& x, const Place& place);

/// Canonical representative of the class of x in F_v^*/F_v^*2:
/// odd p -> {1, u, p, up}; p = 2 -> {1,3,5,7,2,6,10,14}; inf -> {1,-1}.
Rational local_square_class(const Rational& x, const Place& place);
/// All representatives listed above for the place.
std::vector<Rational> local_square_classes(const Place& place);

// ---------------------------------------------------------------------------
// Hensel lifting

/// Integer polynomial, coefficients in ascending degree.
using IntPolynomial = std::vector<BigInt>;

BigInt evaluate(const IntPolynomial& f, const BigInt& x);
IntPolynomial derivative(const IntPolynomial& f);

/// Lifts a root of f modulo p to a root modulo p^k under the general
/// criterion v_p(f(r)) >= 2t + 1 with t = v_p(f'(r)). The result r* agrees
/// with r modulo p^(t+1) and lies in [0, p^k). Throws NoLiftError otherwise.
BigInt hensel_lift(const IntPolynomial& f, const BigInt& r, long p, long k);

// ---------------------------------------------------------------------------
// p-adic numbers

/// Element of Q_p known modulo p^(valuation + precision). Zero is either
/// exact or known only up to O(p^absolute_precision).
class PAdic {
 public:
  static constexpr long kExact = 1L << 40;

  static PAdic from_rational(const Rational& x, long p, long precision);
  /// Integer residue r known modulo p^abs_precision.
  static PAdic from_residue(const BigInt& r, long p, long abs_precision);
  static PAdic zero(long p, long abs_precision = kExact);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_prec_ >= kExact; }
  /// Throws PrecisionError for an inexact zero, ValuationOfZeroError for 0.
  long valuation() const;
  long relative_precision() const { return zero_ ? 0 : rel_prec_; }
  long absolute_precision() const { return zero_ ? abs_prec_ : val_ + rel_prec_; }
  /// Unit part in [0, p^N), coprime to p.
  const BigInt& unit() const { return unit_; }
  /// Base-p digits of the unit part, least significant first.
  std::vector<unsigned> digits() const;
  /// The rational p^v * unit (0 for zero).
  Rational representative() const;
  /// Same element with relative precision lowered to n (no-op if n is larger).
  PAdic with_precision(long n) const;
  std::string str() const;

  PAdic operator-() const;
  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b);
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  /// Throws DomainError for exact 0, PrecisionError for inexact 0.
  friend PAdic operator/(const PAdic& a, const PAdic& b);
  /// Multiplication by an exactly known rational keeps the relative precision.
  friend PAdic operator*(const PAdic& a, const Rational& r);
  friend PAdic operator*(const Rational& r, const PAdic& a) { return a * r; }
  /// Equality modulo the smaller absolute precision.
  friend bool operator==(const PAdic& a, const PAdic& b);

 private:
  PAdic() = default;
  static PAdic normalized(long p, long val, BigInt residue, long abs_prec);

  long p_ = 2;
  bool zero_ = true;
  long val_ = 0;
  BigInt unit_ = 0;
  long rel_prec_ = 0;
  long abs_prec_ = kExact;  // meaningful for zero only
};

bool is_square(const PAdic& x);

// ---------------------------------------------------------------------------
// Quadratic extensions  T[sqrt(d)]

/// Element x + y*sqrt(d). For T = PAdic this is the QuadExtElement of
/// Q_p(sqrt d); for T = Rational it is an element of Q(sqrt d), used for
/// exact certificates at the infinite place.
template <class T>
class QuadExt {
 public:
  QuadExt(T x, T y, Rational d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}

  const T& re() const { return x_; }
  const T& im() const { return y_; }
  const Rational& d() const { return d_; }

  QuadExt conj() const { return {x_, -y_, d_}; }
  bool is_zero() const { return scalar_is_zero(x_) && scalar_is_zero(y_); }

  QuadExt operator-() const { return {-x_, -y_, d_}; }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return {a.x_ + b.x_, a.y_ + b.y_, a.d_};
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return {a.x_ - b.x_, a.y_ - b.y_, a.d_};
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return {a.x_ * b.x_ + (a.y_ * b.y_) * a.d_, a.x_ * b.y_ + a.y_ * b.x_, a.d_};
  }
  friend QuadExt operator*(const QuadExt& a, const Rational& r) { return {a.x_ * r, a.y_ * r, a.d_}; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  static bool scalar_is_zero(const T& t) { return t.is_zero(); }
  static void check(const QuadExt& a, const QuadExt& b) {
    if (a.d_ != b.d_) throw DomainError("quadratic extension mismatch");
  }
  T x_, y_;
  Rational d_;
};

using QuadExtElement = QuadExt<PAdic>;
using RealQuadratic = QuadExt<Rational>;

/// Validates that d is a non-square in Q_p (and, at p = 2, lies in one of the
/// classes -1, 2, -2, 5) and builds x + y*sqrt(d) at the given precision.
QuadExtElement make_quad_ext(const Rational& x, const Rational& y, const Rational& d, long p,
                             long precision);
void validate_extension(const Rational& d, long p);

// ---------------------------------------------------------------------------
// Local zero search

/// Certificate that a diagonal form sum c_i x_i^2 over Z_p has a nontrivial
/// zero: an integer vector v and a coordinate whose univariate restriction
/// satisfies the Hensel criterion.
struct LocalZero {
  std::vector<BigInt> vector;
  std::size_t lift_index = 0;
  long t = 0;  ///< v_p of the partial derivative at lift_index
};

/// Breadth-first digit search over normalized primitive vectors of
/// sum coeffs[i] x_i^2, pruned by the congruence modulo p^depth, up to
/// max_depth digits. Coefficients must be nonzero integers.
std::optional<LocalZero> find_local_zero(std::span<const BigInt> coeffs, long p, long max_depth);

/// Search depth sufficient for coefficients of valuation <= 1:
/// v_p(16 * prod c_i^2) + 3.
long default_search_depth(std::span<const BigInt> coeffs, long p);

/// Writes a rational coefficient as c = s^2 * c' with c' a nonzero integer of
/// p-adic valuation 0 or 1. Then c x^2 = c' (s x)^2.
struct ReducedCoefficient {
  BigInt coefficient;
  Rational scale;
};
ReducedCoefficient reduce_coefficient(const Rational& c, long p);

/// Full p-adic zero of sum c_i x_i^2 with rational c_i, coordinates at the
/// given relative precision (lifted coordinate Hensel-refined). nullopt when
/// the form is anisotropic over Q_p.
std::optional<std::vector<PAdic>> padic_isotropic_vector(std::span<const Rational> coeffs, long p,
                                                         long precision);

}  // namespace twk
