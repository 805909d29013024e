#pragma once

// Hilbert symbols, quaternion classification, 2-torsion Brauer classes,
// reciprocity, and points on the conic -a x^2 - b y^2 + ab z^2 = 0.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "twk/numbers.hpp"

namespace twk {

/// Closed-form local symbol (a,b)_v in {+1, -1}. Throws DomainError on zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Brute-force symbol at a finite prime: +1 iff the local zero search finds a
/// Hensel-liftable primitive zero of -a x^2 - b y^2 + ab z^2.
int hilbert_symbol_oracle(const Rational& a, const Rational& b, long p);

enum class QuaternionClass { Split, Division };
QuaternionClass classify_quaternion(const Rational& a, const Rational& b, const Place& place);
std::string to_string(QuaternionClass c);

/// Infinity, 2 and the primes dividing numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// Element of Br(Q)[2] given by its ramified places.
struct BrauerClass2 {
  std::set<Place> ramified;
  bool is_trivial() const { return ramified.empty(); }
  friend bool operator==(const BrauerClass2&, const BrauerClass2&) = default;
};
BrauerClass2 brauer_class(const Rational& a, const Rational& b);
BrauerClass2 brauer_mul(const BrauerClass2& x, const BrauerClass2& y);

struct ReciprocityReport {
  std::vector<std::pair<Place, int>> symbols;
  int product = 1;
};
ReciprocityReport hilbert_reciprocity(const Rational& a, const Rational& b);

struct QuadraticReciprocityRecord {
  long p = 0;
  long q = 0;
  int legendre_pq = 0;  ///< (p/q)
  int legendre_qp = 0;  ///< (q/p)
  int lhs = 0;          ///< (p/q)(q/p)
  int rhs = 0;          ///< (-1)^((p-1)(q-1)/4)
  int derived = 0;      ///< product of the local symbols (p,q)_v over v not in {p, q}
  bool holds = false;
};
/// Throws DomainError unless p != q are odd primes.
QuadraticReciprocityRecord quadratic_reciprocity(long p, long q);

// ---------------------------------------------------------------------------
// Conic points

template <class S>
struct ProjTriple {
  std::array<S, 3> coords;
};

/// Rational point; real point with coordinates in Q(sqrt m) (m > 0) or a
/// complex one (m < 0); p-adic point; point over Q_p(sqrt d).
using ConicPoint =
    std::variant<ProjTriple<Rational>, ProjTriple<RealQuadratic>, ProjTriple<PAdic>, ProjTriple<QuadExtElement>>;

/// Primitive integer point of -a x^2 - b y^2 + ab z^2 = 0 with max-norm <= bound,
/// first in order of increasing height.
std::optional<std::array<Rational, 3>> rational_conic_point(const Rational& a, const Rational& b, int bound);

/// Point on the conic over the completion at `place`, or over its quadratic
/// extension by sqrt(d). Base field: nullopt iff the symbol is -1. Extension:
/// always a point. p-adic coordinates carry relative precision >= precision;
/// PrecisionError if that cannot be certified.
std::optional<ConicPoint> conic_point(const Rational& a, const Rational& b, const Place& place,
                                      const std::optional<Rational>& extension = std::nullopt,
                                      long precision = 20);

/// Coordinate-wise x + y sqrt d -> x - y sqrt d (complex conjugation at infinity).
ConicPoint galois_conjugate(const ConicPoint& pt);
/// Conjugate equals the point projectively (all 2x2 minors vanish).
bool is_fixed(const ConicPoint& pt);
/// The defining equation holds (to the carried precision for p-adic points).
bool on_conic(const ConicPoint& pt, const Rational& a, const Rational& b);
std::string conic_point_str(const ConicPoint& pt);

}  // namespace twk
