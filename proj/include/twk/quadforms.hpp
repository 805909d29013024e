#pragma once

// Nondegenerate quadratic forms over Q and its completions: diagonalization,
// discriminant, Hasse invariant (product over i < j of (a_i, a_j)), isotropy,
// Witt decomposition and Hasse-Minkowski equivalence.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "twk/linalg.hpp"
#include "twk/numbers.hpp"

namespace twk {

class QuadraticForm {
 public:
  /// Throws DomainError unless gram is square and symmetric.
  explicit QuadraticForm(Matrix<Rational> gram);
  static QuadraticForm diagonal(std::vector<Rational> entries);
  static QuadraticForm hyperbolic_plane() { return diagonal({1, -1}); }

  const Matrix<Rational>& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  bool is_degenerate() const;
  Rational evaluate(std::span<const Rational> x) const;

 private:
  Matrix<Rational> gram_;
};

QuadraticForm orthogonal_sum(const QuadraticForm& f, const QuadraticForm& g);
QuadraticForm negated(const QuadraticForm& f);
/// f with `count` hyperbolic planes appended.
QuadraticForm with_hyperbolic(const QuadraticForm& f, std::size_t count);

enum class PivotOrder { Forward, Reverse };

/// Congruence diagonalization. Forward pivots on the first usable diagonal
/// entry, Reverse on the last. Throws DomainError for degenerate forms.
std::vector<Rational> diagonalize(const QuadraticForm& f, PivotOrder order = PivotOrder::Forward);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const QuadraticForm& f);
/// Signed squarefree representative of det(f) in Q*/Q*^2.
BigInt discriminant(const QuadraticForm& f);
int hasse_invariant(std::span<const Rational> diag, const Place& place);
int hasse_invariant(const QuadraticForm& f, const Place& place);
bool is_isotropic(std::span<const Rational> diag, const Place& place);
bool is_isotropic(const QuadraticForm& f, const Place& place);
int rank_mod_2(const QuadraticForm& f);

/// Infinity, 2 and the primes dividing some diagonal entry.
std::vector<Place> relevant_places(const QuadraticForm& f);

struct WittInvariants {
  std::size_t dimension = 0;
  int rank_mod_2 = 0;
  BigInt discriminant = 1;
  Signature signature;
  std::vector<std::pair<Place, int>> hasse;
};
WittInvariants witt_invariants(const QuadraticForm& f);

struct WittDecomposition {
  QuadraticForm kernel;
  std::size_t hyperbolic_count = 0;
};
/// f = kernel + count * H over the completion; kernel anisotropic, dim <= 4
/// at finite places. Kernel entries are square-class representatives when a
/// replacement step was needed.
WittDecomposition witt_decompose(const QuadraticForm& f, const Place& place);

/// Equality in the Witt group of Q (Hasse-Minkowski data after padding with
/// hyperbolic planes).
bool witt_equivalent(const QuadraticForm& f, const QuadraticForm& g);
/// Equality in the Witt group of the completion.
bool witt_equivalent(const QuadraticForm& f, const QuadraticForm& g, const Place& place);

/// <1,-a> x <1,-b> x <1,-c>.
QuadraticForm pfister3(const Rational& a, const Rational& b, const Rational& c);

/// For f of even rank 2m with (-1)^m det a square at the place: the Hasse
/// invariant normalized against m hyperbolic planes, e2 = hasse * (-1,-1)^C(m,2).
/// It is additive on orthogonal sums of such forms and trivial on I^3.
int i2_invariant(const QuadraticForm& f, const Place& place);

}  // namespace twk
