#pragma once

// Pure real Hodge structures as filtrations of C^n with the standard
// conjugation, and their images as classification data of bundles on the
// twistor line: slopes w/2, ranks, degrees and U(1) weight spaces.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twk/gaussian.hpp"
#include "twk/linalg.hpp"

namespace twk::hodge {

using Subspace = Matrix<GaussianRational>;  // rows span the subspace

/// F^p for p = first_index .. first_index + steps.size() - 1, given by row
/// bases; F^p = V below that range and 0 above it.
class PureHodgeStructure {
 public:
  /// DomainError for wrong widths, rank-deficient bases or a non-nested
  /// filtration. Purity is not checked here.
  PureHodgeStructure(std::size_t n, int w, int first_index, std::vector<Subspace> steps);

  std::size_t dim() const { return n_; }
  int weight() const { return w_; }
  int first_index() const { return first_; }
  int last_index() const { return first_ + static_cast<int>(steps_.size()) - 1; }
  /// Row basis of F^p for any p.
  Subspace filtration(int p) const;
  std::size_t filtration_dim(int p) const;

  /// {"n", "w", "filtration": [{"p", "basis": [[coords]]}]}, coordinates as
  /// strings "re+im*i" (integers also accepted on input).
  static PureHodgeStructure from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::size_t n_;
  int w_;
  int first_;
  std::vector<Subspace> steps_;
};

struct PurityReport {
  bool valid = true;
  std::optional<int> failing_p;
};

/// F^p + conj(F^(w+1-p)) = V as a direct sum, for every p.
PurityReport validate_pure(const PureHodgeStructure& h);

struct HodgeNumber {
  int p;
  int q;
  std::size_t h;
  friend bool operator==(const HodgeNumber&, const HodgeNumber&) = default;
};
/// Nonzero h^(p,q) = dim(F^p ∩ conj(F^q)), p + q = w, increasing p.
/// DomainError if the structure is not pure.
std::vector<HodgeNumber> hodge_numbers(const PureHodgeStructure& h);

struct Summand {
  Rational slope;
  std::size_t multiplicity = 1;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Direct sum of stable bundles on the twistor line, by slope. Integer slopes
/// have rank 1, strict half-integer slopes rank 2.
class TwistorBundleType {
 public:
  TwistorBundleType() = default;
  /// Merges equal slopes. DomainError for slopes outside (1/2)Z or zero
  /// multiplicity.
  explicit TwistorBundleType(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t rank() const;
  BigInt degree() const;
  /// degree / rank; DomainError for the zero bundle.
  Rational slope_total() const;
  TwistorBundleType dual() const;
  friend TwistorBundleType sum(const TwistorBundleType& a, const TwistorBundleType& b);
  friend bool operator==(const TwistorBundleType&, const TwistorBundleType&) = default;

 private:
  std::vector<Summand> summands_;
};

std::size_t summand_rank(const Rational& slope);
BigInt summand_degree(const Summand& s);

struct EquivariantTwistorStructure {
  TwistorBundleType type;
  std::vector<std::pair<int, std::size_t>> weights;  ///< (U(1) weight p, dimension)
};

/// n copies of O(w/2) for even w, n/2 rank-2 copies for odd w.
TwistorBundleType to_twistor(const PureHodgeStructure& h);
/// Weights (p, dim F^p - dim F^(p+1)).
EquivariantTwistorStructure to_equivariant(const PureHodgeStructure& h);
/// h^(p, w-p) from the weight spaces, w = 2 * slope. DomainError when the
/// bundle has several slopes, the dimensions disagree with the rank, or the
/// weights are not symmetric under p -> w - p.
std::vector<HodgeNumber> from_equivariant(const EquivariantTwistorStructure& t);

/// (-1)^d from applying the lifted antipodal structure twice to a pure
/// tensor in the |d|-th tensor power of C^2.
int descent_obstruction(long d);

/// Draws graded dimensions over a window of p values and a generic flag;
/// returns nullopt when the draw is not pure (callers rejection-sample).
std::optional<PureHodgeStructure> random_candidate(std::size_t n, int w, std::mt19937_64& rng);
/// Repeats random_candidate up to max_attempts times.
std::optional<PureHodgeStructure> random_pure(std::size_t n, int w, std::mt19937_64& rng,
                                              int max_attempts = 2000);

}  // namespace twk::hodge
