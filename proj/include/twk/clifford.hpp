#pragma once

// Real Clifford algebras Cliff(r,s): e_i^2 = +1 for the first r generators,
// -1 for the remaining s, e_i e_j = -e_j e_i.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twk/numbers.hpp"

namespace twk::clifford {

constexpr int kMaxGenerators = 12;
constexpr int kMaxOracleGenerators = 8;

enum class Base { R, C, H };

/// M(m, base), or M(m, base) + M(m, base) when doubled.
struct AlgebraType {
  Base base = Base::R;
  std::size_t m = 1;
  bool doubled = false;

  std::size_t real_dimension() const;
  /// "R", "M(2,H)", "M(2,R)+M(2,R)", ...
  std::string str() const;
  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

class CliffordAlgebra {
 public:
  /// Throws ResourceError for r + s > 12, DomainError for negative input.
  static CliffordAlgebra construct(int r, int s);

  int r() const { return r_; }
  int s() const { return s_; }
  int generators() const { return r_ + s_; }
  std::size_t dimension() const { return std::size_t{1} << generators(); }

  /// e_S e_T = sign * e_(S xor T); blades are bitmasks over the generators.
  struct BladeProduct {
    int sign;
    std::uint32_t blade;
  };
  BladeProduct multiply_blades(std::uint32_t lhs, std::uint32_t rhs) const;
  /// Product of two elements given by coefficient vectors over the blades.
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  CliffordAlgebra(int r, int s) : r_(r), s_(s) {}
  int r_;
  int s_;
};

/// Fast path: recursions Cliff(r+1,s+1) = Cliff(r,s) x M(2,R),
/// Cliff(0,k+2) = Cliff(k,0) x H, Cliff(k+2,0) = Cliff(0,k) x M(2,R), seeded
/// and checked by the oracle.
AlgebraType classify(int r, int s);

/// Structure-constant classification in exact rational arithmetic (r + s <= 8):
/// center, central idempotents, and the signature of the trace form
/// Tr(L_xy) on a simple component, which is m for M(m,R) and -2k for M(k,H).
AlgebraType classify_oracle(int r, int s);

/// M(2^n, C) for r + s = 2n, doubled for r + s = 2n + 1.
AlgebraType complexify_type(int r, int s);
/// Complexification of a real type: R -> C, C -> C + C, H -> M(2, C).
AlgebraType complexify(const AlgebraType& t);

/// Super-Brauer residue (s - r) mod 8.
int sbr_class(int r, int s);

}  // namespace twk::clifford
