#pragma once

// Exact projective geometry of CP^1, CP^3 and HP^1 over Gaussian rationals and
// rational Hamilton quaternions, the fibration CP^3 -> HP^1 and the Pauli
// eigenline bundle on S^2.
//
// Conventions: a quaternion pair is z1 + z2 j with z1, z2 in Q(i); complex
// scalars act on the left, so HP^1 is the quotient by left quaternion
// scalars [q1, q2] ~ [l q1, l q2] and GL(2,H) acts on row vectors from the
// right, (q1, q2) g.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twk/gaussian.hpp"
#include "twk/linalg.hpp"
#include "twk/quaternion.hpp"

namespace twk::twistor {

using Quat = QuatElement<Rational>;

/// t + x i + y j + z k in (-1,-1 / Q).
Quat hamilton(Rational t, Rational x = 0, Rational y = 0, Rational z = 0);
/// Accepts sums of terms like `3`, `-1/2i`, `j`, `2*k`.
Quat parse_quat(std::string_view text);
/// z1 + z2 j.
Quat from_complex_pair(const GaussianRational& z1, const GaussianRational& z2);
std::pair<GaussianRational, GaussianRational> complex_pair(const Quat& q);
Quat quat_inverse(const Quat& q);

class ProjPoint {
 public:
  /// Length 2 (CP^1) or 4 (CP^3), not all zero; DomainError otherwise.
  explicit ProjPoint(std::vector<GaussianRational> coords);
  static ProjPoint parse(std::string_view text);  // comma-separated

  const std::vector<GaussianRational>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// Scaled so the first nonzero coordinate is 1.
  ProjPoint normalized() const;
  std::string str() const;
  /// All 2x2 minors vanish.
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<GaussianRational> coords_;
};

ProjPoint rho(const ProjPoint& p);
/// [-conj z2, conj z1] and [-conj z2, conj z1, -conj z4, conj z3].
ProjPoint rho_tw(const ProjPoint& p);
bool is_fixed_rho(const ProjPoint& p);
bool is_fixed_rho_tw(const ProjPoint& p);

struct FixedPointReport {
  std::size_t samples = 0;
  std::size_t rho_fixed = 0;
  std::size_t rho_tw_fixed = 0;
};
FixedPointReport fixed_point_check(const std::vector<ProjPoint>& sample);

/// Left multiplication by j on z1 + z2 j, as a pair: (-conj z2, conj z1).
std::pair<GaussianRational, GaussianRational> jmul(const GaussianRational& z1, const GaussianRational& z2);

class QuatProjPoint {
 public:
  QuatProjPoint(Quat q1, Quat q2);
  static QuatProjPoint parse(std::string_view text);  // "q1;q2"

  const Quat& q1() const { return q_[0]; }
  const Quat& q2() const { return q_[1]; }
  /// (q2^-1 q1, 1), or (1, 0) when q2 = 0.
  QuatProjPoint normalized() const;
  std::string str() const;
  friend bool operator==(const QuatProjPoint& a, const QuatProjPoint& b);

 private:
  std::array<Quat, 2> q_;
};

/// [z1 + z2 j, z3 + z4 j].
QuatProjPoint pi(const ProjPoint& p);

/// A projective line in CP^3, stored as a rank-2 row basis (2 x 4).
class ProjLine {
 public:
  explicit ProjLine(Matrix<GaussianRational> basis);
  const Matrix<GaussianRational>& basis() const { return basis_; }
  /// p_ij = a_i b_j - a_j b_i for (ij) = 01, 02, 03, 12, 13, 23.
  std::array<GaussianRational, 6> plucker() const;
  bool contains(const ProjPoint& p) const;
  ProjPoint point(std::size_t row) const;
  friend bool operator==(const ProjLine& a, const ProjLine& b);

 private:
  Matrix<GaussianRational> basis_;
};

/// {l (q1, q2) : l in H}, spanned by (q1, q2) and (j q1, j q2).
ProjLine fiber(const QuatProjPoint& q);
/// rho_tw(L) = L. DomainError for a basis of rank below 2.
bool is_real_line(const Matrix<GaussianRational>& basis);
bool is_real_line(const ProjLine& line);

using QuatMatrix = std::array<std::array<Quat, 2>, 2>;

/// Complex 4x4 matrix M with v M = (v as quaternion pair) g, on row vectors.
Matrix<GaussianRational> complex_matrix(const QuatMatrix& g);
bool is_invertible(const QuatMatrix& g);
/// (q1, q2) g; DomainError for singular g.
QuatProjPoint gl2h_act(const QuatMatrix& g, const QuatProjPoint& x);
/// v M with M = complex_matrix(g); DomainError for singular g.
ProjPoint gl2h_act(const QuatMatrix& g, const ProjPoint& x);

using SpherePoint = std::array<Rational, 3>;

/// Inverse stereographic image (2u, 2v, 1 - u^2 - v^2) / (1 + u^2 + v^2).
SpherePoint sphere_point(const Rational& u, const Rational& v);
/// Matrix of left multiplication by x1 i + x2 j + x3 k on H = R^4 with
/// basis (1, i, j, k). DomainError unless |x| = 1 exactly.
Matrix<Rational> complex_structure(const SpherePoint& x);
/// The +1 (or -1) eigenline of x1 s1 + x2 s2 + x3 s3 in C^2.
ProjPoint pauli_eigenline(const SpherePoint& x, int sign = 1);

enum class LineFamily { PauliPlus, PauliMinus, Constant };

struct ClutchingResult {
  int degree = 0;
  double winding = 0;         ///< total argument variation / 2 pi
  double residual = 0;        ///< |winding - degree|
  double max_increment = 0;   ///< largest single argument step
  int samples = 0;
};

constexpr int kClutchingSamples = 256;

/// Degree of the line family from the winding of the equatorial transition
/// g with s_north = g s_south. PrecisionError if a trivializing section
/// vanishes, a step reaches pi/2, or the residual exceeds 1e-6.
ClutchingResult clutching_degree(LineFamily family, int samples = kClutchingSamples);

}  // namespace twk::twistor
