#pragma once

// Generalized quaternion algebras (a,b / F): i^2 = a, j^2 = b, ij = -ji = k.

#include <array>
#include <optional>
#include <string>

#include "twk/numbers.hpp"

namespace twk {

enum class BaseField { Rationals, Reals, PAdics };

/// Product of basis elements e_s * e_t = sign * a^pow_a * b^pow_b * e_index,
/// with basis (1, i, j, k).
struct QuatTableEntry {
  int sign = 1;
  int pow_a = 0;
  int pow_b = 0;
  int index = 0;
  friend bool operator==(const QuatTableEntry&, const QuatTableEntry&) = default;
};
using QuatTable = std::array<QuatTableEntry, 16>;

/// Derives the table by rewriting words in i, j with ji -> -ij, ii -> a, jj -> b.
QuatTable derive_quaternion_table();

template <class S>
class QuatElement {
 public:
  QuatElement(S a, S b, std::array<S, 4> coeffs) : a_(std::move(a)), b_(std::move(b)), c_(std::move(coeffs)) {}

  const S& t() const { return c_[0]; }
  const S& x() const { return c_[1]; }
  const S& y() const { return c_[2]; }
  const S& z() const { return c_[3]; }
  const S& operator[](std::size_t i) const { return c_[i]; }
  const std::array<S, 4>& coeffs() const { return c_; }
  const S& a() const { return a_; }
  const S& b() const { return b_; }
  bool is_zero() const {
    for (const S& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }

 private:
  S a_, b_;
  std::array<S, 4> c_;
};

template <class S>
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(S a, S b, BaseField field) : a_(std::move(a)), b_(std::move(b)), field_(field), table_(derive_quaternion_table()) {
    if (a_.is_zero() || b_.is_zero()) throw DomainError("quaternion algebra parameters must be nonzero");
  }

  const S& a() const { return a_; }
  const S& b() const { return b_; }
  BaseField field() const { return field_; }
  const QuatTable& table() const { return table_; }

  QuatElement<S> element(S t, S x, S y, S z) const { return {a_, b_, {std::move(t), std::move(x), std::move(y), std::move(z)}}; }

 private:
  S a_, b_;
  BaseField field_;
  QuatTable table_;
};

namespace detail {

template <class S>
void check_same_algebra(const QuatElement<S>& p, const QuatElement<S>& q) {
  if (!(p.a() == q.a()) || !(p.b() == q.b())) throw DomainError("quaternions from different algebras");
}

inline const QuatTable& cached_table() {
  static const QuatTable table = derive_quaternion_table();
  return table;
}

}  // namespace detail

template <class S>
QuatElement<S> quat_mul(const QuatElement<S>& p, const QuatElement<S>& q) {
  detail::check_same_algebra(p, q);
  const QuatTable& table = detail::cached_table();
  std::array<std::optional<S>, 4> acc;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      const QuatTableEntry& e = table[static_cast<std::size_t>(4 * s + t)];
      S term = p[s] * q[t];
      for (int k = 0; k < e.pow_a; ++k) term = term * p.a();
      for (int k = 0; k < e.pow_b; ++k) term = term * p.b();
      if (e.sign < 0) term = -term;
      auto& slot = acc[static_cast<std::size_t>(e.index)];
      slot = slot ? *slot + term : term;
    }
  }
  const S zero = p[0] * Rational(0);  // exact zero of the scalar type
  return {p.a(), p.b(), {acc[0].value_or(zero), acc[1].value_or(zero), acc[2].value_or(zero), acc[3].value_or(zero)}};
}

template <class S>
QuatElement<S> quat_add(const QuatElement<S>& p, const QuatElement<S>& q) {
  detail::check_same_algebra(p, q);
  return {p.a(), p.b(), {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]}};
}

template <class S>
QuatElement<S> quat_sub(const QuatElement<S>& p, const QuatElement<S>& q) {
  detail::check_same_algebra(p, q);
  return {p.a(), p.b(), {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]}};
}

template <class S>
QuatElement<S> quat_conj(const QuatElement<S>& q) {
  return {q.a(), q.b(), {q[0], -q[1], -q[2], -q[3]}};
}

/// t^2 - a x^2 - b y^2 + ab z^2 (equals q * conj(q)).
template <class S>
S quat_norm(const QuatElement<S>& q) {
  const S& a = q.a();
  const S& b = q.b();
  return q[0] * q[0] - a * (q[1] * q[1]) - b * (q[2] * q[2]) + (a * b) * (q[3] * q[3]);
}

/// Nonzero norm-zero element of (a,b / Q) among primitive integer vectors of
/// max-norm <= bound, in increasing max-norm order.
std::optional<QuatElement<Rational>> find_zero_divisor(const QuaternionAlgebra<Rational>& alg, int bound);

/// (a,b / R): none iff a < 0 and b < 0, else sqrt(a) + i or sqrt(b) + j with
/// coefficients in Q(sqrt m).
std::optional<QuatElement<RealQuadratic>> find_zero_divisor_real(const Rational& a, const Rational& b);

/// (a,b / Q_p): a norm-zero element from the local search, lifted to the
/// given relative precision.
std::optional<QuatElement<PAdic>> find_zero_divisor_padic(const Rational& a, const Rational& b, long p,
                                                          long precision);

std::string quat_str(const QuatElement<Rational>& q);

}  // namespace twk
