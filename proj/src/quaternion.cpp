#include "twk/quaternion.hpp"

#include <numeric>
#include <sstream>

namespace twk {

QuatTable derive_quaternion_table() {
  static const std::array<std::string, 4> basis{"", "i", "j", "ij"};
  QuatTable table;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      std::string word = basis[static_cast<std::size_t>(s)] + basis[static_cast<std::size_t>(t)];
      QuatTableEntry e;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
          const std::string pair = word.substr(pos, 2);
          if (pair == "ji") {
            word.replace(pos, 2, "ij");
            e.sign = -e.sign;
          } else if (pair == "ii") {
            word.erase(pos, 2);
            ++e.pow_a;
          } else if (pair == "jj") {
            word.erase(pos, 2);
            ++e.pow_b;
          } else {
            continue;
          }
          changed = true;
          break;
        }
      }
      const auto it = std::find(basis.begin(), basis.end(), word);
      if (it == basis.end()) throw InternalError("quaternion word did not reduce: " + word);
      e.index = static_cast<int>(it - basis.begin());
      table[static_cast<std::size_t>(4 * s + t)] = e;
    }
  }
  return table;
}

namespace {

// 0, 1, -1, 2, -2, ..., h, -h
std::vector<long> symmetric_order(long h) {
  std::vector<long> out{0};
  for (long v = 1; v <= h; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

}  // namespace

std::optional<QuatElement<Rational>> find_zero_divisor(const QuaternionAlgebra<Rational>& alg, int bound) {
  const Rational& a = alg.a();
  const Rational& b = alg.b();
  // den(a) den(b) * norm, with integer coefficients
  const BigInt ad = a.denominator(), an = a.numerator(), bd = b.denominator(), bn = b.numerator();
  const std::array<BigInt, 4> c{ad * bd, -an * bd, -ad * bn, an * bn};
  for (long h = 1; h <= bound; ++h) {
    const std::vector<long> values = symmetric_order(h);
    for (long t : values)
      for (long x : values)
        for (long y : values)
          for (long z : values) {
            const std::array<long, 4> v{t, x, y, z};
            long top = 0, g = 0;
            for (long e : v) {
              top = std::max(top, std::abs(e));
              g = std::gcd(g, e);
            }
            if (top != h || g != 1) continue;
            const long lead = t != 0 ? t : (x != 0 ? x : (y != 0 ? y : z));
            if (lead < 0) continue;
            BigInt n = 0;
            for (std::size_t i = 0; i < 4; ++i) n += c[i] * v[i] * v[i];
            if (n == 0) return alg.element(t, x, y, z);
          }
  }
  return std::nullopt;
}

std::optional<QuatElement<RealQuadratic>> find_zero_divisor_real(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("quaternion algebra parameters must be nonzero");
  if (a.sign() < 0 && b.sign() < 0) return std::nullopt;
  const bool use_a = a.sign() > 0;
  const Rational& r = use_a ? a : b;
  // r = s^2 m with m squarefree, so sqrt(r) = s sqrt(m).
  const BigInt m = squarefree_part(r);
  const auto s = rational_sqrt(r / Rational(m));
  if (!s) throw InternalError("square class decomposition failed");
  const Rational d(m);
  const RealQuadratic root = m == 1 ? RealQuadratic(*s, 0, d) : RealQuadratic(0, *s, d);
  const RealQuadratic zero(0, 0, d), one(1, 0, d);
  const RealQuadratic qa(a, 0, d), qb(b, 0, d);
  if (use_a) return QuatElement<RealQuadratic>(qa, qb, {root, one, zero, zero});
  return QuatElement<RealQuadratic>(qa, qb, {root, zero, one, zero});
}

std::optional<QuatElement<PAdic>> find_zero_divisor_padic(const Rational& a, const Rational& b, long p,
                                                          long precision) {
  if (a.is_zero() || b.is_zero()) throw DomainError("quaternion algebra parameters must be nonzero");
  const std::vector<Rational> coeffs{1, -a, -b, a * b};
  auto v = padic_isotropic_vector(coeffs, p, precision);
  if (!v) return std::nullopt;
  return QuatElement<PAdic>(PAdic::from_rational(a, p, precision), PAdic::from_rational(b, p, precision),
                            {(*v)[0], (*v)[1], (*v)[2], (*v)[3]});
}

std::string quat_str(const QuatElement<Rational>& q) {
  static const std::array<const char*, 4> names{"", "i", "j", "k"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i].is_zero()) continue;
    Rational c = q[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = abs(c);
    }
    if (i == 0 || c != 1) os << c.str() << (i == 0 ? "" : "*");
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace twk
