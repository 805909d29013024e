#include "twk/symbols.hpp"

#include <numeric>
#include <sstream>

#include "twk/quaternion.hpp"

namespace twk {

namespace {

void require_nonzero(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol arguments must be nonzero");
}

// Unit part as an integer in the same square class.
BigInt unit_of(const Rational& unit) { return unit.numerator() * unit.denominator(); }

int epsilon2(const BigInt& u) { return mod(u, 8) == 3 || mod(u, 8) == 7 ? 1 : 0; }
int omega2(const BigInt& u) { return mod(u, 8) == 3 || mod(u, 8) == 5 ? 1 : 0; }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  require_nonzero(a, b);
  if (place.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const long p = place.prime();
  const auto [alpha, ua] = padic_valuation(a, p);
  const auto [beta, ub] = padic_valuation(b, p);
  const BigInt u = unit_of(ua);
  const BigInt v = unit_of(ub);
  if (p == 2) {
    const long e = epsilon2(u) * epsilon2(v) + alpha * omega2(v) + beta * omega2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((alpha * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= legendre_symbol(u, p);
  if (alpha % 2 != 0) s *= legendre_symbol(v, p);
  return s;
}

int hilbert_symbol_oracle(const Rational& a, const Rational& b, long p) {
  require_nonzero(a, b);
  std::vector<BigInt> coeffs;
  for (const Rational& c : {-a, -b, a * b}) coeffs.push_back(reduce_coefficient(c, p).coefficient);
  return find_local_zero(coeffs, p, default_search_depth(coeffs, p)) ? 1 : -1;
}

QuaternionClass classify_quaternion(const Rational& a, const Rational& b, const Place& place) {
  return hilbert_symbol(a, b, place) == 1 ? QuaternionClass::Split : QuaternionClass::Division;
}

std::string to_string(QuaternionClass c) { return c == QuaternionClass::Split ? "split" : "division"; }

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  std::set<Place> places{Place::infinite(), Place::finite(2)};
  for (long p : prime_support(a)) places.insert(Place::finite(p));
  for (long p : prime_support(b)) places.insert(Place::finite(p));
  return {places.begin(), places.end()};
}

BrauerClass2 brauer_class(const Rational& a, const Rational& b) {
  BrauerClass2 out;
  for (const Place& v : relevant_places(a, b)) {
    if (hilbert_symbol(a, b, v) == -1) out.ramified.insert(v);
  }
  return out;
}

BrauerClass2 brauer_mul(const BrauerClass2& x, const BrauerClass2& y) {
  BrauerClass2 out;
  std::set_symmetric_difference(x.ramified.begin(), x.ramified.end(), y.ramified.begin(), y.ramified.end(),
                                std::inserter(out.ramified, out.ramified.end()));
  return out;
}

ReciprocityReport hilbert_reciprocity(const Rational& a, const Rational& b) {
  ReciprocityReport out;
  for (const Place& v : relevant_places(a, b)) {
    const int s = hilbert_symbol(a, b, v);
    out.symbols.emplace_back(v, s);
    out.product *= s;
  }
  return out;
}

QuadraticReciprocityRecord quadratic_reciprocity(long p, long q) {
  if (p == q || p < 3 || q < 3 || !is_prime(p) || !is_prime(q)) {
    throw DomainError("quadratic reciprocity needs two distinct odd primes");
  }
  QuadraticReciprocityRecord r;
  r.p = p;
  r.q = q;
  r.legendre_pq = legendre_symbol(p, q);
  r.legendre_qp = legendre_symbol(q, p);
  r.lhs = r.legendre_pq * r.legendre_qp;
  r.rhs = (((p - 1) / 2) * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
  // (p,q)_p = (q/p) and (p,q)_q = (p/q); the product formula moves them to
  // the remaining places.
  const ReciprocityReport report = hilbert_reciprocity(p, q);
  r.derived = 1;
  for (const auto& [place, s] : report.symbols) {
    if (!place.is_infinite() && (place.prime() == p || place.prime() == q)) continue;
    r.derived *= s;
  }
  r.holds = report.product == 1 && r.lhs == r.rhs && r.lhs == r.derived;
  return r;
}

// ---------------------------------------------------------------------------
// Conic points

namespace {

using i128 = __int128;

std::vector<long> symmetric_order(long h) {
  std::vector<long> out{0};
  for (long v = 1; v <= h; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

template <class S>
S quadratic_residual(const std::array<S, 3>& xyz, const Rational& a, const Rational& b) {
  return xyz[0] * xyz[0] * (-a) + xyz[1] * xyz[1] * (-b) + xyz[2] * xyz[2] * (a * b);
}

QuadExtElement embed_ext(const PAdic& x, const Rational& d) { return {x, PAdic::zero(x.prime()), d}; }

PAdic padic_or_zero(const Rational& x, long p, long precision) {
  return x.is_zero() ? PAdic::zero(p) : PAdic::from_rational(x, p, precision);
}

// Components of a p-adic coordinate are either exact zeros or known to the
// requested relative precision; inexact zeros must sit below the point's scale.
void certify_padic(const std::vector<PAdic>& comps, long precision) {
  long scale = PAdic::kExact;
  for (const PAdic& c : comps) {
    if (c.is_zero()) continue;
    scale = std::min(scale, c.valuation());
    if (c.relative_precision() < precision) throw PrecisionError("conic point coordinate lost precision");
  }
  if (scale == PAdic::kExact) throw PrecisionError("conic point vanished to the working precision");
  for (const PAdic& c : comps) {
    if (c.is_zero() && !c.is_exact_zero() && c.absolute_precision() < scale + precision) {
      throw PrecisionError("conic point coordinate known only to O(p^" + std::to_string(c.absolute_precision()) + ")");
    }
  }
}

void certify_residual(const PAdic& r, long scale, long precision) {
  if (!r.is_zero()) throw InternalError("conic residual does not vanish");
  if (!r.is_exact_zero() && r.absolute_precision() < scale + precision) {
    throw PrecisionError("conic residual certified only to O(p^" + std::to_string(r.absolute_precision()) + ")");
  }
}

long min_valuation(const std::vector<PAdic>& comps) {
  long v = PAdic::kExact;
  for (const PAdic& c : comps)
    if (!c.is_zero()) v = std::min(v, c.valuation());
  return v;
}

std::optional<ConicPoint> real_point(const Rational& a, const Rational& b, const std::optional<Rational>& ext) {
  if (ext) {
    if (ext->sign() >= 0) throw DomainError("the only quadratic extension of R is C = R(sqrt d), d < 0");
    const Rational e = -a / b;
    if (e.sign() < 0) {
      // [1, sqrt(e), 0]: -a - b e = 0.
      const BigInt m = squarefree_part(e);
      const auto s = rational_sqrt(e / Rational(m));
      if (!s) throw InternalError("square class decomposition failed");
      const Rational d(m);
      return ProjTriple<RealQuadratic>{{RealQuadratic(1, 0, d), RealQuadratic(0, *s, d), RealQuadratic(0, 0, d)}};
    }
    return real_point(a, b, std::nullopt);
  }
  if (hilbert_symbol(a, b, Place::infinite()) == -1) return std::nullopt;
  if (auto q = rational_conic_point(a, b, 8)) return ProjTriple<Rational>{*q};
  // (sqrt b, 0, 1) or (0, sqrt a, 1).
  const bool use_b = b.sign() > 0;
  const Rational& r = use_b ? b : a;
  const BigInt m = squarefree_part(r);
  const auto s = rational_sqrt(r / Rational(m));
  if (!s) throw InternalError("square class decomposition failed");
  const Rational d(m);
  const RealQuadratic root(0, *s, d), zero(0, 0, d), one(1, 0, d);
  if (use_b) return ProjTriple<RealQuadratic>{{root, zero, one}};
  return ProjTriple<RealQuadratic>{{zero, root, one}};
}

std::optional<std::array<PAdic, 3>> padic_base_point(const Rational& a, const Rational& b, long p, long precision) {
  if (auto q = rational_conic_point(a, b, 4)) {
    return std::array<PAdic, 3>{padic_or_zero((*q)[0], p, precision), padic_or_zero((*q)[1], p, precision),
                                padic_or_zero((*q)[2], p, precision)};
  }
  const std::vector<Rational> coeffs{-a, -b, a * b};
  auto v = padic_isotropic_vector(coeffs, p, precision);
  if (!v) return std::nullopt;
  return std::array<PAdic, 3>{(*v)[0], (*v)[1], (*v)[2]};
}

std::array<QuadExtElement, 3> extension_point(const Rational& a, const Rational& b, long p, const Rational& d,
                                              long work) {
  // One coordinate in sqrt(d) Q_p, the others in Q_p.
  for (std::size_t slot = 0; slot < 3; ++slot) {
    std::vector<Rational> coeffs{-a, -b, a * b};
    coeffs[slot] *= d;
    auto v = padic_isotropic_vector(coeffs, p, work);
    if (!v) continue;
    std::array<QuadExtElement, 3> out{embed_ext((*v)[0], d), embed_ext((*v)[1], d), embed_ext((*v)[2], d)};
    out[slot] = QuadExtElement(PAdic::zero(p), (*v)[slot], d);
    return out;
  }
  // General case: a zero (x,y,z,t) of a x^2 + b y^2 - ab z^2 - d t^2 gives the
  // norm-zero quaternion q = -t sqrt(d) + x i + y j + z k over Q_p(sqrt d);
  // q r conj(q) is pure of norm zero for pure r.
  const std::vector<Rational> coeffs{a, b, -(a * b), -d};
  auto v = padic_isotropic_vector(coeffs, p, work);
  if (!v) throw InternalError("quaternion algebra not split by the quadratic extension");
  const QuadExtElement qa = embed_ext(PAdic::from_rational(a, p, work), d);
  const QuadExtElement qb = embed_ext(PAdic::from_rational(b, p, work), d);
  const QuadExtElement zero = embed_ext(PAdic::zero(p), d);
  const QuadExtElement one = embed_ext(PAdic::from_rational(1, p, work), d);
  const QuatElement<QuadExtElement> q(qa, qb,
                                      {QuadExtElement(PAdic::zero(p), -(*v)[3], d), embed_ext((*v)[0], d),
                                       embed_ext((*v)[1], d), embed_ext((*v)[2], d)});
  const std::array<QuatElement<QuadExtElement>, 3> pure{QuatElement<QuadExtElement>(qa, qb, {zero, one, zero, zero}),
                                                        QuatElement<QuadExtElement>(qa, qb, {zero, zero, one, zero}),
                                                        QuatElement<QuadExtElement>(qa, qb, {zero, zero, zero, one})};
  for (const auto& r : pure) {
    const auto w = quat_mul(quat_mul(q, r), quat_conj(q));
    if (w[1].is_zero() && w[2].is_zero() && w[3].is_zero()) continue;
    return {w[1], w[2], w[3]};
  }
  throw InternalError("no pure conjugate of the zero divisor is nonzero");
}

}  // namespace

std::optional<std::array<Rational, 3>> rational_conic_point(const Rational& a, const Rational& b, int bound) {
  require_nonzero(a, b);
  // Clear denominators: L * (-a, -b, ab) is integral for L = (den a * den b)^2.
  const BigInt den = a.denominator() * b.denominator();
  const BigInt scale = den * den;
  std::array<BigInt, 3> c;
  const std::array<Rational, 3> raw{-a, -b, a * b};
  bool small = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational x = raw[i] * Rational(scale);
    c[i] = x.numerator();
    if (mpz_sizeinbase(c[i].get_mpz_t(), 2) > 50) small = false;
  }
  auto hit = [&](long x, long y, long z) {
    if (small) {
      const i128 v = static_cast<i128>(c[0].get_si()) * x * x + static_cast<i128>(c[1].get_si()) * y * y +
                     static_cast<i128>(c[2].get_si()) * z * z;
      return v == 0;
    }
    return c[0] * x * x + c[1] * y * y + c[2] * z * z == 0;
  };
  for (long h = 1; h <= bound; ++h) {
    const std::vector<long> values = symmetric_order(h);
    for (long x : values)
      for (long y : values)
        for (long z : values) {
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != h) continue;
          if (std::gcd(std::gcd(x, y), z) != 1) continue;
          const long lead = x != 0 ? x : (y != 0 ? y : z);
          if (lead < 0) continue;
          if (hit(x, y, z)) return std::array<Rational, 3>{x, y, z};
        }
  }
  return std::nullopt;
}

std::optional<ConicPoint> conic_point(const Rational& a, const Rational& b, const Place& place,
                                      const std::optional<Rational>& extension, long precision) {
  require_nonzero(a, b);
  if (place.is_infinite()) return real_point(a, b, extension);
  if (precision < 1) throw PrecisionError("precision must be at least 1");
  const long p = place.prime();
  const long work = precision + 20;

  if (!extension) {
    if (hilbert_symbol(a, b, place) == -1) return std::nullopt;
    auto pt = padic_base_point(a, b, p, work);
    if (!pt) throw InternalError("split conic without a local point");
    std::vector<PAdic> comps(pt->begin(), pt->end());
    certify_padic(comps, precision);
    certify_residual(quadratic_residual(*pt, a, b), 2 * min_valuation(comps), precision);
    return ProjTriple<PAdic>{*pt};
  }

  const Rational& d = *extension;
  validate_extension(d, p);
  std::array<QuadExtElement, 3> xyz = [&] {
    if (hilbert_symbol(a, b, place) == 1) {
      auto pt = padic_base_point(a, b, p, work);
      if (!pt) throw InternalError("split conic without a local point");
      return std::array<QuadExtElement, 3>{embed_ext((*pt)[0], d), embed_ext((*pt)[1], d), embed_ext((*pt)[2], d)};
    }
    return extension_point(a, b, p, d, work);
  }();
  std::vector<PAdic> comps;
  for (const auto& c : xyz) {
    comps.push_back(c.re());
    comps.push_back(c.im());
  }
  certify_padic(comps, precision);
  const QuadExtElement r = quadratic_residual(xyz, a, b);
  const long scale = 2 * min_valuation(comps);
  certify_residual(r.re(), scale, precision);
  certify_residual(r.im(), scale, precision);
  return ProjTriple<QuadExtElement>{xyz};
}

namespace {

template <class S>
ProjTriple<S> conj_triple(const ProjTriple<S>& t) {
  return {{t.coords[0].conj(), t.coords[1].conj(), t.coords[2].conj()}};
}

template <class S>
bool projectively_equal(const std::array<S, 3>& u, const std::array<S, 3>& v) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  return true;
}

}  // namespace

ConicPoint galois_conjugate(const ConicPoint& pt) {
  return std::visit(
      [](const auto& t) -> ConicPoint {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ProjTriple<QuadExtElement>>) {
          return conj_triple(t);
        } else if constexpr (std::is_same_v<T, ProjTriple<RealQuadratic>>) {
          // Only sqrt of a negative number is moved by complex conjugation.
          if (t.coords[0].d().sign() < 0) return conj_triple(t);
          return t;
        } else {
          return t;
        }
      },
      pt);
}

bool is_fixed(const ConicPoint& pt) {
  const ConicPoint c = galois_conjugate(pt);
  return std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        return projectively_equal(t.coords, std::get<T>(c).coords);
      },
      pt);
}

bool on_conic(const ConicPoint& pt, const Rational& a, const Rational& b) {
  return std::visit([&](const auto& t) { return quadratic_residual(t.coords, a, b).is_zero(); }, pt);
}

namespace {

std::string str_of(const Rational& x) { return x.str(); }
std::string str_of(const PAdic& x) { return x.str(); }
template <class T>
std::string str_of(const QuadExt<T>& x) {
  const std::string root = "sqrt(" + x.d().str() + ")";
  const std::string re = str_of(x.re());
  const std::string im = str_of(x.im());
  if (x.im().is_zero()) return re;
  return "(" + re + ") + (" + im + ")*" + root;
}

}  // namespace

std::string conic_point_str(const ConicPoint& pt) {
  return std::visit(
      [](const auto& t) {
        std::ostringstream os;
        os << "[" << str_of(t.coords[0]) << ", " << str_of(t.coords[1]) << ", " << str_of(t.coords[2]) << "]";
        return os.str();
      },
      pt);
}

}  // namespace twk
