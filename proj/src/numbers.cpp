#include "twk/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace twk {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return {n, d};
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(Rational(1) / x, -e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(e));
  return {n, d};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const BigInt n = x.numerator();
  const BigInt d = x.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

// ---------------------------------------------------------------------------
// Integer helpers

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  if (n == 0) throw DomainError("prime divisors of zero");
  BigInt m = abs(n);
  std::vector<BigInt> out;
  constexpr unsigned long kTrialLimit = 10'000'000;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (BigInt(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
  }
  if (m != 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) throw ResourceError("integer too large to factor by trial division");
    out.push_back(m);
  }
  return out;
}

std::vector<long> prime_support(const Rational& x) {
  if (x.is_zero()) throw DomainError("prime support of zero");
  std::vector<long> out;
  for (const BigInt& q : prime_divisors(x.numerator() * x.denominator())) {
    if (!q.fits_slong_p()) throw ResourceError("prime divisor exceeds machine range");
    out.push_back(q.get_si());
  }
  return out;
}

long valuation(const BigInt& n, long p) {
  if (n == 0) throw ValuationOfZeroError("valuation of zero");
  BigInt rest;
  const BigInt base(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

BigInt squarefree_part(const Rational& x) {
  if (x.is_zero()) throw DomainError("square class of zero");
  const BigInt n = x.numerator() * x.denominator();
  BigInt out = n < 0 ? -1 : 1;
  for (const BigInt& q : prime_divisors(n)) {
    if (!q.fits_slong_p()) throw ResourceError("prime divisor exceeds machine range");
    if (valuation(n, q.get_si()) % 2 == 1) out *= q;
  }
  return out;
}

BigInt ipow(long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("element is not invertible");
  return r;
}

long smallest_nonresidue(long p) {
  if (p < 3 || !is_prime(p)) throw DomainError("smallest_nonresidue needs an odd prime");
  for (long u = 2;; ++u) {
    if (legendre_symbol(u, p) == -1) return u;
  }
}

// ---------------------------------------------------------------------------
// Places

Place Place::finite(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  return Place(p);
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinite();
  if (!all_digits(text) || text.size() > 17) throw ParseError("malformed place '" + std::string(text) + "'");
  const long p = std::stol(std::string(text));
  if (!is_prime(p)) throw ParseError("place '" + std::string(text) + "' is not a prime");
  return Place(p);
}

long Place::prime() const {
  if (is_infinite()) throw DomainError("the infinite place has no prime");
  return p_;
}

std::string Place::str() const { return is_infinite() ? "inf" : std::to_string(p_); }

ValuationResult padic_valuation(const Rational& x, long p) {
  if (x.is_zero()) throw ValuationOfZeroError("valuation of zero is +infinity");
  BigInt n = x.numerator();
  BigInt d = x.denominator();
  const BigInt base(p);
  const long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), base.get_mpz_t()));
  return {vn - vd, Rational(n, d)};
}

Rational padic_norm(const Rational& x, long p) {
  if (x.is_zero()) return Rational(0);
  return pow(Rational(p), -padic_valuation(x, p).valuation);
}

Rational real_norm(const Rational& x) { return abs(x); }

int legendre_symbol(const BigInt& a, long p) {
  const BigInt pp(p);
  const BigInt r = mod(a, pp);
  if (r == 0) return 0;
  BigInt e;
  mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), pp.get_mpz_t());
  return e == 1 ? 1 : -1;
}

namespace {

// n'/m' -> n'*m' is in the same square class and is an integer unit.
BigInt unit_integer(const Rational& unit) { return unit.numerator() * unit.denominator(); }

}  // namespace

bool is_square(const Rational& x, const Place& place) {
  if (x.is_zero()) throw DomainError("square test of zero");
  if (place.is_infinite()) return x.sign() > 0;
  const long p = place.prime();
  const auto [v, unit] = padic_valuation(x, p);
  if (v % 2 != 0) return false;
  const BigInt u = unit_integer(unit);
  if (p == 2) return mod(u, 8) == 1;
  return legendre_symbol(u, p) == 1;
}

Rational local_square_class(const Rational& x, const Place& place) {
  if (x.is_zero()) throw DomainError("square class of zero");
  if (place.is_infinite()) return Rational(x.sign());
  const long p = place.prime();
  const auto [v, unit] = padic_valuation(x, p);
  const long odd = ((v % 2) + 2) % 2;
  const BigInt u = unit_integer(unit);
  if (p == 2) return Rational(mod(u, 8)) * Rational(odd ? 2 : 1);
  const long unit_rep = legendre_symbol(u, p) == 1 ? 1 : smallest_nonresidue(p);
  return Rational(unit_rep * (odd ? p : 1));
}

std::vector<Rational> local_square_classes(const Place& place) {
  if (place.is_infinite()) return {1, -1};
  const long p = place.prime();
  if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
  const long u = smallest_nonresidue(p);
  return {1, u, p, u * p};
}

// ---------------------------------------------------------------------------
// Hensel

BigInt evaluate(const IntPolynomial& f, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial derivative(const IntPolynomial& f) {
  IntPolynomial out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<unsigned long>(i));
  return out;
}

BigInt hensel_lift(const IntPolynomial& f, const BigInt& r, long p, long k) {
  if (k < 1) throw DomainError("target precision must be positive");
  if (!is_prime(p)) throw DomainError("hensel_lift needs a prime");
  const BigInt target = ipow(p, static_cast<unsigned long>(k));
  const IntPolynomial df = derivative(f);
  BigInt fr = evaluate(f, r);
  if (fr == 0) return mod(r, target);
  const long vf = valuation(fr, p);
  if (vf >= k) return mod(r, target);
  const BigInt dfr = evaluate(df, r);
  if (dfr == 0) throw NoLiftError("derivative vanishes at the root");
  const long t = valuation(dfr, p);
  if (vf < 2 * t + 1) {
    throw NoLiftError("Hensel criterion fails: v(f(r)) = " + std::to_string(vf) + " < 2t+1 = " + std::to_string(2 * t + 1));
  }
  const BigInt pt = ipow(p, static_cast<unsigned long>(t));
  const BigInt modulus = ipow(p, static_cast<unsigned long>(k + t + 2));
  BigInt x = r;
  for (;;) {
    const BigInt fx = evaluate(f, x);
    if (fx == 0 || valuation(fx, p) >= k) break;
    const BigInt dfx = evaluate(df, x);
    const BigInt step = mod((fx / pt) * inverse_mod(dfx / pt, modulus), modulus);
    x = mod(x - step, modulus);
  }
  return mod(x, target);
}

// ---------------------------------------------------------------------------
// PAdic

PAdic PAdic::normalized(long p, long val, BigInt residue, long abs_prec) {
  PAdic out;
  out.p_ = p;
  const long digits = abs_prec - val;
  if (digits <= 0) {
    out.abs_prec_ = abs_prec;
    return out;
  }
  residue = mod(residue, ipow(p, static_cast<unsigned long>(digits)));
  if (residue == 0) {
    out.abs_prec_ = abs_prec;
    return out;
  }
  const long v = twk::valuation(residue, p);
  out.zero_ = false;
  out.val_ = val + v;
  out.rel_prec_ = abs_prec - out.val_;
  out.unit_ = residue / ipow(p, static_cast<unsigned long>(v));
  return out;
}

PAdic PAdic::from_rational(const Rational& x, long p, long precision) {
  if (precision < 1) throw DomainError("p-adic precision must be at least 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  if (x.is_zero()) return zero(p);
  const auto [v, unit] = padic_valuation(x, p);
  const BigInt m = ipow(p, static_cast<unsigned long>(precision));
  PAdic out;
  out.p_ = p;
  out.zero_ = false;
  out.val_ = v;
  out.rel_prec_ = precision;
  out.unit_ = mod(unit.numerator() * inverse_mod(unit.denominator(), m), m);
  return out;
}

PAdic PAdic::from_residue(const BigInt& r, long p, long abs_precision) {
  if (abs_precision < 1) throw DomainError("p-adic precision must be at least 1");
  return normalized(p, 0, r, abs_precision);
}

PAdic PAdic::zero(long p, long abs_precision) {
  PAdic out;
  out.p_ = p;
  out.abs_prec_ = abs_precision;
  return out;
}

long PAdic::valuation() const {
  if (is_exact_zero()) throw ValuationOfZeroError("valuation of zero is +infinity");
  if (zero_) throw PrecisionError("valuation of O(" + std::to_string(p_) + "^" + std::to_string(abs_prec_) + ") is unknown");
  return val_;
}

std::vector<unsigned> PAdic::digits() const {
  std::vector<unsigned> out;
  if (zero_) return out;
  BigInt u = unit_;
  for (long i = 0; i < rel_prec_; ++i) {
    out.push_back(static_cast<unsigned>(mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_))));
  }
  return out;
}

Rational PAdic::representative() const {
  if (zero_) return Rational(0);
  return Rational(unit_) * pow(Rational(p_), val_);
}

PAdic PAdic::with_precision(long n) const {
  if (zero_ || n >= rel_prec_) return *this;
  if (n < 1) throw DomainError("p-adic precision must be at least 1");
  PAdic out = *this;
  out.rel_prec_ = n;
  out.unit_ = mod(unit_, ipow(p_, static_cast<unsigned long>(n)));
  return out;
}

std::string PAdic::str() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (zero_) {
    os << "O(" << p_ << "^" << abs_prec_ << ")";
    return os.str();
  }
  os << representative().str() << " + O(" << p_ << "^" << absolute_precision() << ")";
  return os.str();
}

PAdic PAdic::operator-() const {
  if (zero_) return *this;
  PAdic out = *this;
  out.unit_ = mod(-unit_, ipow(p_, static_cast<unsigned long>(rel_prec_)));
  return out;
}

namespace {

void same_prime(const PAdic& a, const PAdic& b) {
  if (a.prime() != b.prime()) throw DomainError("p-adic operands over different primes");
}

}  // namespace

PAdic operator+(const PAdic& a, const PAdic& b) {
  same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long p = a.p_;
  const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_ && b.zero_) return PAdic::zero(p, abs_prec);
  long m = std::numeric_limits<long>::max();
  if (!a.zero_) m = std::min(m, a.val_);
  if (!b.zero_) m = std::min(m, b.val_);
  BigInt residue = 0;
  if (!a.zero_) residue += a.unit_ * ipow(p, static_cast<unsigned long>(a.val_ - m));
  if (!b.zero_) residue += b.unit_ * ipow(p, static_cast<unsigned long>(b.val_ - m));
  return PAdic::normalized(p, m, residue, abs_prec);
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
  same_prime(a, b);
  const long p = a.p_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PAdic::zero(p);
  if (a.zero_ || b.zero_) {
    const long lhs = a.zero_ ? a.abs_prec_ : a.val_;
    const long rhs = b.zero_ ? b.abs_prec_ : b.val_;
    return PAdic::zero(p, lhs + rhs);
  }
  PAdic out;
  out.p_ = p;
  out.zero_ = false;
  out.val_ = a.val_ + b.val_;
  out.rel_prec_ = std::min(a.rel_prec_, b.rel_prec_);
  out.unit_ = mod(a.unit_ * b.unit_, ipow(p, static_cast<unsigned long>(out.rel_prec_)));
  return out;
}

PAdic operator/(const PAdic& a, const PAdic& b) {
  same_prime(a, b);
  if (b.is_exact_zero()) throw DomainError("p-adic division by zero");
  if (b.zero_) throw PrecisionError("p-adic division by an element known only to be O(p^" + std::to_string(b.abs_prec_) + ")");
  const long p = a.p_;
  if (a.is_exact_zero()) return PAdic::zero(p);
  if (a.zero_) return PAdic::zero(p, a.abs_prec_ - b.val_);
  PAdic out;
  out.p_ = p;
  out.zero_ = false;
  out.val_ = a.val_ - b.val_;
  out.rel_prec_ = std::min(a.rel_prec_, b.rel_prec_);
  const BigInt m = ipow(p, static_cast<unsigned long>(out.rel_prec_));
  out.unit_ = mod(a.unit_ * inverse_mod(b.unit_, m), m);
  return out;
}

PAdic operator*(const PAdic& a, const Rational& r) {
  const long p = a.p_;
  if (r.is_zero() || a.is_exact_zero()) return PAdic::zero(p);
  const auto [v, unit] = padic_valuation(r, p);
  if (a.zero_) return PAdic::zero(p, a.abs_prec_ + v);
  PAdic out = a;
  out.val_ = a.val_ + v;
  const BigInt m = ipow(p, static_cast<unsigned long>(a.rel_prec_));
  out.unit_ = mod(a.unit_ * unit.numerator() * inverse_mod(unit.denominator(), m), m);
  return out;
}

bool operator==(const PAdic& a, const PAdic& b) { return (a - b).is_zero(); }

bool is_square(const PAdic& x) {
  if (x.is_exact_zero()) throw DomainError("square test of zero");
  const long v = x.valuation();
  if (v % 2 != 0) return false;
  if (x.prime() == 2) {
    if (x.relative_precision() < 3) throw PrecisionError("2-adic square test needs 3 digits");
    return mod(x.unit(), 8) == 1;
  }
  return legendre_symbol(x.unit(), x.prime()) == 1;
}

// ---------------------------------------------------------------------------
// Quadratic extensions

void validate_extension(const Rational& d, long p) {
  if (d.is_zero()) throw DomainError("extension discriminant must be nonzero");
  const Place place = Place::finite(p);
  if (is_square(d, place)) throw DomainError(d.str() + " is a square in Q_" + std::to_string(p));
  if (p == 2) {
    const Rational c = local_square_class(d, place);
    if (c != 7 && c != 2 && c != 14 && c != 5) {
      throw DomainError("at p = 2 only the classes of -1, 2, -2, 5 are supported");
    }
  }
}

QuadExtElement make_quad_ext(const Rational& x, const Rational& y, const Rational& d, long p, long precision) {
  validate_extension(d, p);
  return {PAdic::from_rational(x, p, precision), PAdic::from_rational(y, p, precision), d};
}

// ---------------------------------------------------------------------------
// Local zero search

namespace {

using i128 = __int128;

struct Int128Ops {
  using Int = i128;
  static Int from(const BigInt& b) {
    // Values are bounded by the caller's range check.
    const bool neg = b < 0;
    BigInt a = abs(b);
    Int out = 0;
    const std::string s = a.get_str(16);
    for (char c : s) out = out * 16 + (std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : c - 'a' + 10);
    return neg ? -out : out;
  }
  static BigInt to_big(Int v) {
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    if (v == 0) s = "0";
    while (v > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    std::reverse(s.begin(), s.end());
    BigInt out(s, 10);
    return neg ? BigInt(-out) : out;
  }
  static bool divisible(Int v, Int m) { return v % m == 0; }
  static long val(Int v, long p) {
    long out = 0;
    while (v % p == 0) {
      v /= p;
      ++out;
    }
    return out;
  }
};

struct BigOps {
  using Int = BigInt;
  static Int from(const BigInt& b) { return b; }
  static BigInt to_big(const Int& v) { return v; }
  static bool divisible(const Int& v, const Int& m) { return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t()) != 0; }
  static long val(const Int& v, long p) { return valuation(v, p); }
};

template <class Ops>
std::optional<LocalZero> search(std::span<const BigInt> coeffs_big, long p, long max_depth) {
  using Int = typename Ops::Int;
  const std::size_t n = coeffs_big.size();
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Ops::from(coeffs_big[i]);

  auto form = [&](const std::vector<Int>& v) {
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += c[i] * v[i] * v[i];
    return acc;
  };
  auto certificate = [&](const std::vector<Int>& v) -> std::optional<LocalZero> {
    const Int q = form(v);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      const Int deriv = Int(2) * c[i] * v[i];
      const long t = Ops::val(deriv, p);
      if (q == 0 || Ops::val(q, p) >= 2 * t + 1) {
        LocalZero z;
        for (const Int& x : v) z.vector.push_back(Ops::to_big(x));
        z.lift_index = i;
        z.t = t;
        return z;
      }
    }
    return std::nullopt;
  };

  for (std::size_t fixed = 0; fixed < n; ++fixed) {
    // Free coordinates take one new base-p digit per level; coordinates before
    // `fixed` start with digit 0, coordinate `fixed` is exactly 1.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (i != fixed) free.push_back(i);

    std::vector<std::vector<Int>> level;
    Int modulus = p;
    {
      std::vector<Int> v(n, 0);
      v[fixed] = 1;
      std::vector<long> digit(free.size(), 0);
      for (;;) {
        bool ok = true;
        for (std::size_t k = 0; k < free.size(); ++k) {
          if (free[k] < fixed && digit[k] != 0) ok = false;
          v[free[k]] = digit[k];
        }
        if (ok && Ops::divisible(form(v), modulus)) level.push_back(v);
        std::size_t k = 0;
        while (k < free.size() && ++digit[k] == p) digit[k++] = 0;
        if (k == free.size()) break;
      }
    }
    Int place_value = p;  // p^depth
    for (long depth = 1; !level.empty(); ++depth) {
      for (const auto& v : level) {
        if (auto z = certificate(v)) return z;
      }
      if (depth >= max_depth) break;
      const Int next_modulus = modulus * p;
      std::vector<std::vector<Int>> next;
      for (const auto& base : level) {
        std::vector<long> digit(free.size(), 0);
        std::vector<Int> v = base;
        for (;;) {
          for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = base[free[k]] + place_value * digit[k];
          if (Ops::divisible(form(v), next_modulus)) next.push_back(v);
          std::size_t k = 0;
          while (k < free.size() && ++digit[k] == p) digit[k++] = 0;
          if (k == free.size()) break;
        }
      }
      level = std::move(next);
      modulus = next_modulus;
      place_value = place_value * p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalZero> find_local_zero(std::span<const BigInt> coeffs, long p, long max_depth) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
  if (coeffs.empty()) return std::nullopt;
  BigInt bound = 0;
  for (const BigInt& c : coeffs) {
    if (c == 0) throw DomainError("local zero search needs nonzero coefficients");
    bound += abs(c);
  }
  bound *= ipow(p, static_cast<unsigned long>(2 * (max_depth + 1)));
  bound *= 4;
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) < 120) return search<Int128Ops>(coeffs, p, max_depth);
  return search<BigOps>(coeffs, p, max_depth);
}

long default_search_depth(std::span<const BigInt> coeffs, long p) {
  long v = 2 * valuation(BigInt(16), p);
  for (const BigInt& c : coeffs) v += 2 * valuation(c, p);
  return v + 3;
}

ReducedCoefficient reduce_coefficient(const Rational& c, long p) {
  if (c.is_zero()) throw DomainError("zero coefficient");
  // c = n/m = (1/m)^2 * (n m)
  BigInt integral = c.numerator() * c.denominator();
  Rational scale = Rational(1) / Rational(c.denominator());
  const long v = valuation(integral, p);
  const long half = v / 2;
  if (half > 0) {
    integral /= ipow(p, static_cast<unsigned long>(2 * half));
    scale *= pow(Rational(p), half);
  }
  return {integral, scale};
}

std::optional<std::vector<PAdic>> padic_isotropic_vector(std::span<const Rational> coeffs, long p, long precision) {
  if (precision < 1) throw PrecisionError("precision must be at least 1");
  std::vector<BigInt> reduced;
  std::vector<Rational> scales;
  for (const Rational& c : coeffs) {
    ReducedCoefficient r = reduce_coefficient(c, p);
    reduced.push_back(r.coefficient);
    scales.push_back(r.scale);
  }
  const long depth = default_search_depth(reduced, p);
  auto zero = find_local_zero(reduced, p, depth);
  if (!zero) return std::nullopt;

  const long work = precision + depth + 2;
  const std::size_t i = zero->lift_index;
  IntPolynomial f(3, BigInt(0));
  f[2] = reduced[i];
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    if (j != i) f[0] += reduced[j] * zero->vector[j] * zero->vector[j];
  }
  // A root of f modulo p^(work + t) agrees with a true root modulo p^work.
  const BigInt lifted = hensel_lift(f, zero->vector[i], p, work + zero->t);

  std::vector<PAdic> out;
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    // c_j x_j^2 = c'_j (s_j x_j)^2, so x_j = x'_j / s_j.
    PAdic reduced_coord = j == i ? PAdic::from_residue(lifted, p, work)
                                 : PAdic::from_rational(Rational(zero->vector[j]), p, work);
    out.push_back(reduced_coord * (Rational(1) / scales[j]));
  }
  return out;
}

}  // namespace twk
