#include "twk/clifford.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "twk/errors.hpp"
#include "twk/linalg.hpp"
#include "twk/quadforms.hpp"

namespace twk::clifford {

namespace {

std::size_t base_dimension(Base b) {
  switch (b) {
    case Base::R: return 1;
    case Base::C: return 2;
    case Base::H: return 4;
  }
  return 1;
}

const char* base_name(Base b) {
  switch (b) {
    case Base::R: return "R";
    case Base::C: return "C";
    case Base::H: return "H";
  }
  return "?";
}

void check_signature(int r, int s, int bound) {
  if (r < 0 || s < 0) throw DomainError("Clifford signature must be non-negative");
  if (r + s > bound) throw ResourceError("Clifford algebra with " + std::to_string(r + s) + " generators exceeds bound " +
                                         std::to_string(bound));
}

std::size_t exact_sqrt(std::size_t x) {
  std::size_t m = 0;
  while ((m + 1) * (m + 1) <= x) ++m;
  if (m * m != x) throw InternalError("component dimension is not a square");
  return m;
}

// Trace-form signature of a central simple component e*A, where e is a
// central idempotent.
int trace_signature(const CliffordAlgebra& alg, const std::vector<Rational>& e) {
  const std::size_t dim = alg.dimension();
  Matrix<Rational> span(dim, dim);
  for (std::uint32_t t = 0; t < dim; ++t) {
    std::vector<Rational> blade(dim, Rational(0));
    blade[t] = 1;
    const auto row = alg.multiply(e, blade);
    for (std::size_t j = 0; j < dim; ++j) span(t, j) = row[j];
  }
  const RowEchelon<Rational> ech = rref(std::move(span));
  const std::size_t k = ech.pivots.size();

  // tau_S = Tr(L_{e_S}) = sum_T [e_S e_T]_T.
  std::vector<Rational> tau(dim, Rational(0));
  for (std::uint32_t s = 0; s < dim; ++s)
    for (std::uint32_t t = 0; t < dim; ++t) {
      const auto p = alg.multiply_blades(s, t);
      if (p.blade == t) tau[s] += p.sign;
    }

  // G(x, y) = sum_{S,T} x_S y_T sign(S,T) tau_{S xor T}.
  Matrix<Rational> xm(k, dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t t = 0; t < dim; ++t) {
      Rational acc(0);
      for (std::uint32_t s = 0; s < dim; ++s) {
        const Rational& xs = ech.reduced(i, s);
        if (xs.is_zero()) continue;
        const auto p = alg.multiply_blades(s, t);
        if (tau[p.blade].is_zero()) continue;
        acc += xs * tau[p.blade] * p.sign;
      }
      xm(i, t) = acc;
    }
  Matrix<Rational> gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc(0);
      for (std::uint32_t t = 0; t < dim; ++t) {
        const Rational& y = ech.reduced(j, t);
        if (!y.is_zero()) acc += xm(i, t) * y;
      }
      gram(i, j) = acc;
    }
  const Signature sig = signature(QuadraticForm(gram));
  if (sig.positive + sig.negative != k) throw InternalError("degenerate trace form on a simple component");
  return static_cast<int>(sig.positive) - static_cast<int>(sig.negative);
}

AlgebraType simple_type(int sigma, std::size_t dim, bool doubled) {
  AlgebraType t;
  t.doubled = doubled;
  if (sigma > 0) {
    t.base = Base::R;
    t.m = static_cast<std::size_t>(sigma);
  } else {
    t.base = Base::H;
    t.m = static_cast<std::size_t>(-sigma) / 2;
  }
  if (base_dimension(t.base) * t.m * t.m != dim) throw InternalError("trace signature inconsistent with dimension");
  return t;
}

AlgebraType tensor_m2r(AlgebraType t) {
  t.m *= 2;
  return t;
}

AlgebraType tensor_h(AlgebraType t) {
  switch (t.base) {
    case Base::R: t.base = Base::H; break;
    case Base::C: t.m *= 2; break;
    case Base::H:
      t.base = Base::R;
      t.m *= 4;
      break;
  }
  return t;
}

AlgebraType recurse(int r, int s, const std::map<std::pair<int, int>, AlgebraType>& seeds) {
  if (auto it = seeds.find({r, s}); it != seeds.end()) return it->second;
  if (r >= 1 && s >= 1) return tensor_m2r(recurse(r - 1, s - 1, seeds));
  if (r == 0) return tensor_h(recurse(s - 2, 0, seeds));
  return tensor_m2r(recurse(0, r - 2, seeds));
}

constexpr int kSeedSize = 3;
constexpr int kVerifySize = 5;

const std::map<std::pair<int, int>, AlgebraType>& seeds() {
  static const std::map<std::pair<int, int>, AlgebraType> table = [] {
    std::map<std::pair<int, int>, AlgebraType> out;
    for (int n = 0; n <= kSeedSize; ++n)
      for (int r = 0; r <= n; ++r) out[{r, n - r}] = classify_oracle(r, n - r);
    for (int n = kSeedSize + 1; n <= kVerifySize; ++n)
      for (int r = 0; r <= n; ++r)
        if (recurse(r, n - r, out) != classify_oracle(r, n - r))
          throw InternalError("Clifford recursion disagrees with the oracle");
    return out;
  }();
  return table;
}

}  // namespace

std::size_t AlgebraType::real_dimension() const { return base_dimension(base) * m * m * (doubled ? 2 : 1); }

std::string AlgebraType::str() const {
  std::ostringstream os;
  if (m == 1)
    os << base_name(base);
  else
    os << "M(" << m << "," << base_name(base) << ")";
  const std::string one = os.str();
  return doubled ? one + "+" + one : one;
}

CliffordAlgebra CliffordAlgebra::construct(int r, int s) {
  check_signature(r, s, kMaxGenerators);
  return CliffordAlgebra(r, s);
}

CliffordAlgebra::BladeProduct CliffordAlgebra::multiply_blades(std::uint32_t lhs, std::uint32_t rhs) const {
  // Moving each generator of rhs left past the larger generators of lhs.
  int swaps = 0;
  for (std::uint32_t rest = lhs >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & rhs);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const std::uint32_t negative_mask = ((std::uint32_t{1} << (r_ + s_)) - 1) & ~((std::uint32_t{1} << r_) - 1);
  if (std::popcount(lhs & rhs & negative_mask) % 2 == 1) sign = -sign;
  return {sign, lhs ^ rhs};
}

std::vector<Rational> CliffordAlgebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) throw DomainError("Clifford element has the wrong length");
  std::vector<Rational> out(dim, Rational(0));
  for (std::uint32_t s = 0; s < dim; ++s) {
    if (x[s].is_zero()) continue;
    for (std::uint32_t t = 0; t < dim; ++t) {
      if (y[t].is_zero()) continue;
      const auto p = multiply_blades(s, t);
      if (p.sign > 0)
        out[p.blade] += x[s] * y[t];
      else
        out[p.blade] -= x[s] * y[t];
    }
  }
  return out;
}

AlgebraType classify_oracle(int r, int s) {
  check_signature(r, s, kMaxOracleGenerators);
  const CliffordAlgebra alg = CliffordAlgebra::construct(r, s);
  const int n = alg.generators();
  const std::size_t dim = alg.dimension();
  if (n == 0) return {};

  // Center: z with z e_i - e_i z = 0 for every generator.
  Matrix<Rational> system(static_cast<std::size_t>(n) * dim, dim);
  for (int i = 0; i < n; ++i) {
    const std::uint32_t gen = std::uint32_t{1} << i;
    for (std::uint32_t b = 0; b < dim; ++b) {
      const auto right = alg.multiply_blades(b, gen);
      const auto left = alg.multiply_blades(gen, b);
      system(static_cast<std::size_t>(i) * dim + right.blade, b) += right.sign;
      system(static_cast<std::size_t>(i) * dim + left.blade, b) -= left.sign;
    }
  }
  const auto center = nullspace(system);
  std::vector<Rational> one(dim, Rational(0));
  one[0] = 1;

  if (center.size() == 1) return simple_type(trace_signature(alg, one), dim, false);
  if (center.size() != 2) throw InternalError("Clifford center has dimension " + std::to_string(center.size()));

  // A non-scalar central element c with c^2 = lambda + mu c.
  auto non_scalar = [](const std::vector<Rational>& v) {
    return std::any_of(v.begin() + 1, v.end(), [](const Rational& x) { return !x.is_zero(); });
  };
  std::vector<Rational> c = non_scalar(center[0]) ? center[0] : center[1];
  c[0] = 0;
  const auto sq = alg.multiply(c, c);
  std::size_t lead = 0;
  while (c[lead].is_zero()) ++lead;
  const Rational mu = sq[lead] / c[lead];
  const Rational lambda = sq[0] - mu * c[0];
  for (std::size_t j = 0; j < dim; ++j) {
    const Rational expect = (j == 0 ? lambda : Rational(0)) + mu * c[j];
    if (sq[j] != expect) throw InternalError("central element does not satisfy a quadratic relation");
  }
  const Rational disc = mu * mu + 4 * lambda;
  if (disc < 0) {
    AlgebraType t;
    t.base = Base::C;
    t.m = exact_sqrt(dim / 2);
    return t;
  }
  const auto root = rational_sqrt(disc);
  if (!root) throw InternalError("split center with irrational idempotents");
  // Roots r1, r2 of X^2 - mu X - lambda; e = (c - r2) / (r1 - r2).
  const Rational r1 = (mu + *root) / 2;
  const Rational r2 = (mu - *root) / 2;
  std::vector<Rational> e(dim);
  for (std::size_t j = 0; j < dim; ++j) e[j] = (c[j] - (j == 0 ? r2 : Rational(0))) / (r1 - r2);
  if (alg.multiply(e, e) != e) throw InternalError("central idempotent check failed");
  return simple_type(trace_signature(alg, e), dim / 2, true);
}

AlgebraType classify(int r, int s) {
  check_signature(r, s, kMaxGenerators);
  return recurse(r, s, seeds());
}

AlgebraType complexify_type(int r, int s) {
  check_signature(r, s, kMaxGenerators);
  const int n = r + s;
  AlgebraType t;
  t.base = Base::C;
  t.m = std::size_t{1} << (n / 2);
  t.doubled = (n % 2 == 1);
  return t;
}

AlgebraType complexify(const AlgebraType& t) {
  AlgebraType out = t;
  switch (t.base) {
    case Base::R: out.base = Base::C; break;
    case Base::C:
      if (t.doubled) throw DomainError("complexification of a doubled complex type is not a single type");
      out.doubled = true;
      break;
    case Base::H:
      out.base = Base::C;
      out.m *= 2;
      break;
  }
  return out;
}

int sbr_class(int r, int s) { return (((s - r) % 8) + 8) % 8; }

}  // namespace twk::clifford
