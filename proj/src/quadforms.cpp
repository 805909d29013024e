#include "twk/quadforms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "twk/symbols.hpp"

namespace twk {

QuadraticForm::QuadraticForm(Matrix<Rational> gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw DomainError("Gram matrix must be square");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw DomainError("Gram matrix must be symmetric");
}

QuadraticForm QuadraticForm::diagonal(std::vector<Rational> entries) {
  Matrix<Rational> g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return QuadraticForm(std::move(g));
}

bool QuadraticForm::is_degenerate() const { return determinant(gram_).is_zero(); }

Rational QuadraticForm::evaluate(std::span<const Rational> x) const {
  if (x.size() != dim()) throw DomainError("vector length does not match the form");
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) acc += gram_(i, j) * x[i] * x[j];
  return acc;
}

QuadraticForm orthogonal_sum(const QuadraticForm& f, const QuadraticForm& g) {
  const std::size_t n = f.dim(), m = g.dim();
  Matrix<Rational> out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = f.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = g.gram()(i, j);
  return QuadraticForm(std::move(out));
}

QuadraticForm negated(const QuadraticForm& f) { return QuadraticForm(Rational(-1) * f.gram()); }

QuadraticForm with_hyperbolic(const QuadraticForm& f, std::size_t count) {
  QuadraticForm out = f;
  for (std::size_t k = 0; k < count; ++k) out = orthogonal_sum(out, QuadraticForm::hyperbolic_plane());
  return out;
}

std::vector<Rational> diagonalize(const QuadraticForm& f, PivotOrder order) {
  Matrix<Rational> a = f.gram();
  const std::size_t n = f.dim();
  std::vector<Rational> out;
  // Symmetric operation: column/row j += factor * column/row i.
  auto add_multiple = [&](std::size_t j, std::size_t i, const Rational& factor) {
    for (std::size_t r = 0; r < n; ++r) a(r, j) += factor * a(r, i);
    for (std::size_t c = 0; c < n; ++c) a(j, c) += factor * a(i, c);
  };
  auto swap_indices = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> pivot;
    for (std::size_t s = 0; s < n - k; ++s) {
      const std::size_t i = order == PivotOrder::Forward ? k + s : n - 1 - s;
      if (!a(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (!pivot) {
      for (std::size_t i = k; i < n && !pivot; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a(i, j).is_zero()) continue;
          add_multiple(i, j, 1);  // a(i,i) becomes 2 a(i,j)
          pivot = i;
          break;
        }
    }
    if (!pivot) throw DomainError("degenerate quadratic form");
    swap_indices(k, *pivot);
    const Rational d = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(j, k).is_zero()) continue;
      add_multiple(j, k, -(a(j, k) / d));
    }
    out.push_back(d);
  }
  return out;
}

Signature signature(const QuadraticForm& f) {
  Signature s;
  for (const Rational& x : diagonalize(f)) (x.sign() > 0 ? s.positive : s.negative)++;
  return s;
}

BigInt discriminant(const QuadraticForm& f) {
  const Rational det = determinant(f.gram());
  if (det.is_zero()) throw DomainError("degenerate quadratic form");
  return squarefree_part(det);
}

int hasse_invariant(std::span<const Rational> diag, const Place& place) {
  int h = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) h *= hilbert_symbol(diag[i], diag[j], place);
  return h;
}

int hasse_invariant(const QuadraticForm& f, const Place& place) {
  const std::vector<Rational> d = diagonalize(f);
  return hasse_invariant(d, place);
}

namespace {

Rational product(std::span<const Rational> diag) {
  Rational d = 1;
  for (const Rational& x : diag) d *= x;
  return d;
}

}  // namespace

bool is_isotropic(std::span<const Rational> diag, const Place& place) {
  for (const Rational& x : diag)
    if (x.is_zero()) throw DomainError("degenerate quadratic form");
  const std::size_t n = diag.size();
  if (place.is_infinite()) {
    const bool pos = std::any_of(diag.begin(), diag.end(), [](const Rational& x) { return x.sign() > 0; });
    const bool neg = std::any_of(diag.begin(), diag.end(), [](const Rational& x) { return x.sign() < 0; });
    return pos && neg;
  }
  if (n <= 1) return false;
  if (n >= 5) return true;
  const Rational d = product(diag);
  if (n == 2) return is_square(-d, place);
  const int eps = hasse_invariant(diag, place);
  if (n == 3) return hilbert_symbol(-1, -d, place) == eps;
  return !is_square(d, place) || eps == hilbert_symbol(-1, -1, place);
}

bool is_isotropic(const QuadraticForm& f, const Place& place) {
  const std::vector<Rational> d = diagonalize(f);
  return is_isotropic(d, place);
}

int rank_mod_2(const QuadraticForm& f) { return static_cast<int>(f.dim() % 2); }

std::vector<Place> relevant_places(const QuadraticForm& f) {
  std::set<Place> places{Place::infinite(), Place::finite(2)};
  for (const Rational& x : diagonalize(f))
    for (long p : prime_support(x)) places.insert(Place::finite(p));
  return {places.begin(), places.end()};
}

WittInvariants witt_invariants(const QuadraticForm& f) {
  WittInvariants w;
  const std::vector<Rational> d = diagonalize(f);
  w.dimension = f.dim();
  w.rank_mod_2 = rank_mod_2(f);
  w.discriminant = f.dim() == 0 ? BigInt(1) : squarefree_part(product(d));
  for (const Rational& x : d) (x.sign() > 0 ? w.signature.positive : w.signature.negative)++;
  for (const Place& v : relevant_places(f)) w.hasse.emplace_back(v, hasse_invariant(d, v));
  return w;
}

// ---------------------------------------------------------------------------
// Witt decomposition over a completion

namespace {

Rational square_class(const Rational& x, const Place& place) { return local_square_class(x, place); }

// Dimension-m diagonal form over square-class representatives with the given
// discriminant class and Hasse invariant.
std::vector<Rational> find_form(std::size_t m, const Rational& disc, int hasse, const Place& place) {
  const std::vector<Rational> classes = local_square_classes(place);
  std::vector<Rational> entries(m);
  std::function<bool(std::size_t, Rational)> fill = [&](std::size_t k, Rational partial) -> bool {
    if (k + 1 == m) {
      entries[k] = square_class(disc / partial, place);
      return hasse_invariant(entries, place) == hasse;
    }
    for (const Rational& c : classes) {
      entries[k] = c;
      if (fill(k + 1, partial * c)) return true;
    }
    return false;
  };
  if (!fill(0, 1)) throw InternalError("no local form with the requested invariants");
  return entries;
}

// Replace an isotropic subset s (indices) by g with s = H + g.
bool try_split(std::vector<Rational>& diag, const Place& place, std::size_t size) {
  const std::size_t n = diag.size();
  if (n < size) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t k = 0; k < size; ++k) idx[k] = k;
  for (;;) {
    std::vector<Rational> sub;
    for (std::size_t k : idx) sub.push_back(diag[k]);
    if (is_isotropic(sub, place)) {
      std::vector<Rational> replacement;
      if (size == 2) {
        // s is itself hyperbolic.
      } else {
        const Rational dg = square_class(-product(sub), place);
        const int eg = hasse_invariant(sub, place) * hilbert_symbol(-1, dg, place);
        replacement = find_form(size - 2, dg, eg, place);
      }
      std::vector<Rational> rest;
      for (std::size_t k = 0, s = 0; k < n; ++k) {
        if (s < size && idx[s] == k) {
          ++s;
          continue;
        }
        rest.push_back(diag[k]);
      }
      rest.insert(rest.end(), replacement.begin(), replacement.end());
      diag = std::move(rest);
      return true;
    }
    // next combination
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == n - size + (k - 1)) --k;
    if (k == 0) return false;
    ++idx[k - 1];
    for (std::size_t r = k; r < size; ++r) idx[r] = idx[r - 1] + 1;
  }
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticForm& f, const Place& place) {
  std::vector<Rational> diag = diagonalize(f);
  std::size_t count = 0;
  if (place.is_infinite()) {
    std::vector<Rational> pos, neg;
    for (const Rational& x : diag) (x.sign() > 0 ? pos : neg).push_back(x);
    count = std::min(pos.size(), neg.size());
    std::vector<Rational> kernel(pos.begin() + static_cast<std::ptrdiff_t>(count), pos.end());
    kernel.insert(kernel.end(), neg.begin() + static_cast<std::ptrdiff_t>(count), neg.end());
    return {QuadraticForm::diagonal(kernel), count};
  }
  for (;;) {
    bool split = false;
    for (std::size_t size = 2; size <= 5 && !split; ++size) split = try_split(diag, place, size);
    if (!split) break;
    ++count;
  }
  if (diag.size() > 4 || is_isotropic(diag, place)) throw InternalError("Witt kernel is not anisotropic");
  return {QuadraticForm::diagonal(diag), count};
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

std::pair<QuadraticForm, QuadraticForm> padded(const QuadraticForm& f, const QuadraticForm& g) {
  if (f.dim() < g.dim()) return {with_hyperbolic(f, (g.dim() - f.dim()) / 2), g};
  return {f, with_hyperbolic(g, (f.dim() - g.dim()) / 2)};
}

}  // namespace

bool witt_equivalent(const QuadraticForm& f, const QuadraticForm& g) {
  if (f.dim() % 2 != g.dim() % 2) return false;
  const auto [pf, pg] = padded(f, g);
  if (pf.dim() == 0) return true;
  const std::vector<Rational> df = diagonalize(pf), dg = diagonalize(pg);
  if (squarefree_part(product(df)) != squarefree_part(product(dg))) return false;
  if (signature(pf) != signature(pg)) return false;
  std::set<Place> places;
  for (const Place& v : relevant_places(pf)) places.insert(v);
  for (const Place& v : relevant_places(pg)) places.insert(v);
  for (const Place& v : places)
    if (hasse_invariant(df, v) != hasse_invariant(dg, v)) return false;
  return true;
}

bool witt_equivalent(const QuadraticForm& f, const QuadraticForm& g, const Place& place) {
  if (f.dim() % 2 != g.dim() % 2) return false;
  const auto [pf, pg] = padded(f, g);
  if (pf.dim() == 0) return true;
  const std::vector<Rational> df = diagonalize(pf), dg = diagonalize(pg);
  if (place.is_infinite()) return signature(pf) == signature(pg);
  if (local_square_class(product(df), place) != local_square_class(product(dg), place)) return false;
  return hasse_invariant(df, place) == hasse_invariant(dg, place);
}

QuadraticForm pfister3(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("Pfister form slots must be nonzero");
  std::vector<Rational> entries;
  for (int mask = 0; mask < 8; ++mask) {
    Rational e = 1;
    if (mask & 1) e *= -a;
    if (mask & 2) e *= -b;
    if (mask & 4) e *= -c;
    entries.push_back(e);
  }
  return QuadraticForm::diagonal(entries);
}

int i2_invariant(const QuadraticForm& f, const Place& place) {
  if (f.dim() % 2 != 0) throw DomainError("I^2 invariant needs even rank");
  const long m = static_cast<long>(f.dim() / 2);
  const std::vector<Rational> d = diagonalize(f);
  const Rational signed_disc = product(d) * Rational(m % 2 == 0 ? 1 : -1);
  if (!is_square(signed_disc, place)) throw DomainError("form is not in I^2 at this place");
  const int hyperbolic = ((m * (m - 1) / 2) % 2 == 0) ? 1 : hilbert_symbol(-1, -1, place);
  return hasse_invariant(d, place) * hyperbolic;
}

}  // namespace twk
