#include "twk/hodge.hpp"

#include <algorithm>

#include "twk/errors.hpp"

namespace twk::hodge {

namespace {

using G = GaussianRational;

Subspace conj(const Subspace& s) {
  Subspace out(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) out(r, c) = s(r, c).conj();
  return out;
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  return a.rows() + b.rows() - rank(stack_rows(a, b));
}

// Range of p outside of which F^p and conj(F^(w+1-p)) are V and 0.
std::pair<int, int> index_window(const PureHodgeStructure& h) {
  const int w = h.weight();
  return {std::min(h.first_index(), w + 1 - h.last_index()) - 1, std::max(h.last_index(), w + 1 - h.first_index()) + 1};
}

Rational half_of(int w) { return Rational(w) / 2; }

G parse_coordinate(const nlohmann::json& j) {
  if (j.is_number_integer()) return G(j.get<long>());
  if (j.is_string()) return G::parse(j.get<std::string>());
  throw ParseError("filtration coordinates must be integers or strings");
}

bool is_half_integer(const Rational& x) { return (2 * x).denominator() == 1; }

}  // namespace

PureHodgeStructure::PureHodgeStructure(std::size_t n, int w, int first_index, std::vector<Subspace> steps)
    : n_(n), w_(w), first_(first_index), steps_(std::move(steps)) {
  if (n_ == 0) throw DomainError("Hodge structure on the zero space");
  for (const Subspace& s : steps_) {
    if (s.cols() != n_) throw DomainError("filtration basis has the wrong width");
    if (rank(s) != s.rows()) throw DomainError("filtration basis is not linearly independent");
  }
  for (std::size_t k = 0; k + 1 < steps_.size(); ++k)
    if (rank(stack_rows(steps_[k], steps_[k + 1])) != steps_[k].rows())
      throw DomainError("filtration is not nested: F^" + std::to_string(first_ + static_cast<int>(k) + 1) +
                        " is not contained in F^" + std::to_string(first_ + static_cast<int>(k)));
}

Subspace PureHodgeStructure::filtration(int p) const {
  if (p < first_) return Subspace::identity(n_);
  if (p > last_index()) return Subspace(0, n_);
  return steps_[static_cast<std::size_t>(p - first_)];
}

std::size_t PureHodgeStructure::filtration_dim(int p) const {
  if (p < first_) return n_;
  if (p > last_index()) return 0;
  return steps_[static_cast<std::size_t>(p - first_)].rows();
}

PureHodgeStructure PureHodgeStructure::from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const int w = j.at("w").get<int>();
    std::map<int, Subspace> by_index;
    for (const auto& step : j.at("filtration")) {
      const int p = step.at("p").get<int>();
      const auto& rows = step.at("basis");
      Subspace s(rows.size(), n);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n) throw ParseError("basis vector of F^" + std::to_string(p) + " has the wrong length");
        for (std::size_t c = 0; c < n; ++c) s(r, c) = parse_coordinate(rows[r][c]);
      }
      if (!by_index.emplace(p, std::move(s)).second) throw ParseError("F^" + std::to_string(p) + " given twice");
    }
    if (by_index.empty()) throw ParseError("filtration must list at least one step");
    const int first = by_index.begin()->first;
    std::vector<Subspace> steps;
    for (const auto& [p, s] : by_index) {
      if (p != first + static_cast<int>(steps.size())) throw ParseError("filtration indices must be consecutive");
      steps.push_back(s);
    }
    return PureHodgeStructure(n, w, first, std::move(steps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Hodge structure JSON: ") + e.what());
  }
}

nlohmann::json PureHodgeStructure::to_json() const {
  nlohmann::json filt = nlohmann::json::array();
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t r = 0; r < steps_[k].rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < n_; ++c) row.push_back(steps_[k](r, c).str());
      basis.push_back(row);
    }
    filt.push_back({{"p", first_ + static_cast<int>(k)}, {"basis", basis}});
  }
  // An empty step list still records where F^p drops from V to 0.
  if (steps_.empty()) filt.push_back({{"p", first_}, {"basis", nlohmann::json::array()}});
  return {{"n", n_}, {"w", w_}, {"filtration", filt}};
}

PurityReport validate_pure(const PureHodgeStructure& h) {
  const auto [lo, hi] = index_window(h);
  for (int p = lo; p <= hi; ++p) {
    const Subspace a = h.filtration(p);
    const Subspace b = conj(h.filtration(h.weight() + 1 - p));
    if (a.rows() + b.rows() != h.dim() || rank(stack_rows(a, b)) != h.dim()) return {false, p};
  }
  return {};
}

std::vector<HodgeNumber> hodge_numbers(const PureHodgeStructure& h) {
  if (const auto report = validate_pure(h); !report.valid)
    throw DomainError("Hodge structure is not pure at p = " + std::to_string(*report.failing_p));
  const auto [lo, hi] = index_window(h);
  std::vector<HodgeNumber> out;
  for (int p = lo; p <= hi; ++p) {
    const int q = h.weight() - p;
    const std::size_t d = intersection_dim(h.filtration(p), conj(h.filtration(q)));
    if (d > 0) out.push_back({p, q, d});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t summand_rank(const Rational& slope) {
  if (!is_half_integer(slope)) throw DomainError("slope " + slope.str() + " is not a half-integer");
  return slope.denominator() == 1 ? 1 : 2;
}

BigInt summand_degree(const Summand& s) {
  const Rational d = s.slope * Rational(static_cast<long>(summand_rank(s.slope)));
  return d.numerator();
}

TwistorBundleType::TwistorBundleType(std::vector<Summand> summands) {
  std::map<Rational, std::size_t> merged;
  for (const Summand& s : summands) {
    if (s.multiplicity == 0) throw DomainError("summand multiplicity must be positive");
    summand_rank(s.slope);
    merged[s.slope] += s.multiplicity;
  }
  for (const auto& [slope, mult] : merged) summands_.push_back({slope, mult});
}

std::size_t TwistorBundleType::rank() const {
  std::size_t r = 0;
  for (const Summand& s : summands_) r += summand_rank(s.slope) * s.multiplicity;
  return r;
}

BigInt TwistorBundleType::degree() const {
  BigInt d = 0;
  for (const Summand& s : summands_) d += summand_degree(s) * BigInt(static_cast<long>(s.multiplicity));
  return d;
}

Rational TwistorBundleType::slope_total() const {
  const std::size_t r = rank();
  if (r == 0) throw DomainError("slope of the zero bundle");
  return Rational(degree()) / Rational(static_cast<long>(r));
}

TwistorBundleType TwistorBundleType::dual() const {
  std::vector<Summand> out;
  for (const Summand& s : summands_) out.push_back({-s.slope, s.multiplicity});
  return TwistorBundleType(std::move(out));
}

TwistorBundleType sum(const TwistorBundleType& a, const TwistorBundleType& b) {
  std::vector<Summand> all = a.summands_;
  all.insert(all.end(), b.summands_.begin(), b.summands_.end());
  return TwistorBundleType(std::move(all));
}

// ---------------------------------------------------------------------------

TwistorBundleType to_twistor(const PureHodgeStructure& h) {
  if (const auto report = validate_pure(h); !report.valid) throw DomainError("Hodge structure is not pure");
  const Rational slope = half_of(h.weight());
  if (h.weight() % 2 == 0) return TwistorBundleType({{slope, h.dim()}});
  if (h.dim() % 2 != 0) throw DomainError("odd weight with odd dimension");
  return TwistorBundleType({{slope, h.dim() / 2}});
}

EquivariantTwistorStructure to_equivariant(const PureHodgeStructure& h) {
  EquivariantTwistorStructure out{to_twistor(h), {}};
  const auto [lo, hi] = index_window(h);
  for (int p = hi; p >= lo; --p) {
    const std::size_t g = h.filtration_dim(p) - h.filtration_dim(p + 1);
    if (g > 0) out.weights.emplace_back(p, g);
  }
  return out;
}

std::vector<HodgeNumber> from_equivariant(const EquivariantTwistorStructure& t) {
  const auto& summands = t.type.summands();
  if (summands.size() != 1) throw DomainError("equivariant structure of a pure Hodge structure has a single slope");
  const Rational two_slope = 2 * summands.front().slope;
  const int w = static_cast<int>(two_slope.numerator().get_si());
  std::map<int, std::size_t> dims;
  std::size_t total = 0;
  for (const auto& [p, d] : t.weights) {
    if (d == 0) continue;
    dims[p] += d;
    total += d;
  }
  if (total != t.type.rank()) throw DomainError("weight-space dimensions do not add up to the rank");
  for (const auto& [p, d] : dims) {
    const auto mirror = dims.find(w - p);
    if (mirror == dims.end() || mirror->second != d) throw DomainError("weights are not symmetric under p -> w - p");
  }
  std::vector<HodgeNumber> out;
  for (const auto& [p, d] : dims) out.push_back({p, w - p, d});
  return out;
}

int descent_obstruction(long d) {
  // sigma(v) = A conj(v) with A = [[0, -1], [1, 0]], applied factorwise.
  const std::size_t k = static_cast<std::size_t>(d < 0 ? -d : d);
  using Vec = std::array<G, 2>;
  auto sigma = [](const Vec& v) { return Vec{-v[1].conj(), v[0].conj()}; };
  const std::vector<Vec> start(k, Vec{G(1), G(0)});
  std::vector<Vec> image = start;
  for (int pass = 0; pass < 2; ++pass)
    for (Vec& v : image) v = sigma(v);
  // image = c * start for a scalar c; read it off factor by factor.
  G c(1);
  for (std::size_t f = 0; f < k; ++f) {
    if (!image[f][1].is_zero()) throw InternalError("lift does not preserve the tautological line");
    c *= image[f][0] / start[f][0];
  }
  if (c == G(1)) return 1;
  if (c == G(-1)) return -1;
  throw InternalError("lift squares to a non-real scalar");
}

// ---------------------------------------------------------------------------

std::optional<PureHodgeStructure> random_candidate(std::size_t n, int w, std::mt19937_64& rng) {
  if (n == 0) throw DomainError("Hodge structure on the zero space");
  const int half = w >= 0 ? w / 2 : -((-w + 1) / 2);  // floor(w / 2)
  const int lo = half - std::uniform_int_distribution<int>(0, 2)(rng);
  const int hi = w - lo;
  std::vector<std::size_t> graded(static_cast<std::size_t>(hi - lo + 1), 0);
  std::uniform_int_distribution<std::size_t> slot(0, graded.size() - 1);
  for (std::size_t k = 0; k < n; ++k) ++graded[slot(rng)];

  std::uniform_int_distribution<int> entry(-4, 4);
  Subspace flag(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) flag(r, c) = G(Rational(entry(rng)), Rational(entry(rng)));
  if (rank(flag) != n) return std::nullopt;

  // F^p is spanned by the first sum_{p' >= p} h_p' rows.
  std::vector<Subspace> steps;
  for (int p = lo + 1; p <= hi; ++p) {
    std::size_t count = 0;
    for (int q = p; q <= hi; ++q) count += graded[static_cast<std::size_t>(q - lo)];
    Subspace s(count, n);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = flag(r, c);
    steps.push_back(std::move(s));
  }
  PureHodgeStructure h(n, w, lo + 1, std::move(steps));
  if (!validate_pure(h).valid) return std::nullopt;
  return h;
}

std::optional<PureHodgeStructure> random_pure(std::size_t n, int w, std::mt19937_64& rng, int max_attempts) {
  for (int k = 0; k < max_attempts; ++k)
    if (auto h = random_candidate(n, w, rng)) return h;
  return std::nullopt;
}

}  // namespace twk::hodge
