#include "twk/twistor.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "twk/errors.hpp"

namespace twk::twistor {

namespace {

using G = GaussianRational;

const Rational kMinusOne(-1);

Quat quat_times(const Quat& a, const Quat& b) { return quat_mul(a, b); }

bool minors_vanish(const std::vector<G>& a, const std::vector<G>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::vector<G> quat_row(const Quat& q1, const Quat& q2) {
  const auto [z1, z2] = complex_pair(q1);
  const auto [z3, z4] = complex_pair(q2);
  return {z1, z2, z3, z4};
}

std::vector<G> rho_tw_coords(const std::vector<G>& z) {
  std::vector<G> out(z.size());
  for (std::size_t k = 0; k + 1 < z.size(); k += 2) {
    out[k] = -z[k + 1].conj();
    out[k + 1] = z[k].conj();
  }
  return out;
}

Matrix<G> rho_tw_rows(const Matrix<G>& m) {
  Matrix<G> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = rho_tw_coords(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = row[c];
  }
  return out;
}

void check_invertible(const QuatMatrix& g) {
  if (!is_invertible(g)) throw DomainError("quaternionic matrix is singular");
}

using C = std::complex<double>;
using Section = std::array<C, 2>;

// Trivializing sections of each family over the northern (vanishing only at
// the south pole) and southern hemisphere.
Section north_section(LineFamily f, double x1, double x2, double x3) {
  switch (f) {
    case LineFamily::PauliPlus: return {C(1 + x3, 0), C(x1, x2)};
    case LineFamily::PauliMinus: return {C(x1, -x2), C(-1 - x3, 0)};
    case LineFamily::Constant: return {C(1, 0), C(0, 0)};
  }
  return {};
}

Section south_section(LineFamily f, double x1, double x2, double x3) {
  switch (f) {
    case LineFamily::PauliPlus: return {C(x1, -x2), C(1 - x3, 0)};
    case LineFamily::PauliMinus: return {C(1 - x3, 0), C(-x1, -x2)};
    case LineFamily::Constant: return {C(1, 0), C(0, 0)};
  }
  return {};
}

}  // namespace

Quat hamilton(Rational t, Rational x, Rational y, Rational z) {
  return Quat(kMinusOne, kMinusOne, {std::move(t), std::move(x), std::move(y), std::move(z)});
}

Quat parse_quat(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw ParseError("empty quaternion literal");
  std::array<Rational, 4> coeffs{0, 0, 0, 0};
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    int slot = 0;
    const char unit = term.back();
    if (unit == 'i' || unit == 'j' || unit == 'k') {
      slot = unit == 'i' ? 1 : (unit == 'j' ? 2 : 3);
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
    }
    Rational c;
    if (term.empty() || term == "+")
      c = 1;
    else if (term == "-")
      c = -1;
    else {
      try {
        c = Rational::parse(term.front() == '+' ? term.substr(1) : term);
      } catch (const ParseError&) {
        throw ParseError("malformed quaternion literal '" + std::string(text) + "'");
      }
    }
    coeffs[static_cast<std::size_t>(slot)] += c;
  }
  return hamilton(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

Quat from_complex_pair(const G& z1, const G& z2) {
  // (c + d i) j = c j + d k.
  return hamilton(z1.re(), z1.im(), z2.re(), z2.im());
}

std::pair<G, G> complex_pair(const Quat& q) { return {G(q[0], q[1]), G(q[2], q[3])}; }

Quat quat_inverse(const Quat& q) {
  const Rational n = quat_norm(q);
  if (n.is_zero()) throw DomainError("quaternion is not invertible");
  const Quat c = quat_conj(q);
  return hamilton(c[0] / n, c[1] / n, c[2] / n, c[3] / n);
}

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(std::vector<G> coords) : coords_(std::move(coords)) {
  if (coords_.size() != 2 && coords_.size() != 4) throw DomainError("projective point needs 2 or 4 coordinates");
  if (std::all_of(coords_.begin(), coords_.end(), [](const G& z) { return z.is_zero(); }))
    throw DomainError("projective point with all coordinates zero");
}

ProjPoint ProjPoint::parse(std::string_view text) {
  std::vector<G> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    coords.push_back(G::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != 2 && coords.size() != 4) throw ParseError("expected 2 or 4 comma-separated coordinates");
  if (std::all_of(coords.begin(), coords.end(), [](const G& z) { return z.is_zero(); }))
    throw DomainError("projective point with all coordinates zero");
  return ProjPoint(std::move(coords));
}

ProjPoint ProjPoint::normalized() const {
  const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const G& z) { return !z.is_zero(); });
  const G scale = *lead;
  std::vector<G> out;
  for (const G& z : coords_) out.push_back(z / scale);
  return ProjPoint(std::move(out));
}

std::string ProjPoint::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coords_.size(); ++k) out += (k ? "," : "") + coords_[k].str();
  return out + "]";
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return a.size() == b.size() && minors_vanish(a.coords_, b.coords_);
}

ProjPoint rho(const ProjPoint& p) {
  std::vector<G> out;
  for (const G& z : p.coords()) out.push_back(z.conj());
  return ProjPoint(std::move(out));
}

ProjPoint rho_tw(const ProjPoint& p) { return ProjPoint(rho_tw_coords(p.coords())); }

bool is_fixed_rho(const ProjPoint& p) { return rho(p) == p; }
bool is_fixed_rho_tw(const ProjPoint& p) { return rho_tw(p) == p; }

FixedPointReport fixed_point_check(const std::vector<ProjPoint>& sample) {
  FixedPointReport report;
  report.samples = sample.size();
  for (const ProjPoint& p : sample) {
    if (is_fixed_rho(p)) ++report.rho_fixed;
    if (is_fixed_rho_tw(p)) ++report.rho_tw_fixed;
  }
  return report;
}

std::pair<G, G> jmul(const G& z1, const G& z2) {
  return complex_pair(quat_times(hamilton(0, 0, 1, 0), from_complex_pair(z1, z2)));
}

// ---------------------------------------------------------------------------

QuatProjPoint::QuatProjPoint(Quat q1, Quat q2) : q_{std::move(q1), std::move(q2)} {
  if (q_[0].is_zero() && q_[1].is_zero()) throw DomainError("quaternionic point with both coordinates zero");
}

QuatProjPoint QuatProjPoint::parse(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'q1;q2'");
  return QuatProjPoint(parse_quat(text.substr(0, semi)), parse_quat(text.substr(semi + 1)));
}

QuatProjPoint QuatProjPoint::normalized() const {
  if (q_[1].is_zero()) return QuatProjPoint(hamilton(1), hamilton(0));
  return QuatProjPoint(quat_times(quat_inverse(q_[1]), q_[0]), hamilton(1));
}

std::string QuatProjPoint::str() const { return "[" + quat_str(q_[0]) + ";" + quat_str(q_[1]) + "]"; }

bool operator==(const QuatProjPoint& a, const QuatProjPoint& b) {
  const QuatProjPoint na = a.normalized();
  const QuatProjPoint nb = b.normalized();
  return na.q_[0].coeffs() == nb.q_[0].coeffs() && na.q_[1].coeffs() == nb.q_[1].coeffs();
}

QuatProjPoint pi(const ProjPoint& p) {
  if (p.size() != 4) throw DomainError("pi is defined on CP^3");
  const auto& z = p.coords();
  return QuatProjPoint(from_complex_pair(z[0], z[1]), from_complex_pair(z[2], z[3]));
}

// ---------------------------------------------------------------------------

ProjLine::ProjLine(Matrix<G> basis) : basis_(std::move(basis)) {
  if (basis_.rows() != 2 || basis_.cols() != 4) throw DomainError("projective line needs a 2 x 4 basis");
  if (rank(basis_) != 2) throw DomainError("projective line basis has rank below 2");
}

std::array<G, 6> ProjLine::plucker() const {
  std::array<G, 6> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) out[k++] = basis_(0, i) * basis_(1, j) - basis_(0, j) * basis_(1, i);
  return out;
}

bool ProjLine::contains(const ProjPoint& p) const {
  if (p.size() != 4) return false;
  Matrix<G> row(1, 4, p.coords());
  return rank(stack_rows(basis_, row)) == 2;
}

ProjPoint ProjLine::point(std::size_t row) const { return ProjPoint(basis_.row(row)); }

bool operator==(const ProjLine& a, const ProjLine& b) { return same_row_space(a.basis_, b.basis_); }

ProjLine fiber(const QuatProjPoint& q) {
  const Quat j = hamilton(0, 0, 1, 0);
  auto r0 = quat_row(q.q1(), q.q2());
  auto r1 = quat_row(quat_times(j, q.q1()), quat_times(j, q.q2()));
  r0.insert(r0.end(), r1.begin(), r1.end());
  return ProjLine(Matrix<G>(2, 4, std::move(r0)));
}

bool is_real_line(const Matrix<G>& basis) {
  if (basis.cols() != 4 || rank(basis) != 2) throw DomainError("real-line test needs a rank-2 basis in C^4");
  return same_row_space(basis, rho_tw_rows(basis));
}

bool is_real_line(const ProjLine& line) { return is_real_line(line.basis()); }

// ---------------------------------------------------------------------------

Matrix<G> complex_matrix(const QuatMatrix& g) {
  // Rows are the images of e1..e4, i.e. of (1,0), (j,0), (0,1), (0,j).
  const Quat one = hamilton(1), zero = hamilton(0), j = hamilton(0, 0, 1, 0);
  const std::array<std::array<Quat, 2>, 4> units{{{one, zero}, {j, zero}, {zero, one}, {zero, j}}};
  std::vector<G> data;
  for (const auto& [a, b] : units) {
    const Quat c1 = quat_add(quat_times(a, g[0][0]), quat_times(b, g[1][0]));
    const Quat c2 = quat_add(quat_times(a, g[0][1]), quat_times(b, g[1][1]));
    const auto row = quat_row(c1, c2);
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix<G>(4, 4, std::move(data));
}

bool is_invertible(const QuatMatrix& g) { return !determinant(complex_matrix(g)).is_zero(); }

QuatProjPoint gl2h_act(const QuatMatrix& g, const QuatProjPoint& x) {
  check_invertible(g);
  return QuatProjPoint(quat_add(quat_times(x.q1(), g[0][0]), quat_times(x.q2(), g[1][0])),
                       quat_add(quat_times(x.q1(), g[0][1]), quat_times(x.q2(), g[1][1])));
}

ProjPoint gl2h_act(const QuatMatrix& g, const ProjPoint& x) {
  if (x.size() != 4) throw DomainError("GL(2,H) acts on CP^3");
  check_invertible(g);
  const Matrix<G> m = complex_matrix(g);
  const Matrix<G> v(1, 4, x.coords());
  return ProjPoint((v * m).row(0));
}

// ---------------------------------------------------------------------------

SpherePoint sphere_point(const Rational& u, const Rational& v) {
  const Rational d = 1 + u * u + v * v;
  return {2 * u / d, 2 * v / d, (1 - u * u - v * v) / d};
}

Matrix<Rational> complex_structure(const SpherePoint& x) {
  if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] != 1) throw DomainError("complex structure needs a unit imaginary quaternion");
  const Quat u = hamilton(0, x[0], x[1], x[2]);
  Matrix<Rational> m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    std::array<Rational, 4> e{0, 0, 0, 0};
    e[c] = 1;
    const Quat image = quat_times(u, hamilton(e[0], e[1], e[2], e[3]));
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = image[r];
  }
  return m;
}

ProjPoint pauli_eigenline(const SpherePoint& x, int sign) {
  if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] != 1) throw DomainError("Pauli eigenline needs a unit vector");
  if (sign != 1 && sign != -1) throw DomainError("eigenvalue must be +1 or -1");
  const G w(x[0], x[1]);  // x1 + i x2
  if (sign == 1) {
    if (x[2] != -1) return ProjPoint({G(1 + x[2]), w});
    return ProjPoint({w.conj(), G(1 - x[2])});
  }
  if (x[2] != 1) return ProjPoint({G(1 - x[2]), -w});
  return ProjPoint({w.conj(), G(-1 - x[2])});
}

ClutchingResult clutching_degree(LineFamily family, int samples) {
  if (samples < 8) throw DomainError("clutching needs at least 8 samples");
  constexpr double kTolerance = 1e-6;
  constexpr double kVanish = 1e-9;
  ClutchingResult out;
  out.samples = samples;
  double total = 0;
  double previous = 0;
  for (int k = 0; k <= samples; ++k) {
    const double theta = 2 * std::numbers::pi * k / samples;
    const double x1 = std::cos(theta), x2 = std::sin(theta), x3 = 0;
    const Section n = north_section(family, x1, x2, x3);
    const Section s = south_section(family, x1, x2, x3);
    const double ss = std::norm(s[0]) + std::norm(s[1]);
    const double nn = std::norm(n[0]) + std::norm(n[1]);
    if (ss < kVanish || nn < kVanish) throw PrecisionError("trivializing section vanishes on the equator");
    if (std::abs(n[0] * s[1] - n[1] * s[0]) > kTolerance * std::sqrt(ss * nn))
      throw PrecisionError("trivializations do not span the same line");
    // s_north = g s_south.
    const C g = (std::conj(s[0]) * n[0] + std::conj(s[1]) * n[1]) / ss;
    if (std::abs(g) < kVanish) throw PrecisionError("transition function vanishes");
    const double arg = std::arg(g);
    if (k > 0) {
      double step = arg - previous;
      step = std::remainder(step, 2 * std::numbers::pi);
      out.max_increment = std::max(out.max_increment, std::abs(step));
      if (std::abs(step) >= std::numbers::pi / 2) throw PrecisionError("winding step too large; increase samples");
      total += step;
    }
    previous = arg;
  }
  out.winding = total / (2 * std::numbers::pi);
  out.degree = static_cast<int>(std::lround(out.winding));
  out.residual = std::abs(out.winding - out.degree);
  if (out.residual >= kTolerance) throw PrecisionError("winding number residual too large");
  return out;
}

}  // namespace twk::twistor
