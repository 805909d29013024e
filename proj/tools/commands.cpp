#include "commands.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "twk/acceptance.hpp"
#include "twk/clifford.hpp"
#include "twk/hodge.hpp"
#include "twk/quadforms.hpp"
#include "twk/quaternion.hpp"
#include "twk/symbols.hpp"
#include "twk/twistor.hpp"
#include "twk/weil.hpp"

namespace twk::cli {
namespace {

// ---------------------------------------------------------------------------
// Literal parsing

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(Rational::parse(s));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

long parse_long(const std::string& text) {
  const Rational r = Rational::parse(text);
  if (!r.is_integer() || !r.numerator().fits_slong_p()) throw ParseError("expected an integer, got '" + text + "'");
  return r.numerator().get_si();
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_long(s));
  return out;
}

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

Json complex(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json hasse_map(const std::vector<std::pair<Place, int>>& symbols) {
  Json out = Json::object();
  for (const auto& [place, s] : symbols) out[place.str()] = s;
  return out;
}

Json matrix(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

Json invariants_json(const WittInvariants& w) {
  return {{"dimension", w.dimension},
          {"rank_mod_2", w.rank_mod_2},
          {"discriminant", w.discriminant.get_str()},
          {"signature", {w.signature.positive, w.signature.negative}},
          {"hasse", hasse_map(w.hasse)}};
}

template <class T>
std::shared_ptr<T> hold(std::vector<std::shared_ptr<void>>& keep) {
  auto p = std::make_shared<T>();
  keep.push_back(p);
  return p;
}

// ---------------------------------------------------------------------------
// numbers, quaternion, symbols

void add_padic(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    std::string x, place;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("padic", "p-adic valuation, norm and square test of a rational");
  cmd->add_option("x", a->x, "rational literal")->required();
  cmd->add_option("--place", a->place, "prime p")->required();
  cmd->callback([a, &g, &d] {
    d.action = [a, &g] {
      const Rational x = Rational::parse(a->x);
      const Place v = Place::parse(a->place);
      if (v.is_infinite()) throw DomainError("padic needs a finite place");
      const long p = v.prime();
      const auto val = padic_valuation(x, p);
      const auto e = PAdic::from_rational(x, p, g.precision);
      Json digits = Json::array();
      for (unsigned c : e.digits()) digits.push_back(c);
      return Json{{"x", x.str()},
                  {"p", p},
                  {"valuation", val.valuation},
                  {"unit", val.unit.str()},
                  {"norm", padic_norm(x, p).str()},
                  {"square", is_square(x, v)},
                  {"square_class", local_square_class(x, v).str()},
                  {"digits", digits},
                  {"precision", g.precision}};
    };
  });
}

QuatElement<Rational> parse_element(const std::string& text, const Rational& a, const Rational& b) {
  const auto c = parse_rationals(text);
  if (c.size() != 4) throw ParseError("quaternion element needs four coordinates t,x,y,z");
  return QuatElement<Rational>(a, b, {c[0], c[1], c[2], c[3]});
}

Json element_json(const QuatElement<Rational>& q) {
  return {{"coeffs", rationals({q.t(), q.x(), q.y(), q.z()})}, {"str", quat_str(q)}};
}

std::string real_str(const RealQuadratic& x) {
  if (x.im().is_zero()) return x.re().str();
  return "(" + x.re().str() + ") + (" + x.im().str() + ")*sqrt(" + x.d().str() + ")";
}

void add_quat(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    std::string alg = "-1,-1";
    std::string p, q, place = "q";
    int bound = 10;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("quat", "quaternion algebra (a,b / F) arithmetic; elements as t,x,y,z");
  cmd->require_subcommand(1);
  auto algebra = [a] {
    const auto ab = parse_rationals(a->alg);
    if (ab.size() != 2) throw ParseError("--alg expects a,b");
    QuaternionAlgebra<Rational> alg(ab[0], ab[1], BaseField::Rationals);
    return alg;
  };

  auto* mul = cmd->add_subcommand("mul", "product p q");
  mul->add_option("p", a->p)->required();
  mul->add_option("q", a->q)->required();
  mul->add_option("--alg", a->alg, "a,b (default -1,-1)");
  mul->callback([a, algebra, &d] {
    d.action = [a, algebra] {
      const auto alg = algebra();
      const auto p = parse_element(a->p, alg.a(), alg.b()), q = parse_element(a->q, alg.a(), alg.b());
      return Json{{"product", element_json(quat_mul(p, q))}};
    };
  });

  auto* norm = cmd->add_subcommand("norm", "conjugate and reduced norm");
  norm->add_option("q", a->q)->required();
  norm->add_option("--alg", a->alg, "a,b (default -1,-1)");
  norm->callback([a, algebra, &d] {
    d.action = [a, algebra] {
      const auto alg = algebra();
      const auto q = parse_element(a->q, alg.a(), alg.b());
      return Json{{"conj", element_json(quat_conj(q))}, {"norm", quat_norm(q).str()}};
    };
  });

  auto* zd = cmd->add_subcommand("zero-divisor", "search for a nonzero element of norm 0");
  zd->add_option("--alg", a->alg, "a,b (default -1,-1)");
  zd->add_option("--place", a->place, "q (rationals, default), inf or a prime");
  zd->add_option("--bound", a->bound, "height bound over Q");
  zd->callback([a, algebra, &g, &d] {
    d.action = [a, algebra, &g] {
      const auto alg = algebra();
      Json out{{"a", alg.a().str()}, {"b", alg.b().str()}, {"field", a->place}};
      if (a->place == "q" || a->place == "Q") {
        const auto z = find_zero_divisor(alg, a->bound);
        out["zero_divisor"] = z ? element_json(*z) : Json(nullptr);
        out["bound"] = a->bound;
        return out;
      }
      const Place v = Place::parse(a->place);
      out["class"] = to_string(classify_quaternion(alg.a(), alg.b(), v));
      if (v.is_infinite()) {
        const auto z = find_zero_divisor_real(alg.a(), alg.b());
        if (!z) {
          out["zero_divisor"] = nullptr;
        } else {
          Json c = Json::array();
          for (const auto& x : z->coeffs()) c.push_back(real_str(x));
          out["zero_divisor"] = {{"coeffs", c}};
        }
        return out;
      }
      const auto z = find_zero_divisor_padic(alg.a(), alg.b(), v.prime(), g.precision);
      if (!z) {
        out["zero_divisor"] = nullptr;
      } else {
        Json c = Json::array();
        for (const auto& x : z->coeffs()) c.push_back(x.str());
        out["zero_divisor"] = {{"coeffs", c}, {"precision", g.precision}};
      }
      return out;
    };
  });
}

void add_symbols(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    std::string a, b, place, ext;
    bool oracle = false;
    long p = 0, q = 0;
  };
  auto a = hold<Args>(keep);

  auto* hilbert = app.add_subcommand("hilbert", "local Hilbert symbol (a,b)_v");
  hilbert->add_option("a", a->a)->required();
  hilbert->add_option("b", a->b)->required();
  hilbert->add_option("--place", a->place, "inf or a prime")->required();
  hilbert->add_flag("--oracle", a->oracle, "use the brute-force conic search (finite places)");
  hilbert->callback([a, &d] {
    d.action = [a] {
      const Rational x = Rational::parse(a->a), y = Rational::parse(a->b);
      const Place v = Place::parse(a->place);
      int s;
      if (a->oracle) {
        if (v.is_infinite()) throw DomainError("the oracle works at finite places only");
        s = hilbert_symbol_oracle(x, y, v.prime());
      } else {
        s = hilbert_symbol(x, y, v);
      }
      return Json{{"a", x.str()}, {"b", y.str()}, {"place", v.str()}, {"symbol", s},
                  {"class", s == 1 ? "split" : "division"}};
    };
  });

  auto* rec = app.add_subcommand("reciprocity", "all local symbols of (a,b) and their product");
  rec->add_option("a", a->a)->required();
  rec->add_option("b", a->b)->required();
  rec->callback([a, &d] {
    d.action = [a] {
      const auto r = hilbert_reciprocity(Rational::parse(a->a), Rational::parse(a->b));
      return Json{{"symbols", hasse_map(r.symbols)}, {"product", r.product}};
    };
  });

  auto* brauer = app.add_subcommand("brauer", "ramified places of the quaternion algebra (a,b / Q)");
  brauer->add_option("a", a->a)->required();
  brauer->add_option("b", a->b)->required();
  brauer->callback([a, &d] {
    d.action = [a] {
      const auto c = brauer_class(Rational::parse(a->a), Rational::parse(a->b));
      Json places = Json::array();
      for (const auto& v : c.ramified) places.push_back(v.str());
      return Json{{"ramified", places}, {"trivial", c.is_trivial()}};
    };
  });

  auto* qr = app.add_subcommand("quadratic-reciprocity", "(p/q)(q/p) from the local symbols");
  qr->add_option("p", a->p)->required();
  qr->add_option("q", a->q)->required();
  qr->callback([a, &d] {
    d.action = [a] {
      const auto r = quadratic_reciprocity(a->p, a->q);
      return Json{{"p", r.p},           {"q", r.q},     {"legendre_pq", r.legendre_pq}, {"legendre_qp", r.legendre_qp},
                  {"lhs", r.lhs},       {"rhs", r.rhs}, {"derived", r.derived},         {"holds", r.holds}};
    };
  });

  auto* conic = app.add_subcommand("conic", "point on -a x^2 - b y^2 + ab z^2 = 0 over a completion");
  conic->add_option("a", a->a)->required();
  conic->add_option("b", a->b)->required();
  conic->add_option("--place", a->place, "inf or a prime")->required();
  conic->add_option("--ext", a->ext, "work over the quadratic extension by sqrt(d)");
  conic->callback([a, &g, &d] {
    d.action = [a, &g] {
      const Rational x = Rational::parse(a->a), y = Rational::parse(a->b);
      const Place v = Place::parse(a->place);
      std::optional<Rational> ext;
      if (!a->ext.empty()) ext = Rational::parse(a->ext);
      const auto pt = conic_point(x, y, v, ext, g.precision);
      Json out{{"a", x.str()}, {"b", y.str()}, {"place", v.str()}, {"symbol", hilbert_symbol(x, y, v)}};
      if (ext) out["ext"] = ext->str();
      if (!v.is_infinite()) out["precision"] = g.precision;
      if (!pt) {
        out["point"] = nullptr;
        return out;
      }
      out["point"] = conic_point_str(*pt);
      out["on_conic"] = on_conic(*pt, x, y);
      if (ext || v.is_infinite()) {
        out["conjugate"] = conic_point_str(galois_conjugate(*pt));
        out["fixed"] = is_fixed(*pt);
      }
      return out;
    };
  });
}

// ---------------------------------------------------------------------------
// quadforms, clifford

void add_qform(CLI::App& app, const Globals&, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    std::string diag, op = "invariants", place, other;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("qform", "invariants of a diagonal quadratic form");
  cmd->add_option("--diag", a->diag, "comma-separated nonzero rationals")->required();
  cmd->add_option("--op", a->op, "hasse, isotropic, witt, equiv or invariants")
      ->check(CLI::IsMember({"hasse", "isotropic", "witt", "equiv", "invariants"}));
  cmd->add_option("--place", a->place, "inf or a prime");
  cmd->add_option("--with", a->other, "second form for --op equiv");
  cmd->callback([a, &d] {
    d.action = [a] {
      const auto diag = parse_rationals(a->diag);
      const QuadraticForm f = QuadraticForm::diagonal(diag);
      if (f.is_degenerate()) throw DomainError("degenerate form");
      Json out{{"diag", rationals(diag)}, {"op", a->op}};
      std::optional<Place> place;
      if (!a->place.empty()) place = Place::parse(a->place);
      if (place) out["place"] = place->str();
      auto need_place = [&] {
        if (!place) throw ParseError("--op " + a->op + " needs --place");
        return *place;
      };
      if (a->op == "hasse") {
        out["hasse"] = hasse_invariant(f, need_place());
      } else if (a->op == "isotropic") {
        out["isotropic"] = is_isotropic(f, need_place());
      } else if (a->op == "witt") {
        const auto w = witt_decompose(f, need_place());
        out["kernel"] = rationals(diagonalize(w.kernel));
        out["hyperbolic"] = w.hyperbolic_count;
      } else if (a->op == "equiv") {
        if (a->other.empty()) throw ParseError("--op equiv needs --with");
        const QuadraticForm h = QuadraticForm::diagonal(parse_rationals(a->other));
        out["with"] = rationals(parse_rationals(a->other));
        out["equivalent"] = place ? witt_equivalent(f, h, *place) : witt_equivalent(f, h);
      } else {
        out["invariants"] = invariants_json(witt_invariants(f));
      }
      return out;
    };
  });
}

void add_clifford(CLI::App& app, const Globals&, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    int r = 0, s = 0;
    bool oracle = false;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("clifford", "type of the real Clifford algebra Cliff(r,s)");
  cmd->add_option("r", a->r)->required();
  cmd->add_option("s", a->s)->required();
  cmd->add_flag("--oracle", a->oracle, "classify from structure constants (r + s <= 8)");
  cmd->callback([a, &d] {
    d.action = [a] {
      const auto t = a->oracle ? clifford::classify_oracle(a->r, a->s) : clifford::classify(a->r, a->s);
      return Json{{"r", a->r},
                  {"s", a->s},
                  {"type", t.str()},
                  {"dimension", t.real_dimension()},
                  {"sbr", clifford::sbr_class(a->r, a->s)},
                  {"complexified", clifford::complexify(t).str()}};
    };
  });
}

// ---------------------------------------------------------------------------
// twistor

void add_twistor(CLI::App& app, const Globals&, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  using namespace twistor;
  struct Args {
    std::string coords, family;
    int samples = kClutchingSamples;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("twistor", "real structures, the twistor projection and clutching degrees");
  cmd->require_subcommand(1);

  auto* rt = cmd->add_subcommand("rho-tw", "antipodal real structure on CP^1 or CP^3");
  rt->add_option("coords", a->coords, "z1,z2[,z3,z4] with entries re+im*i")->required();
  rt->callback([a, &d] {
    d.action = [a] {
      const ProjPoint p = ProjPoint::parse(a->coords);
      const ProjPoint img = rho_tw(p);
      return Json{{"point", p.str()}, {"image", img.str()}, {"fixed", img == p}, {"rho_fixed", is_fixed_rho(p)}};
    };
  });

  auto* pr = cmd->add_subcommand("pi", "projection CP^3 -> HP^1");
  pr->add_option("coords", a->coords, "z1,z2,z3,z4")->required();
  pr->callback([a, &d] {
    d.action = [a] {
      const ProjPoint p = ProjPoint::parse(a->coords);
      if (p.size() != 4) throw DomainError("pi needs a point of CP^3");
      const auto q = pi(p);
      return Json{{"point", p.str()}, {"image", q.normalized().str()}};
    };
  });

  auto* fb = cmd->add_subcommand("fiber", "twistor line over a point of HP^1");
  fb->add_option("q", a->coords, "q1;q2 with quaternions like 1+2i-j+1/2k")->required();
  fb->callback([a, &d] {
    d.action = [a] {
      const auto q = QuatProjPoint::parse(a->coords);
      const ProjLine line = fiber(q);
      Json basis = Json::array();
      for (std::size_t r = 0; r < 2; ++r) basis.push_back(line.point(r).str());
      Json plucker = Json::array();
      for (const auto& z : line.plucker()) plucker.push_back(z.str());
      return Json{{"point", q.normalized().str()}, {"basis", basis}, {"plucker", plucker}, {"real", is_real_line(line)}};
    };
  });

  auto* deg = cmd->add_subcommand("degree", "clutching degree of a line family on S^2");
  deg->add_option("family", a->family, "plus, minus or const")
      ->required()
      ->check(CLI::IsMember({"plus", "minus", "const"}));
  deg->add_option("--samples", a->samples, "equator samples");
  deg->callback([a, &d] {
    d.action = [a] {
      const LineFamily f = a->family == "plus"    ? LineFamily::PauliPlus
                           : a->family == "minus" ? LineFamily::PauliMinus
                                                  : LineFamily::Constant;
      const auto r = clutching_degree(f, a->samples);
      return Json{{"family", a->family},   {"degree", r.degree},           {"winding", r.winding},
                  {"residual", r.residual}, {"max_increment", r.max_increment}, {"samples", r.samples}};
    };
  });
}

// ---------------------------------------------------------------------------
// hodge

Json bundle_json(const hodge::TwistorBundleType& t) {
  Json summands = Json::array();
  for (const auto& s : t.summands())
    summands.push_back({{"slope", s.slope.str()},
                        {"rank", hodge::summand_rank(s.slope)},
                        {"degree", hodge::summand_degree(s).get_str()},
                        {"multiplicity", s.multiplicity}});
  return {{"summands", summands}, {"rank", t.rank()}, {"degree", t.degree().get_str()}};
}

Json hodge_numbers_json(const std::vector<hodge::HodgeNumber>& hn) {
  Json out = Json::array();
  for (const auto& h : hn) out.push_back({{"p", h.p}, {"q", h.q}, {"h", h.h}});
  return out;
}

void add_hodge(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  using namespace hodge;
  struct Args {
    std::string file;
    std::size_t n = 2;
    int w = 1;
    int trials = 100;
    long degree = 0;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("hodge", "pure Hodge structures and bundles on the twistor line");
  cmd->require_subcommand(1);

  auto* tt = cmd->add_subcommand("to-twistor", "bundle type and U(1) weights of a filtration");
  tt->add_option("--json,file", a->file, "JSON file {n, w, filtration: [{p, basis}]}")->required();
  tt->callback([a, &d] {
    d.action = [a] {
      std::ifstream in(a->file);
      if (!in) throw ParseError("cannot read " + a->file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      const auto h = PureHodgeStructure::from_json(j);
      const auto report = validate_pure(h);
      if (!report.valid)
        throw DomainError("filtration is not pure (fails at p = " + std::to_string(report.failing_p.value_or(0)) + ")");
      const auto eq = to_equivariant(h);
      Json weights = Json::array();
      for (const auto& [p, dim] : eq.weights) weights.push_back({p, dim});
      return Json{{"n", h.dim()},
                  {"w", h.weight()},
                  {"hodge_numbers", hodge_numbers_json(hodge_numbers(h))},
                  {"twistor", bundle_json(eq.type)},
                  {"weights", weights}};
    };
  });

  auto* rt = cmd->add_subcommand("round-trip", "random pure structures through the dictionary and back");
  rt->add_option("--n", a->n, "dimension")->check(CLI::Range(1, 12));
  rt->add_option("--w", a->w, "weight");
  rt->add_option("--trials", a->trials, "number of structures")->check(CLI::Range(1, 100000));
  rt->callback([a, &g, &d] {
    d.action = [a, &g] {
      if (a->w % 2 != 0 && a->n % 2 != 0) throw DomainError("odd weight needs even dimension");
      std::mt19937_64 rng(g.seed);
      int generated = 0, agreed = 0;
      std::map<std::string, int> seen;
      for (int t = 0; t < a->trials; ++t) {
        const auto h = random_pure(a->n, a->w, rng);
        if (!h) continue;
        ++generated;
        const auto numbers = hodge_numbers(*h);
        const auto back = from_equivariant(to_equivariant(*h));
        const auto reparsed = hodge_numbers(PureHodgeStructure::from_json(h->to_json()));
        if (back == numbers && reparsed == numbers) ++agreed;
        std::string key;
        for (const auto& hn : numbers) key += (key.empty() ? "" : " ") + std::string("h") + std::to_string(hn.p) + "," +
                                              std::to_string(hn.q) + "=" + std::to_string(hn.h);
        ++seen[key];
      }
      Json hist = Json::object();
      for (const auto& [k, v] : seen) hist[k] = v;
      return Json{{"seed", g.seed},           {"n", a->n},           {"w", a->w},
                  {"trials", a->trials},      {"generated", generated}, {"agreed", agreed},
                  {"passed", agreed == generated && generated > 0}, {"hodge_numbers_seen", hist}};
    };
  });

  auto* ds = cmd->add_subcommand("descent", "descent obstruction of O(d)");
  ds->add_option("d", a->degree)->required();
  ds->callback([a, &d] {
    d.action = [a] { return Json{{"degree", a->degree}, {"obstruction", descent_obstruction(a->degree)}}; };
  });
}

// ---------------------------------------------------------------------------
// weil

weil::SL2 parse_sl2(const std::string& text, long n) {
  const auto e = parse_longs(text);
  if (e.size() != 4) throw ParseError("SL(2) element needs a,b,c,d");
  return weil::sl2(e[0], e[1], e[2], e[3], n);
}

void add_weil(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  using namespace weil;
  struct Args {
    long p = 0;
    long a = 1;
    std::string gm, hm, lines, field = "Q";
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("weil", "finite Heisenberg and Weil representations, Maslov index");
  cmd->require_subcommand(1);

  auto* gauss = cmd->add_subcommand("gauss", "Gauss sum over Z/p");
  gauss->add_option("p", a->p)->required();
  gauss->add_option("a", a->a);
  gauss->callback([a, &d] {
    d.action = [a] {
      const Complex s = gauss_sum(a->p, a->a);
      Json out{{"p", a->p}, {"a", a->a}, {"value", complex(s)}, {"norm", std::norm(s)},
               {"legendre", legendre_symbol(a->a, a->p)}};
      if (a->p <= kMaxExactModulus) {
        Json coeffs = Json::array();
        const Cyclotomic exact = gauss_sum_exact(a->p, a->a);
        for (const auto& c : exact.coeffs()) coeffs.push_back(c.str());
        out["exact_zeta_coeffs"] = coeffs;
      }
      return out;
    };
  });

  auto* svn = cmd->add_subcommand("svn", "irreducibility and uniqueness of the Schroedinger model");
  svn->add_option("p", a->p)->required();
  svn->callback([a, &g, &d] {
    d.action = [a, &g] {
      const auto r = svn_check(a->p, g.seed);
      return Json{{"p", r.modulus},
                  {"seed", g.seed},
                  {"commutant_dimension", r.schur_dimension},
                  {"momentum_intertwiners", r.momentum_dimension},
                  {"conjugated_intertwiners", r.random_dimension},
                  {"passed", r.passed}};
    };
  });

  auto* cc = cmd->add_subcommand("cocycle", "scalar c with U_g U_h = c U_gh");
  cc->set_help_flag("--help", "print this help message and exit");  // -h is taken by --h
  cc->add_option("p", a->p)->required();
  cc->add_option("--g", a->gm, "a,b,c,d")->required();
  cc->add_option("--h", a->hm, "a,b,c,d")->required();
  cc->callback([a, &d] {
    d.action = [a] {
      const SL2 g1 = parse_sl2(a->gm, a->p), h1 = parse_sl2(a->hm, a->p);
      const auto c = cocycle(g1, h1);
      return Json{{"p", a->p}, {"value", complex(c.value)}, {"abs", std::abs(c.value)},
                  {"arg_over_2pi", std::arg(c.value) / (2 * std::numbers::pi)}, {"residual", c.residual}};
    };
  });

  auto* mas = cmd->add_subcommand("maslov", "Maslov form of three lines in the symplectic plane");
  mas->add_option("--lines", a->lines, "x1,y1;x2,y2;x3,y3")->required();
  mas->add_option("--field", a->field, "Q, R or Qp:p");
  mas->callback([a, &d] {
    d.action = [a] {
      const auto parts = split(a->lines, ';');
      if (parts.size() != 3) throw ParseError("--lines needs three lines");
      std::vector<LagrangianLine> ls;
      for (const auto& s : parts) {
        const auto v = parse_rationals(s);
        if (v.size() != 2) throw ParseError("a line is given by two coordinates");
        ls.emplace_back(v[0], v[1]);
      }
      const auto m = maslov_index(ls[0], ls[1], ls[2]);
      Json out{{"form", matrix(m.form.gram())}, {"diagonal", rationals(diagonalize(m.form))}, {"field", a->field}};
      if (a->field == "Q") {
        out["invariants"] = invariants_json(m.invariants);
        out["signature"] = m.signature;
      } else if (a->field == "R") {
        out["signature"] = m.signature;
      } else if (a->field.rfind("Qp:", 0) == 0) {
        const Place v = Place::parse(a->field.substr(3));
        if (v.is_infinite()) throw ParseError("Qp needs a prime");
        const auto w = witt_decompose(m.form, v);
        out["hasse"] = hasse_invariant(m.form, v);
        out["discriminant"] = discriminant(m.form).get_str();
        out["witt_kernel"] = rationals(diagonalize(w.kernel));
        out["hyperbolic"] = w.hyperbolic_count;
      } else {
        throw ParseError("--field must be Q, R or Qp:p");
      }
      return out;
    };
  });
}

// ---------------------------------------------------------------------------
// verify

void add_verify(CLI::App& app, const Globals& g, Dispatch& d, std::vector<std::shared_ptr<void>>& keep) {
  struct Args {
    bool quick = false, sequential = false;
    std::vector<std::string> only;
  };
  auto a = hold<Args>(keep);
  auto* cmd = app.add_subcommand("verify", "run the acceptance criteria");
  cmd->add_flag("--quick", a->quick, "smaller samples");
  cmd->add_flag("--sequential", a->sequential, "run criteria one after another");
  cmd->add_option("--only", a->only, "criterion ids, e.g. AC1 AC8");
  cmd->callback([a, &g, &d] {
    d.pretty = [](const Json& j) {
      std::string out;
      for (const auto& c : j["criteria"]) {
        acceptance::Result r;
        r.id = c["id"];
        r.title = c["title"];
        r.passed = c["status"] == "pass";
        r.checks = c["checks"];
        r.seconds = c["seconds"];
        r.time_limit = c["time_limit"];
        r.details = c["details"].get<std::vector<std::string>>();
        out += acceptance::summary_line(r) + "\n";
      }
      out += std::string(j["mode"]) + " run, seed " + std::to_string(j["seed"].get<std::uint64_t>()) + ": " +
             (j["passed"].get<bool>() ? "all criteria passed" : "some criteria FAILED");
      return out;
    };
    d.action = [a, &g, &d] {
      acceptance::Options o;
      o.quick = a->quick;
      o.seed = g.seed;
      std::vector<acceptance::Result> results;
      if (a->only.empty()) {
        results = acceptance::run_all(o, !a->sequential);
      } else {
        for (const auto& id : a->only) results.push_back(acceptance::run_criterion(id, o));
      }
      Json criteria = Json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back({{"id", r.id},
                            {"title", r.title},
                            {"status", r.passed ? "pass" : "fail"},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"seconds", r.seconds},
                            {"time_limit", r.time_limit},
                            {"details", r.details}});
      }
      if (!all) d.exit_code = 1;
      return Json{{"mode", a->quick ? "quick" : "full"}, {"seed", g.seed}, {"passed", all}, {"criteria", criteria}};
    };
  });
}

}  // namespace

void register_commands(CLI::App& app, const Globals& globals, Dispatch& dispatch,
                       std::vector<std::shared_ptr<void>>& keep) {
  add_padic(app, globals, dispatch, keep);
  add_quat(app, globals, dispatch, keep);
  add_symbols(app, globals, dispatch, keep);
  add_qform(app, globals, dispatch, keep);
  add_clifford(app, globals, dispatch, keep);
  add_twistor(app, globals, dispatch, keep);
  add_hodge(app, globals, dispatch, keep);
  add_weil(app, globals, dispatch, keep);
  add_verify(app, globals, dispatch, keep);
}

}  // namespace twk::cli
