#include "wproj_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wproj/error.hpp"
#include "wproj/factor.hpp"
#include "wproj/height.hpp"
#include "wproj/point.hpp"
#include "wproj/poly.hpp"
#include "wproj/search.hpp"
#include "wproj/subscheme.hpp"
#include "wproj/valuation.hpp"
#include "wproj/weights.hpp"

namespace wproj::cli {

namespace {

struct Opts {
  std::string weights, point, tuple, other, a, b, n, primes, divisor, place;
  std::string poly, expr, vars, bound, require_nonzero, eps, delta, box;
  std::string threshold = "1/100";
  std::string format;
  std::string out;
  unsigned codim = 0;
  std::size_t index = 0;
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  bool require_gcd1 = false;
  bool keep_violations_only = false;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T, class F>
std::string join(const std::vector<T>& items, std::string_view sep, F fn) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += fn(items[i]);
  }
  return out;
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw ConfigError(std::string("missing ") + flag);
  return value;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("WPROJ_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("WPROJ_JOBS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned jobs_of(const Opts& o) {
  if (o.jobs) {
    if (*o.jobs == 0) throw ConfigError("--jobs must be at least 1");
    return *o.jobs;
  }
  return default_jobs();
}

WeightVector weights_of(const Opts& o) { return WeightVector::parse(need(o.weights, "--weights")); }

void check_length(std::size_t got, const WeightVector& w) {
  if (got != w.size())
    throw ParseError("expected " + std::to_string(w.size()) + " coordinates, got " + std::to_string(got));
}

// --tuple is read as integers, --point as rationals scaled to an integral representative.
WPoint point_of(const Opts& o, const WeightVector& w, const std::string& tuple, const std::string& point,
                const char* flag) {
  if (!tuple.empty()) {
    auto coords = parse_integer_tuple(tuple);
    check_length(coords.size(), w);
    return WPoint(w, std::move(coords));
  }
  auto coords = parse_rational_tuple(need(point, flag));
  check_length(coords.size(), w);
  (void)o;
  return integralize(coords, w).point;
}

WPoint point_of(const Opts& o, const WeightVector& w) { return point_of(o, w, o.tuple, o.point, "--point"); }

std::vector<WPoly> polys_of(const Opts& o) {
  if (!o.expr.empty()) {
    VariableTable vars = !o.vars.empty() ? VariableTable::parse(o.vars) : VariableTable::indexed(weights_of(o));
    return {WPoly::parse(o.expr, vars)};
  }
  auto polys = read_wpoly_file(need(o.poly, "--poly or --expr"));
  if (!o.weights.empty() && !(WeightVector::parse(o.weights) == polys.front().weights()))
    throw ConfigError("--weights " + o.weights + " does not match the polynomial header " +
                      polys.front().vars().to_string());
  return polys;
}

std::string exact_text(const Rational& r) { return to_string(r); }

std::string names_of(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
  return join(idx, ",", [&](std::size_t i) { return names[i]; });
}

// ---- commands ---------------------------------------------------------------

Report cmd_factor(const Opts& o) {
  const Integer n = parse_integer(need(o.n, "--n"));
  const auto f = factor(n);
  Report r;
  r.set("unit", Value::exact(Integer(f.unit)));
  Table t{"factors", {"prime", "exponent"}, {}};
  for (const auto& [p, e] : f.factors) t.rows.push_back({Value::exact(p), Value::number(e)});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_wgcd(const Opts& o) {
  const auto w = weights_of(o);
  auto coords = parse_integer_tuple(need(o.tuple, "--tuple"));
  check_length(coords.size(), w);
  Report r;
  r.set("wgcd", Value::exact(wgcd(w, coords)));
  return r;
}

Report cmd_normalize(const Opts& o) {
  const auto w = weights_of(o);
  const WPoint x = point_of(o, w);
  Report r;
  r.set("point", Value::str(normalize(x).to_string()));
  r.set("wgcd", Value::exact(x.wgcd()));
  return r;
}

Report cmd_canonical(const Opts& o) {
  const auto w = weights_of(o);
  Report r;
  r.set("point", Value::str(canonicalize(point_of(o, w)).to_string()));
  return r;
}

Report cmd_equals(const Opts& o) {
  const auto w = weights_of(o);
  const WPoint x = point_of(o, w);
  const WPoint y = point_of(o, w, "", o.other, "--other");
  Report r;
  r.set("equal", Value::boolean(equals(x, y)));
  r.set("canonical", Value::str(canonicalize(x).to_string()));
  r.set("other_canonical", Value::str(canonicalize(y).to_string()));
  return r;
}

Report cmd_height(const Opts& o) {
  const auto w = weights_of(o);
  const WPoint x = point_of(o, w);
  Report r;
  if (!o.place.empty()) {
    r.set("local_height", Value::logarithm(local_height(x, Place::parse(o.place))));
    return r;
  }
  r.set("lwh", Value::logarithm(lwh(x)));
  r.set("wh_m", Value::exact(wh_m_power(x)));
  r.set("m", Value::number(w.lcm()));
  return r;
}

Report cmd_hwgcd(const Opts& o) {
  const auto w = weights_of(o);
  auto coords = parse_rational_tuple(!o.tuple.empty() ? o.tuple : need(o.point, "--tuple"));
  check_length(coords.size(), w);
  Report r;
  r.echo("archimedean_convention", Value::str("floor(max(-log|x_i|,0)/q_i) counted in units of log e"));
  r.set("log_hwgcd", Value::logarithm(log_hwgcd_tuple(coords, w)));
  r.set("hwgcd_finite", Value::exact(hwgcd_mult(coords, w)));
  return r;
}

Report cmd_hgcd(const Opts& o) {
  const Rational a = parse_rational(need(o.a, "--a"));
  const Rational b = parse_rational(need(o.b, "--b"));
  Report r;
  r.set("hgcd", Value::logarithm(hgcd(a, b)));
  return r;
}

Report cmd_split_height(const Opts& o) {
  const auto w = weights_of(o);
  const WPoint x = point_of(o, w);
  const auto S = parse_prime_set(o.primes);
  DivisorSpec D = anticanonical(w);
  if (!o.divisor.empty()) {
    D.clear();
    for (const auto& tok : split(o.divisor, ',')) {
      const Integer i = parse_integer(tok);
      if (i < 0 || i >= w.size()) throw ConfigError("divisor index " + tok + " out of range");
      D.push_back(i.get_ui());
    }
  }
  const auto h = split_height_S(x, S, D);
  Report r;
  r.set("in_S", Value::logarithm(h.in_S));
  r.set("out_S", Value::logarithm(h.out_S));
  r.set("total", Value::logarithm(h.total()));
  return r;
}

std::string wpoly_text(const std::vector<WPoly>& polys) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += '\n';
    out += polys[i].vars().to_string() + '\n' + polys[i].to_string() + '\n';
  }
  return out;
}

Report cmd_poly_check(const Opts& o) {
  const auto polys = polys_of(o);
  Report r;
  r.set("count", Value::number(polys.size()));
  Table t{"polynomials", {"index", "header", "degree", "terms", "poly"}, {}};
  for (std::size_t i = 0; i < polys.size(); ++i)
    t.rows.push_back({Value::number(i), Value::str(polys[i].vars().to_string()), Value::number(polys[i].degree()),
                      Value::number(polys[i].terms().size()), Value::str(polys[i].to_string())});
  r.tables.push_back(std::move(t));
  r.plain = wpoly_text(polys);
  return r;
}

Report cmd_poly_eval(const Opts& o) {
  const auto polys = polys_of(o);
  if (o.index >= polys.size()) throw ConfigError("--index " + std::to_string(o.index) + " out of range");
  const WPoly& f = polys[o.index];
  auto alpha = parse_integer_tuple(need(o.tuple, "--tuple"));
  check_length(alpha.size(), f.weights());
  Report r;
  r.set("value", Value::exact(f.eval(alpha)));
  return r;
}

Report cmd_subscheme_height(const Opts& o) {
  const SubschemeSpec Y(polys_of(o), o.codim == 0 ? 1 : o.codim);
  const WPoint x = point_of(o, Y.weights());
  Report r;
  if (!o.place.empty()) {
    const auto h = local_height_Y(Y, x, Place::parse(o.place));
    r.set("local_height", h.is_infinite() ? Value::infinite() : Value::logarithm(h.value()));
    return r;
  }
  const bool on_Y = Y.contains(x);
  r.set("on_Y", Value::boolean(on_Y));
  if (on_Y) {
    r.set("height", Value::infinite());
    return r;
  }
  r.set("height", Value::logarithm(global_height_Y(Y, x)));
  r.set("finite_height", Value::logarithm(finite_height_Y(Y, x)));
  const auto g = log_gcd_Y(Y, x.coords(), false);
  r.set("log_gcd", Value::logarithm(g.log_gcd));
  r.set("residual", Value::logarithm(g.residual));
  r.set("unit_content", Value::boolean(g.exact));
  return r;
}

Report cmd_singular(const Opts& o) {
  const auto w = weights_of(o);
  const WPoint x = point_of(o, w);
  Report r;
  r.set("singular", Value::boolean(is_singular(w, x.coords())));
  r.set("support_gcd", Value::number(support_gcd(w, x.coords())));
  return r;
}

Report cmd_reduce_weights(const Opts& o) {
  const auto w = weights_of(o);
  const auto red = reduce_weights(w);
  const auto wf = well_formalize(red.weights);
  Report r;
  r.set("reduced", Value::str(red.weights.to_string()));
  r.set("divisor", Value::number(red.divisor));
  r.set("well_formed", Value::boolean(w.well_formed()));
  r.set("well_formed_weights", Value::str(wf.weights.to_string()));
  Table t{"steps", {"index", "divisor"}, {}};
  for (const auto& s : wf.steps) t.rows.push_back({Value::number(s.index), Value::number(s.divisor)});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_search(const Opts& o) {
  SearchConfig config{weights_of(o), parse_exact(need(o.bound, "--bound")), std::nullopt, {}, jobs_of(o)};
  std::vector<std::string> names;
  if (!o.poly.empty() || !o.expr.empty()) {
    config.hypersurface = polys_of(o).front();
    names = config.hypersurface->vars().names();
  } else {
    names = VariableTable::indexed(config.w).names();
  }
  if (!o.require_nonzero.empty()) {
    for (const auto& tok : split(o.require_nonzero, ',')) {
      auto it = std::find(names.begin(), names.end(), tok);
      std::size_t i = static_cast<std::size_t>(it - names.begin());
      if (it == names.end()) {
        const Integer k = parse_integer(tok);
        if (k < 0 || k >= names.size()) throw ConfigError("--require-nonzero: unknown coordinate '" + tok + "'");
        i = k.get_ui();
      }
      config.nonvanishing.push_back(i);
    }
  }
  const auto result = config.hypersurface ? search_hypersurface(config) : enumerate_bounded(config);
  Report r;
  r.log_only.emplace_back("jobs", Value::number(config.jobs));
  r.echo("height_budget", Value::exact(height_budget(config.w, config.bound)));
  r.set("count", Value::number(result.points.size()));
  r.set("phase1_candidates", Value::number(result.stats.phase1_candidates));
  r.set("phase2_candidates", Value::number(result.stats.phase2_candidates));
  r.set("deflation_leaves", Value::number(result.stats.deflation_leaves));
  r.set("line_solves", Value::number(result.stats.line_solves));
  r.set("singleton_checks", Value::number(result.stats.singleton_checks));
  r.set("wall_seconds", Value::real_number(result.stats.wall_seconds));
  Table t{"points", {"point", "wh_m", "vanishing"}, {}};
  for (const auto& hit : result.points) {
    std::vector<std::size_t> zero;
    for (std::size_t i = 0; i < hit.point.size(); ++i)
      if (hit.point[i] == 0) zero.push_back(i);
    t.rows.push_back({Value::str(hit.point.to_string()), Value::exact(hit.wh_m),
                      zero.empty() ? Value::null() : Value::str(names_of(zero, names))});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_vojta_scan(const Opts& o) {
  ScanConfig config{SubschemeSpec(polys_of(o), o.codim == 0 ? 2 : o.codim), parse_prime_set(o.primes), {}, {}, {},
                    o.samples};
  for (const auto& tok : split(need(o.eps, "--eps"), ',')) config.eps_grid.push_back(parse_exact(tok));
  for (const auto& tok : split(need(o.delta, "--delta"), ',')) config.delta_grid.push_back(parse_exact(tok));
  for (const auto& tok : split(need(o.box, "--box"), ',')) {
    const Integer v = parse_integer(tok);
    if (!v.fits_slong_p()) throw ConfigError("box radius " + tok + " too large");
    config.box.push_back(v.get_si());
  }
  if (config.box.size() == 1) config.box.assign(config.spec.weights().size(), config.box.front());
  config.seed = o.seed ? *o.seed : std::random_device{}() ^ (std::uint64_t{std::random_device{}()} << 32);
  config.require_unit_content = o.require_gcd1;
  config.jobs = jobs_of(o);
  const Rational threshold = parse_exact(o.threshold);
  Report r = scan_report(scan(config), threshold, o.keep_violations_only);
  r.echo("seed", Value::number(config.seed));
  r.log_only.emplace_back("jobs", Value::number(config.jobs));
  return r;
}

// ---- dispatch ---------------------------------------------------------------

struct Command {
  const char* name;
  const char* help;
  std::function<Report(const Opts&)> run;
  std::vector<std::string> flags;
  const char* default_format = "plain";
};

void add_flag(CLI::App& sub, Opts& o, const std::string& flag) {
  if (flag == "weights") sub.add_option("--weights", o.weights, "comma-separated weights, e.g. 2,4,6,10");
  else if (flag == "point") sub.add_option("--point", o.point, "colon-separated rationals, e.g. 1/2:4:8");
  else if (flag == "tuple") sub.add_option("--tuple", o.tuple, "colon-separated integers, e.g. 8:16");
  else if (flag == "other") sub.add_option("--other", o.other, "second point");
  else if (flag == "a") sub.add_option("--a", o.a, "first rational");
  else if (flag == "b") sub.add_option("--b", o.b, "second rational");
  else if (flag == "n") sub.add_option("--n", o.n, "nonzero integer");
  else if (flag == "primes") sub.add_option("--primes", o.primes, "comma-separated primes");
  else if (flag == "divisor") sub.add_option("--divisor", o.divisor, "coordinate hyperplane indices (default: all)");
  else if (flag == "place") sub.add_option("--place", o.place, "a prime or inf");
  else if (flag == "poly") sub.add_option("--poly", o.poly, ".wpoly file");
  else if (flag == "expr") sub.add_option("--expr", o.expr, "polynomial text");
  else if (flag == "vars") sub.add_option("--vars", o.vars, "variable header, e.g. \"x=2 y=4\"");
  else if (flag == "index") sub.add_option("--index", o.index, "stanza index in the .wpoly file");
  else if (flag == "codim") sub.add_option("--codim", o.codim, "asserted codimension");
  else if (flag == "bound") sub.add_option("--bound", o.bound, "height bound B (rational or decimal)");
  else if (flag == "require-nonzero") sub.add_option("--require-nonzero", o.require_nonzero, "coordinates required nonzero");
  else if (flag == "jobs") sub.add_option("--jobs", o.jobs, "worker threads (default: WPROJ_JOBS or all cores)");
  else if (flag == "eps") sub.add_option("--eps", o.eps, "epsilon grid");
  else if (flag == "delta") sub.add_option("--delta", o.delta, "delta grid");
  else if (flag == "box") sub.add_option("--box", o.box, "box radii per coordinate");
  else if (flag == "samples") sub.add_option("--samples", o.samples, "sample count")->capture_default_str();
  else if (flag == "seed") sub.add_option("--seed", o.seed, "RNG seed (generated and logged if absent)");
  else if (flag == "threshold") sub.add_option("--threshold", o.threshold, "allowed violation fraction")->capture_default_str();
  else if (flag == "require-gcd1") sub.add_flag("--require-gcd1", o.require_gcd1, "also require gcd(alpha) = 1");
  else if (flag == "keep-violations-only") sub.add_flag("--keep-violations-only", o.keep_violations_only, "drop records without a violation");
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"factor", "prime factorization", cmd_factor, {"n"}},
      {"wgcd", "weighted gcd of an integer tuple", cmd_wgcd, {"weights", "tuple"}},
      {"normalize", "divide out the weighted gcd", cmd_normalize, {"weights", "tuple", "point"}},
      {"canonical", "canonical representative", cmd_canonical, {"weights", "tuple", "point"}},
      {"equals", "equality of two points", cmd_equals, {"weights", "tuple", "point", "other"}},
      {"height", "logarithmic weighted height", cmd_height, {"weights", "tuple", "point", "place"}},
      {"hwgcd", "logarithmic weighted gcd height of a rational tuple", cmd_hwgcd, {"weights", "tuple", "point"}},
      {"hgcd", "generalized logarithmic gcd of two rationals", cmd_hgcd, {"a", "b"}},
      {"split-height", "height relative to coordinate hyperplanes, split by S", cmd_split_height,
       {"weights", "tuple", "point", "primes", "divisor"}},
      {"poly-check", "parse, validate and print polynomials", cmd_poly_check, {"weights", "poly", "expr", "vars"}},
      {"poly-eval", "evaluate a polynomial at an integer tuple", cmd_poly_eval,
       {"weights", "poly", "expr", "vars", "index", "tuple"}},
      {"subscheme-height", "height relative to V(f_1,...,f_t)", cmd_subscheme_height,
       {"weights", "poly", "expr", "vars", "codim", "tuple", "point", "place"}},
      {"singular", "singular locus membership", cmd_singular, {"weights", "tuple", "point"}},
      {"reduce-weights", "reduced and well-formed weights", cmd_reduce_weights, {"weights"}},
      {"search", "rational points of bounded height", cmd_search,
       {"weights", "bound", "poly", "expr", "vars", "require-nonzero", "jobs"}, "json"},
      {"vojta-scan", "empirical gcd bound scan", cmd_vojta_scan,
       {"weights", "poly", "codim", "primes", "eps", "delta", "samples", "box", "seed", "jobs", "threshold",
        "require-gcd1", "keep-violations-only"},
       "json"},
  };
  return table;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kConfig:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

Rational parse_exact(std::string_view text) {
  std::string s(text);
  const auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t scale = s.size() - dot - 1;
  if (scale == 0 || digits.empty() || digits == "-" || digits == "+")
    throw ParseError("malformed decimal '" + s + "'");
  Rational r(parse_integer(digits), pow(Integer(10), scale));
  r.canonicalize();
  return r;
}

Report scan_report(const ScanReport& scan, const Rational& threshold, bool keep_violations_only) {
  const auto& c = scan.config;
  Report r;
  r.echo("weights", Value::str(c.spec.weights().to_string()));
  r.echo("polys", Value::str(join(c.spec.polys(), "; ", [](const WPoly& f) { return f.to_string(); })));
  r.echo("codim", Value::number(c.spec.asserted_codim()));
  r.echo("primes", Value::str(join(c.S, ",", [](const Integer& p) { return p.get_str(); })));
  r.echo("eps", Value::str(join(c.eps_grid, ",", exact_text)));
  r.echo("delta", Value::str(join(c.delta_grid, ",", exact_text)));
  r.echo("box", Value::str(join(c.box, ",", [](std::int64_t v) { return std::to_string(v); })));
  r.echo("samples", Value::number(c.samples));
  r.echo("sampler", Value::str("uniform on the box, rejection of wgcd != 1" +
                               std::string(c.require_unit_content ? " and gcd != 1" : "")));
  r.echo("require_gcd1", Value::boolean(c.require_unit_content));
  r.echo("threshold", Value::exact(threshold));
  r.echo("keep_violations_only", Value::boolean(keep_violations_only));

  r.set("records_total", Value::number(scan.records.size()));
  r.set("boundary_records", Value::number(scan.boundary_records));
  r.set("on_Z_records", Value::number(scan.on_Z_records));
  r.set("rejected_samples", Value::number(scan.rejected_samples));

  Table cells{"cells", {"eps", "delta", "evaluated", "violations", "violation_fraction", "empirical_C"}, {}};
  for (const auto& cell : scan.cells) {
    const Rational frac = cell.evaluated ? Rational(cell.violations, cell.evaluated) : Rational(0);
    cells.rows.push_back({Value::exact(cell.eps), Value::exact(cell.delta), Value::number(cell.evaluated),
                          Value::number(cell.violations), Value::exact(frac), Value::logarithm(cell.empirical_C)});
  }
  r.tables.push_back(std::move(cells));

  Table est{"delta_estimates", {"eps", "delta", "violation_fraction", "violating"}, {}};
  for (const auto& e : estimate_delta(scan, threshold))
    est.rows.push_back({Value::exact(e.eps), e.delta ? Value::exact(*e.delta) : Value::null(),
                        Value::exact(e.violation_fraction), Value::number(e.violating.size())});
  r.tables.push_back(std::move(est));

  Table cand{"candidates", {"record", "alpha", "zero_coords", "equal_coords", "pair_gcds", "gcd", "verified"}, {}};
  for (const auto& e : exceptional_candidates(scan)) {
    auto idx = [](std::size_t i) { return std::to_string(i); };
    cand.rows.push_back(
        {Value::number(e.record),
         Value::str(join(scan.records[e.record].alpha, ":", [](const Integer& v) { return v.get_str(); })),
         Value::str(join(e.zero_coords, ",", idx)),
         Value::str(join(e.equal_coords, ";", [](const auto& p) {
           return std::to_string(p.first) + "=" + std::to_string(p.second);
         })),
         Value::str(join(e.pair_gcds, ";", [](const auto& t) {
           return std::to_string(std::get<0>(t)) + "," + std::to_string(std::get<1>(t)) + ":" +
                  std::get<2>(t).get_str();
         })),
         Value::exact(e.gcd), Value::boolean(e.verified)});
  }
  r.tables.push_back(std::move(cand));

  Table rec{"records", {"index", "alpha", "on_Z", "boundary", "lhs", "height_term", "sunit_term"}, {}};
  for (const auto& eps : c.eps_grid)
    for (const auto& delta : c.delta_grid) rec.columns.push_back("margin[" + to_string(eps) + "," + to_string(delta) + "]");
  for (std::size_t i = 0; i < scan.records.size(); ++i) {
    const auto& s = scan.records[i];
    if (keep_violations_only &&
        std::none_of(s.margins.begin(), s.margins.end(), [](const FormalLog& m) { return m.sign() < 0; }))
      continue;
    std::vector<Value> row = {Value::number(i),
                              Value::str(join(s.alpha, ":", [](const Integer& v) { return v.get_str(); })),
                              Value::boolean(s.on_Z),
                              Value::boolean(s.boundary),
                              s.on_Z ? Value::infinite() : Value::logarithm(s.lhs),
                              Value::logarithm(s.height_term),
                              s.sunit_term ? Value::logarithm(*s.sunit_term) : Value::null()};
    for (std::size_t k = 0; k < c.eps_grid.size() * c.delta_grid.size(); ++k)
      row.push_back(s.has_margins() ? Value::logarithm(s.margins[k]) : Value::null());
    rec.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(rec));
  return r;
}

int execute(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  if (args.size() >= 2 && args[0] == "vojta" && args[1] == "scan") {
    args.erase(args.begin());
    args[0] = "vojta-scan";
  }

  CLI::App app{"Exact arithmetic on weighted projective spaces over Q", "wproj"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Opts opts;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    for (const auto& f : cmd.flags) add_flag(*sub, opts, f);
    sub->add_option("--format", opts.format, std::string("json, csv or plain (default ") + cmd.default_format + ")")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", opts.out, "write the report to this file instead of stdout");
    subs.emplace_back(sub, &cmd);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error[E_USAGE]: " << e.what() << '\n';
    return 2;
  }

  CLI::App* sub = nullptr;
  const Command* cmd = nullptr;
  for (auto& [s, c] : subs)
    if (s->parsed()) sub = s, cmd = c;

  try {
    Report report = cmd->run(opts);
    report.command = cmd->name;
    std::vector<std::pair<std::string, Value>> echo;
    for (const CLI::Option* opt : sub->get_options()) {
      std::string key = opt->get_name();
      if (key.rfind("--", 0) != 0 || key == "--help" || key == "--out" || key == "--format" || key == "--jobs")
        continue;
      key = key.substr(2);
      const bool taken = std::any_of(report.config.begin(), report.config.end(),
                                     [&](const auto& kv) { return kv.first == key; });
      if (taken) continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        echo.emplace_back(key, opt->get_type_size() == 0 ? Value::boolean(true)
                                                         : Value::str(join(res, ",", [](const std::string& s) { return s; })));
      } else if (!opt->get_default_str().empty()) {
        echo.emplace_back(key, Value::str(opt->get_default_str()));
      }
    }
    echo.insert(echo.end(), report.config.begin(), report.config.end());
    report.config = std::move(echo);

    err << "# wproj " << kToolVersion << ' ' << report.command;
    for (const auto& [k, v] : report.config) err << ' ' << k << '=' << v.text;
    for (const auto& [k, v] : report.log_only) err << ' ' << k << '=' << v.text;
    err << '\n';

    const std::string fmt = opts.format.empty() ? cmd->default_format : opts.format;
    const Format format = fmt == "json" ? Format::kJson : fmt == "csv" ? Format::kCsv : Format::kPlain;
    if (!opts.out.empty()) {
      std::ofstream file(opts.out);
      if (!file) throw ConfigError("cannot open '" + opts.out + "' for writing");
      render(report, format, file);
      if (!file) throw ConfigError("failed writing '" + opts.out + "'");
    } else {
      render(report, format, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error[" << code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error[E_INTERNAL]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wproj::cli
