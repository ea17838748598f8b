#include "motivic/cli.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "motivic/checks.hpp"
#include "motivic/multisym.hpp"
#include "motivic/qpoly.hpp"
#include "motivic/ring.hpp"
#include "motivic/series.hpp"
#include "motivic/varieties.hpp"

namespace motivic {

namespace {

// Insertion-ordered JSON keeps the documented key order in the output.
using json = nlohmann::ordered_json;

enum class Mode { text, json, latex };

Mode parse_mode(const std::string& s) {
  if (s == "text") return Mode::text;
  if (s == "json") return Mode::json;
  if (s == "latex") return Mode::latex;
  fail("INVALID_ARGUMENT", "unknown output mode '" + s + "'");
}

std::string render_element(const RingElement& e, Mode mode) {
  return mode == Mode::latex ? e.to_latex() : e.to_string();
}

// Appends one series/polynomial term `coeff * t^power`, extracting the sign
// of single-term coefficients so e.g. -t^3 joins as " - t^3".
void append_t_term(std::ostringstream& out, bool& first, const RingElement& coeff,
                   size_t power, Mode mode) {
  if (coeff.is_zero()) return;
  bool negate = coeff.terms().size() == 1 && coeff.terms().begin()->second < 0;
  RingElement mag = negate ? -coeff : coeff;
  if (first) {
    if (negate) out << "-";
  } else {
    out << (negate ? " - " : " + ");
  }
  std::string c = render_element(mag, mode);
  if (power == 0) {
    out << c;
  } else {
    if (!mag.is_one()) {
      if (mag.terms().size() > 1)
        out << "(" << c << ")" << (mode == Mode::latex ? "" : "*");
      else
        out << c << (mode == Mode::latex ? "" : "*");
    }
    out << "t";
    if (power > 1)
      out << (mode == Mode::latex && power > 9 ? "^{" + std::to_string(power) + "}"
                                               : "^" + std::to_string(power));
  }
  first = false;
}

std::string render_tpoly(const TPoly& p, Mode mode) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) append_t_term(out, first, p[i], i, mode);
  return first ? "0" : out.str();
}

json tpoly_json(const TPoly& p) {
  json arr = json::array();
  for (const auto& c : p) arr.push_back(c.to_string());
  return arr;
}

void print_series(std::ostream& out, const TruncatedSeries& s,
                  const std::optional<RationalSeries>& rational, Mode mode) {
  if (mode == Mode::json) {
    json j;
    j["order"] = s.order();
    json coeffs = json::array();
    for (const auto& c : s.coefficients) coeffs.push_back(c.to_string());
    j["coefficients"] = coeffs;
    if (rational) {
      j["rational"] = {{"num", tpoly_json(rational->num)},
                       {"den", tpoly_json(rational->den)}};
    }
    out << j.dump() << "\n";
    return;
  }
  if (mode == Mode::latex) {
    if (rational)
      out << "\\frac{" << render_tpoly(rational->num, mode) << "}{"
          << render_tpoly(rational->den, mode) << "}\n";
    std::ostringstream body;
    bool first = true;
    for (int i = 0; i <= s.order(); ++i)
      append_t_term(body, first, s.coeff(i), static_cast<size_t>(i), mode);
    if (first) body << "0";
    out << body.str() << " + O(t^{" << s.order() + 1 << "})\n";
    return;
  }
  out << "order: " << s.order() << "\n";
  if (rational) {
    out << "rational.num: " << render_tpoly(rational->num, mode) << "\n";
    out << "rational.den: " << render_tpoly(rational->den, mode) << "\n";
  }
  for (int i = 0; i <= s.order(); ++i)
    out << "t^" << i << ": " << s.coeff(i).to_string() << "\n";
}

void print_element(std::ostream& out, const RingElement& e, Mode mode) {
  if (mode == Mode::json) {
    out << json{{"value", e.to_string()}}.dump() << "\n";
  } else {
    out << render_element(e, mode) << "\n";
  }
}

std::map<std::string, RingElement> parse_bindings(const std::vector<std::string>& raw) {
  std::map<std::string, RingElement> bindings;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      fail("PARSE_ERROR", "binding must look like NAME=EXPR: '" + item + "'");
    bindings[item.substr(0, eq)] = RingElement::parse(item.substr(eq + 1));
  }
  return bindings;
}

// ---- subcommand payloads ----------------------------------------------------

struct Options {
  Mode mode = Mode::text;
  int order = 16;
  int jobs = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string at;  // integer string; empty = unset
};

void run_class(const std::string& op, const std::vector<std::string>& args,
               const std::vector<std::string>& bind, const Options& opt,
               std::ostream& out) {
  auto need = [&](size_t count) {
    if (args.size() != count)
      fail("INVALID_ARGUMENT", "'class " + op + "' expects " + std::to_string(count) +
                                   " argument(s)");
  };
  auto as_int = [&](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (...) {
      fail("PARSE_ERROR", "expected an integer, got '" + s + "'");
    }
  };
  RingElement result;
  if (op == "eval") {
    need(1);
    result = RingElement::parse(args[0]);
  } else if (op == "projective") {
    need(1);
    result = projective_class(as_int(args[0]));
  } else if (op == "blowup") {
    need(3);
    result = blowup_class(RingElement::parse(args[0]), RingElement::parse(args[1]),
                          as_int(args[2]));
  } else if (op == "sb-minimal") {
    need(3);
    result = sb_minimal_decomposition(RingElement::parse(args[0]), as_int(args[1]),
                                      as_int(args[2]));
  } else if (op == "sb-product") {
    need(3);
    result = sb_product_class(RingElement::parse(args[0]), as_int(args[1]),
                              as_int(args[2]));
  } else if (op == "sb-sym2") {
    need(2);
    result = sb_sym2_class(RingElement::parse(args[0]), RingElement::parse(args[1]));
  } else if (op == "sym-projective") {
    need(2);
    result = sym_power_projective_class(as_int(args[0]), as_int(args[1]));
  } else if (op == "sym-sb") {
    need(3);
    result = sym_power_sb_class(RingElement::parse(args[0]), as_int(args[1]),
                                as_int(args[2]));
  } else if (op == "reduce-mod-l") {
    need(1);
    result = RingElement::parse(args[0]).reduce_mod_L();
  } else if (op == "substitute") {
    need(1);
    result = RingElement::parse(args[0]).substitute(parse_bindings(bind));
  } else if (op == "rewrite-square") {
    need(3);
    result = sb_square_rewrite(RingElement::parse(args[0]), args[1], as_int(args[2]));
  } else {
    fail("INVALID_ARGUMENT", "unknown class operation '" + op + "'");
  }
  if (!opt.at.empty())
    result = result.substitute({{kLefschetz, RingElement(Int(opt.at))}});
  print_element(out, result, opt.mode);
}

void run_zeta(const std::string& catalog, const std::vector<std::string>& params,
              bool want_rational, bool split, const Options& opt, std::ostream& out) {
  auto as_int = [&](size_t i, int fallback = INT_MIN) {
    if (i >= params.size()) {
      if (fallback != INT_MIN) return fallback;
      fail("INVALID_ARGUMENT", "missing parameter for zeta " + catalog);
    }
    try {
      return std::stoi(params[i]);
    } catch (...) {
      fail("PARSE_ERROR", "expected an integer, got '" + params[i] + "'");
    }
  };
  const int order = opt.order;
  TruncatedSeries series;
  std::optional<RationalSeries> rational;
  if (catalog == "point") {
    series = zeta_point(order);
    rational = RationalSeries{{RingElement(1)}, {RingElement(1), RingElement(-1)}};
  } else if (catalog == "affine") {
    int n = as_int(0, 1);
    series = zeta_affine(n, order);
    rational = RationalSeries{
        {RingElement(1)},
        {RingElement(1), -RingElement::lefschetz(static_cast<unsigned>(n))}};
  } else if (catalog == "projective") {
    int n = as_int(0);
    series = zeta_projective(n, order);
    rational = zeta_projective_rational(n);
  } else if (catalog == "conic") {
    RingElement c = split ? projective_class(1)
                          : (params.empty() ? RingElement::symbol("C")
                                            : RingElement::parse(params[0]));
    ConicZeta conic = zeta_conic(c, order);
    series = conic.series;
    rational = conic.rational;
  } else if (catalog == "sb-index2") {
    int r = as_int(0, 2);
    RingElement c = split ? projective_class(1) : RingElement::symbol("C");
    series = zeta_from_minimal(zeta_conic(c, order).series, 2, r);
  } else if (catalog == "sb-surface-partial") {
    RingElement b = split ? projective_class(2)
                          : (params.empty() ? RingElement::symbol("B")
                                            : RingElement::parse(params[0]));
    std::vector<RingElement> sym3;
    for (int i = 0; 3 * i <= order; ++i) {
      if (split)
        sym3.push_back(sym_power_projective_class(3 * i, 2));
      else
        sym3.push_back(i == 0 ? RingElement(1)
                              : RingElement::symbol("Sym" + std::to_string(3 * i) + "B"));
    }
    SurfaceZeta surface = zeta_sb_surface_partial(b, sym3, order);
    series = surface.series;
  } else if (catalog == "sb-mod-L") {
    int n = as_int(0);
    rational = zeta_mod_L_severi_brauer(n);
    series = expand_rational(*rational, order);
  } else if (catalog == "blowup") {
    int n = as_int(0, 2);
    series = blowup_zeta_transform(zeta_projective(n, order), zeta_point(order));
  } else {
    fail("INVALID_ARGUMENT", "unknown zeta catalog entry '" + catalog + "'");
  }
  if (want_rational && !rational) {
    int bound = std::clamp((opt.order - 2) / 2, 1, 6);
    rational = find_rational_form(series, bound);
  }
  if (!want_rational) rational.reset();
  print_series(out, series, rational, opt.mode);
}

std::string qpoly_latex(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Int c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (i > 1) out << (i > 9 ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i));
    }
    first = false;
  }
  return out.str();
}

void run_qbinom(int n, int d, const Options& opt, std::ostream& out) {
  QPolynomial p = gaussian_binomial(n, d);
  if (!opt.at.empty()) {
    Int value = p.eval(Int(opt.at));
    if (opt.mode == Mode::json)
      out << json{{"value", value.str()}}.dump() << "\n";
    else
      out << value.str() << "\n";
    return;
  }
  if (opt.mode == Mode::json) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    out << json{{"coefficients", coeffs}}.dump() << "\n";
  } else if (opt.mode == Mode::latex) {
    out << qpoly_latex(p) << "\n";
  } else {
    out << p.to_string("q") << "\n";
  }
}

void run_count(const std::string& path, int ext, int sym, bool zeta, const Options& opt,
               std::ostream& out) {
  ProjectiveVarietySpec spec = ProjectiveVarietySpec::parse_file(path);
  if (zeta) {
    PointCensus census = census_of(spec, 1, std::max(opt.order, 1), opt.jobs, opt.budget);
    std::vector<Int> coeffs = hasse_weil_series(census, opt.order);
    if (opt.mode == Mode::json) {
      json arr = json::array();
      for (const auto& c : coeffs) arr.push_back(c.str());
      out << json{{"order", opt.order}, {"coefficients", arr}}.dump() << "\n";
    } else {
      for (size_t i = 0; i < coeffs.size(); ++i)
        out << "t^" << i << ": " << coeffs[i].str() << "\n";
    }
    return;
  }
  Int result;
  if (sym >= 0) {
    PointCensus census = census_of(spec, 1, std::max(sym, 1), opt.jobs, opt.budget);
    result = sym_power_count(census, sym);
  } else {
    GaloisField field(spec.base_prime, static_cast<unsigned>(std::max(ext, 1)));
    result = Int(enumerate_points(spec, field, opt.jobs, opt.budget));
  }
  if (opt.mode == Mode::json)
    out << json{{"count", result.str()}}.dump() << "\n";
  else
    out << result.str() << "\n";
}

std::vector<std::vector<Rational>> parse_points(const std::string& text) {
  std::vector<std::vector<Rational>> points;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    std::vector<Rational> pt;
    std::istringstream coords(chunk);
    std::string c;
    while (std::getline(coords, c, ',')) {
      size_t first = c.find_first_not_of(" \t");
      if (first == std::string::npos) fail("PARSE_ERROR", "empty coordinate");
      size_t last = c.find_last_not_of(" \t");
      try {
        pt.emplace_back(Rational(c.substr(first, last - first + 1)));
      } catch (...) {
        fail("PARSE_ERROR", "bad rational coordinate '" + c + "'");
      }
    }
    if (!pt.empty()) points.push_back(std::move(pt));
  }
  if (points.empty()) fail("PARSE_ERROR", "no points given");
  return points;
}

void run_multisym(const std::string& op, const std::vector<std::string>& args,
                  unsigned vars, unsigned coords, const Options& opt, std::ostream& out) {
  auto as_uint = [&](const std::string& s) {
    try {
      long v = std::stol(s);
      if (v < 1) fail("INVALID_ARGUMENT", "expected a positive integer, got '" + s + "'");
      return static_cast<unsigned>(v);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail("PARSE_ERROR", "expected an integer, got '" + s + "'");
    }
  };
  auto read_file = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("PARSE_ERROR", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  if (op == "elem") {
    if (args.size() != 3) fail("INVALID_ARGUMENT", "usage: multisym elem d n k1,...,kn");
    unsigned d = as_uint(args[0]), n = as_uint(args[1]);
    ElementaryIndex k;
    std::istringstream parts(args[2]);
    std::string piece;
    while (std::getline(parts, piece, ','))
      k.k.push_back(static_cast<unsigned>(std::stoul(piece)));
    VectorVariablePoly e = elementary_multisym(k, d, n);
    if (opt.mode == Mode::json)
      out << json{{"d", d}, {"n", n}, {"polynomial", e.to_string()}}.dump() << "\n";
    else
      out << e.to_string() << "\n";
  } else if (op == "decompose") {
    if (args.size() != 1) fail("INVALID_ARGUMENT", "usage: multisym decompose file.poly");
    VectorVariablePoly p = VectorVariablePoly::parse(read_file(args[0]), vars, coords);
    EPolynomial e = decompose_invariant(p);
    if (opt.mode == Mode::json)
      out << json{{"decomposition", e.to_string()}}.dump() << "\n";
    else
      out << e.to_string() << "\n";
  } else if (op == "invariant") {
    if (args.size() != 1) fail("INVALID_ARGUMENT", "usage: multisym invariant file.poly");
    VectorVariablePoly p = VectorVariablePoly::parse(read_file(args[0]), vars, coords);
    bool inv = is_invariant(p);
    if (opt.mode == Mode::json)
      out << json{{"invariant", inv}}.dump() << "\n";
    else
      out << (inv ? "true" : "false") << "\n";
  } else if (op == "chow") {
    if (args.size() != 3) fail("INVALID_ARGUMENT", "usage: multisym chow d n \"p1;p2\"");
    unsigned d = as_uint(args[0]), n = as_uint(args[1]);
    auto points = parse_points(args[2]);
    if (points.size() != d)
      fail("DIMENSION_MISMATCH", "expected " + std::to_string(d) + " points, got " +
                                     std::to_string(points.size()));
    auto coordsv = chow_coordinates(points, n);
    if (opt.mode == Mode::json) {
      json arr = json::array();
      for (const auto& c : coordsv) {
        std::ostringstream s;
        s << c;
        arr.push_back(s.str());
      }
      out << json{{"coordinates", arr}}.dump() << "\n";
    } else {
      auto indices = elementary_indices(d, n);
      for (size_t i = 0; i < coordsv.size(); ++i)
        out << indices[i].to_string() << ": " << coordsv[i] << "\n";
    }
  } else if (op == "count") {
    if (args.size() != 2) fail("INVALID_ARGUMENT", "usage: multisym count d n");
    Int c = elementary_count(as_uint(args[0]), as_uint(args[1]));
    if (opt.mode == Mode::json)
      out << json{{"value", c.str()}}.dump() << "\n";
    else
      out << c.str() << "\n";
  } else {
    fail("INVALID_ARGUMENT", "unknown multisym operation '" + op + "'");
  }
}

void run_verify(const std::string& name, const Options& opt, std::ostream& out,
                int& exit_code) {
  std::vector<CheckResult> results;
  if (name == "all") {
    results = run_all_checks(opt.jobs);
  } else {
    results.push_back(run_check(name, opt.order, opt.jobs));
  }
  bool all_ok = true;
  for (const auto& r : results) all_ok = all_ok && r.ok;
  if (opt.mode == Mode::json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    out << json{{"ok", all_ok}, {"checks", arr}}.dump() << "\n";
  } else if (results.size() == 1) {
    out << (all_ok ? "OK" : "FAIL: " + results[0].detail) << "\n";
  } else {
    for (const auto& r : results)
      out << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    out << (all_ok ? "OK" : "FAIL") << "\n";
  }
  if (!all_ok) exit_code = 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations around classes of varieties, their zeta series, "
               "q-binomials, finite-field point counts, and multisymmetric polynomials",
               "motivic"};
  app.require_subcommand(1);
  // Inherited by the subcommands: lets --output appear after the subcommand.
  app.fallthrough(true);

  Options opt;
  std::string mode_name = "text";
  app.add_option("--output", mode_name, "Output mode: text, json, or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // Expression arguments are bound to scalar positional slots: CLI11 unpacks
  // values shaped like "[B]" into list elements when they land in a vector
  // option, and class symbols use exactly that syntax.
  // class
  auto* cls = app.add_subcommand("class", "Class-identity catalog and expression tools");
  std::string cls_op;
  std::array<std::string, 4> cls_slots;
  std::vector<std::string> cls_bind;
  std::string cls_at;
  cls->add_option("op", cls_op, "Operation")->required();
  for (size_t i = 0; i < cls_slots.size(); ++i)
    cls->add_option("arg" + std::to_string(i + 1), cls_slots[i], "Operation argument");
  cls->add_option("--bind", cls_bind, "Substitution binding NAME=EXPR (repeatable)")
      ->allow_extra_args(false);
  cls->add_option("--at", cls_at, "Evaluate at L = q after the operation");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Zeta-series catalog");
  std::string zeta_catalog;
  bool zeta_rational = false, zeta_split = false;
  int zeta_order = 16;
  std::array<std::string, 2> zeta_slots;
  zeta->add_option("catalog", zeta_catalog,
                   "point | affine | projective | conic | sb-index2 | "
                   "sb-surface-partial | sb-mod-L | blowup")
      ->required();
  for (size_t i = 0; i < zeta_slots.size(); ++i)
    zeta->add_option("param" + std::to_string(i + 1), zeta_slots[i], "Catalog parameter");
  zeta->add_option("--order", zeta_order, "Truncation order (default 16)");
  zeta->add_flag("--rational", zeta_rational, "Include the rational form");
  zeta->add_flag("--split", zeta_split, "Use split (trivial) classes");

  // qbinom
  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial coefficients");
  int qb_n = 0, qb_d = 0;
  std::string qb_at;
  qb->add_option("n", qb_n)->required();
  qb->add_option("d", qb_d)->required();
  qb->add_option("--at", qb_at, "Evaluate at q");

  // count
  auto* count = app.add_subcommand("count", "Point counts of projective varieties");
  std::string count_file;
  int count_ext = 1, count_sym = -1, count_order = 8;
  bool count_zeta = false;
  int count_jobs = 1;
  std::uint64_t count_budget = kDefaultEnumerationBudget;
  count->add_option("spec", count_file, "Variety spec file")->required();
  count->add_option("--ext", count_ext, "Count points over F_{p^e}");
  count->add_option("--sym", count_sym, "Count degree-n effective zero-cycles");
  count->add_flag("--zeta", count_zeta, "Print Hasse-Weil coefficients");
  count->add_option("--order", count_order, "Order for --zeta (default 8)");
  count->add_option("--jobs", count_jobs, "Parallel enumeration workers");
  count->add_option("--budget", count_budget, "Enumeration budget in tuples");

  // multisym
  auto* ms = app.add_subcommand("multisym", "Multisymmetric polynomial algebra");
  std::string ms_op;
  unsigned ms_vars = 0, ms_coords = 0;
  std::array<std::string, 3> ms_slots;
  ms->add_option("op", ms_op, "elem | decompose | invariant | chow | count")->required();
  for (size_t i = 0; i < ms_slots.size(); ++i)
    ms->add_option("arg" + std::to_string(i + 1), ms_slots[i], "Operation argument");
  ms->add_option("--vars", ms_vars, "Number of vector variables (else inferred)");
  ms->add_option("--coords", ms_coords, "Coordinates per vector (else inferred)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run bundled verification checks");
  std::string verify_name = "all";
  int verify_order = -1, verify_jobs = 1;
  verify->add_option("check", verify_name, "Check name or 'all'");
  verify->add_option("--order", verify_order, "Expansion order override");
  verify->add_option("--jobs", verify_jobs, "Parallel enumeration workers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  auto filled = [](const auto& slots) {
    std::vector<std::string> out_args;
    for (const auto& s : slots)
      if (!s.empty()) out_args.push_back(s);
    return out_args;
  };

  int exit_code = 0;
  try {
    opt.mode = parse_mode(mode_name);
    if (cls->parsed()) {
      opt.at = cls_at;
      run_class(cls_op, filled(cls_slots), cls_bind, opt, out);
    } else if (zeta->parsed()) {
      if (zeta_order < 0) fail("INVALID_ARGUMENT", "order must be >= 0");
      opt.order = zeta_order;
      run_zeta(zeta_catalog, filled(zeta_slots), zeta_rational, zeta_split, opt, out);
    } else if (qb->parsed()) {
      opt.at = qb_at;
      run_qbinom(qb_n, qb_d, opt, out);
    } else if (count->parsed()) {
      opt.order = count_order;
      opt.jobs = count_jobs;
      opt.budget = count_budget;
      run_count(count_file, count_ext, count_sym, count_zeta, opt, out);
    } else if (ms->parsed()) {
      run_multisym(ms_op, filled(ms_slots), ms_vars, ms_coords, opt, out);
    } else if (verify->parsed()) {
      opt.order = verify_order;
      opt.jobs = verify_jobs;
      run_verify(verify_name, opt, out, exit_code);
    }
  } catch (const Error& e) {
    err << "ERROR " << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "ERROR INTERNAL: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace motivic
