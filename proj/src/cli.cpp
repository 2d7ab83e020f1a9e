#include "planarop/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "planarop/bergman.hpp"
#include "planarop/limits.hpp"
#include "planarop/ortho.hpp"
#include "planarop/selberg.hpp"
#include "planarop/verify.hpp"

namespace planarop::cli {

namespace {

using nlohmann::json;

struct Options {
  double a = 2.0;
  double b = 1.0;
  double alpha = 0.0;
  int nr = kDefaultRadialNodes;
  int ntheta = kDefaultAngularNodes;
  std::string family = "gegenbauer";
  int n = 0;
  int m = 0;
  int nmax = 8;
  double re = 0.0;
  double im = 0.0;
  bool derived = false;
  std::string convention = "default";
  std::string basis = "gegenbauer";
  double v_re = 1.5;
  double v_im = 0.0;
  std::string strategy = "closed";
  std::optional<double> tol;
  int N = 2;
  bool direct = false;
  std::string regime = "hermite";
  std::string out;
  std::string format = "json";
};

// ok == false maps to exit code 2.
struct Emitted {
  json doc;
  std::string csv;
  bool ok = true;
};

json cx(complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& mat) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(cx(mat(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json meta(const json& params, const json& rule, const json& convention) {
  return {{"version", kVersion}, {"params", params}, {"rule", rule}, {"convention", convention}};
}

json rule_json(int n_r, int n_theta) { return {{"n_r", n_r}, {"n_theta", n_theta}}; }

bool is_jacobi(const PolynomialFamily& f) {
  return f.kind == FamilyKind::JacobiMinus || f.kind == FamilyKind::JacobiPlus;
}

EllipseParams measure_ellipse(const Options& o, const PolynomialFamily& f) {
  const EllipseParams p = make_params(o.a, o.b);
  return (o.derived || is_jacobi(f)) ? p.derived() : p;
}

Measure configured_measure(const Options& o, const PolynomialFamily& f) {
  Measure m = paired_measure(f, measure_ellipse(o, f));
  if (o.convention == "normalized") m.normalized = true;
  else if (o.convention == "flat") m.normalized = false;
  else if (o.convention != "default")
    throw std::invalid_argument("convention must be normalized, flat or default");
  return m;
}

json ellipse_json(const EllipseParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"R", p.R}, {"r", p.r}, {"x_star", p.x_star}};
}

Emitted cmd_eval(const Options& o) {
  const PolynomialFamily f = parse_family(o.family, o.alpha);
  if (o.n < 0) throw std::invalid_argument("--n must be non-negative");
  const complex z(o.re, o.im);
  Emitted e;
  e.doc["meta"] = meta({{"family", to_string(f)}, {"alpha", f.alpha}, {"n", o.n}}, nullptr, nullptr);
  e.doc["data"] = {{"z", cx(z)}, {"value", cx(eval_family(f, o.n, z))}};
  return e;
}

Emitted cmd_gram(const Options& o) {
  const PolynomialFamily f = parse_family(o.family, o.alpha);
  const Measure m = configured_measure(o, f);
  const QuadratureRule rule = build_rule(m, o.nr, o.ntheta);
  const GramResult g = gram_matrix(f, m, o.nmax, rule);
  Emitted e;
  e.doc["meta"] = meta({{"family", to_string(f)}, {"alpha", f.alpha}, {"nmax", o.nmax},
                        {"measure", to_string(m.kind)}, {"ellipse", ellipse_json(m.params)}},
                       rule_json(rule.n_r, rule.n_theta), to_string(m.convention()));
  json diag = json::array();
  for (int i = 0; i <= o.nmax; ++i) diag.push_back(g.matrix(i, i).real());
  e.doc["data"] = {{"matrix", matrix_json(g.matrix)},
                   {"diagonal", diag},
                   {"closed_norms", g.closed_norms},
                   {"diag_relative_errors", g.diag_relative_errors},
                   {"max_offdiag", g.max_offdiag},
                   {"max_offdiag_relative", g.max_offdiag_relative()},
                   {"max_diag_error", g.max_diag_error()}};
  if (o.tol) e.ok = g.max_offdiag_relative() <= *o.tol && g.max_diag_error() <= *o.tol;
  return e;
}

Emitted cmd_norms(const Options& o, bool table) {
  const PolynomialFamily f = parse_family(o.family, o.alpha);
  const Measure m = configured_measure(o, f);
  const int lo = table ? 0 : o.n;
  const int hi = table ? o.nmax : o.n;
  if (lo < 0 || hi < lo) throw std::invalid_argument("degree range is empty");
  Emitted e;
  e.doc["meta"] = meta({{"family", to_string(f)}, {"alpha", f.alpha}, {"measure", to_string(m.kind)},
                        {"ellipse", ellipse_json(m.params)}},
                       nullptr, to_string(m.convention()));
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "n,norm\n";
  for (int n = lo; n <= hi; ++n) {
    const double h = closed_norm(f, m, n);
    rows.push_back({{"n", n}, {"norm", h}});
    csv << n << ',' << h << '\n';
  }
  e.doc["data"] = {{"norms", rows}};
  e.csv = csv.str();
  return e;
}

Emitted cmd_hessenberg(const Options& o) {
  const EllipseParams p = make_params(o.a, o.b);
  const double tol = o.tol.value_or(1e-8);
  HessenbergMatrix h;
  json closed = json::array();
  std::optional<QuadratureRule> rule;
  if (o.basis == "gegenbauer") {
    HessenbergStrategy s;
    if (o.strategy == "closed") s = HessenbergStrategy::Closed;
    else if (o.strategy == "quadrature") s = HessenbergStrategy::Quadrature;
    else throw std::invalid_argument("strategy must be closed or quadrature");
    if (s == HessenbergStrategy::Quadrature) rule = build_rule(Measure::area_alpha(p, o.alpha), o.nr, o.ntheta);
    h = hessenberg(o.alpha, p, o.nmax, s, rule ? &*rule : nullptr);
  } else if (o.basis == "christoffel") {
    if (o.strategy != "closed" && o.strategy != "quadrature")
      throw std::invalid_argument("strategy must be closed or quadrature");
    const ChristoffelBasis basis(o.alpha, p, complex(o.v_re, o.v_im), o.nmax + 1);
    rule = build_rule(Measure::area_alpha(p, o.alpha), o.nr, o.ntheta);
    h = hessenberg(basis, o.nmax, *rule);
    for (int n = 2; n <= o.nmax; ++n)
      for (int l = 0; l <= n - 2; ++l)
        closed.push_back({{"l", l}, {"n", n}, {"closed", cx(christoffel_entry_closed(basis, l, n))},
                          {"quadrature", cx(h.at(l, n))}});
  } else {
    throw std::invalid_argument("basis must be gegenbauer or christoffel");
  }
  Emitted e;
  e.doc["meta"] = meta({{"basis", to_string(h.basis)}, {"strategy", to_string(h.strategy)},
                        {"alpha", o.alpha}, {"nmax", o.nmax}, {"v", cx(h.v)}, {"tol", tol},
                        {"ellipse", ellipse_json(p)}},
                       rule ? rule_json(rule->n_r, rule->n_theta) : json(nullptr), "normalized");
  json norms = json::array();
  for (int n = 0; n <= o.nmax; ++n) norms.push_back(h.column_norm(n));
  e.doc["data"] = {{"entries", matrix_json(h.entries)},
                   {"column_norms", norms},
                   {"bandwidth", bandwidth(h, tol)}};
  if (!closed.empty()) e.doc["data"]["closed_entries"] = closed;
  return e;
}

Emitted cmd_selberg(const Options& o) {
  const EllipseParams p = make_params(o.a, o.b);
  const SelbergResult s = selberg(o.alpha, p, o.N, o.direct);
  Emitted e;
  e.doc["meta"] = meta({{"alpha", o.alpha}, {"N", o.N}, {"ellipse", ellipse_json(p)}},
                       o.direct ? rule_json(16, 32) : json(nullptr), "normalized");
  e.doc["data"] = {{"closed_log", s.closed_log},
                   {"product_log", s.product_log},
                   {"closed", std::exp(s.closed_log)},
                   {"product", std::exp(s.product_log)},
                   {"closed_vs_product", s.closed_vs_product}};
  if (s.direct) {
    e.doc["data"]["direct"] = *s.direct;
    e.doc["data"]["direct_vs_closed"] = *s.direct_vs_closed;
  }
  const double tol = o.tol.value_or(1e-9);
  e.ok = s.closed_vs_product <= tol && (!s.direct_vs_closed || *s.direct_vs_closed <= tol);
  return e;
}

Emitted cmd_limits(const Options& o) {
  const LimitRegime regime = parse_regime(o.regime);
  LimitReport r;
  switch (regime) {
    case LimitRegime::HermitePlane:
      r = hermite_limit(make_params(o.a, o.b), o.n, o.m, {10.0, 100.0, 1000.0});
      break;
    case LimitRegime::DiscTruncatedUnitary:
      r = disc_limit(o.a, o.n, o.m, o.alpha, {0.9 * o.a, 0.99 * o.a, 0.999 * o.a});
      break;
    case LimitRegime::RealLine:
      r = realline_limit(o.a, o.n, o.m, o.alpha, {0.3, 0.1, 0.03});
      break;
  }
  Emitted e;
  e.doc["meta"] = meta({{"regime", to_string(regime)}, {"n", o.n}, {"m", o.m}, {"alpha", r.alpha},
                        {"a", r.a}},
                       nullptr, regime == LimitRegime::HermitePlane ? "flat" : "normalized");
  json steps = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "parameter,residual\n";
  for (const LimitStep& s : r.steps) {
    steps.push_back({{"parameter", s.parameter}, {"value", cx(s.value)}, {"target", s.target},
                     {"residual", s.residual}});
    csv << s.parameter << ',' << s.residual << '\n';
  }
  e.doc["data"] = {{"steps", steps},
                   {"residual", r.residual_relative ? "relative" : "absolute"},
                   {"reference", r.reference},
                   {"reference_closed", r.reference_closed},
                   {"tolerance", r.tolerance},
                   {"decreasing", r.decreasing},
                   {"verdict", r.verdict}};
  e.csv = csv.str();
  e.ok = r.verdict;
  return e;
}

Emitted cmd_contour(const Options& o) {
  const EllipseParams p = make_params(o.a, o.b);
  const ContourResult c = contour_check(p, o.n, o.m);
  const double err = c.error();
  Emitted e;
  e.doc["meta"] = meta({{"n", o.n}, {"m", o.m}, {"ellipse", ellipse_json(p)}},
                       {{"points", c.points}}, "flat");
  e.doc["data"] = {{"value", cx(c.value)}, {"expected", cx(c.expected)}, {"error", err}};
  e.ok = err <= o.tol.value_or(1e-10);
  return e;
}

Emitted cmd_verify() {
  const auto checks = run_verification();
  json list = json::array();
  for (const Check& c : checks)
    list.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  Emitted e;
  e.ok = all_passed(checks);
  e.doc["meta"] = meta(json::object(), rule_json(kDefaultRadialNodes, kDefaultAngularNodes), nullptr);
  e.doc["data"] = {{"checks", list}, {"passed", e.ok}};
  return e;
}

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("PLANAROP_OUT_DIR"); dir != nullptr && *dir != '\0')
      path = std::filesystem::path(dir) / path;
  }
  return path;
}

void add_domain(CLI::App* app, Options& o) {
  app->add_option("--a", o.a, "major half-axis")->capture_default_str();
  app->add_option("--b", o.b, "minor half-axis")->capture_default_str();
}

void add_rule(CLI::App* app, Options& o) {
  app->add_option("--nr", o.nr, "radial quadrature nodes")->capture_default_str();
  app->add_option("--ntheta", o.ntheta, "angular quadrature nodes")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Planar orthogonal polynomials on ellipses", "planarop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* eval = app.add_subcommand("eval", "evaluate one polynomial at a complex point");
  eval->add_option("--family", o.family)->capture_default_str();
  eval->add_option("--alpha", o.alpha)->capture_default_str();
  eval->add_option("--n", o.n)->capture_default_str();
  eval->add_option("--re", o.re)->capture_default_str();
  eval->add_option("--im", o.im)->capture_default_str();

  auto* gram = app.add_subcommand("gram", "Gram matrix by quadrature against closed norms");
  gram->add_option("--family", o.family)->capture_default_str();
  gram->add_option("--alpha", o.alpha)->capture_default_str();
  gram->add_option("--nmax", o.nmax)->capture_default_str();
  gram->add_option("--convention", o.convention, "normalized|flat|default")->capture_default_str();
  gram->add_flag("--derived", o.derived, "use the derived ellipse");
  gram->add_option("--tol", o.tol, "fail when errors exceed this");
  add_domain(gram, o);
  add_rule(gram, o);

  auto* norms = app.add_subcommand("norms", "closed-form norms");
  norms->add_option("--family", o.family)->capture_default_str();
  norms->add_option("--alpha", o.alpha)->capture_default_str();
  norms->add_option("--n", o.n)->capture_default_str();
  auto* norms_nmax = norms->add_option("--nmax", o.nmax, "tabulate 0..nmax");
  norms->add_option("--convention", o.convention)->capture_default_str();
  norms->add_flag("--derived", o.derived);
  add_domain(norms, o);

  auto* hess = app.add_subcommand("hessenberg", "multiplication operator and bandwidth");
  hess->add_option("--basis", o.basis, "gegenbauer|christoffel")->capture_default_str();
  hess->add_option("--strategy", o.strategy, "closed|quadrature")->capture_default_str();
  hess->add_option("--alpha", o.alpha)->capture_default_str();
  hess->add_option("--nmax", o.nmax)->capture_default_str();
  hess->add_option("--v-re", o.v_re)->capture_default_str();
  hess->add_option("--v-im", o.v_im)->capture_default_str();
  hess->add_option("--tol", o.tol, "bandwidth tolerance (default 1e-8)");
  add_domain(hess, o);
  add_rule(hess, o);

  auto* sel = app.add_subcommand("selberg", "complex Selberg integral");
  sel->add_option("--alpha", o.alpha)->capture_default_str();
  sel->add_option("--N", o.N)->capture_default_str();
  sel->add_flag("--direct", o.direct, "add the tensor quadrature value (N <= 2)");
  sel->add_option("--tol", o.tol);
  add_domain(sel, o);

  auto* lim = app.add_subcommand("limits", "limit experiments");
  lim->add_option("--regime", o.regime, "hermite|disc|realline")->capture_default_str();
  lim->add_option("--n", o.n)->capture_default_str();
  lim->add_option("--m", o.m)->capture_default_str();
  lim->add_option("--alpha", o.alpha)->capture_default_str();
  add_domain(lim, o);

  auto* contour = app.add_subcommand("contour", "circle integral for Chebyshev T");
  contour->add_option("--n", o.n)->capture_default_str();
  contour->add_option("--m", o.m)->capture_default_str();
  contour->add_option("--tol", o.tol);
  add_domain(contour, o);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  for (auto* sub : {eval, gram, norms, hess, sel, lim, contour, verify}) {
    sub->add_option("--out", o.out, "output file");
    sub->add_option("--format", o.format, "json|csv")->capture_default_str();
  }

  std::vector<const char*> argv{"planarop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  const bool csv_ok = lim->parsed() || norms->parsed();
  if (o.format != "json" && o.format != "csv") {
    err << "error: --format must be json or csv\n";
    return kBadArguments;
  }
  if (o.format == "csv" && !csv_ok) {
    err << "error: csv output is only available for limits and norms\n";
    return kBadArguments;
  }

  Emitted e;
  try {
    if (eval->parsed()) e = cmd_eval(o);
    else if (gram->parsed()) e = cmd_gram(o);
    else if (norms->parsed()) e = cmd_norms(o, norms_nmax->count() > 0);
    else if (hess->parsed()) e = cmd_hessenberg(o);
    else if (sel->parsed()) e = cmd_selberg(o);
    else if (lim->parsed()) e = cmd_limits(o);
    else if (contour->parsed()) e = cmd_contour(o);
    else e = cmd_verify();
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadArguments;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadArguments;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << '\n';
    return kBadArguments;
  }

  const std::string text = o.format == "csv" ? e.csv : e.doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    const auto path = resolve_out(o.out);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << path.string() << '\n';
      return kBadArguments;
    }
    file << text;
  }
  if (!e.ok) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace planarop::cli
