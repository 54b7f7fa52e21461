#include "qpr/cli/dispatch.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qpr/asymptotics.hpp"
#include "qpr/errors.hpp"
#include "qpr/qairy.hpp"
#include "qpr/qcore.hpp"
#include "qpr/scaled.hpp"
#include "qpr/version.hpp"

namespace qpr::cli {

namespace {

QContext make_context(const JobConfig& c) { return QContext(c.q, c.tol, c.max_terms); }

Table new_table(const JobConfig& c, std::vector<Column> columns) {
  Table t;
  t.columns = std::move(columns);
  t.metadata["command"] = command_name(c.command);
  t.metadata["version"] = kVersion;
  t.metadata["q"] = c.q;
  t.metadata["tol"] = c.tol;
  t.metadata["max_terms"] = c.max_terms;
  return t;
}

void set_family_metadata(Table& t, const FamilySpec& spec) {
  t.metadata["family"] = spec.name();
  if (!spec.is_symmetric()) t.metadata["alpha"] = spec.alpha();
}

std::vector<Complex> z_points(const JobConfig& c) {
  std::vector<Complex> pts = c.z;
  if (!c.z_grid.empty()) {
    for (double v : parse_grid(c.z_grid)) pts.emplace_back(v, 0.0);
  }
  if (pts.empty()) throw InvalidArgument("give at least one --z or a --z-grid");
  return pts;
}

std::vector<Complex> t_points(const JobConfig& c) {
  if (c.t.empty()) throw InvalidArgument("give at least one --t");
  return c.t;
}

std::int64_t terms_or(const JobConfig& c, std::int64_t fallback) { return c.terms >= 0 ? c.terms : fallback; }

Table run_airy(const JobConfig& c) {
  const QContext ctx = make_context(c);
  Table t = new_table(c, {{"z", ColumnType::kComplex}, {"value", ColumnType::kComplex}});
  for (const Complex& z : z_points(c)) t.rows.push_back({z, airy_eval(z, ctx)});
  return t;
}

Table run_fq(const JobConfig& c) {
  const QContext ctx = make_context(c);
  Table t = new_table(c, {{"z", ColumnType::kComplex}, {"s", ColumnType::kComplex}, {"value", ColumnType::kComplex}});
  for (const Complex& z : z_points(c)) t.rows.push_back({z, c.s, fq_eval(z, c.s, ctx)});
  return t;
}

Table run_eval(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FamilySpec spec = make_family(c.family);
  if (c.x) {
    Table t = new_table(c, {{"n", ColumnType::kInt},
                            {"x", ColumnType::kComplex},
                            {"log_mag", ColumnType::kReal},
                            {"phase", ColumnType::kReal},
                            {"value", ColumnType::kComplex}});
    set_family_metadata(t, spec);
    const ScaledValue v = eval_raw(spec, c.n, *c.x, ctx);
    t.rows.push_back({c.n, *c.x, v.log_mag(), v.phase(), v.to_complex()});
    return t;
  }
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"t", ColumnType::kComplex},
                          {"table_value", ColumnType::kComplex},
                          {"direct_value", ColumnType::kComplex},
                          {"rel_err", ColumnType::kReal}});
  set_family_metadata(t, spec);
  for (const Complex& tv : t_points(c)) {
    const CrossCheck cc = cross_check_direct(spec, c.n, tv, ctx);
    t.rows.push_back({c.n, tv, cc.coeff_value, cc.direct_value, cc.rel_err});
  }
  return t;
}

Table run_coeffs(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FamilySpec spec = make_family(c.family);
  std::vector<Column> cols{{"n", ColumnType::kInt}, {"k", ColumnType::kInt}, {"coeff", ColumnType::kReal}};
  if (c.exact) cols.push_back({"exact", ColumnType::kText});
  Table t = new_table(c, cols);
  set_family_metadata(t, spec);
  const CoeffTable table = coeff_table(spec, c.n_max, ctx);
  t.metadata["u"] = table.u_role() == URole::kInverseTSquared ? "1/t^2" : "1/t";
  std::vector<std::vector<Rational>> exact_rows;
  if (c.exact) exact_rows = exact::coeff_rows(spec, static_cast<long>(c.n_max), parse_rational(c.q_text));
  for (std::int64_t n = 0; n <= c.n_max; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      std::vector<Cell> row{n, k, table.at(n, k)};
      if (c.exact) row.emplace_back(exact_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].get_str());
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table run_converge(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FamilySpec spec = make_family(c.family);
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"value", ColumnType::kComplex},
                          {"limit", ColumnType::kComplex},
                          {"err", ColumnType::kReal},
                          {"err_normalized", ColumnType::kReal}});
  set_family_metadata(t, spec);
  const Complex tv = t_points(c).front();
  t.metadata["t"] = {tv.real(), tv.imag()};
  for (const ConvergenceRow& r : convergence_table(spec, tv, c.n_max, ctx)) {
    t.rows.push_back({r.n, r.value, r.limit, r.err, r.err_normalized});
  }
  return t;
}

Table run_expand(const JobConfig& c) {
  const QContext ctx = make_context(c);
  if (c.kind == "lambda") {
    const std::int64_t J = terms_or(c, 30);
    Table t = new_table(c, {{"j", ColumnType::kInt}, {"lambda", ColumnType::kComplex}});
    t.metadata["c1"] = c.c1;
    t.metadata["lambda0"] = {c.lambda0.real(), c.lambda0.imag()};
    const PowerSeriesCoeffs lam = lambda_sequence(c.c1, c.lambda0, J, ctx);
    for (std::size_t j = 0; j < lam.coeffs.size(); ++j) t.rows.push_back({static_cast<std::int64_t>(j), lam.coeffs[j]});
    return t;
  }
  if (c.kind == "an1") {
    const FamilySpec spec = make_family(c.family);
    Table t = new_table(c, {{"n", ColumnType::kInt},
                            {"lhs", ColumnType::kReal},
                            {"rhs", ColumnType::kReal},
                            {"signed_err", ColumnType::kReal},
                            {"abs_err", ColumnType::kReal}});
    set_family_metadata(t, spec);
    const CoeffTable table = coeff_table(spec, c.n_max, ctx);
    for (std::int64_t n = 0; n <= c.n_max; ++n) {
      const An1Report r = an1_identity_check(table, n, ctx);
      t.rows.push_back({r.n, r.lhs, r.rhs, r.signed_err, r.abs_err});
    }
    return t;
  }

  FamilySpec spec = FamilySpec::q_inv_hermite();
  std::int64_t terms = 0;
  LaguerreExpansionForm form = LaguerreExpansionForm::kCorrected;
  if (c.kind == "hermite") {
    terms = terms_or(c, 30);
  } else if (c.kind == "sw") {
    spec = FamilySpec::stieltjes_wigert();
    terms = terms_or(c, 12);
  } else if (c.kind == "laguerre") {
    spec = FamilySpec::q_laguerre(c.family.alpha);
    terms = terms_or(c, 12);
    if (c.form == "literal") {
      form = LaguerreExpansionForm::kLiteral;
    } else if (c.form != "corrected") {
      throw InvalidArgument("--form must be corrected or literal");
    }
    t_points(c);
  } else {
    throw InvalidArgument("unknown expansion kind '" + c.kind + "' (hermite, sw, laguerre, lambda, an1)");
  }
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"t", ColumnType::kComplex},
                          {"expansion", ColumnType::kComplex},
                          {"table_value", ColumnType::kComplex},
                          {"abs_diff", ColumnType::kReal}});
  set_family_metadata(t, spec);
  t.metadata["terms"] = terms;
  if (c.kind == "laguerre") t.metadata["form"] = c.form;
  const CoeffTable table = coeff_table(spec, c.n, ctx);
  for (const Complex& tv : t_points(c)) {
    Complex e;
    if (c.kind == "hermite") {
      e = hermite_expansion(c.n, tv, terms, ctx);
    } else if (c.kind == "sw") {
      e = sw_expansion(c.n, tv, terms, ctx);
    } else {
      e = laguerre_expansion(c.n, tv, spec.alpha(), terms, ctx, form);
    }
    const Complex v = eval_upoly(table, c.n, tv);
    t.rows.push_back({c.n, tv, e, v, std::abs(e - v)});
  }
  return t;
}

Table run_bounds(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FamilySpec spec = make_family(c.family);
  if (c.angles < 1) throw InvalidArgument("--angles must be >= 1");
  std::vector<Complex> pts;
  for (double r : parse_grid(c.t_grid)) {
    for (std::int64_t a = 0; a < c.angles; ++a) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(c.angles)));
    }
  }
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"t", ColumnType::kComplex},
                          {"lhs", ColumnType::kReal},
                          {"rhs", ColumnType::kReal},
                          {"margin", ColumnType::kReal},
                          {"K", ColumnType::kReal}});
  set_family_metadata(t, spec);
  t.metadata["t_grid"] = c.t_grid;
  t.metadata["angles"] = c.angles;
  for (const BoundReport& r : bound_grid(spec, c.n_max, pts, c.K, ctx)) {
    t.rows.push_back({r.n, r.t, r.lhs, r.rhs, r.margin, r.K});
  }
  return t;
}

Table run_zeros(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FamilySpec spec = make_family(c.family);
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"largest_zero", ColumnType::kReal},
                          {"edge", ColumnType::kReal},
                          {"ratio", ColumnType::kReal}});
  set_family_metadata(t, spec);
  t.metadata["edge"] = spec.is_symmetric() ? "q^(-n/2)" : "q^(-2n-alpha)";
  for (std::int64_t n = 1; n <= c.n_max; ++n) {
    const double dn = static_cast<double>(n);
    const double edge = spec.is_symmetric() ? std::pow(c.q, -dn / 2.0) : std::pow(c.q, -2.0 * dn - spec.alpha());
    const double z = largest_zero(spec, n, ctx);
    t.rows.push_back({n, z, edge, z / edge});
  }
  return t;
}

Table run_feq(const JobConfig& c) {
  const QContext ctx = make_context(c);
  const FeqSolution sol = solve_feq(c.sign, c.n_max, ctx);
  if (!c.fb_x.empty()) {
    Table t = new_table(c, {{"x", ColumnType::kReal}, {"fb", ColumnType::kReal}});
    t.metadata["sign_a"] = c.sign;
    t.metadata["order"] = c.n_max;
    for (double x : c.fb_x) t.rows.push_back({x, fb_eval(x, sol, ctx)});
    return t;
  }
  Table t = new_table(c, {{"n", ColumnType::kInt},
                          {"g", ColumnType::kReal},
                          {"f", ColumnType::kReal},
                          {"log_abs_f", ColumnType::kReal},
                          {"darboux", ColumnType::kReal},
                          {"g_over_darboux", ColumnType::kReal}});
  t.metadata["sign_a"] = c.sign;
  if (sol.beta) {
    t.metadata["alpha"] = *sol.alpha;
    t.metadata["beta"] = *sol.beta;
  }
  for (std::int64_t n = 0; n <= c.n_max; ++n) {
    const double g = sol.normalized[static_cast<std::size_t>(n)];
    const ScaledValue& f = sol.scaled[static_cast<std::size_t>(n)];
    const double d = c.sign == -1 ? darboux_tail(n, sol, ctx) : std::nan("");
    t.rows.push_back({n, g, f.to_real(), f.log_mag(), d, g / d});
  }
  return t;
}

std::int64_t env_max_terms(std::int64_t fallback) {
  const char* env = std::getenv("QPR_MAX_TERMS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw InvalidArgument(std::string("QPR_MAX_TERMS must be a positive integer, got '") + env + "'");
  return v;
}

// Registers every flag and returns the app; `cfg` receives the values.
void build_app(CLI::App& app, JobConfig& cfg, std::string& format, std::vector<std::string>& z_text, std::string& s_text,
               std::vector<std::string>& t_text, std::string& x_text, std::string& lambda0_text, double& k_value) {
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--q", cfg.q_text, "base q in (0,1)")->capture_default_str();
  app.add_option("--tol", cfg.tol, "tail tolerance")->capture_default_str();
  app.add_option("--max-terms", cfg.max_terms, "series term cap (default from QPR_MAX_TERMS, else 4000)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default: standard output)");
  app.add_option("--family", cfg.family.name,
                 "qinv-hermite, q-laguerre, stieltjes-wigert, generic-symmetric, generic-laguerre")
      ->capture_default_str();
  app.add_option("--alpha", cfg.family.alpha, "q-Laguerre parameter")->capture_default_str();
  app.add_option("--c", cfg.family.c, "exponent c of the generic symmetric family")->capture_default_str();
  app.add_option("--schedule", cfg.family.schedule,
                 "generic schedule: unit or qinv-hermite (symmetric); stieltjes-wigert or q-laguerre (Laguerre-type)");

  auto* airy = app.add_subcommand("airy", "A_q(z). Columns: z_re,z_im,value_re,value_im");
  airy->add_option("--z", z_text, "argument, 're' or 're,im' (repeatable)");
  airy->add_option("--z-grid", cfg.z_grid, "real arguments start:stop:step");

  auto* fq = app.add_subcommand("fq", "F_q(z; s). Columns: z_re,z_im,s_re,s_im,value_re,value_im");
  fq->add_option("--z", z_text, "argument (repeatable)");
  fq->add_option("--z-grid", cfg.z_grid, "real arguments start:stop:step");
  fq->add_option("--s", s_text, "parameter s")->capture_default_str();

  auto* eval = app.add_subcommand(
      "eval",
      "p_n at a raw argument (--x; columns n,x_re,x_im,log_mag,phase,value_re,value_im) or the scaled value at t "
      "two ways (--t; columns n,t_re,t_im,table_value_re,table_value_im,direct_value_re,direct_value_im,rel_err)");
  eval->add_option("--n", cfg.n, "degree")->capture_default_str();
  eval->add_option("--x", x_text, "raw argument");
  eval->add_option("--t", t_text, "scaled argument (repeatable)");

  auto* coeffs = app.add_subcommand("coeffs", "scaled coefficient table. Columns: n,k,coeff[,exact]");
  coeffs->add_option("--n-max", cfg.n_max, "last row")->capture_default_str();
  coeffs->add_flag("--exact", cfg.exact, "add exact rational entries (q must be rational)");

  auto* converge = app.add_subcommand(
      "converge", "scaled values against their limit. Columns: n,value_re,value_im,limit_re,limit_im,err,err_normalized");
  converge->add_option("--t", t_text, "scaled argument")->required();
  converge->add_option("--n-max", cfg.n_max, "last n")->capture_default_str();

  auto* expand = app.add_subcommand(
      "expand",
      "asymptotic expansions. hermite|sw|laguerre: n,t_re,t_im,expansion_re,expansion_im,table_value_re,"
      "table_value_im,abs_diff; lambda: j,lambda_re,lambda_im; an1: n,lhs,rhs,signed_err,abs_err");
  expand->add_option("--kind", cfg.kind, "hermite, sw, laguerre, lambda or an1")->capture_default_str();
  expand->add_option("--n", cfg.n, "degree")->capture_default_str();
  expand->add_option("--n-max", cfg.n_max, "last n (an1)")->capture_default_str();
  expand->add_option("--t", t_text, "scaled argument (repeatable)");
  expand->add_option("--terms", cfg.terms, "truncation order (default 30 for hermite and lambda, 12 otherwise)");
  expand->add_option("--form", cfg.form, "laguerre: corrected or literal")->capture_default_str();
  expand->add_option("--c1", cfg.c1, "lambda: c_1")->capture_default_str();
  expand->add_option("--lambda0", lambda0_text, "lambda: lambda_0")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "bound margins on a polar grid. Columns: n,t_re,t_im,lhs,rhs,margin,K");
  bounds->add_option("--n-max", cfg.n_max, "last n")->capture_default_str();
  bounds->add_option("--t-grid", cfg.t_grid, "radii |t| as start:stop:step")->capture_default_str();
  bounds->add_option("--angles", cfg.angles, "equally spaced arguments per radius")->capture_default_str();
  bounds->add_option("--K", k_value, "bound constant (default: sup of the scaled coefficients)");

  auto* zeros = app.add_subcommand("zeros", "largest zero of p_n for n = 1..n_max. Columns: n,largest_zero,edge,ratio");
  zeros->add_option("--n-max", cfg.n_max, "last n")->capture_default_str();

  auto* feq = app.add_subcommand(
      "feq", "functional-equation coefficients (n,g,f,log_abs_f,darboux,g_over_darboux) or f^b (--x; x,fb)");
  feq->add_option("--sign", cfg.sign, "a = +1 or -1")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  feq->add_option("--n-max", cfg.n_max, "last coefficient")->capture_default_str();
  feq->add_option("--x", cfg.fb_x, "evaluate f^b at these points (repeatable)");
}

}  // namespace

Table run_job(const JobConfig& config) {
  switch (config.command) {
    case Command::kAiry: return run_airy(config);
    case Command::kFq: return run_fq(config);
    case Command::kEval: return run_eval(config);
    case Command::kCoeffs: return run_coeffs(config);
    case Command::kConverge: return run_converge(config);
    case Command::kExpand: return run_expand(config);
    case Command::kBounds: return run_bounds(config);
    case Command::kZeros: return run_zeros(config);
    case Command::kFeq: return run_feq(config);
  }
  throw InvalidArgument("unknown command");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("q-orthogonal polynomial soft-edge asymptotics toolkit", "qpr");
  JobConfig cfg;
  std::string format = "csv";
  std::vector<std::string> z_text, t_text;
  std::string s_text = "0", x_text, lambda0_text = "0";
  double k_value = std::nan("");
  try {
    build_app(app, cfg, format, z_text, s_text, t_text, x_text, lambda0_text, k_value);
    app.parse(argc, argv);
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::Success&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    const std::pair<const char*, Command> names[] = {
        {"airy", Command::kAiry},     {"fq", Command::kFq},         {"eval", Command::kEval},
        {"coeffs", Command::kCoeffs}, {"converge", Command::kConverge}, {"expand", Command::kExpand},
        {"bounds", Command::kBounds}, {"zeros", Command::kZeros},   {"feq", Command::kFeq}};
    for (const auto& [name, cmd] : names) {
      if (sub == name) cfg.command = cmd;
    }
    try {
      cfg.q = to_double(parse_rational(cfg.q_text));
    } catch (const InvalidArgument&) {
      cfg.q = parse_complex(cfg.q_text).real();  // exponent notation
    }
    if (app.count("--max-terms") == 0) cfg.max_terms = env_max_terms(cfg.max_terms);
    cfg.format = format == "json" ? Format::kJson : Format::kCsv;
    for (const auto& s : z_text) cfg.z.push_back(parse_complex(s));
    for (const auto& s : t_text) cfg.t.push_back(parse_complex(s));
    cfg.s = parse_complex(s_text);
    if (!x_text.empty()) cfg.x = parse_complex(x_text);
    cfg.lambda0 = parse_complex(lambda0_text);
    if (!std::isnan(k_value)) cfg.K = k_value;

    const Table table = run_job(cfg);
    std::ostringstream buffer;
    if (cfg.format == Format::kJson) {
      write_json(table, buffer);
    } else {
      write_csv(table, buffer);
    }
    if (cfg.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      file << buffer.str();
      if (!file) throw InvalidArgument("cannot write " + cfg.out);
    }
    return 0;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qpr::cli
