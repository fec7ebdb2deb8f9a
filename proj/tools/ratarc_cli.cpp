#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ratarc/bloch_cartan.hpp"
#include "ratarc/census.hpp"
#include "ratarc/config.hpp"
#include "ratarc/contour.hpp"
#include "ratarc/diophantine.hpp"
#include "ratarc/errors.hpp"
#include "ratarc/foliage.hpp"
#include "ratarc/report.hpp"
#include "ratarc/siegel.hpp"

using namespace ratarc;

namespace {

struct Common {
  std::string config;
  std::string in;
  std::string out = "-";
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
};

struct Context {
  RunConfig cfg;
  Report report;
  int jobs = 1;
  std::uint64_t seed = 0;
};

Context load(const Common& opts) {
  Context ctx;
  ctx.cfg = RunConfig::load(opts.config);
  if (opts.seed) ctx.cfg.set("seed", std::to_string(*opts.seed));
  if (opts.jobs) ctx.cfg.set("jobs", std::to_string(*opts.jobs));
  ctx.seed = static_cast<std::uint64_t>(ctx.cfg.integer("seed", 0));
  ctx.jobs = static_cast<int>(ctx.cfg.integer("jobs", 1));
  if (ctx.jobs < 1) throw ConfigError("jobs must be >= 1");
  ctx.report.seed = ctx.seed;
  ctx.report.echo(ctx.cfg);
  // The thread count never changes results, so it stays out of the echo.
  ctx.report.config_echo.erase("jobs");
  return ctx;
}

Json complex_json(Complex z) { return Json::array({format_double(z.real()), format_double(z.imag())}); }

Holomorphic poly_in_z(const std::string& text) {
  const std::vector<std::string> var{"z"};
  const RationalTerms terms = parse_polynomial(text, var);
  int deg = 0;
  for (const auto& [e, c] : terms) deg = std::max(deg, e[0]);
  std::vector<Complex> coeffs(deg + 1, 0.0);
  for (const auto& [e, c] : terms) coeffs[e[0]] = to_double(c);
  return Holomorphic::polynomial(coeffs);
}

std::vector<ProjectivePoint> point_list(const std::string& text) {
  std::vector<ProjectivePoint> pts;
  for (const auto& item : split_list(text, ';')) {
    std::vector<BigRational> coords;
    for (const auto& c : split_list(item, ',')) coords.push_back(parse_rational(c));
    pts.push_back(ProjectivePoint::normalize(std::span<const BigRational>(coords)));
  }
  return pts;
}

std::vector<Complex> complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const auto& item : split_list(text, ';')) {
    const auto parts = split_list(item, ',');
    if (parts.empty() || parts.size() > 2) throw ConfigError("complex values are 're' or 're,im'");
    const double re = to_double(parse_rational(parts[0]));
    const double im = parts.size() == 2 ? to_double(parse_rational(parts[1])) : 0.0;
    out.emplace_back(re, im);
  }
  return out;
}

struct CensusRun {
  ArcSetup setup;
  CensusResult top;
  CensusCurve curve;
};

CensusRun run_census(Context& ctx) {
  ArcSetup setup = make_arc(ctx.cfg);
  const BigRational r = ctx.cfg.rational("domain.r");
  auto grid = ctx.cfg.budget_list("census.t_grid");
  const CensusMode mode = parse_census_mode(ctx.cfg.text("census.mode", "parametric"));
  std::vector<OraclePoint> oracle;
  if (mode == CensusMode::Oracle)
    oracle = load_oracle_points(ctx.cfg.text("census.oracle_points"), setup.arc.dimension());
  CensusResult top = census(setup.arc, r, grid.back(), mode, oracle, ctx.jobs);
  CensusCurve curve = census_curve(top, grid);
  for (const auto& rec : top.records) ctx.report.records.push_back(to_json(rec));
  ctx.report.curves.push_back(to_json(curve));
  Json detail = Json::object();
  detail["lower"] = top.lower;
  detail["upper"] = top.upper();
  detail["indeterminate"] = top.indeterminate;
  ctx.report.add_check("census_monotone_in_T", curve.monotone(), detail);
  return {std::move(setup), std::move(top), std::move(curve)};
}

void cmd_census(Context& ctx) { run_census(ctx); }

void cmd_bp(Context& ctx) {
  CensusRun run = run_census(ctx);
  BPOptions opt;
  opt.degree = static_cast<int>(ctx.cfg.integer("bp.degree", 2));
  opt.epsilon = ctx.cfg.real("bp.epsilon", 0.25);
  opt.c1 = ctx.cfg.real("bp.c1", 1.0);
  opt.c2 = ctx.cfg.real("bp.c2", 1.0);
  const std::string subset = ctx.cfg.text("bp.subset", "lowest");
  if (subset != "lowest" && subset != "all") throw ConfigError("bp.subset must be 'lowest' or 'all'");
  opt.use_all_points = subset == "all";
  opt.R = ctx.cfg.rational("domain.R", BigRational(2) * ctx.cfg.rational("domain.r"));
  const BPReport bp = bombieri_pila_experiment(run.setup.arc, run.top, opt);
  bool errors = false;
  for (const auto& cell : bp.cells) {
    Json j = Json::object();
    j["kind"] = "bp_cell";
    j["cell"] = Json::array({cell.ix, cell.iy});
    j["points"] = cell.points;
    j["used"] = cell.used;
    if (cell.cert) j["certificate"] = to_json(*cell.cert);
    j["vanishes_on_cell"] = cell.vanishes_on_cell;
    if (cell.identically_zero_on_arc) {
      j["zero_bound"] = "vanishes identically on arc";
    } else if (cell.cert) {
      j["zero_bound"] = cell.zero_bound;
      j["zeros_in_U"] = cell.zeros_in_u;
    }
    if (!cell.error.empty()) {
      j["error"] = cell.error;
      errors = true;
    }
    ctx.report.certificates.push_back(std::move(j));
  }
  Json summary = Json::object();
  summary["diameter"] = bp.diameter;
  summary["cells_total"] = bp.cells_total;
  summary["cells_occupied"] = bp.cells.size();
  summary["max_log_coeff"] = bp.max_log_coeff;
  summary["max_zero_bound"] = bp.max_zero_bound;
  summary["final_bound"] = bp.final_bound;
  ctx.report.add_check("bp_sections_vanish_on_cells", bp.all_vanish && !errors, summary);
}

void cmd_auxpoly(Context& ctx) {
  const auto pts = point_list(ctx.cfg.text("auxpoly.points", ""));
  const int n = static_cast<int>(ctx.cfg.integer("auxpoly.n", pts.empty() ? 1 : pts.front().dimension()));
  const int d = static_cast<int>(ctx.cfg.integer("auxpoly.degree"));
  const AuxSectionCert cert = vanish_section(pts, n, d);
  const double T = ctx.cfg.real("auxpoly.T", cert.max_height);
  const SiegelReport sr = siegel_bound_report(cert, T, ctx.cfg.real("auxpoly.epsilon", 0.25));
  Json j = to_json(cert);
  j["kind"] = "aux_section";
  j["ratio"] = format_double(sr.ratio);
  j["in_regime"] = sr.in_regime;
  ctx.report.certificates.push_back(std::move(j));
  ctx.report.add_check("aux_section_vanishes_exactly", vanishes_on(cert.section, pts));
}

void cmd_zeros(Context& ctx) {
  const std::string text = ctx.cfg.text("zeros.poly");
  const Holomorphic f = poly_in_z(text);
  const double r = ctx.cfg.real("zeros.r");
  const ZeroCountReport zc = count_zeros(f, r);
  Json j = Json::object();
  j["kind"] = "zero_count";
  j["poly"] = text;
  j["count"] = zc.count;
  j["residual"] = zc.residual;
  j["radius"] = zc.radius;
  j["quad_points"] = zc.quad_points;
  Json located = Json::array();
  std::vector<Complex> zeros;
  for (const auto& z : locate_zeros(f, zc.radius)) {
    located.push_back(Json::object({{"z", complex_json(z.z)}, {"multiplicity", z.multiplicity}}));
    for (int m = 0; m < z.multiplicity; ++m) zeros.push_back(z.z);
  }
  j["zeros"] = located;
  ctx.report.add_check("contour_residual_below_half", zc.residual < 0.5);
  if (std::abs(f(0.0)) > 0.0) {
    const double jr = jensen_residual(f, zeros, zc.radius);
    j["jensen_residual"] = jr;
    ctx.report.add_check("jensen_residual_below_1e-6", jr < 1e-6);
  }
  ctx.report.certificates.push_back(std::move(j));
}

void cmd_liouville(Context& ctx) {
  if (ctx.cfg.has("liouville.section")) {
    const auto pts = point_list(ctx.cfg.text("liouville.point"));
    if (pts.size() != 1) throw ConfigError("liouville.point must be a single point");
    const SectionPoly s = SectionPoly::parse(ctx.cfg.text("liouville.section"), pts[0].dimension());
    const LiouvilleReport rep = liouville_check(s, pts[0]);
    Json j = Json::object();
    j["kind"] = "liouville";
    j["section"] = s.to_string();
    j["point"] = rep.point.to_string();
    j["value"] = rep.value.get_str();
    j["log_norm"] = rep.log_norm;
    j["log_sup"] = rep.log_sup;
    j["bound"] = rep.bound;
    j["margin"] = rep.margin;
    ctx.report.certificates.push_back(std::move(j));
    ctx.report.add_check("liouville_margin_nonnegative", rep.holds);
    return;
  }
  const LiouvilleCorpusReport rep =
      liouville_corpus_scan(ctx.cfg.integer("liouville.corpus_height", 20),
                            static_cast<int>(ctx.cfg.integer("liouville.corpus_degree", 3)),
                            ctx.cfg.integer("liouville.corpus_coeff", 10), ctx.jobs);
  Json j = Json::object();
  j["kind"] = "liouville_corpus";
  j["points"] = rep.points;
  j["sections"] = rep.sections;
  j["evaluations"] = rep.evaluations;
  j["vanishing"] = rep.vanishing;
  j["violations"] = rep.violations;
  j["exact_violations"] = rep.exact_violations;
  j["min_margin"] = rep.min_margin;
  ctx.report.certificates.push_back(j);
  ctx.report.add_check("liouville_no_violations", rep.violations == 0 && rep.exact_violations == 0, j);
}

Json area_json(const AreaEstimate& a) {
  Json j = Json::object();
  j["value"] = a.value;
  j["stderr"] = a.stderr_;
  j["method"] = to_string(a.method);
  j["seed"] = a.seed;
  j["samples"] = a.samples;
  j["bound"] = a.bound;
  j["holds"] = a.holds;
  return j;
}

void cmd_bloch(Context& ctx) {
  const std::string mode = ctx.cfg.text("bloch.mode", "exceptional");
  const long samples = ctx.cfg.integer("bloch.samples", 100000);
  AreaEstimate est;
  Json j = Json::object();
  if (mode == "exceptional") {
    RootConfig rc{complex_list(ctx.cfg.text("bloch.roots")), ctx.cfg.real("bloch.H")};
    est = exceptional_area(rc, enclosing_box(rc), samples, ctx.seed, ctx.jobs);
    j["kind"] = "exceptional_area";
  } else if (mode == "small-norm") {
    const Holomorphic f = poly_in_z(ctx.cfg.text("bloch.poly"));
    const double r = ctx.cfg.real("bloch.r"), eta = ctx.cfg.real("bloch.eta");
    if (std::abs(f(0.0)) > 0.0) {
      est = small_norm_area(f, r, eta, samples, ctx.seed, ctx.jobs);
      j["kind"] = "small_norm_area";
    } else {
      est = small_norm_area_vanishing(f, r, eta, samples, ctx.seed, std::nullopt, ctx.jobs);
      j["kind"] = "small_norm_area_vanishing";
    }
  } else {
    throw ConfigError("bloch.mode must be 'exceptional' or 'small-norm'");
  }
  j["estimate"] = area_json(est);
  ctx.report.certificates.push_back(j);
  ctx.report.add_check("area_within_bound", est.holds, j["estimate"]);
}

void cmd_leaf(Context& ctx) {
  const ArcSetup setup = make_arc(ctx.cfg);
  if (!setup.field) throw ConfigError("leaf subcommand needs arc.family = leaf");
  const auto& field = *setup.field;
  const auto& leaf = *setup.leaf;
  ctx.report.add_check("leaf_ode_residual_zero", ode_residual_zero(field, leaf));
  if (ctx.cfg.has("leaf.poly")) {
    const AffinePoly Q = AffinePoly::parse(ctx.cfg.text("leaf.poly"), field.dimension());
    Json j = Json::object();
    j["kind"] = "leaf_order";
    j["poly"] = Q.to_string();
    try {
      const LeafOrderReport ord = ord_along_field(Q, field, leaf.base, leaf.order());
      j["order"] = ord.order;
      j["leading"] = to_string(ord.leading);
      j["truncation"] = ord.truncation;
    } catch (const PreconditionError& e) {
      j["order"] = e.what();
    }
    const int n_max = static_cast<int>(ctx.cfg.integer("leaf.n_max", std::min(30, leaf.order())));
    const JetDenominatorReport jd = jet_denominator_check(leaf, Q, n_max);
    j["jet_C"] = jd.C.get_str();
    j["jet_n_max"] = jd.n_max;
    j["jet_fully_factored"] = jd.fully_factored;
    ctx.report.certificates.push_back(std::move(j));
  }
  if (ctx.cfg.has("leaf.d_max")) {
    const ZeroLemmaReport zl =
        zero_lemma_scan(field, leaf.base, static_cast<int>(ctx.cfg.integer("leaf.d_max")),
                        ctx.cfg.integer("leaf.coeff_height", 3), static_cast<int>(ctx.cfg.integer("leaf.order", 80)));
    Json j = Json::object();
    j["kind"] = "zero_lemma_scan";
    Json degs = Json::array();
    for (const auto& d : zl.degrees) {
      Json e = Json::object();
      e["degree"] = d.degree;
      e["max_order"] = d.max_order;
      e["mode"] = d.mode;
      e["identically_zero"] = d.identically_zero;
      if (d.witness) {
        e["witness"] = d.witness->to_string();
        e["witness_within_height"] = d.witness_within_height;
      }
      degs.push_back(std::move(e));
    }
    j["degrees"] = degs;
    j["slope"] = zl.slope;
    const double ell = ctx.cfg.real("leaf.ell", 2.0);
    j["ell"] = ell;
    ctx.report.certificates.push_back(j);
    ctx.report.add_check("zero_lemma_slope", zl.slope <= ell + 0.5, Json::object({{"slope", zl.slope}}));
  }
}

void cmd_scan_s(Context& ctx) {
  const ArcSetup setup = make_arc(ctx.cfg);
  const auto B = complex_list(ctx.cfg.text("scan.B"));
  const TypeSReport rep =
      type_s_scan(setup.arc, B, ctx.cfg.real("scan.a", 1.0), static_cast<int>(ctx.cfg.integer("scan.d_max", 2)),
                  ctx.cfg.integer("scan.coeff_height", 2), ctx.jobs);
  Json j = Json::object();
  j["kind"] = "type_s_scan";
  Json b = Json::array();
  for (const auto& z : rep.B) b.push_back(complex_json(z));
  j["B"] = b;
  j["a"] = rep.a;
  j["rho"] = rep.rho;
  if (rep.witness) {
    j["witness"] = rep.witness->to_string();
    j["witness_log_norm_B"] = rep.witness_log_norm_b;
    j["witness_log_sup"] = rep.witness_log_sup;
  }
  j["sections_total"] = rep.sections_total;
  j["leaves_evaluated"] = rep.leaves_evaluated;
  j["vanishing_excluded"] = rep.vanishing_excluded;
  j["statement"] = rep.statement;
  ctx.report.certificates.push_back(std::move(j));
  ctx.report.add_check("type_s_rho_finite", std::isfinite(rep.rho));
}

void cmd_rare(Context& ctx) {
  CensusRun run = run_census(ctx);
  const RareScan scan =
      rare_interval_scan(run.curve, run.setup.arc.dimension(), ctx.cfg.real("rare.gamma", 3.0),
                         ctx.cfg.real("rare.epsilon", 1.0), ctx.cfg.real("rare.A", 2.0));
  for (const auto& iv : scan.intervals) {
    Json j = Json::object();
    j["kind"] = "rare_interval";
    j["T_start"] = iv.t_start;
    j["T_end"] = iv.t_end;
    j["geometrically_wider"] = iv.geometrically_wider;
    j["gamma_hypothesis"] = scan.gamma_hypothesis;
    ctx.report.certificates.push_back(std::move(j));
  }
}

int finish(const Context& ctx, const Common& opts) {
  const int code = emit_report(ctx.report, parse_format(opts.format), opts.out);
  if (code != 0) {
    std::cerr << "error: cannot write '" << opts.out << "'\n";
    return 2;
  }
  return ctx.report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points of bounded height on analytic arcs"};
  app.require_subcommand(1);
  Common opts;
  using Handler = void (*)(Context&);
  struct Sub {
    const char* name;
    const char* help;
    Handler handler;
  };
  const std::vector<Sub> subs{
      {"census", "count rational points of bounded height on an arc", cmd_census},
      {"bp-experiment", "cover the disk by cells and build vanishing auxiliary sections", cmd_bp},
      {"auxpoly", "short integer section vanishing at given points", cmd_auxpoly},
      {"zeros", "argument-principle zero count of a polynomial", cmd_zeros},
      {"liouville", "check the Liouville inequality (single case or corpus)", cmd_liouville},
      {"bloch-cartan", "Monte Carlo areas of exceptional and small-norm sets", cmd_bloch},
      {"leaf", "formal leaf, vanishing orders and zero-lemma growth", cmd_leaf},
      {"scan-s", "type-S ratio scan over integer sections", cmd_scan_s},
      {"rare-intervals", "maximal T intervals where the census is sparse", cmd_rare},
  };
  std::vector<std::pair<CLI::App*, Handler>> registered;
  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) sub->add_option("--config", opts.config, "run configuration file")->required();
    sub->add_option("--out", opts.out, "output path ('-' for stdout)");
    sub->add_option("--format", opts.format, "csv or json");
    sub->add_option("--seed", opts.seed, "seed overriding the config");
    sub->add_option("--jobs", opts.jobs, "worker threads");
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, true);
    registered.emplace_back(sub, s.handler);
  }
  auto* report_cmd = app.add_subcommand("report", "re-emit a saved JSON report as csv or json");
  report_cmd->add_option("--in", opts.in, "saved JSON report")->required();
  add_common(report_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    parse_format(opts.format);
    if (report_cmd->parsed()) {
      std::ifstream in(opts.in);
      if (!in) throw ConfigError("cannot read '" + opts.in + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      Context ctx;
      ctx.report = Report::from_json_text(ss.str());
      return finish(ctx, opts);
    }
    for (const auto& [sub, handler] : registered) {
      if (!sub->parsed()) continue;
      Context ctx = load(opts);
      handler(ctx);
      return finish(ctx, opts);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
