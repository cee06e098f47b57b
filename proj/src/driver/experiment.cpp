#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "rbfadv/experiment.hpp"

namespace rbfadv {

namespace {

std::string run_id(const RunConfig& cfg, std::size_t n) {
  std::string id = cfg.problem + "-" + cfg.method + "-" + parse_kernel(cfg.kernel).name() + "-N" + std::to_string(n);
  if (cfg.sigma > 0.0) id += "-s" + std::to_string(cfg.seed);
  return id;
}

CenterSet make_centers(const RunConfig& cfg, const ProblemSpec& p, std::size_t n) {
  if (p.dim == 2) return CenterSet::grid2d(n, p.domain);
  if (cfg.sigma > 0.0) return scattered_centers(n, {cfg.sigma, cfg.seed}, p.lo(), p.hi());
  return CenterSet::equidistant(n, p.lo(), p.hi());
}

}  // namespace

Assembled assemble(const RunConfig& cfg, std::size_t n) {
  validate(cfg);
  Assembled as;
  as.problem = problem_by_name(cfg.problem);
  const auto& p = as.problem;
  const Kernel kernel = parse_kernel(cfg.kernel);
  const int m = effective_degree(cfg);
  as.rule = QuadratureRule::make(cfg.quad_points, cfg.quad_panel_multiplier);
  as.basis = std::make_shared<const NodalBasis>(make_centers(cfg, p, n), kernel, m);
  const SatOptions sat{cfg.tau_L, cfg.tau_R, parse_delta_form(cfg.sat_delta)};

  if (p.dim == 2) {
    as.op = cfg.method == "usual" ? make_usual_2d(as.basis, p.a2d, p.inflow, as.rule)
                                  : make_sat_2d(as.basis, p.a2d, p.inflow, as.rule);
  } else if (p.velocity == VelocityKind::System) {
    as.op = make_sat_system(as.basis, p.c, p.g0, p.g1, {cfg.R0, cfg.R1, sat.delta}, as.rule);
  } else if (p.velocity == VelocityKind::Variable) {
    as.op = make_varcoeff_1d(as.basis, p.a_fn, p.da_fn, p.inflow, cfg.alpha_skew, cfg.method == "usual", sat, as.rule);
  } else if (cfg.method == "usual") {
    as.op = make_usual_1d(as.basis, p.a, p.inflow, p.periodic, as.rule);
  } else if (cfg.method == "sat") {
    as.op = make_sat_1d(as.basis, p.a, p.inflow, p.periodic, sat, as.rule);
  } else {
    NodalBasis aux = auxiliary_basis(*as.basis);
    auto cf = build_corrections(*as.basis, aux, as.rule, {cfg.fr_tsvd, cfg.fr_tsvd_tol});
    verify_corrections(cf, *as.basis, as.rule);
    as.corrections = std::make_shared<const CorrectionFunctions>(std::move(cf));
    as.op = make_fr_1d(as.basis, as.corrections, p.a, p.inflow, p.periodic, as.rule);
  }

  const std::size_t nb = as.basis->size();
  as.u0.assign(as.op.state_size(), 0.0);
  for (std::size_t i = 0; i < nb; ++i) {
    const double v = p.initial(as.basis->centers()[i]);
    as.u0[i] = v;
    if (p.velocity == VelocityKind::System) as.u0[nb + i] = v;
  }
  as.op.enforce(as.u0, 0.0);
  return as;
}

RunResult run_single(const RunConfig& cfg, std::size_t n) {
  Assembled as = assemble(cfg, n);
  const auto& op = as.op;
  const auto& nb = *as.basis;
  const bool one_d = nb.centers().dim() == 1;

  RunResult res;
  RunReport& r = res.report;
  r.run_id = run_id(cfg, n);
  r.problem = cfg.problem;
  r.method = cfg.method;
  r.kernel = nb.kernel().name();
  r.N = n;
  r.m = nb.poly().degree_bound();
  r.cond_V = nb.vandermonde_condition();
  r.min_mass = *std::min_element(op.H.begin(), op.H.end());
  r.nonpositive_mass = nonpositive_entries(op.H).size();
  if (cfg.sigma > 0.0) r.generator = kScatterGenerator;
  if (as.corrections) {
    r.cond_A = as.corrections->cond_A;
    r.residual_cL = as.corrections->residuals.max_cL();
    r.residual_cR = as.corrections->residuals.max_cR();
  }

  TimeIntegration ti;
  ti.cfl = effective_cfl(cfg);
  ti.t_end = cfg.t_end >= 0.0 ? cfg.t_end : default_t_end(cfg.problem);
  ti.record_stride = cfg.record_stride;
  ti.timing = cfg.stage_timing == "shifted" ? StageTiming::Shifted : StageTiming::Nominal;
  r.dt = compute_dt(ti.cfl, op.h, op.lambda_max);

  DenseMatrix gram;
  if (one_d) gram = op.M.rows() == nb.size() ? op.M : gram_matrix(nb, as.rule);
  auto energy_of = [&](const Vector& u) {
    if (!one_d) return energy(nb, u, as.rule);
    const std::size_t k = nb.size();
    if (u.size() == k) return dot(u, gram * u);
    Vector a(u.begin(), u.begin() + k), b(u.begin() + k, u.end());
    return dot(a, gram * a) + dot(b, gram * b);
  };

  Vector last = as.u0;
  double last_t = 0.0;
  r.max_abs = norm_inf(as.u0);
  IntegrationHooks hooks;
  hooks.record = [&](std::size_t, double t, const Vector& u) {
    r.energy.push_back({t, energy_of(u)});
    if (op.variant == OperatorVariant::FR1D)
      r.conservation.push_back({t, fr_conservation_residual(op, u, t, as.rule)});
  };
  hooks.observe = [&](std::size_t, double t, const Vector& u) {
    r.max_abs = std::max(r.max_abs, norm_inf(u));
    last = u;
    last_t = t;
  };

  try {
    auto out = integrate(op, as.u0, r.dt, ti, hooks);
    res.u = std::move(out.u);
    r.t_final = out.t;
    r.steps = out.steps;
  } catch (const BlowUpError& e) {
    r.blew_up = true;
    r.blowup_t = e.t();
    r.blowup_stage = e.stage();
    r.steps = e.step();
    r.t_final = last_t;
    res.u = last;
  }

  if (as.problem.has_exact() && !r.blew_up) {
    r.has_exact = true;
    res.exact.resize(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) res.exact[i] = as.problem.exact(r.t_final, nb.centers()[i]);
    auto e = discrete_errors(res.u, res.exact);
    r.error_l1 = e.l1;
    r.error_linf = e.linf;
    r.error_l2_nodal = nodal_l2(res.u, res.exact);
    const double tf = r.t_final;
    const auto& prob = as.problem;
    r.error_l2 = l2_error(nb, res.u, [&](const Point& x) { return prob.exact(tf, x); }, as.rule);
  }
  return res;
}

std::vector<RunReport> run_study(const RunConfig& cfg, unsigned threads) {
  validate(cfg);
  std::vector<RunReport> out(cfg.N.size());
  std::vector<std::exception_ptr> errs(cfg.N.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.N.size();) {
      try {
        out[i] = run_single(cfg, cfg.N[i]).report;
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(threads, unsigned(cfg.N.size())));
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<RunReport> conditioning_study(const RunConfig& cfg) {
  validate(cfg);
  const ProblemSpec p = problem_by_name(cfg.problem);
  if (p.dim != 1 || p.velocity != VelocityKind::Constant) throw ConfigError("conditioning study needs a 1D constant-speed problem");
  const Kernel kernel = parse_kernel(cfg.kernel);
  const QuadratureRule rule = QuadratureRule::make(cfg.quad_points, cfg.quad_panel_multiplier);
  std::vector<RunReport> out;
  for (auto n : cfg.N) {
    RunReport r;
    r.run_id = run_id(cfg, n);
    r.problem = cfg.problem;
    r.method = "fr";
    r.kernel = kernel.name();
    r.N = n;
    r.m = effective_degree(cfg);
    NodalBasis nb(make_centers(cfg, p, n), kernel, r.m);
    r.cond_V = nb.vandermonde_condition();
    NodalBasis aux = auxiliary_basis(nb);
    try {
      auto cf = build_corrections(nb, aux, rule, {cfg.fr_tsvd, cfg.fr_tsvd_tol});
      auto res = verify_corrections(cf, nb, rule);
      r.cond_A = cf.cond_A;
      r.residual_cL = res.max_cL();
      r.residual_cR = res.max_cR();
    } catch (const CorrectionError& e) {
      r.cond_A = e.cond();
      r.residual_cL = r.residual_cR = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rbfadv
