#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rbfadv/experiment.hpp"

namespace fs = std::filesystem;
using namespace rbfadv;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBlowUp = 3;

void add_run_flags(CLI::App& app, RunConfig& cfg) {
  app.add_option("--problem", cfg.problem, "inflow_bump | periodic_sin2 | varcoeff | acoustic | advect2d");
  app.add_option("--method", cfg.method, "usual | fr | sat");
  app.add_option("--kernel", cfg.kernel, "cubic | quintic | phsK | tpsK | gaussian:epsilon=E | mq:epsilon=E");
  app.add_option("--N", cfg.N, "number of centers (grid points per side in 2D); repeatable");
  app.add_option("--m", cfg.m, "polynomial degree bound");
  app.add_option("--cfl", cfg.cfl, "CFL number C in dt = C h / lambda_max");
  app.add_option("--t-end", cfg.t_end, "final time");
  app.add_option("--tau", cfg.tau_L, "left SAT penalty (must be < -1/2)");
  app.add_option("--tau-R", cfg.tau_R, "right SAT penalty (must be < -1/2)");
  app.add_option("--R0", cfg.R0, "acoustic reflection coefficient at x=0");
  app.add_option("--R1", cfg.R1, "acoustic reflection coefficient at x=1");
  app.add_option("--sigma", cfg.sigma, "scatter strength; > 0 selects scattered centers");
  app.add_option("--seed", cfg.seed, "seed for scattered centers");
  app.add_option("--out-dir", cfg.out_dir, "directory for CSV artifacts");
  app.add_option("--quad-points", cfg.quad_points, "Gauss-Legendre points per panel");
  app.add_option("--quad-panels", cfg.quad_panel_multiplier, "subpanels per gap between centers");
  app.add_option("--record-stride", cfg.record_stride, "record energy every k steps (0: first and last only)");
  app.add_option("--sat-delta", cfg.sat_delta, "consistent | lumped");
  app.add_option("--alpha-skew", cfg.alpha_skew, "skew-symmetric split weight for variable speed");
  app.add_flag("--fr-tsvd", cfg.fr_tsvd, "solve the FR correction system by truncated SVD");
  app.add_option("--fr-tsvd-tol", cfg.fr_tsvd_tol, "relative singular value cutoff for --fr-tsvd");
  app.add_option("--stage-timing", cfg.stage_timing, "nominal | shifted");
}

void prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

template <class Writer>
void write_file(const std::string& dir, const char* name, Writer w) {
  std::ofstream os(fs::path(dir) / name);
  if (!os) throw ConfigError(std::string("cannot write ") + name);
  w(os);
}

void write_run_artifacts(const RunConfig& cfg, const std::vector<RunReport>& runs, bool order_row) {
  prepare_dir(cfg.out_dir);
  write_file(cfg.out_dir, "errors.csv", [&](std::ostream& os) { write_errors_csv(os, runs, order_row); });
  write_file(cfg.out_dir, "energy.csv", [&](std::ostream& os) { write_energy_csv(os, runs); });
  if (cfg.method == "fr") {
    write_file(cfg.out_dir, "conservation.csv", [&](std::ostream& os) { write_conservation_csv(os, runs); });
    write_file(cfg.out_dir, "conditioning.csv", [&](std::ostream& os) { write_conditioning_csv(os, runs); });
  }
}

void report_blowups(const std::vector<RunReport>& runs) {
  for (const auto& r : runs)
    if (r.blew_up)
      std::cerr << "blowup run_id=" << r.run_id << " t=" << format_number(r.blowup_t) << " stage=" << r.blowup_stage
                << " steps=" << r.steps << "\n";
}

void print_summary(const std::vector<RunReport>& runs) {
  for (const auto& r : runs) {
    std::cout << r.run_id << " dt=" << format_number(r.dt) << " steps=" << r.steps;
    if (r.blew_up)
      std::cout << " status=blowup";
    else if (r.has_exact)
      std::cout << " l1=" << format_number(r.error_l1) << " linf=" << format_number(r.error_linf)
                << " l2=" << format_number(r.error_l2);
    std::cout << " max_abs=" << format_number(r.max_abs) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global RBF semidiscretizations of linear advection"};
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  app.require_subcommand(1);

  RunConfig cfg;
  auto* run = app.add_subcommand("run", "run one configuration (first N)");
  auto* study = app.add_subcommand("study", "run every N and append average orders");
  auto* cond = app.add_subcommand("conditioning", "FR correction conditioning for every N");
  add_run_flags(app, cfg);
  for (auto* sub : {run, study, cond}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    validate(cfg);
    if (*run) {
      RunConfig one = cfg;
      one.N = {cfg.N.front()};
      validate(one);
      auto res = run_single(one, one.N.front());
      std::vector<RunReport> runs{res.report};
      write_run_artifacts(one, runs, false);
      print_summary(runs);
      report_blowups(runs);
      return res.report.blew_up ? kExitBlowUp : 0;
    }
    if (*study) {
      auto runs = run_study(cfg, worker_threads());
      write_run_artifacts(cfg, runs, runs.size() > 1);
      print_summary(runs);
      report_blowups(runs);
      return 0;
    }
    auto runs = conditioning_study(cfg);
    prepare_dir(cfg.out_dir);
    write_file(cfg.out_dir, "conditioning.csv", [&](std::ostream& os) { write_conditioning_csv(os, runs); });
    for (const auto& r : runs)
      std::cout << r.kernel << " N=" << r.N << " cond_A=" << format_number(r.cond_A) << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error kind=config message=\"" << e.what() << "\"\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error kind=numerical message=\"" << e.what() << "\"\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error kind=internal message=\"" << e.what() << "\"\n";
    return 1;
  }
}
