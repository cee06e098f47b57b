#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbfadv/quadrature.hpp"

namespace rbfadv {

struct DiscreteErrors {
  double l1 = 0.0;    // mean absolute nodal difference
  double linf = 0.0;  // max absolute nodal difference
};

DiscreteErrors discrete_errors(const Vector& u_num, const Vector& u_exact);
// sqrt(sum_n e_n^2), unnormalized.
double nodal_l2(const Vector& u_num, const Vector& u_exact);
// sqrt(int (u_N - u)^2) by the basis-aligned rule (tensor rule in 2D).
double l2_error(const NodalBasis& nb, const Vector& u_num, const std::function<double(const Point&)>& exact,
                const QuadratureRule& rule);

// Mean of log2(e_j / e_{j+1}) over consecutive refinements.
double average_order(const std::vector<double>& errors);
std::vector<double> pairwise_orders(const std::vector<double>& errors);

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};

struct RunReport {
  std::string run_id;
  std::string problem;
  std::string method;
  std::string kernel;
  std::size_t N = 0;
  int m = 0;
  double dt = 0.0;
  std::size_t steps = 0;
  double t_final = 0.0;
  double error_l1 = 0.0;
  double error_linf = 0.0;
  double error_l2 = 0.0;        // quadrature L2
  double error_l2_nodal = 0.0;  // sqrt of the nodal sum of squares
  bool has_exact = false;
  double max_abs = 0.0;         // max nodal |state| over recorded steps
  std::vector<SeriesPoint> energy;
  std::vector<SeriesPoint> conservation;
  double cond_V = 0.0;
  double cond_A = 0.0;          // FR only
  double residual_cL = 0.0;
  double residual_cR = 0.0;
  double min_mass = 0.0;
  std::size_t nonpositive_mass = 0;
  bool blew_up = false;
  double blowup_t = 0.0;
  int blowup_stage = 0;
  std::string generator;        // scattered runs
};

void write_errors_csv(std::ostream& os, const std::vector<RunReport>& runs, bool order_row);
void write_energy_csv(std::ostream& os, const std::vector<RunReport>& runs);
void write_conservation_csv(std::ostream& os, const std::vector<RunReport>& runs);
void write_conditioning_csv(std::ostream& os, const std::vector<RunReport>& runs);

// Shortest round-trip decimal form used by every CSV writer.
std::string format_number(double v);

}  // namespace rbfadv
