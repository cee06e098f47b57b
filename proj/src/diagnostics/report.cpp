#include <charconv>
#include <cmath>
#include <ostream>

#include "rbfadv/diagnostics.hpp"

namespace rbfadv {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_errors_csv(std::ostream& os, const std::vector<RunReport>& runs, bool order_row) {
  os << "problem,method,kernel,N,l1,linf,l2,order_l1,order_linf,l2_nodal,status\n";
  for (const auto& r : runs) {
    os << r.problem << ',' << r.method << ',' << r.kernel << ',' << r.N << ',';
    if (r.blew_up || !r.has_exact)
      os << ",,,,,,";
    else
      os << format_number(r.error_l1) << ',' << format_number(r.error_linf) << ',' << format_number(r.error_l2)
         << ",,," << format_number(r.error_l2_nodal) << ',';
    os << (r.blew_up ? "blowup" : "ok") << '\n';
  }
  if (!order_row || runs.size() < 2) return;
  std::vector<double> l1, linf;
  bool ok = true;
  for (const auto& r : runs) {
    ok = ok && !r.blew_up && r.has_exact && r.error_l1 > 0.0 && r.error_linf > 0.0;
    l1.push_back(r.error_l1);
    linf.push_back(r.error_linf);
  }
  const auto& f = runs.front();
  os << f.problem << ',' << f.method << ',' << f.kernel << ",order,,,,";
  if (ok)
    os << format_number(average_order(l1)) << ',' << format_number(average_order(linf)) << ",,ok\n";
  else
    os << ",,,incomplete\n";
}

void write_energy_csv(std::ostream& os, const std::vector<RunReport>& runs) {
  os << "run_id,t,E\n";
  for (const auto& r : runs)
    for (const auto& p : r.energy) os << r.run_id << ',' << format_number(p.t) << ',' << format_number(p.value) << '\n';
}

void write_conservation_csv(std::ostream& os, const std::vector<RunReport>& runs) {
  os << "run_id,t,residual\n";
  for (const auto& r : runs)
    for (const auto& p : r.conservation)
      os << r.run_id << ',' << format_number(p.t) << ',' << format_number(p.value) << '\n';
}

void write_conditioning_csv(std::ostream& os, const std::vector<RunReport>& runs) {
  os << "kernel,N,cond_A,max_residual_cL,max_residual_cR\n";
  for (const auto& r : runs)
    os << r.kernel << ',' << r.N << ',' << format_number(r.cond_A) << ',' << format_number(r.residual_cL) << ','
       << format_number(r.residual_cR) << '\n';
}

}  // namespace rbfadv
