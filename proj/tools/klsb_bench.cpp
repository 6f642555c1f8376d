// Timing harness for the parallel kernels.  Each kernel is run once in
// serial mode and once with the OpenMP path, the wall times are reported,
// and the results are compared element by element.  A mismatch aborts,
// so this doubles as a stress check that the two paths agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "klsb/cells.hpp"
#include "klsb/hecke.hpp"
#include "klsb/kl.hpp"
#include "klsb/kls_basis.hpp"
#include "klsb/mw.hpp"
#include "klsb/root_system.hpp"
#include "klsb/weyl_group.hpp"

namespace {

using namespace klsb;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-18s serial %9.1f ms   parallel %9.1f ms   x%.2f   %s\n", kernel,
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              match ? "match" : "MISMATCH");
  if (!match) {
    std::fprintf(stderr, "serial and parallel results differ in %s\n", kernel);
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel timings"};
  std::string type = "B3";
  app.add_option("--type", type, "type label, e.g. B3 or B4");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (type.size() != 2 || type[1] < '1' || type[1] > '4') {
    std::fprintf(stderr, "bad type label %s\n", type.c_str());
    return 2;
  }

  RootSystem rs = build_root_system(type[0], type[1] - '0');
  WeylGroup W = build_weyl_group(rs);
  std::printf("type %s, |W| = %d\n", type.c_str(), W.n);

  auto t0 = Clock::now();
  KLTable kl_s = kl_table(W, false);
  double kl_serial = ms_since(t0);
  t0 = Clock::now();
  KLTable kl_p = kl_table(W, true);
  double kl_parallel = ms_since(t0);
  report("kl_table", kl_serial, kl_parallel, kl_s.P == kl_p.P);

  BasisChange canon = canonical_basis_change(kl_p);
  CellData cd = cells(W, kl_p);
  CharCaches cc_s(rs), cc_p(rs);

  t0 = Clock::now();
  KLSBasis B_s = build_kls_basis(rs, W, canon, cd, cc_s, {true, false});
  double basis_serial = ms_since(t0);
  t0 = Clock::now();
  KLSBasis B_p = build_kls_basis(rs, W, canon, cd, cc_p, {true, true});
  double basis_parallel = ms_since(t0);
  bool basis_match = B_s.G == B_p.G && B_s.D == B_p.D && B_s.f == B_p.f &&
                     B_s.fstar == B_p.fstar;
  report("build_kls_basis", basis_serial, basis_parallel, basis_match);

  t0 = Clock::now();
  MwAll mw_s = compute_mw_all(B_s, false);
  double mw_serial = ms_since(t0);
  t0 = Clock::now();
  MwAll mw_p = compute_mw_all(B_p, true);
  double mw_parallel = ms_since(t0);
  bool mw_match = mw_s.m == mw_p.m;
  report("compute_mw_all", mw_serial, mw_parallel, mw_match);

  int big_cell = 0;
  for (size_t c = 0; c < cd.two_cells.size(); ++c)
    if (cd.two_cells[c].size() > cd.two_cells[big_cell].size()) big_cell = int(c);
  t0 = Clock::now();
  JCellAlgebra J_s = j_cell_algebra(W, kl_p, cd, big_cell, false);
  double j_serial = ms_since(t0);
  t0 = Clock::now();
  JCellAlgebra J_p = j_cell_algebra(W, kl_p, cd, big_cell, true);
  double j_parallel = ms_since(t0);
  report("j_cell_algebra", j_serial, j_parallel, J_s.right_mat == J_p.right_mat);

  t0 = Clock::now();
  std::vector<VCombo> phi_s = phi_matrix_on_cell(B_s, J_s, false);
  double phi_serial = ms_since(t0);
  t0 = Clock::now();
  std::vector<VCombo> phi_p = phi_matrix_on_cell(B_p, J_p, true);
  double phi_parallel = ms_since(t0);
  report("phi_matrix", phi_serial, phi_parallel, phi_s == phi_p);

  return 0;
}
