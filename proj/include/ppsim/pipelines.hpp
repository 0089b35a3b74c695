#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppsim/eh_learn.hpp"
#include "ppsim/protocol.hpp"
#include "ppsim/spinchain.hpp"

namespace ppsim {

// run_pp with bulks allowed to overlap the edge: the edge series and the bulk
// series come from separate passes over the same time grid.
PPRunRecord run_pp_overlapping(const CorrelationMatrix& C0, const DeformationProfile& profile, const PPOptions& opt,
                               const std::string& initial_state = "obc-gs");

// Free fermions on the N x N square lattice, started from the half-filled
// ground state of the flat lattice.
struct Pp2dOptions {
  int N = 10;
  int corner = 4;
  std::vector<int> bulks{2, 4, 6};
  ProfileKind deformation = ProfileKind::product_parabola_2d;
  std::string degeneracy = "staggered";  // staggered, mixture or error
  double dt = 0.05;
  double t_max = 25.0;
  double prominence = 0.01;
  int quadrature_points = 64;
  Exec exec = Exec::parallel;
};
struct Pp2dResult {
  PPRunRecord record;   // edge = corner
  std::vector<int> bulks;    // sizes actually run
  std::vector<int> skipped;  // n >= N
  CorrelationMatrix initial;
};
Pp2dResult run_pp2d(const Pp2dOptions& opt);

// Extended SSH chain in its Sz = 0 sector: OBC ground state evolved under the
// parabolic deformation, with the reflection invariant of a cell-aligned
// window compared to the same window of a longer flat chain.
struct SshPPOptions {
  int N = 12;
  double J = 0.05;
  double delta = 1.4;
  int n = 8;
  int ref_N = 14;
  int edge_sites = 2;
  double dt = 0.0;     // 0: 0.05 / max(1, J)
  double t_max = 0.0;  // 0: 10 / max(1, J)
  double prominence = 0.0;
};
struct SshPPResult {
  PPRunRecord record;
  Subsystem window;
  double gap = 0.0;
  double Z_obc = 0.0, Z_pp = 0.0, Z_ref = 0.0;
  double M_obc = 0.0, M_pp = 0.0;
};
SshPPResult run_ssh_pp(const SshPPOptions& opt);

// Entanglement-Hamiltonian build-up in centred windows of a chain quenched
// into the parabolic deformation.
struct EhBuildupOptions {
  int N = 36;
  std::string init = "thermal";  // thermal or obc-gs
  double T = 0.15;
  std::vector<int> windows{28, 20};
  double dt = 0.05;
  double t_max = 30.0;
  int edge_sites = 2;
  double prominence = 0.01;
  Exec exec = Exec::parallel;
};
struct EhWindow {
  int n = 0;
  EhSeries series;
  std::vector<double> infidelity;
  std::optional<Extremum> distance_min;
  Extremum infidelity_min;
};
struct EhBuildupResult {
  std::vector<double> times;
  std::vector<double> edge_entropy;
  std::optional<Extremum> entropy_max;
  std::vector<EhWindow> windows;
};
EhBuildupResult run_eh_buildup(const EhBuildupOptions& opt);

}  // namespace ppsim
