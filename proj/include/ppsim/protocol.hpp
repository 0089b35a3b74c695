#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppsim/core.hpp"
#include "ppsim/fock.hpp"
#include "ppsim/gaussian.hpp"
#include "ppsim/lattice.hpp"

namespace ppsim {

// Bulk region with the infinite-system reduced state it should approach.
struct BulkTarget {
  std::string label;
  Subsystem region;
  CorrelationMatrix reference;
};

struct PPOptions {
  double t_max = 0.0;
  double dt = 0.05;
  Subsystem edge;
  std::vector<BulkTarget> bulks;
  // A maximum counts once the series has dropped by this fraction of its
  // value before exceeding it again; 0 gives the bare discrete rule.
  double prominence = 0.01;
  // Series points whose fast infidelity falls below this are recomputed
  // with the escalating fidelity kernel.
  double refine_below = 1e-6;
  bool require_tpp = true;
  Exec exec = Exec::parallel;
};

struct Extremum {
  double t = 0.0;  // quadratic refinement
  int index = 0;   // grid index
  double value = 0.0;
};

struct PPRunRecord {
  std::vector<double> times;
  std::vector<double> edge_entropy;
  std::vector<std::string> bulk_labels;
  std::vector<std::vector<double>> infidelity;
  std::optional<Extremum> tpp;
  std::vector<Extremum> infidelity_minima;
  std::string profile;
  std::string initial_state;
};

// First local maximum with the given relative prominence, refined by a
// 3-point quadratic fit. Throws no_tpp when none exists.
Extremum first_maximum(const std::vector<double>& t, const std::vector<double>& s, double prominence);
// Global minimum, refined the same way. Throws no_minimum at a boundary
// or when the series is flat.
Extremum global_minimum(const std::vector<double>& t, const std::vector<double>& s);

PPRunRecord run_pp(const CorrelationMatrix& C0, const DeformationProfile& profile, const PPOptions& opt,
                   const std::string& initial_state = "obc-gs");

// Spin-chain version: psi0 and H live in a conserved sector of an N-site
// chain; bulk references are density matrices.
struct SpinBulkTarget {
  std::string label;
  Subsystem region;
  CMat reference;
};
struct SpinPPOptions {
  double t_max = 0.0;
  double dt = 0.05;
  Subsystem edge;
  std::vector<SpinBulkTarget> bulks;
  double prominence = 0.01;
  bool require_tpp = true;
};
PPRunRecord run_pp_spins(const CVec& psi0, const CMat& H, const std::vector<std::uint64_t>& basis, int N,
                         const SpinPPOptions& opt);

// One point of the system-size sweep: OBC ground state of the flat chain,
// t_PP from the left-edge entropy, and centred-bulk infidelities at t = 0 and
// at the refined t_PP. Bulks with n >= N get NaN.
struct ScalingOptions {
  ProfileKind profile = ProfileKind::parabolic;
  std::vector<int> bulks{10, 30};
  int edge_sites = 2;
  double dt = 0.05;
  double prominence = 0.01;
  double t_max = 0.0;  // 0: 1.5 N + 10
};
struct ScalingPoint {
  int N = 0;
  Extremum tpp;
  std::vector<int> bulk_sizes;
  std::vector<double> infidelity_obc;
  std::vector<double> infidelity_pp;
};
ScalingPoint scaling_point(int N, const ScalingOptions& opt);
// Parallel over N; each point runs serially.
std::vector<ScalingPoint> scaling_sweep(const std::vector<int>& Ns, const ScalingOptions& opt,
                                        Exec exec = Exec::parallel);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points = 0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);
// y ~ x^{-k}: k is minus the slope of log y against log x; NaN and
// non-positive entries are skipped.
struct PowerLawFit {
  double k = 0.0;
  double r2 = 0.0;
  int points = 0;
};
PowerLawFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y);

struct TrotterStep {
  int window = 0;  // n~
  int first = 0;   // first site (0-based)
  double duration = 0.0;
};

struct TrotterSchedule {
  int N = 0;
  int n_min = 0;
  double dt_base = 0.0;
  int composite_steps = 0;
  std::vector<TrotterStep> steps;
  // Steps after which a composite step is complete.
  std::vector<int> composite_ends;
  double total_time() const;
  // sum of durations of the windows containing bond j (1-based)
  double bond_time(int j) const;
};

// Centred windows n~ = n_min, n_min+2, ..., N with half-box durations
// (n~-1) dt_base, arranged palindromically per composite step; the first
// half-step is moved to the end and identical neighbours are merged.
TrotterSchedule trotter_schedule(const DeformationProfile& profile, int n_min, double dt_base, int composite_steps);

struct TrotterRun {
  PPRunRecord record;
  CorrelationMatrix final_state;
};
// Applies each window exactly (flat hopping on the window's bonds) and
// records the series at composite-step boundaries.
TrotterRun run_trotter(const CorrelationMatrix& C0, const TrotterSchedule& s, const Subsystem& edge,
                       const std::vector<BulkTarget>& bulks);

}  // namespace ppsim
