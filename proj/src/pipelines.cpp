#include "ppsim/pipelines.hpp"

#include <algorithm>

#include "ppsim/observables.hpp"

namespace ppsim {

PPRunRecord run_pp_overlapping(const CorrelationMatrix& C0, const DeformationProfile& profile, const PPOptions& opt,
                               const std::string& initial_state) {
  PPOptions edge_only = opt;
  edge_only.bulks.clear();
  auto r = run_pp(C0, profile, edge_only, initial_state);
  if (opt.bulks.empty()) return r;
  PPOptions bulk_only = opt;
  bulk_only.edge = {};
  bulk_only.require_tpp = false;
  auto b = run_pp(C0, profile, bulk_only, initial_state);
  r.bulk_labels = std::move(b.bulk_labels);
  r.infidelity = std::move(b.infidelity);
  r.infidelity_minima = std::move(b.infidelity_minima);
  return r;
}

Pp2dResult run_pp2d(const Pp2dOptions& opt) {
  if (opt.N < 2) throw Error(ErrorKind::invalid_lattice, "2D lattice needs N >= 2");
  if (opt.corner < 1 || opt.corner >= opt.N) throw Error(ErrorKind::domain, "corner must satisfy 1 <= corner < N");
  if (opt.deformation != ProfileKind::product_parabola_2d && opt.deformation != ProfileKind::radial_parabola_2d)
    throw Error(ErrorKind::config, "2D deformation must be product or radial");
  const SquareLattice2D lat(opt.N);
  GroundStateOptions gs;
  if (opt.degeneracy == "staggered") {
    gs.policy = DegeneracyPolicy::lift;
    gs.lift_operator = staggered_potential(lat);
  } else if (opt.degeneracy == "mixture") {
    gs.policy = DegeneracyPolicy::mixture;
  } else if (opt.degeneracy != "error") {
    throw Error(ErrorKind::config, "degeneracy policy must be staggered, mixture or error");
  }
  Pp2dResult res;
  res.initial = ground_state(hopping_hamiltonian(flat_2d(opt.N)), 0.5, gs);

  PPOptions o;
  o.t_max = opt.t_max;
  o.dt = opt.dt;
  o.prominence = opt.prominence;
  o.exec = opt.exec;
  o.require_tpp = false;
  o.edge = corner_rect(lat, opt.corner, opt.corner);
  for (int n : opt.bulks) {
    if (n < 1 || n >= opt.N) {
      res.skipped.push_back(n);
      continue;
    }
    res.bulks.push_back(n);
    o.bulks.push_back({"n" + std::to_string(n), centered_square(lat, n), infinite_2d_segment(n, opt.quadrature_points)});
  }
  res.record = run_pp_overlapping(res.initial, make_profile(opt.deformation, opt.N), o, "obc-gs");
  return res;
}

SshPPResult run_ssh_pp(const SshPPOptions& opt) {
  if (opt.N % 2 || opt.ref_N % 2) throw Error(ErrorKind::invalid_lattice, "SSH chains need an even number of sites");
  if (opt.n < 2 || opt.n % 2 || opt.n > opt.N - 2 * opt.edge_sites)
    throw Error(ErrorKind::domain, "window must be even and fit beside the edge region");
  if (opt.ref_N <= opt.N) throw Error(ErrorKind::domain, "reference chain must be longer than the PP chain");
  const double scale = std::max(1.0, opt.J);
  const double dt = opt.dt > 0 ? opt.dt : 0.05 / scale;
  const double t_max = opt.t_max > 0 ? opt.t_max : 10.0 / scale;

  SshPPResult res;
  const ssh::SshParams p{opt.N, opt.J, opt.delta};
  const auto obc = ssh::ssh_sector(p);
  const auto g = ssh::ground_state(obc);
  res.gap = g.gap;
  res.window = ssh::cell_aligned_window(opt.N, opt.n);
  const CVec psi0 = obc.embed(g.vector);
  res.Z_obc = ssh::reflection_invariant(fock::reduced_density(psi0, opt.N, res.window), opt.n).Z;
  res.M_obc = ssh::staggered_magnetization_rms(psi0, opt.N, res.window);

  const auto ref = ssh::ssh_sector({opt.ref_N, opt.J, opt.delta});
  const auto gr = ssh::ground_state(ref);
  const CMat rho_ref =
      fock::reduced_density(ref.embed(gr.vector), opt.ref_N, ssh::cell_aligned_window(opt.ref_N, opt.n));
  res.Z_ref = ssh::reflection_invariant(rho_ref, opt.n).Z;

  const auto def = ssh::ssh_sector(p, parabolic_weights(opt.N).weights);
  SpinPPOptions o;
  o.t_max = t_max;
  o.dt = dt;
  o.edge = left_edge(opt.N, opt.edge_sites);
  o.bulks.push_back({"n" + std::to_string(opt.n), res.window, rho_ref});
  o.prominence = opt.prominence;
  res.record = run_pp_spins(g.vector, CMat(def.H), def.basis, opt.N, o);
  res.record.profile = "parabolic";

  fock::SpectralEvolver ev(CMat(def.H), g.vector);
  const CVec psi = def.embed(ev.state(res.record.tpp->t));
  res.Z_pp = ssh::reflection_invariant(fock::reduced_density(psi, opt.N, res.window), opt.n).Z;
  res.M_pp = ssh::staggered_magnetization_rms(psi, opt.N, res.window);
  return res;
}

EhBuildupResult run_eh_buildup(const EhBuildupOptions& opt) {
  const auto H0 = hopping_hamiltonian(flat_weights(opt.N));
  CorrelationMatrix C0;
  if (opt.init == "thermal") {
    if (!(opt.T > 0)) throw Error(ErrorKind::domain, "thermal start needs T > 0");
    C0 = thermal_state(H0, opt.T);
  } else if (opt.init == "obc-gs") {
    C0 = ground_state(H0);
  } else {
    throw Error(ErrorKind::config, "initial state must be thermal or obc-gs");
  }
  const auto profile = parabolic_weights(opt.N);
  PPOptions o;
  o.t_max = opt.t_max;
  o.dt = opt.dt;
  o.edge = left_edge(opt.N, opt.edge_sites);
  o.prominence = opt.prominence;
  o.require_tpp = false;
  o.exec = opt.exec;
  for (int n : opt.windows) {
    if (n < 3 || n > opt.N) throw Error(ErrorKind::domain, "window size must satisfy 3 <= n <= N");
    o.bulks.push_back({"n" + std::to_string(n), centered_interval(opt.N, n), infinite_chain_segment(n)});
  }
  auto rec = run_pp_overlapping(C0, profile, o, opt.init);

  EhBuildupResult res;
  res.times = rec.times;
  res.edge_entropy = rec.edge_entropy;
  res.entropy_max = rec.tpp;
  const auto H = hopping_hamiltonian(profile);
  for (std::size_t w = 0; w < opt.windows.size(); ++w) {
    EhWindow win;
    win.n = opt.windows[w];
    win.series = eh_series(C0, H, o.bulks[w].region, rec.times, opt.exec);
    win.infidelity = rec.infidelity[w];
    win.infidelity_min = rec.infidelity_minima[w];
    try {
      win.distance_min = detect_tpp_by_eh(win.series);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_minimum) throw;
    }
    res.windows.push_back(std::move(win));
  }
  return res;
}

}  // namespace ppsim
