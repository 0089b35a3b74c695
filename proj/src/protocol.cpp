#include "ppsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <sstream>

#include "ppsim/observables.hpp"

namespace ppsim {

namespace {

// Vertex of the parabola through three points.
Extremum refine(const std::vector<double>& t, const std::vector<double>& s, int i) {
  Extremum e{t[i], i, s[i]};
  if (i <= 0 || i + 1 >= static_cast<int>(s.size())) return e;
  const double t0 = t[i - 1], t1 = t[i], t2 = t[i + 1];
  const double s0 = s[i - 1], s1 = s[i], s2 = s[i + 1];
  const double den = (t1 - t0) * (s1 - s2) - (t1 - t2) * (s1 - s0);
  if (den == 0.0) return e;
  const double x = t1 - 0.5 * ((t1 - t0) * (t1 - t0) * (s1 - s2) - (t1 - t2) * (t1 - t2) * (s1 - s0)) / den;
  if (x < t0 || x > t2) return e;
  e.t = x;
  e.value = s0 * (x - t1) * (x - t2) / ((t0 - t1) * (t0 - t2)) + s1 * (x - t0) * (x - t2) / ((t1 - t0) * (t1 - t2)) +
            s2 * (x - t0) * (x - t1) / ((t2 - t0) * (t2 - t1));
  return e;
}

void check_disjoint(const Subsystem& edge, const std::vector<Subsystem>& bulks) {
  std::set<int> e(edge.sites.begin(), edge.sites.end());
  for (const auto& b : bulks)
    for (int j : b.sites)
      if (e.count(j)) throw Error(ErrorKind::domain, "edge region overlaps a bulk region");
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(t_max > 0) || !(dt > 0)) throw Error(ErrorKind::domain, "t_max and dt must be positive");
  const int n = static_cast<int>(std::floor(t_max / dt + 1e-9)) + 1;
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = k * dt;
  return t;
}

void fill_extrema(PPRunRecord& r, double prominence, bool require_tpp) {
  if (!r.edge_entropy.empty()) {
    try {
      r.tpp = first_maximum(r.times, r.edge_entropy, prominence);
    } catch (const Error& e) {
      if (require_tpp || e.kind() != ErrorKind::no_tpp) throw;
    }
  }
  for (const auto& f : r.infidelity) {
    try {
      r.infidelity_minima.push_back(global_minimum(r.times, f));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_minimum) throw;
      const int i = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
      r.infidelity_minima.push_back({r.times[i], i, f[i]});
    }
  }
}

// Edge entropy and bulk infidelities of one state. The escalating fidelity
// is left to a serial second pass.
void observe(const CorrelationMatrix& C, const Subsystem& edge, const std::vector<BulkTarget>& bulks, double& S,
             std::vector<double>& f) {
  S = edge.sites.empty() ? 0.0 : renyi2(reduce(C, edge));
  f.resize(bulks.size());
  for (std::size_t b = 0; b < bulks.size(); ++b) f[b] = infidelity_fast(reduce(C, bulks[b].region), bulks[b].reference);
}

}  // namespace

Extremum first_maximum(const std::vector<double>& t, const std::vector<double>& s, double prominence) {
  const int n = static_cast<int>(s.size());
  for (int i = 1; i + 1 < n; ++i) {
    if (!(s[i - 1] < s[i] && s[i] >= s[i + 1])) continue;
    bool accepted = prominence <= 0.0;
    const double thr = s[i] - prominence * std::abs(s[i]);
    for (int k = i + 1; k < n && !accepted; ++k) {
      if (s[k] > s[i]) break;
      if (s[k] <= thr) accepted = true;
    }
    if (accepted) return refine(t, s, i);
  }
  std::ostringstream os;
  os << "no maximum of the edge entropy before t = " << (t.empty() ? 0.0 : t.back());
  if (!s.empty()) os << " (series " << s.front() << " -> " << s.back() << " over " << n << " points)";
  throw Error(ErrorKind::no_tpp, os.str());
}

Extremum global_minimum(const std::vector<double>& t, const std::vector<double>& s) {
  if (s.empty()) throw Error(ErrorKind::no_minimum, "empty series");
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  if (*hi - *lo <= 1e-12 * (1.0 + std::abs(*lo))) throw Error(ErrorKind::no_minimum, "series is flat");
  const int i = static_cast<int>(lo - s.begin());
  if (i == 0 || i + 1 == static_cast<int>(s.size())) {
    std::ostringstream os;
    os << "series minimum lies on the boundary at t = " << t[i];
    throw Error(ErrorKind::no_minimum, os.str());
  }
  return refine(t, s, i);
}

PPRunRecord run_pp(const CorrelationMatrix& C0, const DeformationProfile& profile, const PPOptions& opt,
                   const std::string& initial_state) {
  if (C0.n() != profile.num_sites) throw Error(ErrorKind::dimension, "initial state does not match the lattice");
  std::vector<Subsystem> regions;
  for (const auto& b : opt.bulks) regions.push_back(b.region);
  check_disjoint(opt.edge, regions);

  PPRunRecord r;
  r.profile = to_string(profile.kind);
  r.initial_state = initial_state;
  r.times = time_grid(opt.t_max, opt.dt);
  for (const auto& b : opt.bulks) r.bulk_labels.push_back(b.label);
  const int n = static_cast<int>(r.times.size());
  r.edge_entropy.assign(opt.edge.sites.empty() ? 0 : n, 0.0);
  r.infidelity.assign(opt.bulks.size(), std::vector<double>(n, 0.0));

  Trajectory traj(C0, hopping_hamiltonian(profile));
  auto body = [&](int k) {
    double S;
    std::vector<double> f;
    observe(traj.at(r.times[k]), opt.edge, opt.bulks, S, f);
    if (!r.edge_entropy.empty()) r.edge_entropy[k] = S;
    for (std::size_t b = 0; b < f.size(); ++b) r.infidelity[b][k] = f[b];
  };
  if (opt.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) body(k);
  } else {
    for (int k = 0; k < n; ++k) body(k);
  }
  for (std::size_t b = 0; b < opt.bulks.size(); ++b)
    for (int k = 0; k < n; ++k)
      if (r.infidelity[b][k] < opt.refine_below)
        r.infidelity[b][k] = infidelity(reduce(traj.at(r.times[k]), opt.bulks[b].region), opt.bulks[b].reference);

  fill_extrema(r, opt.prominence, opt.require_tpp);
  return r;
}

ScalingPoint scaling_point(int N, const ScalingOptions& opt) {
  const auto profile = make_profile(opt.profile, N);
  const auto H = hopping_hamiltonian(profile);
  const auto C0 = ground_state(hopping_hamiltonian(flat_weights(N)));
  PPOptions o;
  o.t_max = opt.t_max > 0 ? opt.t_max : 1.5 * N + 10;
  o.dt = opt.dt;
  o.edge = left_edge(N, opt.edge_sites);
  o.prominence = opt.prominence;
  o.exec = Exec::serial;
  auto rec = run_pp(C0, profile, o);
  ScalingPoint p;
  p.N = N;
  p.tpp = *rec.tpp;
  const auto Ct = evolve(C0, H, p.tpp.t);
  for (int n : opt.bulks) {
    p.bulk_sizes.push_back(n);
    if (n >= N) {
      p.infidelity_obc.push_back(std::numeric_limits<double>::quiet_NaN());
      p.infidelity_pp.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const auto A = centered_interval(N, n);
    const auto ref = infinite_chain_segment(n);
    p.infidelity_obc.push_back(infidelity(reduce(C0, A), ref));
    p.infidelity_pp.push_back(infidelity(reduce(Ct, A), ref));
  }
  return p;
}

std::vector<ScalingPoint> scaling_sweep(const std::vector<int>& Ns, const ScalingOptions& opt, Exec exec) {
  std::vector<ScalingPoint> out(Ns.size());
  const int n = static_cast<int>(Ns.size());
  if (exec == Exec::parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        out[i] = scaling_point(Ns[i], opt);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (int i = 0; i < n; ++i) out[i] = scaling_point(Ns[i], opt);
  }
  return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::dimension, "fit inputs differ in length");
  const int n = static_cast<int>(x.size());
  if (n < 2) throw Error(ErrorKind::domain, "a linear fit needs at least two points");
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) mx += x[i], my += y[i];
  mx /= n, my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0)) throw Error(ErrorKind::domain, "fit abscissae are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
  f.points = n;
  return f;
}

PowerLawFit power_law_fit(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    if (x[i] > 0 && y[i] > 0 && std::isfinite(y[i])) lx.push_back(std::log(x[i])), ly.push_back(std::log(y[i]));
  auto f = linear_fit(lx, ly);
  return {-f.slope, f.r2, f.points};
}

PPRunRecord run_pp_spins(const CVec& psi0, const CMat& H, const std::vector<std::uint64_t>& basis, int N,
                         const SpinPPOptions& opt) {
  if (psi0.size() != H.rows() || H.rows() != static_cast<long>(basis.size()))
    throw Error(ErrorKind::dimension, "state, Hamiltonian and sector basis disagree");
  std::vector<Subsystem> regions;
  for (const auto& b : opt.bulks) regions.push_back(b.region);
  check_disjoint(opt.edge, regions);

  PPRunRecord r;
  r.profile = "spin";
  r.initial_state = "spin";
  r.times = time_grid(opt.t_max, opt.dt);
  for (const auto& b : opt.bulks) r.bulk_labels.push_back(b.label);
  const int n = static_cast<int>(r.times.size());
  r.edge_entropy.assign(opt.edge.sites.empty() ? 0 : n, 0.0);
  r.infidelity.assign(opt.bulks.size(), std::vector<double>(n, 0.0));

  fock::SpectralEvolver ev(H, psi0);
  for (int k = 0; k < n; ++k) {
    CVec psi = fock::embed(ev.state(r.times[k]), basis, N);
    if (!r.edge_entropy.empty()) r.edge_entropy[k] = fock::renyi2(fock::reduced_density(psi, N, opt.edge));
    for (std::size_t b = 0; b < opt.bulks.size(); ++b)
      r.infidelity[b][k] =
          1.0 - fock::exact_fidelity(fock::reduced_density(psi, N, opt.bulks[b].region), opt.bulks[b].reference);
  }
  fill_extrema(r, opt.prominence, opt.require_tpp);
  return r;
}

double TrotterSchedule::total_time() const {
  double s = 0.0;
  for (const auto& st : steps) s += st.duration;
  return s;
}

double TrotterSchedule::bond_time(int j) const {
  double s = 0.0;
  for (const auto& st : steps)
    if (st.first <= j - 1 && j <= st.first + st.window - 1) s += st.duration;
  return s;
}

TrotterSchedule trotter_schedule(const DeformationProfile& profile, int n_min, double dt_base, int composite_steps) {
  if (profile.kind != ProfileKind::parabolic) throw Error(ErrorKind::domain, "Trotter schedule needs the parabolic profile");
  const int N = profile.N;
  if (N % 2) throw Error(ErrorKind::invalid_lattice, "Trotter schedule needs an even chain");
  if (n_min % 2 || n_min < 2 || n_min > N) throw Error(ErrorKind::domain, "n_min must be even with 2 <= n_min <= N");
  if (!(dt_base > 0)) throw Error(ErrorKind::domain, "dt_base must be positive");
  if (composite_steps < 1) throw Error(ErrorKind::domain, "at least one composite step");

  struct Raw {
    int window;
    double duration;
    bool ends_composite;
  };
  std::vector<Raw> raw;
  for (int c = 0; c < composite_steps; ++c) {
    for (int w = n_min; w <= N; w += 2) raw.push_back({w, (w - 1) * dt_base, false});
    for (int w = N; w >= n_min; w -= 2) raw.push_back({w, (w - 1) * dt_base, false});
    raw.back().ends_composite = true;
  }
  // Second-order arrangement: the first half-step goes to the end.
  std::rotate(raw.begin(), raw.begin() + 1, raw.end());

  TrotterSchedule s;
  s.N = N;
  s.n_min = n_min;
  s.dt_base = dt_base;
  s.composite_steps = composite_steps;
  bool pending_end = false;
  for (const auto& r : raw) {
    if (!s.steps.empty() && s.steps.back().window == r.window) {
      s.steps.back().duration += r.duration;
    } else {
      if (pending_end) s.composite_ends.push_back(static_cast<int>(s.steps.size()) - 1);
      pending_end = false;
      s.steps.push_back({r.window, (N - r.window) / 2, r.duration});
    }
    pending_end = pending_end || r.ends_composite;
  }
  s.composite_ends.push_back(static_cast<int>(s.steps.size()) - 1);
  return s;
}

TrotterRun run_trotter(const CorrelationMatrix& C0, const TrotterSchedule& s, const Subsystem& edge,
                       const std::vector<BulkTarget>& bulks) {
  if (C0.n() != s.N) throw Error(ErrorKind::dimension, "initial state does not match the schedule");
  std::vector<Subsystem> regions;
  for (const auto& b : bulks) regions.push_back(b.region);
  check_disjoint(edge, regions);

  // One spectral decomposition per window size.
  std::vector<Propagator> props;
  std::vector<int> sizes;
  for (int w = s.n_min; w <= s.N; w += 2) {
    props.emplace_back(hopping_hamiltonian(flat_weights(w)));
    sizes.push_back(w);
  }

  TrotterRun out;
  PPRunRecord& r = out.record;
  r.profile = "parabolic-trotter";
  r.initial_state = "given";
  for (const auto& b : bulks) r.bulk_labels.push_back(b.label);
  r.infidelity.assign(bulks.size(), {});

  CMat C = C0.C;
  double t = 0.0;
  std::size_t next_end = 0;
  auto record = [&] {
    CorrelationMatrix cur{C, C0.precision};
    r.times.push_back(t);
    if (!edge.sites.empty()) r.edge_entropy.push_back(renyi2(reduce(cur, edge)));
    for (std::size_t b = 0; b < bulks.size(); ++b)
      r.infidelity[b].push_back(infidelity(reduce(cur, bulks[b].region), bulks[b].reference));
  };
  record();
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    const auto& st = s.steps[k];
    const int idx = (st.window - s.n_min) / 2;
    const CMat u = props[idx].U(st.duration);
    const int a = st.first, w = st.window;
    // C -> conj(U) C U^T with U = 1 outside the window.
    C.middleRows(a, w) = (u.conjugate() * C.middleRows(a, w)).eval();
    C.middleCols(a, w) = (C.middleCols(a, w) * u.transpose()).eval();
    t += st.duration;
    if (next_end < s.composite_ends.size() && s.composite_ends[next_end] == static_cast<int>(k)) {
      record();
      ++next_end;
    }
  }
  out.final_state = {C, C0.precision};
  fill_extrema(r, 0.01, false);
  return out;
}

}  // namespace ppsim
