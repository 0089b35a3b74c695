#include "commands.hpp"

#include <cmath>
#include <limits>

#include "ppsim/continuum.hpp"
#include "ppsim/fss.hpp"
#include "ppsim/observables.hpp"
#include "ppsim/oracle.hpp"
#include "ppsim/pipelines.hpp"

namespace ppsim::cli {

namespace {

using nlohmann::json;

json extremum_json(const Extremum& e) { return {{"t", e.t}, {"index", e.index}, {"value", e.value}}; }
json extremum_json(const std::optional<Extremum>& e) { return e ? extremum_json(*e) : json(nullptr); }

bool boundary(const Extremum& e, const std::vector<double>& t) {
  return e.index == 0 || e.index + 1 == static_cast<int>(t.size());
}

// t, edge entropy, one infidelity column per bulk.
io::Csv series_csv(const PPRunRecord& r, const std::string& edge_column) {
  io::Csv csv{{"t"}};
  if (!r.edge_entropy.empty()) csv.header.push_back(edge_column);
  for (const auto& l : r.bulk_labels) csv.header.push_back("infidelity_" + l);
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    std::vector<double> row{r.times[k]};
    if (!r.edge_entropy.empty()) row.push_back(r.edge_entropy[k]);
    for (const auto& f : r.infidelity) row.push_back(f[k]);
    csv.add(row);
  }
  return csv;
}

json minima_json(const PPRunRecord& r) {
  json m = json::array();
  for (std::size_t b = 0; b < r.bulk_labels.size(); ++b) {
    const auto& e = r.infidelity_minima[b];
    m.push_back({{"bulk", r.bulk_labels[b]}, {"t", e.t}, {"value", e.value}, {"interior", !boundary(e, r.times)}});
  }
  return m;
}

void require_positive(const char* key, double v) {
  if (!(v > 0)) throw Error(ErrorKind::config, std::string("--") + key + " must be positive");
}

ProfileKind profile_1d(const std::string& s) {
  const auto k = profile_kind_from_string(s);
  if (k != ProfileKind::flat && k != ProfileKind::parabolic && k != ProfileKind::sine_square)
    throw Error(ErrorKind::config, "1D profile must be flat, parabolic or sine-square");
  return k;
}

void pp1d_sweep(Run& run) {
  const auto& c = run.cmd;
  ScalingOptions o;
  o.profile = profile_1d(c.get("profile"));
  o.bulks = c.get_ints("bulks");
  o.edge_sites = c.get_int("edge-sites");
  o.dt = c.get_double("dt");
  o.prominence = c.get_double("prominence");
  o.t_max = c.get_double("t-max");
  const auto Ns = c.get_ints("sweep-N");
  for (int N : Ns)
    if (N < 2 * o.edge_sites + 2) throw Error(ErrorKind::config, "--sweep-N values too small for the edge region");
  const auto pts = scaling_sweep(Ns, o);

  io::Csv csv{{"N", "t_pp"}};
  for (int n : o.bulks) {
    csv.header.push_back("infidelity_obc_n" + std::to_string(n));
    csv.header.push_back("infidelity_pp_n" + std::to_string(n));
  }
  std::vector<double> xs, tpp;
  for (const auto& p : pts) {
    std::vector<double> row{double(p.N), p.tpp.t};
    for (std::size_t b = 0; b < o.bulks.size(); ++b) {
      row.push_back(p.infidelity_obc[b]);
      row.push_back(p.infidelity_pp[b]);
    }
    csv.add(row);
    xs.push_back(p.N);
    tpp.push_back(p.tpp.t);
  }
  run.write("scaling.csv", csv);

  json fits = json::array();
  for (std::size_t b = 0; b < o.bulks.size(); ++b) {
    std::vector<double> obc, pp;
    for (const auto& p : pts) obc.push_back(p.infidelity_obc[b]), pp.push_back(p.infidelity_pp[b]);
    json f{{"n", o.bulks[b]}};
    try {
      auto fo = power_law_fit(xs, obc);
      auto fp = power_law_fit(xs, pp);
      f["k_obc"] = fo.k;
      f["r2_obc"] = fo.r2;
      f["k_pp"] = fp.k;
      f["r2_pp"] = fp.r2;
      f["points"] = fo.points;
    } catch (const Error&) {
      f["k_obc"] = nullptr;
      f["k_pp"] = nullptr;
      f["points"] = 0;
    }
    fits.push_back(f);
  }
  run.summary["sweep"] = Ns;
  run.summary["exponents"] = fits;
  if (pts.size() >= 2) {
    auto lf = linear_fit(xs, tpp);
    run.summary["t_pp_fit"] = {{"slope", lf.slope}, {"intercept", lf.intercept}, {"r2", lf.r2}};
  }
}

void pp1d(Run& run) {
  const auto& c = run.cmd;
  if (!c.get("sweep-N").empty()) return pp1d_sweep(run);
  const int N = c.get_int("N");
  const int edge_sites = c.get_int("edge-sites");
  if (N < 2 * edge_sites + 2) throw Error(ErrorKind::config, "--N too small for the edge region");
  const auto kind = profile_1d(c.get("profile"));
  const auto profile = make_profile(kind, N);
  const auto init = c.get("init");
  const auto H0 = hopping_hamiltonian(flat_weights(N));
  CorrelationMatrix C0;
  if (init == "obc-gs") {
    C0 = ground_state(H0);
  } else if (init == "thermal") {
    C0 = thermal_state(H0, c.get_double("T"));
  } else {
    throw Error(ErrorKind::config, "--init must be obc-gs or thermal");
  }
  const int precision = c.get_int("precision");
  C0.precision = precision;

  PPOptions o;
  o.dt = c.get_double("dt");
  require_positive("dt", o.dt);
  o.t_max = c.get_double("t-max") > 0 ? c.get_double("t-max") : 1.5 * N + 10;
  o.prominence = c.get_double("prominence");
  o.require_tpp = false;
  const auto edge = c.get("edge");
  if (edge == "left") {
    o.edge = left_edge(N, edge_sites);
  } else if (edge == "both") {
    o.edge = left_edge(N, edge_sites);
    for (int s : right_edge(N, edge_sites).sites) o.edge.sites.push_back(s);
  } else {
    throw Error(ErrorKind::config, "--edge must be left or both");
  }
  std::vector<int> skipped;
  for (int n : c.get_ints("bulks")) {
    if (n < 1 || n >= N) {
      skipped.push_back(n);
      continue;
    }
    o.bulks.push_back({"n" + std::to_string(n), centered_interval(N, n), infinite_chain_segment(n)});
  }
  const auto r = run_pp_overlapping(C0, profile, o, init);
  run.write("series.csv", series_csv(r, edge == "left" ? "S2_L" : "S2_LR"));

  const auto H = hopping_hamiltonian(profile);
  const double t_end = r.tpp ? r.tpp->t : r.times.back();
  auto Ct = evolve(C0, H, t_end);
  Ct.precision = precision;

  const auto e0 = energy_profile(C0, profile);
  const auto et = energy_profile(Ct, profile);
  io::Csv energy{{"bond", "energy_t0", "deviation_t0", "energy_t", "deviation_t"}};
  for (std::size_t b = 0; b < e0.h.size(); ++b)
    energy.add(std::vector<double>{double(b + 1), e0.h[b], e0.deviation[b], et.h[b], et.deviation[b]});
  run.write("energy.csv", energy);

  const int j = N / 2 - 1;
  std::vector<int> ls;
  for (int l = 0; j + 2 * l + 1 < N; ++l) ls.push_back(l);
  const auto c0 = two_point(C0, j, ls);
  const auto ct = two_point(Ct, j, ls);
  io::Csv corr{{"l", "distance", "corr_t0", "corr_t", "corr_infinite"}};
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const double d = 2 * ls[i] + 1;
    corr.add(std::vector<double>{double(ls[i]), d, c0[i], ct[i], 1.0 / (M_PI * d)});
  }
  run.write("correlators.csv", corr);
  run.write("state_t.ppcm", Ct);
  run.write("state_t.json", io::to_json(Ct));

  json at = json::array();
  for (const auto& b : o.bulks)
    at.push_back({{"bulk", b.label},
                  {"infidelity_t0", 1.0 - uhlmann_fidelity(reduce(C0, b.region), b.reference, precision).F},
                  {"infidelity_t", 1.0 - uhlmann_fidelity(reduce(Ct, b.region), b.reference, precision).F}});
  run.summary["N"] = N;
  run.summary["profile"] = to_string(kind);
  run.summary["init"] = init;
  run.summary["t_pp"] = extremum_json(r.tpp);
  run.summary["state_time"] = t_end;
  run.summary["infidelity_minima"] = minima_json(r);
  run.summary["bulk_infidelity"] = at;
  run.summary["skipped_bulks"] = skipped;
  if (!r.tpp) throw Error(ErrorKind::no_tpp, "edge entropy has no maximum before t = " + io::format_double(o.t_max));
}

void pp2d(Run& run) {
  const auto& c = run.cmd;
  Pp2dOptions o;
  o.N = c.get_int("N");
  o.corner = c.get_int("corner");
  o.bulks = c.get_ints("bulks");
  const auto d = c.get("deformation");
  if (d == "product") {
    o.deformation = ProfileKind::product_parabola_2d;
  } else if (d == "radial") {
    o.deformation = ProfileKind::radial_parabola_2d;
  } else {
    throw Error(ErrorKind::config, "--deformation must be product or radial");
  }
  o.degeneracy = c.get("degeneracy");
  o.dt = c.get_double("dt");
  require_positive("dt", o.dt);
  o.t_max = c.get_double("t-max");
  if (o.t_max <= 0) o.t_max = (o.deformation == ProfileKind::radial_parabola_2d ? 6.0 : 2.5) * o.N;
  o.prominence = c.get_double("prominence");
  o.quadrature_points = c.get_int("quadrature");
  const auto res = run_pp2d(o);
  const auto& r = res.record;
  run.write("series.csv", series_csv(r, "S2_corner"));

  json bulks = json::array();
  for (std::size_t b = 0; b < res.bulks.size(); ++b) {
    const auto& f = r.infidelity[b];
    json e{{"n", res.bulks[b]}, {"infidelity_t0", f.front()}, {"minimum", extremum_json(r.infidelity_minima[b])}};
    if (r.tpp) e["infidelity_at_t_pp"] = f[r.tpp->index];
    bulks.push_back(e);
  }
  run.summary["N"] = o.N;
  run.summary["corner"] = o.corner;
  run.summary["deformation"] = d;
  run.summary["t_pp"] = extremum_json(r.tpp);
  run.summary["bulks"] = bulks;
  run.summary["skipped_bulks"] = res.skipped;
  if (!r.tpp) throw Error(ErrorKind::no_tpp, "corner entropy has no maximum before t_max");
}

void ssh_cmd(Run& run) {
  const auto& c = run.cmd;
  SshPPOptions o;
  o.N = c.get_int("N");
  o.J = c.get_double("J");
  o.delta = c.get_double("delta");
  o.n = c.get_int("n");
  o.ref_N = c.get_int("ref-N");
  o.edge_sites = c.get_int("edge-sites");
  o.dt = c.get_double("dt");
  o.t_max = c.get_double("t-max");
  o.prominence = c.get_double("prominence");
  if (o.N > fock::max_spin_sites || o.ref_N > fock::max_spin_sites)
    throw Error(ErrorKind::size, "exact diagonalization is limited to 14 sites");
  const auto res = run_ssh_pp(o);
  run.write("series.csv", series_csv(res.record, "S2_L"));
  run.summary["N"] = o.N;
  run.summary["J"] = o.J;
  run.summary["delta"] = o.delta;
  run.summary["window"] = res.window.sites;
  run.summary["gap"] = res.gap;
  run.summary["t_pp"] = extremum_json(res.record.tpp);
  run.summary["Z"] = {{"obc", res.Z_obc}, {"pp", res.Z_pp}, {"reference", res.Z_ref}};
  run.summary["staggered_magnetization"] = {{"obc", res.M_obc}, {"pp", res.M_pp}};
  run.summary["infidelity_minima"] = minima_json(res.record);
}

void fss_cmd(Run& run) {
  const auto& c = run.cmd;
  std::vector<fss::Curve> curves;
  const bool synthetic = c.get_bool("synthetic");
  if (synthetic == !c.get("input").empty())
    throw Error(ErrorKind::config, "give exactly one of --input or --synthetic true");
  if (synthetic) {
    const auto [jlo, jhi] = c.get_interval("J-range");
    curves = fss::synthetic_family(c.get_doubles("ns"), jlo, jhi, c.get_int("samples"), c.get_double("jc0"),
                                   c.get_double("beta0"), c.get_double("noise"), c.get_seed());
    io::Csv csv{{"n", "J", "M"}};
    for (const auto& cv : curves)
      for (std::size_t i = 0; i < cv.J.size(); ++i) csv.add(std::vector<double>{cv.n, cv.J[i], cv.M[i]});
    run.write("curves.csv", csv);
  } else {
    const auto t = io::read_csv(c.get("input"));
    const int cn = t.column("n"), cj = t.column("J"), cm = t.column("M");
    if (cn < 0 || cj < 0 || cm < 0) throw Error(ErrorKind::config, "input CSV needs columns n, J, M");
    for (const auto& row : t.rows) {
      const double n = std::stod(row[cn]);
      auto it = std::find_if(curves.begin(), curves.end(), [&](const fss::Curve& cv) { return cv.n == n; });
      if (it == curves.end()) it = curves.insert(curves.end(), fss::Curve{n, {}, {}});
      it->J.push_back(std::stod(row[cj]));
      it->M.push_back(std::stod(row[cm]));
    }
    std::sort(curves.begin(), curves.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  }
  fss::Grid g;
  std::tie(g.jc_min, g.jc_max) = c.get_interval("jc");
  std::tie(g.beta_min, g.beta_max) = c.get_interval("beta");
  std::tie(g.jc_points, g.beta_points) = c.get_grid("grid");
  fss::CostOptions co;
  co.half_window = c.get_double("half-window");
  co.probes = c.get_int("probes");
  const auto L = fss::fit_scaling(curves, g, c.get_double("nu"), co);

  io::Csv csv{{"jc", "beta", "eps2", "W"}};
  for (int i = 0; i < g.jc_points; ++i)
    for (int k = 0; k < g.beta_points; ++k) {
      const int idx = i * g.beta_points + k;
      csv.add(std::vector<double>{g.jc(i), g.beta(k), L.eps2[idx], L.W[idx]});
    }
  run.write("likelihood.csv", csv);
  run.summary["curves"] = curves.size();
  run.summary["eps2_min"] = L.eps2_min;
  run.summary["jc"] = {{"mean", L.jc_mean}, {"err", L.jc_err}};
  run.summary["beta"] = {{"mean", L.beta_mean}, {"err", L.beta_err}};
  run.summary["flat"] = L.flat;
  run.summary["failed_points"] = L.failed_points;
  if (L.failed_points == g.jc_points * g.beta_points)
    throw Error(ErrorKind::geometry, "collapse cost failed at every grid point");
}

void trotter_cmd(Run& run) {
  const auto& c = run.cmd;
  const int N = c.get_int("N");
  const double dt = c.get_double("dt");
  require_positive("dt", dt);
  const auto s = trotter_schedule(parabolic_weights(N), c.get_int("nmin"), dt, c.get_int("composite"));
  io::Csv csv{{"step", "window", "first_site", "duration"}};
  for (std::size_t i = 0; i < s.steps.size(); ++i)
    csv.add(std::vector<double>{double(i + 1), double(s.steps[i].window), double(s.steps[i].first + 1),
                                s.steps[i].duration});
  run.write("schedule.csv", csv);
  run.summary["N"] = N;
  run.summary["elementary_steps"] = s.steps.size();
  run.summary["total_time"] = s.total_time();
  run.summary["composite_ends"] = s.composite_ends;
  if (!c.get_bool("evolve")) return;

  const auto C0 = ground_state(hopping_hamiltonian(flat_weights(N)));
  std::vector<BulkTarget> bulks;
  for (int n : c.get_ints("bulks")) {
    if (n < 1 || n > N - 2 * c.get_int("edge-sites")) throw Error(ErrorKind::config, "bulk does not fit beside the edge");
    bulks.push_back({"n" + std::to_string(n), centered_interval(N, n), infinite_chain_segment(n)});
  }
  const auto tr = run_trotter(C0, s, left_edge(N, c.get_int("edge-sites")), bulks);
  run.write("series.csv", series_csv(tr.record, "S2_L"));
  const auto analog = evolve(C0, hopping_hamiltonian(parabolic_weights(N)), s.total_time());
  run.summary["analog_deviation"] = (tr.final_state.C - analog.C).cwiseAbs().maxCoeff();
  json fin = json::array();
  for (const auto& b : bulks)
    fin.push_back({{"bulk", b.label},
                   {"trotter", infidelity(reduce(tr.final_state, b.region), b.reference)},
                   {"analog", infidelity(reduce(analog, b.region), b.reference)}});
  run.summary["final_infidelity"] = fin;
}

void ehlearn_cmd(Run& run) {
  const auto& c = run.cmd;
  EhBuildupOptions o;
  o.N = c.get_int("N");
  o.init = c.get("init");
  o.T = c.get_double("T");
  o.windows = c.get_ints("windows");
  o.dt = c.get_double("dt");
  require_positive("dt", o.dt);
  o.t_max = c.get_double("t-max");
  require_positive("t-max", o.t_max);
  o.edge_sites = c.get_int("edge-sites");
  o.prominence = c.get_double("prominence");
  const auto res = run_eh_buildup(o);

  io::Csv series{{"t", "S2_L"}};
  for (const auto& w : res.windows) {
    const auto n = std::to_string(w.n);
    series.header.insert(series.header.end(), {"distance_n" + n, "residual_n" + n, "infidelity_n" + n});
  }
  for (std::size_t k = 0; k < res.times.size(); ++k) {
    std::vector<double> row{res.times[k], res.edge_entropy[k]};
    for (const auto& w : res.windows)
      row.insert(row.end(), {w.series.distance[k], w.series.residual[k], w.infidelity[k]});
    series.add(row);
  }
  run.write("distance.csv", series);

  json windows = json::array();
  bool missing = false;
  for (const auto& w : res.windows) {
    io::Csv g{{"t", "bond", "g"}};
    for (std::size_t k = 0; k < res.times.size(); ++k)
      for (std::size_t b = 0; b < w.series.couplings[k].size(); ++b)
        g.add(std::vector<double>{res.times[k], double(b + 1), w.series.couplings[k][b]});
    run.write("couplings_n" + std::to_string(w.n) + ".csv", g);
    windows.push_back({{"n", w.n},
                       {"distance_min", extremum_json(w.distance_min)},
                       {"infidelity_min", extremum_json(w.infidelity_min)}});
    missing |= !w.distance_min.has_value();
  }
  run.summary["N"] = o.N;
  run.summary["init"] = o.init;
  run.summary["entropy_max"] = extremum_json(res.entropy_max);
  run.summary["windows"] = windows;
  if (missing) throw Error(ErrorKind::no_minimum, "parabola distance has no interior minimum");
}

void oracle_cmd(Run& run) {
  const auto& c = run.cmd;
  const auto r = oracle_validate(c.get_int("N"), c.get_int("trials"), c.get_seed(), c.get_double("tol"));
  io::Csv csv{{"trial", "quantity", "gaussian", "fock", "diff", "pass"}};
  for (const auto& k : r.checks)
    csv.add({std::to_string(k.trial), k.quantity, io::format_double(k.gaussian), io::format_double(k.fock),
             io::format_double(k.diff), k.pass ? "true" : "false"});
  run.write("matrix.csv", csv);
  json m = json::object();
  for (const char* q : {"evolution", "renyi2", "von_neumann", "fidelity"}) {
    const double w = r.worst(q);
    m[q] = {{"worst", w}, {"pass", w < r.tol}};
  }
  run.summary["N"] = r.N;
  run.summary["trials"] = r.trials;
  run.summary["tol"] = r.tol;
  run.summary["matrix"] = m;
  run.summary["all_pass"] = r.all_pass();
  std::cout << "quantity      worst diff   result\n";
  for (auto& [q, v] : m.items())
    std::printf("%-13s %-12.3e %s\n", q.c_str(), v["worst"].get<double>(), v["pass"].get<bool>() ? "pass" : "FAIL");
  if (!r.all_pass()) run.exit_code = validation_failure;
}

}  // namespace

std::vector<std::unique_ptr<Command>> make_commands(CLI::App& app) {
  std::vector<std::unique_ptr<Command>> cs;
  auto add = [&](const char* name, const char* desc, void (*body)(Run&)) -> Command& {
    cs.push_back(std::make_unique<Command>(app, name, desc));
    cs.back()->body = body;
    return *cs.back();
  };

  add("pp1d", "purification preparation on an open chain", pp1d)
      .param("N", "36", "chain length")
      .param("profile", "parabolic", "deformation: parabolic, sine-square or flat")
      .param("init", "obc-gs", "initial state: obc-gs or thermal")
      .param("T", "0.15", "temperature for --init thermal")
      .param("bulks", "10,30", "centred bulk sizes; sizes >= N are skipped")
      .param("edge", "left", "entropy region: left or both edges")
      .param("edge-sites", "2", "sites per edge region")
      .param("dt", "0.05", "sampling interval")
      .param("t-max", "0", "end of the time grid (0: 1.5 N + 10)")
      .param("prominence", "0.01", "relative drop that confirms the entropy maximum")
      .param("sweep-N", "", "system-size sweep first:last:step; writes a scaling table");

  add("pp2d", "purification preparation on the square lattice", pp2d)
      .param("N", "10", "linear size")
      .param("corner", "4", "corner block for the edge entropy")
      .param("bulks", "2,4,6", "centred bulk squares; sizes >= N are skipped")
      .param("deformation", "product", "product or radial")
      .param("degeneracy", "staggered", "zero-energy shell: staggered lift, mixture or error")
      .param("dt", "0.05", "sampling interval")
      .param("t-max", "0", "end of the time grid (0: 2.5 N, or 6 N for radial)")
      .param("prominence", "0.01", "relative drop that confirms the entropy maximum")
      .param("quadrature", "64", "initial quadrature points for the infinite-lattice reference");

  add("ssh", "extended SSH chain: PP state and reflection invariant", ssh_cmd)
      .param("N", "12", "chain length (<= 14)")
      .param("J", "0.05", "inter-cell coupling")
      .param("delta", "1.4", "Ising anisotropy")
      .param("n", "8", "window size")
      .param("ref-N", "14", "reference chain length")
      .param("edge-sites", "2", "sites in the edge entropy region")
      .param("dt", "0", "sampling interval (0: 0.05 / max(1, J))")
      .param("t-max", "0", "end of the time grid (0: 10 / max(1, J))")
      .param("prominence", "0", "relative drop that confirms the entropy maximum");

  add("fss", "finite-size-scaling collapse likelihood", fss_cmd)
      .param("input", "", "CSV with columns n, J, M")
      .param("synthetic", "false", "generate a synthetic family instead of reading --input")
      .param("ns", "8,12,16,20", "synthetic sizes")
      .param("samples", "51", "synthetic samples per curve")
      .param("J-range", "0.4:0.9", "synthetic coupling range")
      .param("jc0", "0.6384", "synthetic critical coupling")
      .param("beta0", "0.125", "synthetic exponent")
      .param("noise", "0.01", "synthetic relative noise")
      .param("grid", "61x61", "grid points jc x beta")
      .param("jc", "0.5:0.8", "jc range")
      .param("beta", "0.0:0.3", "beta range")
      .param("nu", "1", "correlation-length exponent")
      .param("half-window", "0.1", "probe half-width in normalized arc length")
      .param("probes", "101", "probe points");

  add("trotter", "staircase Trotter schedule for the parabolic deformation", trotter_cmd)
      .param("N", "36", "chain length")
      .param("nmin", "2", "smallest window")
      .param("dt", "0.01", "base step")
      .param("composite", "5", "composite steps")
      .param("evolve", "true", "apply the schedule to the OBC ground state")
      .param("bulks", "10", "centred bulk sizes for the infidelity")
      .param("edge-sites", "2", "sites in the edge entropy region");

  add("ehlearn", "learned entanglement Hamiltonians along a PP run", ehlearn_cmd)
      .param("N", "36", "chain length")
      .param("init", "thermal", "initial state: thermal or obc-gs")
      .param("T", "0.15", "temperature")
      .param("windows", "28,20", "centred window sizes")
      .param("dt", "0.05", "sampling interval")
      .param("t-max", "30", "end of the time grid")
      .param("edge-sites", "2", "sites in the edge entropy region")
      .param("prominence", "0.01", "relative drop that confirms the entropy maximum");

  add("oracle-validate", "cross-check the Gaussian kernels against Fock space", oracle_cmd)
      .param("N", "6", "sites (<= 10)")
      .param("trials", "50", "random states")
      .param("tol", "1e-8", "agreement threshold");
  return cs;
}

}  // namespace ppsim::cli
