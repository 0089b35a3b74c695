// Acceptance criteria 1-12. With no arguments every criterion runs; with
// numeric arguments only those. Exit status is nonzero if any selected
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ppsim/continuum.hpp"
#include "ppsim/fss.hpp"
#include "ppsim/io.hpp"
#include "ppsim/observables.hpp"
#include "ppsim/oracle.hpp"
#include "ppsim/pipelines.hpp"

using namespace ppsim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Report {
 public:
  void check(bool ok, const std::string& what) {
    out_.pass = out_.pass && ok;
    if (!out_.detail.empty()) out_.detail += "; ";
    out_.detail += (ok ? "" : "FAILED ") + what;
  }
  Outcome done() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome commutation() {
  Report r;
  for (int N : {8, 16, 36, 64}) {
    const Mat T = hopping_hamiltonian(parabolic_weights(N)).h;
    const CMat C = infinite_chain_segment(N).C;
    const double rel = (T * C - C * T).norm() / C.norm();
    r.check(rel < 1e-12, fmt("N=%d %.1e", N, rel));
  }
  return r.done();
}

Outcome bulk_vacuum() {
  const auto C0 = infinite_chain_segment(36);
  Trajectory traj(C0, hopping_hamiltonian(parabolic_weights(36)));
  double worst = 0;
  for (int k = 0; k <= 800; ++k) worst = std::max(worst, (traj.at(0.05 * k).C - C0.C).cwiseAbs().maxCoeff());
  Report r;
  r.check(worst <= 1e-9, fmt("max entry change on t in [0,40] = %.1e", worst));
  return r.done();
}

Outcome scaling() {
  std::vector<int> Ns;
  for (int N = 12; N <= 60; N += 4) Ns.push_back(N);
  ScalingOptions o;
  o.bulks = {10, 30};
  const auto pts = scaling_sweep(Ns, o);
  std::vector<double> x, tpp;
  for (const auto& p : pts) x.push_back(p.N), tpp.push_back(p.tpp.t);
  Report r;
  for (std::size_t b = 0; b < o.bulks.size(); ++b) {
    std::vector<double> obc, pp;
    for (const auto& p : pts) obc.push_back(p.infidelity_obc[b]), pp.push_back(p.infidelity_pp[b]);
    const auto fo = power_law_fit(x, obc), fp = power_law_fit(x, pp);
    r.check(std::abs(fo.k - 2.0) <= 0.3, fmt("n=%d k_OBC=%.2f", o.bulks[b], fo.k));
    r.check(std::abs(fp.k - 5.4) <= 0.8, fmt("n=%d k_PP=%.2f", o.bulks[b], fp.k));
  }
  const auto lf = linear_fit(x, tpp);
  r.check(lf.r2 > 0.99, fmt("t_PP = %.3f N %+.2f, R^2=%.4f", lf.slope, lf.intercept, lf.r2));
  return r.done();
}

Outcome detector_consistency() {
  const int N = 36;
  PPOptions o;
  o.t_max = 64;
  o.edge = left_edge(N, 2);
  o.bulks.push_back({"n30", centered_interval(N, 30), infinite_chain_segment(30)});
  const auto rec = run_pp_overlapping(ground_state(hopping_hamiltonian(flat_weights(N))), parabolic_weights(N), o);
  const double tp = rec.tpp->t, tm = rec.infidelity_minima[0].t;
  Report r;
  r.check(std::abs(tp - tm) < 0.05 * tp,
          fmt("t_PP=%.2f, n=30 minimum at %.2f, gap %.1f%% of t_PP", tp, tm, 100 * std::abs(tp - tm) / tp));
  return r.done();
}

Outcome fock_equivalence() {
  Report r;
  for (int N : {4, 6, 8}) {
    const auto rep = oracle_validate(N, 50, 100 + N, 1e-8);
    double worst = 0;
    for (const char* q : {"evolution", "renyi2", "von_neumann", "fidelity"}) worst = std::max(worst, rep.worst(q));
    r.check(rep.all_pass(), fmt("N=%d worst %.1e over %zu checks", N, worst, rep.checks.size()));
  }
  return r.done();
}

Outcome continuum_agreement() {
  const int N = 72;
  Report r;
  for (auto kind : {ProfileKind::parabolic, ProfileKind::sine_square}) {
    const auto ck = continuum::kind_from_profile(kind);
    const auto p = continuum::lattice_params(N, ck);
    Propagator P(hopping_hamiltonian(make_profile(kind, N)));
    double worst = 0;
    for (double t = 0.0; t <= p.L / (2 * p.v) + 1e-12; t += 0.5) {
      const CMat chi = mode_map(P, t);
      double w = 0;
      for (int m = 1; m <= N / 2; ++m) {
        w += std::norm(chi(N / 4, N - m));
        worst = std::max(worst, std::abs(N * w - continuum::edge_weight(p, m, t)));
      }
    }
    r.check(worst < 0.05, fmt("%s max |lattice - continuum| = %.1e", to_string(kind), worst));

    // Approach of the quarter-system edge weight to 1 at late times.
    std::vector<double> t, lt, ld;
    for (double s = p.L / p.v; s <= 4 * p.L / p.v; s += p.L / (8 * p.v)) {
      const double d = 1.0 - continuum::edge_weight(p, p.L / 4, s);
      t.push_back(s), lt.push_back(std::log(s)), ld.push_back(std::log(d));
    }
    const auto fexp = linear_fit(t, ld);
    const auto falg = linear_fit(lt, ld);
    if (ck == continuum::Kind::parabolic) {
      const double rate = -fexp.slope * p.L / p.v;
      r.check(fexp.slope < 0 && fexp.r2 > falg.r2 && std::abs(rate - 4) < 0.4,
              fmt("parabolic log-linear rate %.2f v/L (R^2 %.5f vs log-log %.5f)", rate, fexp.r2, falg.r2));
    } else {
      r.check(falg.slope < 0 && falg.r2 > fexp.r2 && std::abs(falg.slope + 1) < 0.2,
              fmt("SSD log-log slope %.2f (R^2 %.5f vs log-linear %.5f)", falg.slope, falg.r2, fexp.r2));
    }
  }
  return r.done();
}

Outcome trotter() {
  const int N = 36;
  const auto p = parabolic_weights(N);
  Report r;
  const auto s2 = trotter_schedule(p, 2, 0.01, 5), s8 = trotter_schedule(p, 8, 0.01, 5);
  r.check(s2.steps.size() == 170, fmt("n_min=2: %zu steps", s2.steps.size()));
  r.check(s8.steps.size() == 140, fmt("n_min=8: %zu steps", s8.steps.size()));
  const auto C0 = ground_state(hopping_hamiltonian(flat_weights(N)));
  std::vector<double> dts{0.01, 0.005, 0.0025}, errs;
  for (int k = 0; k < 3; ++k) {
    const auto s = trotter_schedule(p, 2, dts[k], 5 << k);
    const auto run = run_trotter(C0, s, left_edge(N, 2), {});
    errs.push_back((run.final_state.C - evolve(C0, hopping_hamiltonian(p), s.total_time()).C).norm());
  }
  const double slope = -power_law_fit(dts, errs).k;
  r.check(std::abs(slope - 2.0) <= 0.2, fmt("error slope %.2f at T=32.4", slope));
  return r.done();
}

Outcome pp2d() {
  const auto res = run_pp2d({});
  const auto& rec = res.record;
  const double dt = rec.times[1] - rec.times[0];
  Report r;
  r.check(rec.tpp.has_value(), rec.tpp ? fmt("corner maximum at %.2f", rec.tpp->t) : "no corner maximum");
  if (!rec.tpp) return r.done();
  for (std::size_t b = 0; b < res.bulks.size(); ++b) {
    const double tm = rec.infidelity_minima[b].t;
    r.check(std::abs(tm - rec.tpp->t) <= dt, fmt("n=%d minimum at %.2f", res.bulks[b], tm));
  }
  const auto& f2 = rec.infidelity[0];
  const double at = f2[rec.tpp->index];
  r.check(f2.front() >= 10 * at, fmt("n=2 infidelity %.2e -> %.2e", f2.front(), at));
  return r.done();
}

Outcome fss_pipeline() {
  const double Jc = 0.6384, beta = 0.125;
  const std::vector<double> ns{8, 12, 16, 20};
  Report r;
  const auto clean = fss::synthetic_family(ns, 0.4, 0.9, 201, Jc, beta, 0.0, 0);
  const double e0 = fss::collapse_cost(fss::rescale(clean, Jc, beta, 1.0)).eps2;
  r.check(e0 < 1e-12, fmt("noiseless eps2 at truth %.1e", e0));
  const fss::Grid g{0.55, 0.75, -0.05, 0.35, 61, 61};
  int cj = 0, cb = 0;
  const int R = 100;
  for (int k = 0; k < R; ++k) {
    const auto L = fss::fit_scaling(fss::synthetic_family(ns, 0.4, 0.9, 51, Jc, beta, 0.01, 1000 + k), g);
    cj += std::abs(L.jc_mean - Jc) <= L.jc_err;
    cb += std::abs(L.beta_mean - beta) <= L.beta_err;
  }
  r.check(cj >= 68, fmt("J_c covered %d/%d", cj, R));
  r.check(cb >= 68, fmt("beta covered %d/%d", cb, R));
  return r.done();
}

Outcome ssh_limits() {
  Report r;
  for (double J : {0.05, 20.0}) {
    SshPPOptions o;
    o.J = J;
    const auto res = run_ssh_pp(o);
    const bool sign = J < 1 ? res.Z_pp > 0.9 : res.Z_pp < -0.9;
    r.check(sign, fmt("J=%g Z_PP=%.6f", J, res.Z_pp));
    const double dpp = std::abs(res.Z_pp - res.Z_ref), dobc = std::abs(res.Z_obc - res.Z_ref);
    r.check(dpp <= dobc, fmt("J=%g |Z_PP-Z_ref|=%.1e vs |Z_OBC-Z_ref|=%.1e", J, dpp, dobc));
  }
  return r.done();
}

Outcome eh_buildup() {
  const auto res = run_eh_buildup({});
  const double dt = res.times[1] - res.times[0];
  Report r;
  for (const auto& w : res.windows) {
    const double tf = w.infidelity_min.t;
    if (!w.distance_min) {
      r.check(false, fmt("n=%d no distance minimum", w.n));
      continue;
    }
    const double td = w.distance_min->t;
    r.check(std::abs(td - tf) <= 2 * dt, fmt("n=%d distance minimum %.2f vs infidelity minimum %.2f", w.n, td, tf));
    r.check(w.distance_min->value < 0.05, fmt("n=%d distance %.1e", w.n, w.distance_min->value));
    const double ts = res.entropy_max ? res.entropy_max->t : res.times.back();
    r.check(std::abs(ts - tf) > 2 * dt, fmt("n=%d entropy maximum %.2f misses", w.n, ts));
  }
  return r.done();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "ppsim_acceptance_determinism";
  fs::remove_all(work);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"pp1d", "pp1d --N 36"},
      {"sweep", "pp1d --sweep-N 12:28:4"},
      {"pp2d", "pp2d --N 6 --corner 2 --bulks 2"},
      {"ssh", "ssh --N 8 --ref-N 10 --n 4 --J 0.5"},
      {"fss", "fss --synthetic true --grid 21x21 --seed 11"},
      {"trotter", "trotter"},
      {"ehlearn", "ehlearn --N 24 --windows 16"},
      {"oracle", "oracle-validate --N 4 --trials 10 --seed 7"},
  };
  Report r;
  for (const auto& [name, args] : runs) {
    std::vector<nlohmann::json> manifests;
    for (const char* rep : {"a", "b"}) {
      const fs::path out = work / name / rep;
      const std::string cmd = std::string(PPSIM_CLI) + " " + args + " --out " + out.string() + " > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        r.check(false, name + " exited with " + std::to_string(WEXITSTATUS(status)));
        break;
      }
      manifests.push_back(io::read_json(out / "manifest.json"));
    }
    if (manifests.size() != 2) continue;
    bool same = manifests[0]["outputs"] == manifests[1]["outputs"];
    for (const auto& f : manifests[0]["outputs"]) {
      const auto file = f.get<std::string>();
      same = same && slurp(work / name / "a" / file) == slurp(work / name / "b" / file);
    }
    r.check(same, name + " (" + std::to_string(manifests[0]["outputs"].size()) + " files)");
  }
  fs::remove_all(work);
  return r.done();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"commutation identity", commutation},
      {"bulk vacuum preserved", bulk_vacuum},
      {"infidelity scaling and t_PP ~ N", scaling},
      {"entropy maximum vs infidelity minimum", detector_consistency},
      {"Fock-space oracle agreement", fock_equivalence},
      {"continuum vs lattice mode weights", continuum_agreement},
      {"Trotter step counts and order", trotter},
      {"2D corner entropy and bulk infidelity", pp2d},
      {"FSS on synthetic data", fss_pipeline},
      {"SSH reflection invariant", ssh_limits},
      {"entanglement Hamiltonian build-up", eh_buildup},
      {"CLI determinism", determinism},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int k = 1; k <= 12; ++k) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    if (k < 1 || k > 12) {
      std::fprintf(stderr, "no criterion %d\n", k);
      return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k - 1].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %s (%.1f s): %s\n", k, o.pass ? "PASS" : "FAIL", criteria[k - 1].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
