#include "ppsim/spinchain.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace ppsim::ssh {

using fock::LocalOp;

namespace {

void check(const SshParams& p) {
  if (p.N < 2 || p.N % 2) throw Error(ErrorKind::invalid_lattice, "SSH chain needs an even number of sites");
  if (p.N > fock::max_spin_sites) throw Error(ErrorKind::size, "SSH chain longer than 14 sites");
}

double sz(std::uint64_t b, int j) { return (b >> j & 1) ? 1.0 : -1.0; }

}  // namespace

std::vector<fock::Term> ssh_terms(const SshParams& p, const std::vector<double>& weights) {
  check(p);
  if (!weights.empty() && static_cast<int>(weights.size()) != p.N - 1)
    throw Error(ErrorKind::dimension, "need one weight per bond");
  std::vector<fock::Term> t;
  for (int j = 0; j + 1 < p.N; ++j) {
    const double c = (j % 2 == 0 ? 1.0 : p.J) * (weights.empty() ? 1.0 : weights[j]);
    if (c == 0.0) continue;
    t.push_back({2 * c, {{LocalOp::sp, j}, {LocalOp::sm, j + 1}}});
    t.push_back({2 * c, {{LocalOp::sm, j}, {LocalOp::sp, j + 1}}});
    t.push_back({c * p.delta, {{LocalOp::z, j}, {LocalOp::z, j + 1}}});
  }
  return t;
}

fock::SpMat ssh_hamiltonian(const SshParams& p, const std::vector<double>& weights) {
  return fock::build_operator(p.N, ssh_terms(p, weights));
}

SshSector ssh_sector(const SshParams& p, const std::vector<double>& weights, int up) {
  SshSector s;
  s.N = p.N;
  s.basis = fock::sector_basis(p.N, up < 0 ? p.N / 2 : up);
  s.H = fock::restrict_to(ssh_hamiltonian(p, weights), s.basis);
  return s;
}

SectorGroundState ground_state(const SshSector& s) {
  SectorGroundState g;
  CVec v;
  if (s.H.rows() <= 1024) {
    Mat H = CMat(s.H).real();
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    g.energy = es.eigenvalues()(0);
    g.gap = H.rows() > 1 ? es.eigenvalues()(1) - g.energy : 0.0;
    v = es.eigenvectors().col(0).cast<cd>();
  } else {
    auto e = fock::lowest_eigenpair(s.H);
    g.energy = e.energy;
    g.gap = e.gap;
    v = e.vector;
  }
  // Real up to a global phase; fix it for reproducible output.
  Eigen::Index k;
  v.cwiseAbs().maxCoeff(&k);
  v *= std::abs(v(k)) / v(k);
  g.vector = v;
  return g;
}

ReflectionInvariantResult reflection_invariant(const CMat& rhoA, int n) {
  if (n % 2) throw Error(ErrorKind::domain, "reflection invariant needs an even window");
  if (rhoA.rows() != (1L << n)) throw Error(ErrorKind::dimension, "reduced state does not match n");
  const long d = 1L << n, h = 1L << (n / 2);
  auto reflect = [n](long b) {
    long r = 0;
    for (int k = 0; k < n; ++k)
      if (b >> k & 1) r |= 1L << (n - 1 - k);
    return r;
  };
  ReflectionInvariantResult r;
  for (long b = 0; b < d; ++b) r.numerator += rhoA(reflect(b), b);
  // Halves: A_L = low n/2 bits, A_R = high n/2 bits.
  CMat L = CMat::Zero(h, h), R = CMat::Zero(h, h);
  for (long i = 0; i < h; ++i)
    for (long j = 0; j < h; ++j)
      for (long e = 0; e < h; ++e) {
        L(i, j) += rhoA(i | (e << (n / 2)), j | (e << (n / 2)));
        R(i, j) += rhoA(e | (i << (n / 2)), e | (j << (n / 2)));
      }
  r.purity_L = (L * L).trace().real();
  r.purity_R = (R * R).trace().real();
  const double den = std::sqrt(0.5 * (r.purity_L + r.purity_R));
  if (!(den > 0)) throw Error(ErrorKind::numerical_state, "vanishing purity");
  r.Z = r.numerator.real() / den;
  return r;
}

double staggered_magnetization_rms(const CVec& psi, int N, const Subsystem& A) {
  if (psi.size() != (1L << N)) throw Error(ErrorKind::dimension, "state does not match N");
  if (A.sites.empty()) throw Error(ErrorKind::domain, "empty subsystem");
  double m2 = 0.0;
  for (long b = 0; b < psi.size(); ++b) {
    const double w = std::norm(psi(b));
    if (w == 0.0) continue;
    double s = 0.0;
    for (int j : A.sites) s += (j % 2 ? -1.0 : 1.0) * sz(b, j);
    m2 += w * s * s;
  }
  return std::sqrt(m2 / psi.squaredNorm()) / A.size();
}

double zz_correlator(const CVec& psi, int N, int m, int j, bool connected) {
  if (psi.size() != (1L << N)) throw Error(ErrorKind::dimension, "state does not match N");
  if (m < 0 || j < 0 || m >= N || j >= N) throw Error(ErrorKind::domain, "site out of range");
  double zz = 0, zm = 0, zj = 0;
  for (long b = 0; b < psi.size(); ++b) {
    const double w = std::norm(psi(b));
    zz += w * sz(b, m) * sz(b, j);
    zm += w * sz(b, m);
    zj += w * sz(b, j);
  }
  const double nrm = psi.squaredNorm();
  zz /= nrm, zm /= nrm, zj /= nrm;
  return connected ? zz - zm * zj : zz;
}

Subsystem cell_aligned_window(int N, int n) {
  if (n < 1 || n > N) throw Error(ErrorKind::domain, "window larger than the chain");
  int best = 0;
  double dist = 1e300;
  for (int a = 0; a + n <= N; a += 2) {
    const double d = std::abs(a + n / 2.0 - N / 2.0);
    if (d < dist) dist = d, best = a;
  }
  return interval(best, n);
}

}  // namespace ppsim::ssh
