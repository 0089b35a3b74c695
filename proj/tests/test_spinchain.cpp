#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ppsim/gaussian.hpp"
#include "ppsim/spinchain.hpp"

using namespace ppsim;
using namespace ppsim::ssh;

namespace {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// sigma^a on site j of n, most significant factor = site n-1.
CMat pauli(char a, int j, int n) {
  CMat s(2, 2);
  if (a == 'x') s << 0, 1, 1, 0;
  if (a == 'y') s << 0, cd(0, -1), cd(0, 1), 0;
  if (a == 'z') s << -1, 0, 0, 1;
  CMat out = CMat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) out = kron(out, k == j ? s : CMat::Identity(2, 2));
  return out;
}

Vec sorted(const CMat& H) {
  Vec e = Eigen::SelfAdjointEigenSolver<CMat>(H).eigenvalues();
  std::sort(e.begin(), e.end());
  return e;
}

CVec full_gs(const SshParams& p) {
  auto s = ssh_sector(p);
  return s.embed(ground_state(s).vector);
}

}  // namespace

TEST_CASE("SSH Hamiltonian limits") {
  // Decoupled dimers: each contributes -delta - 2.
  SshParams dimers{8, 0.0, 1.4};
  auto s = ssh_sector(dimers);
  auto g = ground_state(s);
  CHECK(g.energy == doctest::Approx(4 * (-1.4 - 2)));
  CVec psi = s.embed(g.vector);
  CHECK(zz_correlator(psi, 8, 0, 1) == doctest::Approx(-1.0));
  CHECK(std::abs(zz_correlator(psi, 8, 1, 2)) < 1e-12);

  // delta = 1, J = 1: sum over bonds of sigma . sigma.
  const int n = 4;
  CMat heis = CMat::Zero(16, 16);
  for (int j = 0; j + 1 < n; ++j)
    for (char a : {'x', 'y', 'z'}) heis += pauli(a, j, n) * pauli(a, j + 1, n);
  CHECK((sorted(CMat(ssh_hamiltonian({4, 1.0, 1.0}))) - sorted(heis)).norm() < 1e-12);
  CMat aniso = CMat::Zero(16, 16);
  const double J = 0.7, d = 1.4;
  for (int j = 0; j + 1 < n; ++j) {
    const double c = j % 2 ? J : 1.0;
    aniso += c * (pauli('x', j, n) * pauli('x', j + 1, n) + pauli('y', j, n) * pauli('y', j + 1, n) +
                  d * pauli('z', j, n) * pauli('z', j + 1, n));
  }
  CHECK((CMat(ssh_hamiltonian({4, J, d})) - aniso).norm() < 1e-12);

  CHECK_THROWS_AS(ssh_hamiltonian({7, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(ssh_hamiltonian({16, 1.0, 1.0}), Error);
}

TEST_CASE("free-fermion point") {
  const int N = 10;
  SshParams p{N, 0.6, 0.0};
  auto psi = full_gs(p);
  // sx sx + sy sy = 2 (c^dag c + h.c.) on nearest neighbours.
  std::vector<double> w;
  for (int j = 0; j + 1 < N; ++j) w.push_back(2 * (j % 2 ? p.J : 1.0));
  Chain1D chain(N);
  auto H = hopping_hamiltonian(N, chain.bonds(), w);
  auto C = ppsim::ground_state(H);
  Vec e = Eigen::SelfAdjointEigenSolver<Mat>(H.h).eigenvalues();
  CHECK(ground_state(ssh_sector(p)).energy == doctest::Approx(e.head(N / 2).sum()));
  for (int m = 0; m < N; ++m)
    for (int j = m + 1; j < N; ++j) {
      const double nm = C.C(m, m).real(), nj = C.C(j, j).real();
      const double wick = 4 * (nm * nj - std::norm(C.C(m, j))) - 2 * nm - 2 * nj + 1;
      CHECK(std::abs(zz_correlator(psi, N, m, j) - wick) < 1e-8);
    }
}

TEST_CASE("reflection invariant") {
  CHECK_THROWS_AS(reflection_invariant(CMat::Identity(8, 8) / 8.0, 3), Error);

  CVec up = CVec::Zero(1L << 6);
  up((1L << 6) - 1) = 1.0;
  auto pol = reflection_invariant(fock::reduced_density(up, 6, interval(1, 4)), 4);
  CHECK(pol.Z == doctest::Approx(1.0));

  const int N = 12, n = 8;
  auto A = cell_aligned_window(N, n);
  CHECK(A.sites.front() == 2);
  CHECK(cell_aligned_window(14, 8).sites.front() == 2);

  auto triv = full_gs({N, 0.05, 1.4});
  auto zt = reflection_invariant(fock::reduced_density(triv, N, A), n);
  CHECK(zt.Z > 0.9);
  CHECK(zt.purity_L > 0);
  CHECK(zt.purity_L <= 1 + 1e-12);

  auto spt = full_gs({N, 20.0, 1.4});
  auto zs = reflection_invariant(fock::reduced_density(spt, N, A), n);
  CHECK(zs.Z < -0.9);

  // Global spin flip leaves Z unchanged.
  CVec flipped(spt.size());
  for (long b = 0; b < spt.size(); ++b) flipped(b) = spt(((1L << N) - 1) ^ b);
  CHECK(reflection_invariant(fock::reduced_density(flipped, N, A), n).Z == doctest::Approx(zs.Z).epsilon(1e-10));
}

TEST_CASE("staggered magnetization") {
  const int N = 8;
  CVec neel = CVec::Zero(1L << N), up = CVec::Zero(1L << N);
  neel(0b01010101) = 1.0;
  up((1L << N) - 1) = 1.0;
  CHECK(staggered_magnetization_rms(neel, N, interval(0, N)) == doctest::Approx(1.0));
  CHECK(staggered_magnetization_rms(neel, N, interval(3, 4)) == doctest::Approx(1.0));
  CHECK(staggered_magnetization_rms(up, N, interval(0, 4)) == 0.0);
  CHECK(zz_correlator(up, N, 2, 5) == doctest::Approx(1.0));
  CHECK(zz_correlator(up, N, 2, 5, true) == doctest::Approx(0.0));

  // Decoupled singlets: each dimer contributes (+-2)^2, M = sqrt(2/n).
  auto A = cell_aligned_window(12, 8);
  CHECK(staggered_magnetization_rms(full_gs({12, 0.0, 3.0}), 12, A) == doctest::Approx(0.5));
  // Staggered order builds up towards the uniform point J = 1.
  double prev = 0.5;
  for (double J : {0.25, 0.5, 0.75, 1.0}) {
    const double m = staggered_magnetization_rms(full_gs({12, J, 3.0}), 12, A);
    CHECK(m > prev);
    CHECK(m <= 1.0);
    prev = m;
  }
  CHECK(prev > 0.8);
}
