#include "ppsim/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ppsim/fock.hpp"
#include "ppsim/observables.hpp"

namespace ppsim {

CMat random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMat a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = cd(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

CorrelationMatrix random_gaussian(int n, std::mt19937_64& rng, bool pure) {
  Eigen::SelfAdjointEigenSolver<CMat> es(random_hermitian(n, rng));
  std::uniform_real_distribution<double> u(0.02, 0.98);
  Vec occ(n);
  for (int k = 0; k < n; ++k) occ(k) = pure ? (k < n / 2 ? 1.0 : 0.0) : u(rng);
  CorrelationMatrix C;
  C.C = es.eigenvectors() * occ.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
  return C;
}

QuadraticHamiltonian random_hopping(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = g(rng);
  return {0.5 * (a + a.transpose())};
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.pass; });
}

double OracleReport::worst(const std::string& quantity) const {
  double w = 0.0;
  for (const auto& c : checks)
    if (c.quantity == quantity) w = std::max(w, c.diff);
  return w;
}

OracleReport oracle_validate(int N, int trials, std::uint64_t seed, double tol) {
  if (N < 2 || N > fock::max_fermion_sites) throw Error(ErrorKind::size, "oracle validation needs 2 <= N <= 10");
  if (trials < 1) throw Error(ErrorKind::config, "oracle validation needs at least one trial");
  OracleReport r{N, trials, seed, tol, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  const Subsystem A = left_edge(N, N / 2);
  auto add = [&](int trial, const char* q, double g, double f) {
    const double d = std::abs(g - f);
    r.checks.push_back({trial, q, g, f, d, d < tol});
  };
  for (int trial = 0; trial < trials; ++trial) {
    const auto C = random_gaussian(N, rng, trial % 4 == 0);
    const auto H = random_hopping(N, rng);
    const double t = time(rng);
    const auto C2 = random_gaussian(N, rng);

    const CMat rho = fock::gaussian_density(C);
    const CMat Ct = evolve(C, H, t).C;
    const CMat Cf = fock::correlation_of(fock::evolve_density(rho, CMat(fock::fermion_hamiltonian(H)), t));
    add(trial, "evolution", (Ct - Cf).cwiseAbs().maxCoeff(), 0.0);

    const CMat rhoA = fock::partial_trace(rho, N, A);
    const auto CA = reduce(C, A);
    add(trial, "renyi2", renyi2(CA), fock::renyi2(rhoA));
    add(trial, "von_neumann", von_neumann(CA), fock::von_neumann(rhoA));

    const CMat rho2A = fock::partial_trace(fock::gaussian_density(C2), N, A);
    add(trial, "fidelity", uhlmann_fidelity(CA, reduce(C2, A)).F, fock::exact_fidelity(rhoA, rho2A));
  }
  return r;
}

}  // namespace ppsim
