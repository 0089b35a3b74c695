#pragma once

#include <cstdint>
#include <vector>

#include "ppsim/fock.hpp"
#include "ppsim/lattice.hpp"

namespace ppsim::ssh {

struct SshParams {
  int N = 0;
  double J = 1.0;
  double delta = 1.0;
};

// Bond (j, j+1), 0-based j: coefficient 1 for even j (intra-cell), J for
// odd j; term sx sx + sy sy + delta sz sz, times the optional bond weight.
std::vector<fock::Term> ssh_terms(const SshParams& p, const std::vector<double>& weights = {});
fock::SpMat ssh_hamiltonian(const SshParams& p, const std::vector<double>& weights = {});

// Hamiltonian restricted to the sector with `up` spins up (default N/2).
struct SshSector {
  int N = 0;
  std::vector<std::uint64_t> basis;
  fock::SpMat H;
  CVec embed(const CVec& v) const { return fock::embed(v, basis, N); }
};
SshSector ssh_sector(const SshParams& p, const std::vector<double>& weights = {}, int up = -1);

struct SectorGroundState {
  double energy = 0.0;
  double gap = 0.0;
  CVec vector;  // sector basis
};
// Dense diagonalization up to dimension 1024, Lanczos beyond.
SectorGroundState ground_state(const SshSector& s);

struct ReflectionInvariantResult {
  double Z = 0.0;
  cd numerator;        // Tr[rho_A R_A]
  double purity_L = 0.0;  // Tr[rho_{A_L}^2]
  double purity_R = 0.0;
};
// rho_A on n contiguous sites, bit k = k-th site of A.
ReflectionInvariantResult reflection_invariant(const CMat& rhoA, int n);

// (1/n) sqrt(<(sum_{j in A} (-1)^j sz_j)^2>), absolute site index j.
double staggered_magnetization_rms(const CVec& psi, int N, const Subsystem& A);
double zz_correlator(const CVec& psi, int N, int m, int j, bool connected = false);

// Window of n sites closest to the centre that starts on an even site, so
// it never cuts an intra-cell dimer.
Subsystem cell_aligned_window(int N, int n);

}  // namespace ppsim::ssh
