#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ppsim/gaussian.hpp"

namespace ppsim {

CMat random_hermitian(int n, std::mt19937_64& rng);
// Random complex modes with occupations in (0.02, 0.98); `pure` fills
// the lowest n/2 modes exactly.
CorrelationMatrix random_gaussian(int n, std::mt19937_64& rng, bool pure = false);
QuadraticHamiltonian random_hopping(int n, std::mt19937_64& rng);

// One comparison between the correlation-matrix kernels and the Fock-space
// oracle.
struct OracleCheck {
  int trial = 0;
  std::string quantity;  // evolution, renyi2, von_neumann, fidelity
  double gaussian = 0.0;
  double fock = 0.0;
  double diff = 0.0;
  bool pass = false;
};

struct OracleReport {
  int N = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<OracleCheck> checks;
  bool all_pass() const;
  double worst(const std::string& quantity) const;
};

// Per trial: a random Gaussian state (every fourth one pure) evolved under a
// random real hopping matrix, entropies of the left half, and the fidelity
// between the left halves of two random states.
OracleReport oracle_validate(int N, int trials, std::uint64_t seed, double tol = 1e-8);

}  // namespace ppsim
