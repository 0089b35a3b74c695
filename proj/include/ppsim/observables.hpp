#pragma once

#include <vector>

#include "ppsim/gaussian.hpp"
#include "ppsim/lattice.hpp"

namespace ppsim {

struct EnergyProfile {
  std::vector<double> h;          // <h_b> = 2 Re C_ab per bond
  std::vector<double> deviation;  // (<h> - <h>_ex) / <h>_ex
  double reference = 0.0;
};

// -2/pi in 1D, -4/pi^2 on the square lattice.
double infinite_bond_energy(bool two_dimensional);
EnergyProfile energy_profile(const CorrelationMatrix& C, const DeformationProfile& lattice);

// |C_{j, j+2l+1}| for each l.
std::vector<double> two_point(const CorrelationMatrix& C, int j, const std::vector<int>& ls);

// Eigenvalues of C, checked to lie in [0, 1] within 10^(-precision/2) and clamped.
Vec occupation_spectrum(const CorrelationMatrix& C);

double renyi2(const CorrelationMatrix& CA, int precision = 16);
double von_neumann(const CorrelationMatrix& CA, int precision = 16);
double renyi2_from_spectrum(const Vec& lambda);
double von_neumann_from_spectrum(const Vec& lambda);

struct FidelityResult {
  double F = 1.0;
  int digits = 16;
};

// Uhlmann fidelity between number-conserving Gaussian states:
//   F = det(D) prod_k (1 + z_k),  D = C1 C2 + (1-C1)(1-C2),
//   z_k^2 = eig(4 D^-1 C1 C2 D^-1 (1-C1)(1-C2)).
// No inverse of (1-C) appears. In double the square roots of tiny z_k^2 limit
// F to ~1e-8 absolute accuracy, so at the default budget a result with
// 1-F < escalate_below is recomputed in MPFR (>= 32 digits). precision > 16
// always uses MPFR. MPFR results must be stable when the budget grows by 8
// digits; the budget doubles until they are.
FidelityResult uhlmann_fidelity(const CorrelationMatrix& C1, const CorrelationMatrix& C2, int precision = 16,
                                double escalate_below = 1e-4);
double infidelity(const CorrelationMatrix& C1, const CorrelationMatrix& C2);
// Double-only evaluation for dense time series where ~1e-8 absolute is enough.
double infidelity_fast(const CorrelationMatrix& C1, const CorrelationMatrix& C2);

// chi(p, j) = (1/N) sum_j' e^{-i 2 pi p j'/N} [e^{-i t h~}]_{j'j}, sites 1-based in the phase.
CMat mode_map(const Propagator& P, double t);
CMat mode_map(const QuadraticHamiltonian& H, double t);
double mode_weight_X(const CMat& chi, const Subsystem& A, int p);

}  // namespace ppsim
