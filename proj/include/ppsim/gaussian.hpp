#pragma once

#include <vector>

#include "ppsim/core.hpp"
#include "ppsim/lattice.hpp"

namespace ppsim {

// Single-particle matrix h~ of H = sum_{jm} h~_jm c_j^dag c_m.
struct QuadraticHamiltonian {
  Mat h;
  int n() const { return static_cast<int>(h.rows()); }
};

QuadraticHamiltonian hopping_hamiltonian(const DeformationProfile& p);
QuadraticHamiltonian hopping_hamiltonian(int num_sites, const std::vector<Bond>& bonds,
                                         const std::vector<double>& weights);

// C_jm = <c_j^dag c_m>.
struct CorrelationMatrix {
  CMat C;
  int precision = 16;
  int n() const { return static_cast<int>(C.rows()); }
};

enum class DegeneracyPolicy { error, mixture, lift };

struct GroundStateOptions {
  DegeneracyPolicy policy = DegeneracyPolicy::error;
  // For `lift`: operator diagonalized inside the degenerate Fermi shell.
  Mat lift_operator;
  double tol = 1e-9;
};

// Diagonal (-1)^(x+y) on the square lattice. On a bipartite lattice it
// splits the zero-energy shell by sublattice.
Mat staggered_potential(const SquareLattice2D& lat);

CorrelationMatrix ground_state(const QuadraticHamiltonian& H, double filling = 0.5,
                               const GroundStateOptions& opt = {});
CorrelationMatrix thermal_state(const QuadraticHamiltonian& H, double T);

// Spectral decomposition of h~ reused for every time along a trajectory.
class Propagator {
 public:
  explicit Propagator(const QuadraticHamiltonian& H);
  CMat U(double t) const;  // e^{-i t h~}
  const Vec& energies() const { return e_; }
  const Mat& modes() const { return V_; }

 private:
  Vec e_;
  Mat V_;
};

// C(t) = conj(U) C U^T, evaluated from C rotated once into the eigenbasis.
class Trajectory {
 public:
  Trajectory(const CorrelationMatrix& C0, const QuadraticHamiltonian& H);
  Trajectory(const CorrelationMatrix& C0, const Propagator& P);
  CorrelationMatrix at(double t) const;

 private:
  Propagator P_;
  CMat Ct_;
  int precision_;
};

CorrelationMatrix evolve(const CorrelationMatrix& C, const QuadraticHamiltonian& H, double t);
CorrelationMatrix reduce(const CorrelationMatrix& C, const Subsystem& A);

CorrelationMatrix infinite_chain_segment(int n);

// Correlator of the half-filled infinite square lattice at separation (dx, dy).
double infinite_2d_correlator_exact(int dx, int dy);
struct Quadrature2D {
  double value = 0.0;
  int points = 0;
  double change = 0.0;
};
// Gauss-Legendre over k_x with the k_y integral done analytically; points
// double until successive values change by less than tol.
Quadrature2D infinite_2d_correlator(int dx, int dy, int quadrature_points, double tol = 1e-8);
// n x n square block, sites ordered as SquareLattice2D (x fastest).
CorrelationMatrix infinite_2d_segment(int n, int quadrature_points);

// Largest distance of an eigenvalue of C outside [0, 1].
double spectrum_violation(const CorrelationMatrix& C);

}  // namespace ppsim
