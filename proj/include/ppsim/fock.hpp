#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <utility>
#include <vector>

#include "ppsim/core.hpp"
#include "ppsim/gaussian.hpp"
#include "ppsim/lattice.hpp"

namespace ppsim::fock {

// Many-body operators on 2^N basis states. Bit j of a basis index is the
// occupation of site j (fermions) or spin up (spins, sigma_z = +1).
// Fermion operators carry the Jordan-Wigner string over sites < j.
using SpMat = Eigen::SparseMatrix<cd, Eigen::ColMajor, long>;

enum class LocalOp { c, cdag, n, x, y, z, sp, sm };

// coeff * op_1 op_2 ... op_k; the rightmost factor acts first.
struct Term {
  cd coeff = 1.0;
  std::vector<std::pair<LocalOp, int>> ops;
};

constexpr int max_fermion_sites = 10;
constexpr int max_spin_sites = 14;

SpMat build_operator(int N, const std::vector<Term>& terms);
SpMat local_operator(int N, LocalOp op, int site);
// sum h~_jm c_j^dag c_m
SpMat fermion_hamiltonian(const QuadraticHamiltonian& H);
// Hermitian check, then dense copy.
CMat build_hamiltonian(int N, const std::vector<Term>& terms);

// Density matrix of the number-conserving Gaussian state with correlation C.
CMat gaussian_density(const CorrelationMatrix& C);
CMat thermal_density(const CMat& H, double T);
CMat pure_density(const CVec& psi);

// <c_j^dag c_m> of a many-body density matrix.
CMat correlation_of(const CMat& rho);

// Contiguous blocks only.
CMat partial_trace(const CMat& rho, int N, const Subsystem& A);

double renyi2(const CMat& rho);
double von_neumann(const CMat& rho);
// (Tr sqrt(sqrt(r1) r2 sqrt(r1)))^2 with dense Hermitian square roots.
double exact_fidelity(const CMat& rho1, const CMat& rho2);

// Exact spectral exponential for dim <= 4096, Lanczos stepping beyond.
CVec evolve_dense(const CVec& psi, const SpMat& H, double t, double tol = 1e-10);
CMat evolve_density(const CMat& rho, const CMat& H, double t);

// Basis states with a fixed number of set bits (particle number or Sz sector).
std::vector<std::uint64_t> sector_basis(int N, int ones);
// Matrix of an operator restricted to a sector it conserves.
SpMat restrict_to(const SpMat& op, const std::vector<std::uint64_t>& basis);
CVec embed(const CVec& v, const std::vector<std::uint64_t>& basis, int N);
// rho_A of a pure state given on the full basis; contiguous A.
CMat reduced_density(const CVec& psi, int N, const Subsystem& A);

// Diagonalizes H once; state(t) = e^{-iHt} psi0 for any t.
class SpectralEvolver {
 public:
  SpectralEvolver(const CMat& H, const CVec& psi0);
  CVec state(double t) const;
  const Vec& energies() const { return e_; }

 private:
  Vec e_;
  CMat V_;
  CVec a0_;
};

// Ground state by Lanczos with full reorthogonalization (dense below 512).
struct Eigenpair {
  double energy = 0.0;
  CVec vector;
  double gap = 0.0;  // to the next eigenvalue found
};
Eigenpair lowest_eigenpair(const SpMat& H, double tol = 1e-12);

}  // namespace ppsim::fock
