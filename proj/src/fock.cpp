#include "ppsim/fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace ppsim::fock {

namespace {

void check_size(int N, int limit) {
  if (N < 1 || N > limit) {
    std::ostringstream os;
    os << "Fock space with " << N << " sites exceeds the oracle limit of " << limit;
    throw Error(ErrorKind::size, os.str());
  }
}

// Applies op to basis state b; returns false when the result vanishes.
bool apply(LocalOp op, int j, std::uint64_t& b, cd& amp) {
  const std::uint64_t bit = std::uint64_t{1} << j;
  const bool occ = b & bit;
  auto jw = [&] { return (std::popcount(b & (bit - 1)) & 1) ? -1.0 : 1.0; };
  switch (op) {
    case LocalOp::c:
      if (!occ) return false;
      amp *= jw();
      b ^= bit;
      return true;
    case LocalOp::cdag:
      if (occ) return false;
      amp *= jw();
      b ^= bit;
      return true;
    case LocalOp::n:
      return occ;
    case LocalOp::x:
      b ^= bit;
      return true;
    case LocalOp::y:
      amp *= occ ? cd(0, 1) : cd(0, -1);
      b ^= bit;
      return true;
    case LocalOp::z:
      if (!occ) amp = -amp;
      return true;
    case LocalOp::sp:
      if (occ) return false;
      b ^= bit;
      return true;
    case LocalOp::sm:
      if (!occ) return false;
      b ^= bit;
      return true;
  }
  return false;
}

bool is_fermionic(LocalOp op) { return op == LocalOp::c || op == LocalOp::cdag || op == LocalOp::n; }

Eigen::SelfAdjointEigenSolver<CMat> hermitian_eig(const CMat& A) {
  CMat S = 0.5 * (A + A.adjoint());
  return Eigen::SelfAdjointEigenSolver<CMat>(S);
}

void check_density(const Vec& w, const char* what) {
  if (w.size() && w.minCoeff() < -1e-10) {
    std::ostringstream os;
    os << what << " has eigenvalue " << w.minCoeff();
    throw Error(ErrorKind::numerical_state, os.str());
  }
}

// rho = L L^dag with negligible eigenvalues dropped.
CMat factor(const CMat& rho) {
  auto es = hermitian_eig(rho);
  Vec w = es.eigenvalues();
  check_density(w, "density matrix");
  const double cut = 1e-13 * std::max(1.0, w.maxCoeff());
  CMat L = es.eigenvectors();
  for (int k = 0; k < w.size(); ++k) L.col(k) *= w(k) > cut ? std::sqrt(w(k)) : 0.0;
  return L;
}

}  // namespace

SpMat build_operator(int N, const std::vector<Term>& terms) {
  int limit = max_spin_sites;
  for (const auto& t : terms)
    for (const auto& [op, j] : t.ops) {
      if (is_fermionic(op)) limit = std::min(limit, max_fermion_sites);
      if (j < 0 || j >= N) throw Error(ErrorKind::domain, "operator site out of range");
    }
  check_size(N, limit);
  const std::uint64_t dim = std::uint64_t{1} << N;
  std::vector<Eigen::Triplet<cd, long>> trip;
  for (const auto& t : terms) {
    for (std::uint64_t b0 = 0; b0 < dim; ++b0) {
      std::uint64_t b = b0;
      cd amp = t.coeff;
      bool alive = true;
      for (auto it = t.ops.rbegin(); it != t.ops.rend() && alive; ++it) alive = apply(it->first, it->second, b, amp);
      if (alive && amp != 0.0) trip.emplace_back(static_cast<long>(b), static_cast<long>(b0), amp);
    }
  }
  SpMat M(static_cast<long>(dim), static_cast<long>(dim));
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

SpMat local_operator(int N, LocalOp op, int site) { return build_operator(N, {Term{1.0, {{op, site}}}}); }

SpMat fermion_hamiltonian(const QuadraticHamiltonian& H) {
  std::vector<Term> terms;
  for (int j = 0; j < H.n(); ++j)
    for (int m = 0; m < H.n(); ++m)
      if (H.h(j, m) != 0.0) terms.push_back({H.h(j, m), {{LocalOp::cdag, j}, {LocalOp::c, m}}});
  return build_operator(H.n(), terms);
}

CMat build_hamiltonian(int N, const std::vector<Term>& terms) {
  CMat H = CMat(build_operator(N, terms));
  const double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, H.cwiseAbs().maxCoeff()))
    throw Error(ErrorKind::numerical_state, "term list is not Hermitian");
  return H;
}

CMat gaussian_density(const CorrelationMatrix& C) {
  const int N = C.n();
  check_size(N, max_fermion_sites);
  // C^T = V diag(l) V^dag; d_k = sum_m conj(V_mk) c_m has <d_k^dag d_k> = l_k.
  auto es = hermitian_eig(C.C.transpose());
  const Vec& l = es.eigenvalues();
  const CMat& V = es.eigenvectors();
  std::vector<SpMat> c;
  for (int m = 0; m < N; ++m) c.push_back(local_operator(N, LocalOp::c, m));
  const long dim = 1L << N;
  CMat rho = CMat::Identity(dim, dim);
  for (int k = 0; k < N; ++k) {
    SpMat d(dim, dim);
    for (int m = 0; m < N; ++m) d += std::conj(V(m, k)) * c[m];
    CMat nk = CMat(SpMat(d.adjoint()) * d);
    const double lk = std::clamp(l(k), 0.0, 1.0);
    CMat factor_k = (1.0 - lk) * CMat::Identity(dim, dim) + (2.0 * lk - 1.0) * nk;
    rho = rho * factor_k;
  }
  return 0.5 * (rho + rho.adjoint());
}

CMat thermal_density(const CMat& H, double T) {
  if (!(T > 0)) throw Error(ErrorKind::domain, "temperature must be positive");
  auto es = hermitian_eig(H);
  const Vec& e = es.eigenvalues();
  Vec w = (-(e.array() - e.minCoeff()) / T).exp();
  w /= w.sum();
  return es.eigenvectors() * w.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

CMat pure_density(const CVec& psi) { return psi * psi.adjoint() / psi.squaredNorm(); }

CMat correlation_of(const CMat& rho) {
  const int N = std::countr_zero(static_cast<std::uint64_t>(rho.rows()));
  check_size(N, max_fermion_sites);
  CMat C(N, N);
  for (int j = 0; j < N; ++j)
    for (int m = 0; m < N; ++m) {
      SpMat op = build_operator(N, {Term{1.0, {{LocalOp::cdag, j}, {LocalOp::c, m}}}});
      C(j, m) = (rho * op).trace();
    }
  return C;
}

CMat partial_trace(const CMat& rho, int N, const Subsystem& A) {
  if (rho.rows() != (1L << N)) throw Error(ErrorKind::dimension, "density matrix does not match N");
  if (A.sites.empty()) throw Error(ErrorKind::domain, "empty subsystem");
  std::vector<int> s = A.sites;
  std::sort(s.begin(), s.end());
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] != s[k - 1] + 1) throw Error(ErrorKind::feature, "partial trace needs a contiguous block");
  if (s.front() < 0 || s.back() >= N) throw Error(ErrorKind::domain, "subsystem outside the chain");
  const int a = s.front(), nA = static_cast<int>(s.size());
  const long dA = 1L << nA, dim = 1L << N;
  const long maskA = (dA - 1) << a;
  CMat out = CMat::Zero(dA, dA);
  for (long env = 0; env < dim; ++env) {
    if (env & maskA) continue;
    for (long i = 0; i < dA; ++i)
      for (long j = 0; j < dA; ++j) out(i, j) += rho(env | (i << a), env | (j << a));
  }
  return out;
}

double renyi2(const CMat& rho) { return -std::log((rho * rho).trace().real()); }

double von_neumann(const CMat& rho) {
  Vec w = hermitian_eig(rho).eigenvalues();
  check_density(w, "density matrix");
  double S = 0.0;
  for (double x : w)
    if (x > 0) S -= x * std::log(x);
  return S;
}

double exact_fidelity(const CMat& rho1, const CMat& rho2) {
  if (rho1.rows() != rho2.rows()) throw Error(ErrorKind::dimension, "fidelity of different dimensions");
  // Tr sqrt(sqrt(r1) r2 sqrt(r1)) is the nuclear norm of L1^dag L2.
  CMat M = factor(rho1).adjoint() * factor(rho2);
  Eigen::BDCSVD<CMat> svd(M);
  const double t = svd.singularValues().sum();
  return t * t;
}

CVec evolve_dense(const CVec& psi, const SpMat& H, double t, double tol) {
  const long dim = H.rows();
  if (psi.size() != dim) throw Error(ErrorKind::dimension, "state does not match the Hamiltonian");
  if (t == 0.0) return psi;
  if (dim <= 4096) {
    auto es = hermitian_eig(CMat(H));
    CVec a = es.eigenvectors().adjoint() * psi;
    for (long k = 0; k < dim; ++k) a(k) *= std::polar(1.0, -es.eigenvalues()(k) * t);
    return es.eigenvectors() * a;
  }
  // Lanczos: project onto an m-dimensional Krylov space, exponentiate the
  // tridiagonal, shrink the substep until the residual estimate is below tol.
  const int m_max = 40;
  CVec v = psi;
  double done = 0.0, tau = t;
  while (std::abs(done) < std::abs(t)) {
    tau = (t > 0) ? std::min(tau, t - done) : std::max(tau, t - done);
    const double nrm = v.norm();
    std::vector<CVec> Q{v / nrm};
    std::vector<double> alpha, beta;
    for (int j = 0; j < m_max; ++j) {
      CVec w = H * Q[j];
      for (const auto& q : Q) w -= q * q.dot(w);
      for (const auto& q : Q) w -= q * q.dot(w);
      alpha.push_back(Q[j].dot(H * Q[j]).real());
      const double b = w.norm();
      beta.push_back(b);
      if (b < 1e-14) break;
      Q.push_back(w / b);
    }
    const int m = static_cast<int>(alpha.size());
    Mat T = Mat::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      T(j, j) = alpha[j];
      if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(T);
    for (;;) {
      CVec ph(m);
      for (int k = 0; k < m; ++k) ph(k) = std::polar(1.0, -es.eigenvalues()(k) * tau) * es.eigenvectors()(0, k);
      CVec y = es.eigenvectors().cast<cd>() * ph;
      const double err = beta[m - 1] * std::abs(y(m - 1));
      if (err <= tol * std::abs(tau) || beta[m - 1] < 1e-14) {
        CVec nv = CVec::Zero(dim);
        for (int k = 0; k < m; ++k) nv += Q[k] * (nrm * y(k));
        v = nv;
        done += tau;
        tau *= 1.5;
        break;
      }
      tau *= 0.5;
    }
  }
  return v;
}

CMat evolve_density(const CMat& rho, const CMat& H, double t) {
  auto es = hermitian_eig(H);
  const long dim = H.rows();
  CVec ph(dim);
  for (long k = 0; k < dim; ++k) ph(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  CMat U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  return U * rho * U.adjoint();
}

std::vector<std::uint64_t> sector_basis(int N, int ones) {
  check_size(N, max_spin_sites);
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << N); ++b)
    if (std::popcount(b) == ones) out.push_back(b);
  return out;
}

SpMat restrict_to(const SpMat& op, const std::vector<std::uint64_t>& basis) {
  std::vector<long> index(op.rows(), -1);
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<long>(k);
  std::vector<Eigen::Triplet<cd, long>> trip;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (SpMat::InnerIterator it(op, static_cast<long>(basis[k])); it; ++it) {
      const long r = index[it.row()];
      if (r < 0) {
        if (it.value() != 0.0) throw Error(ErrorKind::domain, "operator does not conserve the sector");
        continue;
      }
      trip.emplace_back(r, static_cast<long>(k), it.value());
    }
  const long d = static_cast<long>(basis.size());
  SpMat out(d, d);
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

CVec embed(const CVec& v, const std::vector<std::uint64_t>& basis, int N) {
  CVec out = CVec::Zero(1L << N);
  for (std::size_t k = 0; k < basis.size(); ++k) out(basis[k]) = v(k);
  return out;
}

CMat reduced_density(const CVec& psi, int N, const Subsystem& A) {
  if (psi.size() != (1L << N)) throw Error(ErrorKind::dimension, "state does not match N");
  std::vector<int> s = A.sites;
  std::sort(s.begin(), s.end());
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] != s[k - 1] + 1) throw Error(ErrorKind::feature, "partial trace needs a contiguous block");
  if (s.empty() || s.front() < 0 || s.back() >= N) throw Error(ErrorKind::domain, "subsystem outside the chain");
  const int a = s.front(), nA = static_cast<int>(s.size());
  const long dA = 1L << nA, dE = 1L << (N - nA);
  const long low = (1L << a) - 1;
  // Psi(i, e): i = bits of A, e = remaining bits packed.
  CMat P(dA, dE);
  for (long e = 0; e < dE; ++e) {
    const long base = (e & low) | ((e >> a) << (a + nA));
    for (long i = 0; i < dA; ++i) P(i, e) = psi(base | (i << a));
  }
  return P * P.adjoint();
}

SpectralEvolver::SpectralEvolver(const CMat& H, const CVec& psi0) {
  auto es = hermitian_eig(H);
  e_ = es.eigenvalues();
  V_ = es.eigenvectors();
  a0_ = V_.adjoint() * psi0;
}

CVec SpectralEvolver::state(double t) const {
  CVec a = a0_;
  for (long k = 0; k < a.size(); ++k) a(k) *= std::polar(1.0, -e_(k) * t);
  return V_ * a;
}

Eigenpair lowest_eigenpair(const SpMat& H, double tol) {
  const long dim = H.rows();
  Eigenpair out;
  if (dim <= 512) {
    auto es = hermitian_eig(CMat(H));
    out.energy = es.eigenvalues()(0);
    out.vector = es.eigenvectors().col(0);
    out.gap = dim > 1 ? es.eigenvalues()(1) - out.energy : 0.0;
    return out;
  }
  // Deterministic start vector; full reorthogonalization.
  CVec v0(dim);
  for (long i = 0; i < dim; ++i) v0(i) = cd(1.0 + 0.5 * std::sin(1.0 + i), 0.3 * std::cos(2.0 * i));
  v0.normalize();
  std::vector<CVec> Q{v0};
  std::vector<double> alpha, beta;
  double prev = 0.0;
  const int m_max = static_cast<int>(std::min<long>(dim, 400));
  for (int j = 0; j < m_max; ++j) {
    CVec w = H * Q[j];
    alpha.push_back(Q[j].dot(w).real());
    for (const auto& q : Q) w -= q * q.dot(w);
    for (const auto& q : Q) w -= q * q.dot(w);
    const double b = w.norm();
    const int m = static_cast<int>(alpha.size());
    Mat T = Mat::Zero(m, m);
    for (int k = 0; k < m; ++k) {
      T(k, k) = alpha[k];
      if (k + 1 < m) T(k, k + 1) = T(k + 1, k) = beta[k];
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(T);
    const double e0 = es.eigenvalues()(0);
    const double resid = b * std::abs(es.eigenvectors()(m - 1, 0));
    if ((j > 2 && resid < tol && std::abs(e0 - prev) < tol) || b < 1e-13 || j + 1 == m_max) {
      out.energy = e0;
      out.gap = m > 1 ? es.eigenvalues()(1) - e0 : 0.0;
      out.vector = CVec::Zero(dim);
      for (int k = 0; k < m; ++k) out.vector += Q[k] * es.eigenvectors()(k, 0);
      out.vector.normalize();
      return out;
    }
    prev = e0;
    beta.push_back(b);
    Q.push_back(w / b);
  }
  return out;
}

}  // namespace ppsim::fock
