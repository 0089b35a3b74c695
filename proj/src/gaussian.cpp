#include "ppsim/gaussian.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace ppsim {

using std::numbers::pi;

QuadraticHamiltonian hopping_hamiltonian(int num_sites, const std::vector<Bond>& bonds,
                                         const std::vector<double>& weights) {
  if (bonds.size() != weights.size()) throw Error(ErrorKind::dimension, "bond/weight count mismatch");
  QuadraticHamiltonian H;
  H.h = Mat::Zero(num_sites, num_sites);
  for (std::size_t k = 0; k < bonds.size(); ++k) {
    const Bond& b = bonds[k];
    if (b.a < 0 || b.b < 0 || b.a >= num_sites || b.b >= num_sites)
      throw Error(ErrorKind::dimension, "bond outside lattice");
    H.h(b.a, b.b) += weights[k];
    H.h(b.b, b.a) += weights[k];
  }
  return H;
}

QuadraticHamiltonian hopping_hamiltonian(const DeformationProfile& p) {
  return hopping_hamiltonian(p.num_sites, p.bonds, p.weights);
}

Mat staggered_potential(const SquareLattice2D& lat) {
  Mat P = Mat::Zero(lat.num_sites(), lat.num_sites());
  for (int y = 1; y <= lat.N; ++y)
    for (int x = 1; x <= lat.N; ++x) P(lat.site(x, y), lat.site(x, y)) = ((x + y) % 2 == 0) ? 1.0 : -1.0;
  return P;
}

namespace {

CMat project(const Mat& V, const Vec& occ) {
  return (V * occ.asDiagonal() * V.transpose()).cast<cd>();
}

}  // namespace

CorrelationMatrix ground_state(const QuadraticHamiltonian& H, double filling, const GroundStateOptions& opt) {
  const int n = H.n();
  if ((H.h - H.h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::numerical_state, "ground_state: hopping matrix not symmetric");
  const double mf = filling * n;
  const long m = std::lround(mf);
  if (std::abs(mf - m) > 1e-9 || m < 0 || m > n)
    throw Error(ErrorKind::domain, "ground_state: filling * n is not an integer in [0, n]");

  Eigen::SelfAdjointEigenSolver<Mat> es(H.h);
  const Vec& e = es.eigenvalues();
  const Mat& V = es.eigenvectors();
  Vec occ = Vec::Zero(n);
  for (long k = 0; k < m; ++k) occ(k) = 1.0;
  CorrelationMatrix out;
  if (m == 0 || m == n || e(m) - e(m - 1) > opt.tol) {
    out.C = project(V, occ);
    return out;
  }

  // Degenerate Fermi level: shell [lo, hi) of modes within tol of e_F.
  const double eF = e(m - 1);
  int lo = static_cast<int>(m) - 1, hi = static_cast<int>(m);
  while (lo > 0 && std::abs(e(lo - 1) - eF) <= opt.tol) --lo;
  while (hi < n && std::abs(e(hi) - eF) <= opt.tol) ++hi;
  const int shell = hi - lo, fill = static_cast<int>(m) - lo;

  switch (opt.policy) {
    case DegeneracyPolicy::error: {
      std::ostringstream msg;
      msg.precision(17);
      msg << "ground_state: degenerate Fermi level, e[" << m - 1 << "] = " << e(m - 1) << ", e[" << m
          << "] = " << e(m) << " (" << shell << " modes in shell, " << fill << " to fill)";
      throw Error(ErrorKind::degeneracy, msg.str());
    }
    case DegeneracyPolicy::mixture: {
      for (int k = lo; k < hi; ++k) occ(k) = double(fill) / shell;
      out.C = project(V, occ);
      return out;
    }
    case DegeneracyPolicy::lift: {
      if (opt.lift_operator.rows() != n || opt.lift_operator.cols() != n)
        throw Error(ErrorKind::dimension, "ground_state: lift operator has wrong shape");
      const Mat Vs = V.middleCols(lo, shell);
      const Mat W = Vs.transpose() * opt.lift_operator * Vs;
      Eigen::SelfAdjointEigenSolver<Mat> ws(0.5 * (W + W.transpose()));
      const Vec& w = ws.eigenvalues();
      if (w(fill) - w(fill - 1) <= opt.tol)
        throw Error(ErrorKind::degeneracy, "ground_state: lift operator leaves the Fermi shell degenerate");
      Mat Vl = V;
      Vl.middleCols(lo, shell) = Vs * ws.eigenvectors();
      for (int k = lo; k < hi; ++k) occ(k) = (k - lo < fill) ? 1.0 : 0.0;
      out.C = project(Vl, occ);
      return out;
    }
  }
  throw Error(ErrorKind::config, "ground_state: unknown degeneracy policy");
}

CorrelationMatrix thermal_state(const QuadraticHamiltonian& H, double T) {
  if (!(T > 0)) throw Error(ErrorKind::domain, "thermal_state: temperature must be > 0");
  Eigen::SelfAdjointEigenSolver<Mat> es(H.h);
  Vec f = es.eigenvalues().unaryExpr([T](double x) { return 1.0 / (1.0 + std::exp(x / T)); });
  CorrelationMatrix out;
  out.C = project(es.eigenvectors(), f);
  return out;
}

Propagator::Propagator(const QuadraticHamiltonian& H) {
  Eigen::SelfAdjointEigenSolver<Mat> es(H.h);
  e_ = es.eigenvalues();
  V_ = es.eigenvectors();
}

CMat Propagator::U(double t) const {
  CVec ph(e_.size());
  for (int k = 0; k < e_.size(); ++k) ph(k) = std::exp(cd(0, -t * e_(k)));
  return V_.cast<cd>() * ph.asDiagonal() * V_.transpose().cast<cd>();
}

Trajectory::Trajectory(const CorrelationMatrix& C0, const QuadraticHamiltonian& H)
    : Trajectory(C0, Propagator(H)) {}

Trajectory::Trajectory(const CorrelationMatrix& C0, const Propagator& P) : P_(P), precision_(C0.precision) {
  if (C0.n() != P.energies().size()) throw Error(ErrorKind::dimension, "evolve: dimension mismatch");
  const CMat V = P_.modes().cast<cd>();
  Ct_ = V.transpose() * C0.C * V;
}

CorrelationMatrix Trajectory::at(double t) const {
  const Vec& e = P_.energies();
  const int n = static_cast<int>(e.size());
  CVec ph(n);
  for (int k = 0; k < n; ++k) ph(k) = std::exp(cd(0, t * e(k)));
  CMat M(n, n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) M(a, b) = ph(a) * Ct_(a, b) * std::conj(ph(b));
  const CMat V = P_.modes().cast<cd>();
  CorrelationMatrix out;
  out.C = V * M * V.transpose();
  out.precision = precision_;
  return out;
}

CorrelationMatrix evolve(const CorrelationMatrix& C, const QuadraticHamiltonian& H, double t) {
  if (C.n() != H.n()) throw Error(ErrorKind::dimension, "evolve: dimension mismatch");
  return Trajectory(C, H).at(t);
}

CorrelationMatrix reduce(const CorrelationMatrix& C, const Subsystem& A) {
  const int k = A.size();
  CorrelationMatrix out;
  out.precision = C.precision;
  out.C.resize(k, k);
  for (int j = 0; j < k; ++j) {
    if (A.sites[j] < 0 || A.sites[j] >= C.n()) throw Error(ErrorKind::domain, "reduce: site index out of range");
    for (int i = 0; i < k; ++i) out.C(i, j) = C.C(A.sites[i], A.sites[j]);
  }
  return out;
}

CorrelationMatrix infinite_chain_segment(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "infinite_chain_segment: n must be >= 1");
  CorrelationMatrix out;
  out.C = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) {
      const int r = j - m;
      if (r == 0)
        out.C(j, m) = 0.5;
      else if (r % 2 != 0)
        out.C(j, m) = -std::sin(pi * r / 2.0) / (pi * r);
    }
  return out;
}

double infinite_2d_correlator_exact(int dx, int dy) {
  if (dx == 0 && dy == 0) return 0.5;
  if ((dx + dy) % 2 == 0) return 0.0;
  const double sx = (dx % 2 == 0) ? 1.0 : -1.0;
  return -2.0 * sx / (pi * pi * (double(dy) * dy - double(dx) * dx));
}

namespace {

// (1/2pi^2) int_0^pi cos(k x) I(k) dk, where I is the k_y integral over the
// occupied region |k_y| > pi - k.
double gl_integral(int dx, int dy, int points) {
  std::vector<double> x, w;
  {
    // Golub-Welsch: nodes and weights from the Jacobi matrix of Legendre polynomials.
    Mat J = Mat::Zero(points, points);
    for (int k = 1; k < points; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    for (int k = 0; k < points; ++k) {
      x.push_back(es.eigenvalues()(k));
      w.push_back(2.0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k));
    }
  }
  double sum = 0.0;
  for (int k = 0; k < points; ++k) {
    const double kx = 0.5 * pi * (x[k] + 1.0);
    const double k0 = pi - kx;
    const double inner = (dy == 0) ? 2.0 * kx : -2.0 * std::sin(k0 * dy) / dy;
    sum += w[k] * std::cos(kx * dx) * inner;
  }
  return 0.5 * pi * sum / (2.0 * pi * pi);
}

}  // namespace

Quadrature2D infinite_2d_correlator(int dx, int dy, int quadrature_points, double tol) {
  if (quadrature_points < 64) throw Error(ErrorKind::domain, "infinite_2d_correlator: need >= 64 quadrature points");
  Quadrature2D q;
  int p = quadrature_points;
  double prev = gl_integral(dx, dy, p);
  for (int it = 0; it < 6; ++it) {
    const double next = gl_integral(dx, dy, 2 * p);
    q.change = std::abs(next - prev);
    q.value = next;
    q.points = 2 * p;
    if (q.change < tol) return q;
    prev = next;
    p *= 2;
  }
  throw Error(ErrorKind::numerical_state,
              "infinite_2d_correlator: quadrature not converged, change " + std::to_string(q.change));
}

CorrelationMatrix infinite_2d_segment(int n, int quadrature_points) {
  if (n < 1) throw Error(ErrorKind::domain, "infinite_2d_segment: n must be >= 1");
  std::map<std::pair<int, int>, double> cache;
  auto value = [&](int dx, int dy) {
    dx = std::abs(dx);
    dy = std::abs(dy);
    auto key = std::make_pair(std::min(dx, dy), std::max(dx, dy));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double v = infinite_2d_correlator(dx, dy, quadrature_points).value;
    cache.emplace(key, v);
    return v;
  };
  CorrelationMatrix out;
  out.C = CMat::Zero(n * n, n * n);
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) out.C(a, b) = value(a % n - b % n, a / n - b / n);
  return out;
}

double spectrum_violation(const CorrelationMatrix& C) {
  Eigen::SelfAdjointEigenSolver<CMat> es(C.C, Eigen::EigenvaluesOnly);
  const Vec& l = es.eigenvalues();
  if (l.size() == 0) return 0.0;
  return std::max({0.0, -l.minCoeff(), l.maxCoeff() - 1.0});
}

}  // namespace ppsim
