#include "ppsim/eh_learn.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace ppsim {

LearnedEH learn_eh(const CorrelationMatrix& CA) {
  const int n = CA.n();
  if (n < 3) throw Error(ErrorKind::domain, "learning an entanglement Hamiltonian needs at least 3 sites");
  const int m = n - 1;
  // Column j: real and imaginary parts of [B_j, C], B_j = E_{j,j+1} + E_{j+1,j}.
  Mat M(2 * n * n, m);
  for (int j = 0; j < m; ++j) {
    CMat B = CMat::Zero(n, n);
    B(j, j + 1) = B(j + 1, j) = 1.0;
    CMat K = B * CA.C - CA.C * B;
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) {
        M(c * n + r, j) = K(r, c).real();
        M(n * n + c * n + r, j) = K(r, c).imag();
      }
  }
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeThinV);
  const Vec& s = svd.singularValues();
  LearnedEH out;
  out.residual = s(m - 1);
  out.gap = m > 1 ? s(m - 2) - s(m - 1) : 0.0;
  Vec v = svd.matrixV().col(m - 1);
  if (m > 1 && out.gap < 1e-10) {
    std::ostringstream os;
    os << "smallest singular pair is degenerate (" << s(m - 2) << ", " << s(m - 1) << "); candidates:";
    for (int k : {m - 2, m - 1}) {
      os << " [";
      for (int j = 0; j < m; ++j) os << (j ? " " : "") << svd.matrixV()(j, k);
      os << "]";
    }
    throw Error(ErrorKind::ambiguous, os.str());
  }
  const int centre = (m - 1) / 2;
  double sgn = v(centre) != 0.0 ? v(centre) : v.sum();
  if (sgn < 0) v = -v;
  v /= v.maxCoeff();
  out.g.assign(v.data(), v.data() + m);
  out.distance = parabola_distance(out.g);
  return out;
}

double parabola_distance(const std::vector<double>& g) {
  const int m = static_cast<int>(g.size());
  if (m < 3) throw Error(ErrorKind::domain, "parabola distance needs at least 3 bonds");
  const int n = m + 1;
  double gp = 0, pp = 0, gg = 0;
  for (int j = 1; j <= m; ++j) {
    const double p = double(j) * (n - j);
    gp += g[j - 1] * p;
    pp += p * p;
    gg += g[j - 1] * g[j - 1];
  }
  if (!(gg > 0)) throw Error(ErrorKind::domain, "zero coupling profile");
  const double a = gp / pp;
  double r = 0;
  for (int j = 1; j <= m; ++j) {
    const double d = g[j - 1] - a * double(j) * (n - j);
    r += d * d;
  }
  return std::sqrt(r / gg);
}

EhSeries eh_series(const CorrelationMatrix& C0, const QuadraticHamiltonian& H, const Subsystem& A,
                   const std::vector<double>& times, Exec exec) {
  Trajectory traj(C0, H);
  EhSeries s;
  s.times = times;
  const int n = static_cast<int>(times.size());
  s.distance.resize(n);
  s.residual.resize(n);
  s.couplings.resize(n);
  auto body = [&](int k) {
    auto eh = learn_eh(reduce(traj.at(times[k]), A));
    s.distance[k] = eh.distance;
    s.residual[k] = eh.residual;
    s.couplings[k] = std::move(eh.g);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) body(k);
  } else {
    for (int k = 0; k < n; ++k) body(k);
  }
  return s;
}

Extremum detect_tpp_by_eh(const EhSeries& s) { return global_minimum(s.times, s.distance); }

}  // namespace ppsim
