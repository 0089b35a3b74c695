#include "ppsim/observables.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ppsim/precision.hpp"

namespace ppsim {

using std::numbers::pi;

double infinite_bond_energy(bool two_dimensional) {
  return two_dimensional ? 2.0 * infinite_2d_correlator_exact(1, 0) : -2.0 / pi;
}

EnergyProfile energy_profile(const CorrelationMatrix& C, const DeformationProfile& lattice) {
  if (C.n() != lattice.num_sites) throw Error(ErrorKind::dimension, "energy_profile: lattice/matrix mismatch");
  EnergyProfile out;
  out.reference = infinite_bond_energy(lattice.two_dimensional());
  for (const Bond& b : lattice.bonds) {
    const double h = 2.0 * C.C(b.a, b.b).real();
    out.h.push_back(h);
    out.deviation.push_back((h - out.reference) / out.reference);
  }
  return out;
}

std::vector<double> two_point(const CorrelationMatrix& C, int j, const std::vector<int>& ls) {
  std::vector<double> out;
  for (int l : ls) {
    const int m = j + 2 * l + 1;
    if (j < 0 || j >= C.n() || m < 0 || m >= C.n()) throw Error(ErrorKind::domain, "two_point: offset out of range");
    out.push_back(std::abs(C.C(j, m)));
  }
  return out;
}

namespace {

Vec clamp_spectrum(Vec l, double tol) {
  for (int k = 0; k < l.size(); ++k) {
    if (l(k) < -tol || l(k) > 1.0 + tol) {
      std::ostringstream m;
      m.precision(17);
      m << "correlation matrix eigenvalue " << l(k) << " outside [0, 1]";
      throw Error(ErrorKind::numerical_state, m.str());
    }
    l(k) = std::clamp(l(k), 0.0, 1.0);
  }
  return l;
}

double tolerance(int precision) { return std::pow(10.0, -std::max(16, precision) / 2.0); }

// x log x with 0 log 0 = 0
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

Vec occupation_spectrum(const CorrelationMatrix& C) {
  Eigen::SelfAdjointEigenSolver<CMat> es(C.C, Eigen::EigenvaluesOnly);
  return clamp_spectrum(es.eigenvalues(), tolerance(C.precision));
}

double renyi2_from_spectrum(const Vec& l) {
  double s = 0.0;
  for (int k = 0; k < l.size(); ++k) s -= std::log1p(-2.0 * l(k) * (1.0 - l(k)));
  return s;
}

double von_neumann_from_spectrum(const Vec& l) {
  double s = 0.0;
  for (int k = 0; k < l.size(); ++k) s -= xlogx(l(k)) + xlogx(1.0 - l(k));
  return s;
}

double renyi2(const CorrelationMatrix& CA, int precision) {
  if (precision <= 16) return renyi2_from_spectrum(occupation_spectrum(CA));
  Spectral sp = spectral_decompose(CA.C, precision);
  clamp_spectrum(sp.values, tolerance(precision));
  DigitsGuard g(precision + 10);
  mpreal s = 0;
  for (const mpreal& l0 : sp.mp.values) {
    const mpreal l = std::clamp(l0, mpreal(0), mpreal(1));
    s -= log1p(-2 * l * (1 - l));
  }
  return s.convert_to<double>();
}

double von_neumann(const CorrelationMatrix& CA, int precision) {
  if (precision <= 16) return von_neumann_from_spectrum(occupation_spectrum(CA));
  Spectral sp = spectral_decompose(CA.C, precision);
  clamp_spectrum(sp.values, tolerance(precision));
  DigitsGuard g(precision + 10);
  mpreal s = 0;
  for (const mpreal& l0 : sp.mp.values) {
    const mpreal l = std::clamp(l0, mpreal(0), mpreal(1));
    if (l > 0) s -= l * log(l);
    if (l < 1) s -= (1 - l) * log(1 - l);
  }
  return s.convert_to<double>();
}

namespace {

double finish(double F, double det_imag_ratio) {
  if (!(F > -1e-8 && F < 1.0 + 1e-8) || det_imag_ratio > 1e-6) {
    std::ostringstream m;
    m.precision(17);
    m << "uhlmann_fidelity: result " << F << " outside [0, 1]";
    throw Error(ErrorKind::numerical_state, m.str());
  }
  return std::clamp(F, 0.0, 1.0);
}

double fidelity_double(const CMat& C1, const CMat& C2) {
  const int n = static_cast<int>(C1.rows());
  const CMat I = CMat::Identity(n, n);
  const CMat E = C1 * C2;
  const CMat Ep = (I - C1) * (I - C2);
  const CMat D = E + Ep;
  Eigen::FullPivLU<CMat> lu(D);
  if (!lu.isInvertible()) return 0.0;
  const cd det = lu.determinant();
  const CMat P = lu.solve(E);
  const CMat K = 4.0 * P * lu.solve(Ep);
  Eigen::ComplexEigenSolver<CMat> es(K, false);
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= 1.0 + std::sqrt(std::max(0.0, es.eigenvalues()(k).real()));
  const double ratio = std::abs(det) > 0 ? std::abs(det.imag()) / std::abs(det) : 0.0;
  const double F = det.real() * prod;
  // The double evaluation is accurate to ~1e-8 absolute; results this close to 1
  // are recomputed in MPFR by the caller.
  if (F > 1.0 && F < 1.0 + 1e-6) return 1.0;
  return finish(F, ratio);
}

double fidelity_mp(const CMat& C1, const CMat& C2, int digits) {
  DigitsGuard g(digits);
  const int n = static_cast<int>(C1.rows());
  const MpDense A = mp_embed(C1), B = mp_embed(C2);
  const MpDense I = MpDense::Identity(2 * n, 2 * n);
  const MpDense E = A * B;
  const MpDense Ep = (I - A) * (I - B);
  const MpDense D = E + Ep;
  Eigen::FullPivLU<MpDense> lu(D);
  if (!lu.isInvertible()) return 0.0;
  // det of the embedding is |det D|^2; det D is real and nonnegative when F > 0.
  const mpreal det2 = lu.determinant();
  if (det2 <= 0) return 0.0;
  const MpDense K = 4 * lu.solve(E) * lu.solve(Ep);
  Eigen::EigenSolver<MpDense> es(K, false);
  mpreal logF = log(det2) / 2;
  for (int k = 0; k < 2 * n; ++k) {
    mpreal re = es.eigenvalues()(k).real();
    if (re < 0) re = 0;
    logF += log1p(sqrt(re)) / 2;
  }
  return finish(exp(logF).convert_to<double>(), 0.0);
}

void check_pair(const CorrelationMatrix& C1, const CorrelationMatrix& C2) {
  if (C1.n() != C2.n()) throw Error(ErrorKind::dimension, "uhlmann_fidelity: dimension mismatch");
  occupation_spectrum(C1);
  occupation_spectrum(C2);
}

}  // namespace

namespace {

FidelityResult stable_mp(const CMat& C1, const CMat& C2, int precision, int max_digits) {
  for (int d = precision; d <= max_digits; d *= 2) {
    const double a = fidelity_mp(C1, C2, d);
    const double b = fidelity_mp(C1, C2, d + 8);
    if (std::abs(a - b) <= std::max(std::pow(10.0, -d / 2.0), 4e-16)) return {b, d};
    if (d * 2 > max_digits) {
      std::ostringstream m;
      m.precision(17);
      m << "uhlmann_fidelity: not stable under +8 digits at precision " << d << ": " << a << " vs " << b;
      throw Error(ErrorKind::precision, m.str());
    }
  }
  throw Error(ErrorKind::precision, "uhlmann_fidelity: precision budget exhausted");
}

}  // namespace

FidelityResult uhlmann_fidelity(const CorrelationMatrix& C1, const CorrelationMatrix& C2, int precision,
                                double escalate_below) {
  check_pair(C1, C2);
  if (precision > 16) return stable_mp(C1.C, C2.C, precision, std::max(precision, 4 * precision));
  FidelityResult r;
  r.F = fidelity_double(C1.C, C2.C);
  if (1.0 - r.F < escalate_below) return stable_mp(C1.C, C2.C, std::max(32, 2 * C1.n()), 512);
  return r;
}

double infidelity(const CorrelationMatrix& C1, const CorrelationMatrix& C2) {
  return 1.0 - uhlmann_fidelity(C1, C2).F;
}

double infidelity_fast(const CorrelationMatrix& C1, const CorrelationMatrix& C2) {
  check_pair(C1, C2);
  return 1.0 - fidelity_double(C1.C, C2.C);
}

CMat mode_map(const Propagator& P, double t) {
  const int N = static_cast<int>(P.energies().size());
  CMat phi(N, N);  // phi(p, j')
  for (int p = 0; p < N; ++p)
    for (int j = 0; j < N; ++j) {
      // reduce p*(j+1) mod N exactly before forming the angle
      const long k = (long(p) * (j + 1)) % N;
      phi(p, j) = std::polar(1.0 / N, -2.0 * pi * double(k) / N);
    }
  return phi * P.U(t);
}

CMat mode_map(const QuadraticHamiltonian& H, double t) { return mode_map(Propagator(H), t); }

double mode_weight_X(const CMat& chi, const Subsystem& A, int p) {
  if (p < 0 || p >= chi.rows()) throw Error(ErrorKind::domain, "mode_weight_X: momentum index out of range");
  double x = 0.0;
  for (int j : A.sites) x += std::abs(chi(p, j));
  return x;
}

}  // namespace ppsim
