#include "ppsim/continuum.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "ppsim/core.hpp"

namespace ppsim::continuum {

using std::numbers::pi;

namespace {

void check(const Params& p) {
  if (!(p.L > 0) || !(p.v > 0)) throw Error(ErrorKind::domain, "L and v must be positive");
}

// sqrt(d_x w) at position x for the right-moving branch.
double density_sqrt(const Params& p, double x, double t) {
  const double L = p.L;
  if (p.kind == Kind::parabolic) {
    const double a = 2 * p.v * t / L;
    return 1.0 / (std::sqrt(L) * std::cosh(a) * (1.0 + 2 * x * std::tanh(a) / L));
  }
  const double th = pi * x / L, b = pi * p.v * t / L;
  const double c = std::cos(th), s = std::sin(th);
  return 1.0 / (std::sqrt(L) * std::sqrt(c * c + (b * c + s) * (b * c + s)));
}

double parabolic_X(const Params& p, double xa, double xb, double t) {
  const double L = p.L, a = 2 * p.v * t / L;
  if (a < 1e-3) {
    // int dx / (1 + beta x), expanded in beta = 2 tanh(a) / L
    const double beta = 2 * std::tanh(a) / L;
    double F = 0.0, pa = xa, pb = xb, c = 1.0;
    for (int k = 0; k < 6; ++k) {
      F += c * (pb - pa) / (k + 1);
      pa *= xa, pb *= xb, c *= -beta;
    }
    return F / (std::sqrt(L) * std::cosh(a));
  }
  const double e = std::exp(4 * p.v * t / L);
  if (std::isinf(e)) return 0.0;
  return std::sqrt(L) / (2 * std::sinh(a)) * std::log((L - 2 * xb + e * (L + 2 * xb)) / (L - 2 * xa + e * (L + 2 * xa)));
}

}  // namespace

Params lattice_params(int N, Kind kind) { return {double(N), 2.0, kind}; }

Kind kind_from_profile(ProfileKind k) {
  if (k == ProfileKind::parabolic) return Kind::parabolic;
  if (k == ProfileKind::sine_square) return Kind::ssd;
  throw Error(ErrorKind::domain, "continuum forms exist for the parabolic and sine-square profiles only");
}

double trajectory(const Params& p, double x0, double t) {
  check(p);
  const double L = p.L;
  if (!(std::abs(x0) < L / 2)) throw Error(ErrorKind::domain, "trajectory start must lie inside (-L/2, L/2)");
  if (p.kind == Kind::parabolic) return L / 2 * std::tanh(2 * p.v * t / L + std::atanh(2 * x0 / L));
  return L / pi * std::atan(pi * p.v * t / L + std::tan(pi * x0 / L));
}

double trajectory_asymptotic(const Params& p, double x0, double t) {
  check(p);
  const double L = p.L;
  if (p.kind == Kind::parabolic) {
    const double u = 2 * x0 / L;
    return L / 2 * (1 - 2 * (1 - u) / (1 + u) * std::exp(-4 * p.v * t / L));
  }
  return L / 2 * (1 - 2 * L / (pi * pi * p.v * t));
}

double edge_weight(const Params& p, double dx, double t) {
  check(p);
  const double L = p.L;
  if (!(dx > 0 && dx <= L)) throw Error(ErrorKind::domain, "edge width must lie in (0, L]");
  if (t < 0) throw Error(ErrorKind::domain, "time must be non-negative");
  if (dx == L) return 1.0;
  if (p.kind == Kind::parabolic) return 0.5 + 0.5 * std::tanh(2 * p.v * t / L + std::atanh((2 * dx - L) / L));
  return 0.5 + std::atan(pi * p.v * t / L - 1.0 / std::tan(dx * pi / L)) / pi;
}

double subsystem_contribution_X(const Params& p, double xa, double xb, double t, Branch branch) {
  check(p);
  const double L = p.L;
  if (!(-L / 2 <= xa && xa <= xb && xb <= L / 2)) throw Error(ErrorKind::domain, "need -L/2 <= xa <= xb <= L/2");
  if (t < 0) throw Error(ErrorKind::domain, "time must be non-negative");
  if (xa == xb) return 0.0;
  if (branch == Branch::left) {
    const double a = -xb, b = -xa;
    xa = a, xb = b;
  }
  if (p.kind == Kind::parabolic) return parabolic_X(p, xa, xb, t);
  auto f = [&](double x) { return density_sqrt(p, x, t); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, xa, xb, 20, 1e-14);
}

}  // namespace ppsim::continuum
