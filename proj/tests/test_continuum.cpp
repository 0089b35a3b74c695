#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "ppsim/continuum.hpp"
#include "ppsim/observables.hpp"

using namespace ppsim;
using namespace ppsim::continuum;
using std::numbers::pi;

namespace {

const Params par{36, 2, Kind::parabolic};
const Params ssd{36, 2, Kind::ssd};

// Measure of starting points that reached the edge region, by bisection on
// the monotone trajectory.
double reached_fraction(const Params& p, double dx, double t) {
  double lo = -p.L / 2 * (1 - 1e-15), hi = p.L / 2 * (1 - 1e-15);
  const double target = p.L / 2 - dx;
  if (trajectory(p, lo, t) >= target) return 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (trajectory(p, mid, t) >= target ? hi : lo) = mid;
  }
  return (p.L / 2 - hi) / p.L;
}

// X from a finite-difference derivative of the edge weight.
double X_oracle(const Params& p, double xa, double xb, double t) {
  auto f = [&](double x) {
    const double h = 1e-5, d = p.L / 2 + x;
    const double lo = std::max(d - h, 1e-12), hi = std::min(d + h, p.L);
    return std::sqrt(std::max(0.0, (edge_weight(p, hi, t) - edge_weight(p, lo, t)) / (hi - lo)));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, xa, xb, 15, 1e-12);
}

}  // namespace

TEST_CASE("trajectories") {
  for (const auto& p : {par, ssd})
    for (double x0 : {-17.0, -3.2, 0.0, 11.5}) {
      CHECK(trajectory(p, x0, 0.0) == doctest::Approx(x0).epsilon(1e-14));
      double prev = x0;
      for (double t = 1; t < 40; t += 1) {
        const double x = trajectory(p, x0, t);
        CHECK(x > prev);
        CHECK(x < p.L / 2);
        prev = x;
      }
    }
  CHECK_THROWS_AS(trajectory(par, 18.0, 1.0), Error);

  // Exponential approach, rate 4v/L, for the parabola.
  const double d1 = par.L / 2 - trajectory(par, 1.0, 20.0), d2 = par.L / 2 - trajectory(par, 1.0, 30.0);
  CHECK(std::log(d1 / d2) / 10.0 == doctest::Approx(4 * par.v / par.L).epsilon(1e-3));
  CHECK(par.L / 2 - trajectory_asymptotic(par, 1.0, 30.0) == doctest::Approx(d2).epsilon(1e-2));
  // Algebraic approach, (L/2 - x1) t -> L^2 / (pi^2 v), for the SSD.
  const double t = 1e5;
  CHECK((ssd.L / 2 - trajectory(ssd, 1.0, t)) * t == doctest::Approx(ssd.L * ssd.L / (pi * pi * ssd.v)).epsilon(1e-3));
}

TEST_CASE("edge weights") {
  for (const auto& p : {par, ssd}) {
    for (double dx : {0.5, 4.0, 17.0, 30.0}) {
      CHECK(edge_weight(p, dx, 0.0) == doctest::Approx(dx / p.L).epsilon(1e-13));
      CHECK(edge_weight(p, dx, 1e7) == doctest::Approx(1.0).epsilon(1e-5));
      for (double t : {0.5, 3.0, 9.0, 25.0})
        CHECK(std::abs(edge_weight(p, dx, t) - reached_fraction(p, dx, t)) < 1e-10);
    }
    double prev = 0;
    for (double t = 0; t < 50; t += 0.5) {
      const double w = edge_weight(p, 4.0, t);
      CHECK(w >= prev);
      CHECK(w <= 1.0);
      CHECK(edge_weight(p, 5.0, t) >= w);
      prev = w;
    }
  }
  CHECK_THROWS_AS(edge_weight(par, 0.0, 1.0), Error);
  CHECK_THROWS_AS(edge_weight(par, 37.0, 1.0), Error);

  // L = 36, v = 2, dx = 4, t = 9 by counting starting points on a fine grid.
  const int M = 2000000;
  int hits = 0;
  for (int i = 0; i < M; ++i) {
    const double x0 = -18.0 + 36.0 * (i + 0.5) / M;
    hits += trajectory(par, x0, 9.0) >= 14.0;
  }
  CHECK(edge_weight(par, 4.0, 9.0) == doctest::Approx(double(hits) / M).epsilon(1e-5));
}

TEST_CASE("subsystem contributions") {
  for (const auto& p : {par, ssd}) {
    CHECK(subsystem_contribution_X(p, 3.0, 3.0, 2.0, Branch::right) == 0.0);
    for (double t : {0.7, 4.0, 12.0}) {
      const double xr = subsystem_contribution_X(p, -14.0, 14.0, t, Branch::right);
      CHECK(xr == doctest::Approx(X_oracle(p, -14.0, 14.0, t)).epsilon(1e-7));
      CHECK(subsystem_contribution_X(p, -14.0, 5.0, t, Branch::left) ==
            doctest::Approx(subsystem_contribution_X(p, -5.0, 14.0, t, Branch::right)).epsilon(1e-12));
    }
    CHECK(subsystem_contribution_X(p, -14.0, 14.0, 1e7, Branch::right) < 1e-5);
  }
  // t -> 0: X = (xb - xa) / sqrt(L), and the series joins the closed form.
  CHECK(subsystem_contribution_X(par, -14.0, 14.0, 0.0, Branch::right) == doctest::Approx(28.0 / 6.0).epsilon(1e-14));
  const double below = subsystem_contribution_X(par, -14.0, 14.0, 0.008999, Branch::right);
  const double above = subsystem_contribution_X(par, -14.0, 14.0, 0.009001, Branch::right);
  CHECK(std::abs(below - above) < 1e-8);
  CHECK(std::abs(subsystem_contribution_X(par, -14.0, 10.0, 0.0089, Branch::right) -
                 X_oracle(par, -14.0, 10.0, 0.0089)) < 1e-10);
}

TEST_CASE("lattice modes follow the continuum weights") {
  const int N = 72;
  for (auto kind : {ProfileKind::parabolic, ProfileKind::sine_square}) {
    auto H = hopping_hamiltonian(make_profile(kind, N));
    Propagator P(H);
    const auto p = lattice_params(N, kind_from_profile(kind));
    for (double t : {3.0, 9.0, 18.0}) {
      CMat chi = mode_map(P, t);
      for (int m : {4, 12}) {
        double w = 0;
        for (int j = N - m; j < N; ++j) w += std::norm(chi(N / 4, j));
        CHECK(std::abs(N * w - edge_weight(p, m, t)) < 0.05);
      }
    }
  }
}
