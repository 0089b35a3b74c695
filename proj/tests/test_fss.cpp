#include <doctest.h>

#include <cmath>

#include "ppsim/fss.hpp"

using namespace ppsim;
using namespace ppsim::fss;

namespace {

RescaledCurve line(double n, double a, double b) {
  std::vector<double> u, y;
  for (int i = 0; i <= 40; ++i) {
    u.push_back(-2.0 + 0.1 * i);
    y.push_back(a * u.back() + b);
  }
  return {n, u, y, MonotoneCubic(u, y)};
}

}  // namespace

TEST_CASE("monotone interpolation") {
  std::vector<double> x{0, 1, 2, 3, 4, 5}, y{0, 0.1, 0.15, 2.0, 2.01, 3};
  MonotoneCubic f(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(f(x[i]) == doctest::Approx(y[i]));
  double prev = f(0);
  for (double t = 0.01; t <= 5; t += 0.01) {
    CHECK(f(t) >= prev - 1e-14);
    prev = f(t);
  }
  CHECK_THROWS_AS(MonotoneCubic({0, 1, 2}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(MonotoneCubic({0, 1, 1, 2}, {0, 1, 2, 3}), Error);
}

TEST_CASE("rescaling") {
  auto fam = synthetic_family({1.0, 1.0}, 0.4, 0.9, 11, 0.6, 0.0, 0.0, 1);
  auto r = rescale(fam, 0.0, 0.0);
  for (std::size_t i = 0; i < fam[0].M.size(); ++i) {
    CHECK(r[0].y[i] == fam[0].M[i]);
    CHECK(r[0].u[i] == fam[0].J[i]);
  }
  // Identical curves with beta = 0 differ by an axis shift only.
  auto s = rescale(fam, 0.7, 0.0);
  for (std::size_t i = 0; i < fam[0].M.size(); ++i) CHECK(s[0].u[i] == doctest::Approx(r[0].u[i] - 0.7));
}

TEST_CASE("collapse cost") {
  // Exact collapse at the true parameters, up to interpolation error
  // (eps2 falls like h^6 with the sample spacing).
  const double Jc = 0.6384, beta = 0.125;
  auto fam = synthetic_family({8, 12, 16, 20}, 0.4, 0.9, 201, Jc, beta, 0.0, 1);
  auto c = collapse_cost(rescale(fam, Jc, beta));
  CHECK(c.eps2 < 1e-12);
  CHECK(c.excluded == 0);
  CHECK(collapse_cost(rescale(fam, Jc + 0.02, beta)).eps2 > 1e-6);
  CHECK(collapse_cost(rescale(fam, Jc, beta + 0.05)).eps2 > 1e-6);

  // Two parallel lines: the crossing along the normal sits a perpendicular
  // distance d away, so each probe contributes d^2 / 4.
  const double a = 0.8, b1 = 1.0, b2 = 1.3, uc = 0.25;
  auto cost = collapse_cost({line(4, a, b1), line(8, a, b2)}, uc);
  const double d = (b2 - b1) / std::sqrt(1 + a * a);
  double den = 0;
  for (int i = 0; i <= 100; ++i) {
    const double u = uc + (-0.1 + 0.002 * i) * 4.0;
    den += u * u + (a * u + b1) * (a * u + b1);
  }
  CHECK(cost.eps2 == doctest::Approx(101 * d * d / 4 / den).epsilon(1e-10));

  CHECK_THROWS_AS(collapse_cost({line(4, a, b1), line(8, a, b1 + 100)}, uc), Error);
  CHECK_THROWS_AS(collapse_cost({line(4, a, b1)}, uc), Error);
}

TEST_CASE("likelihood") {
  Grid g{0.0, 1.0, 0.0, 2.0, 5, 3};
  auto L = likelihood(g, std::vector<double>(15, 0.3));
  CHECK(L.flat);
  CHECK(L.jc_mean == doctest::Approx(0.5));
  CHECK(L.beta_mean == doctest::Approx(1.0));
  for (double w : L.W) CHECK(w == doctest::Approx(1.0 / 15));

  std::vector<double> e(15);
  for (int i = 0; i < 15; ++i) e[i] = 1.0 + (i - 7) * (i - 7);
  auto M = likelihood(g, e);
  CHECK_FALSE(M.flat);
  CHECK(std::max_element(M.W.begin(), M.W.end()) - M.W.begin() == 7);
  CHECK(M.W[7] / M.W[6] == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(likelihood(g, std::vector<double>(4, 1.0)), Error);
}

TEST_CASE("scaling fit on noiseless synthetic data") {
  const double Jc = 0.6384, beta = 0.125;
  auto fam = synthetic_family({8, 12, 16, 20}, 0.4, 0.9, 201, Jc, beta, 0.0, 1);
  Grid g{Jc - 0.03, Jc + 0.03, beta - 0.06, beta + 0.06, 7, 7};
  auto L = fit_scaling(fam, g);
  CHECK(L.eps2_min < 1e-12);
  CHECK(std::min_element(L.eps2.begin(), L.eps2.end()) - L.eps2.begin() == 3 * 7 + 3);
  CHECK(L.jc_mean == doctest::Approx(Jc).epsilon(1e-9));
  auto S = fit_scaling(fam, g, 1.0, {}, Exec::serial);
  CHECK(S.eps2 == L.eps2);
}

TEST_CASE("eta fits") {
  std::vector<double> r, z, e;
  for (int k = 1; k <= 12; ++k) {
    r.push_back(k);
    z.push_back(std::pow(k, -0.25));
    e.push_back(std::exp(-0.9 * k));
  }
  auto f = fit_eta(r, z);
  CHECK(f.eta == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(f.residual < 1e-12);
  CHECK(fit_eta(r, e).residual > 0.1);
  z[3] = -0.1;
  auto m = fit_eta(r, z);
  CHECK(m.masked == 1);
  CHECK(m.eta == doctest::Approx(0.25).epsilon(1e-10));
  CHECK_THROWS_AS(fit_eta({1, 2, 3}, {1, 1, 1}), Error);
}
