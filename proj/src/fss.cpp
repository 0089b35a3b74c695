#include "ppsim/fss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace ppsim::fss {

struct MonotoneCubic::Impl {
  boost::math::interpolators::pchip<std::vector<double>> p;
};

double MonotoneCubic::operator()(double x) const { return p_->p(x); }
double MonotoneCubic::prime(double x) const { return p_->p.prime(x); }

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) {
  if (x.size() < 4 || x.size() != y.size()) throw Error(ErrorKind::domain, "interpolation needs at least 4 samples");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw Error(ErrorKind::domain, "interpolation grid must be strictly increasing");
  x0_ = x.front();
  x1_ = x.back();
  p_ = std::make_shared<const Impl>(Impl{{std::move(x), std::move(y)}});
}

std::vector<RescaledCurve> rescale(const std::vector<Curve>& curves, double Jc, double beta, double nu) {
  std::vector<RescaledCurve> out;
  for (const auto& c : curves) {
    if (!(c.n > 0)) throw Error(ErrorKind::domain, "curve size must be positive");
    const double a = std::pow(c.n, 1.0 / nu), b = std::pow(c.n, beta / nu);
    std::vector<double> u(c.J.size()), y(c.M.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = a * (c.J[i] - Jc);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = b * c.M[i];
    out.push_back({c.n, u, y, MonotoneCubic(u, y)});
  }
  return out;
}

namespace {

// Cumulative chordal arc length on an oversampled grid.
struct ArcLength {
  std::vector<double> u, y, s;
  double length = 0.0;

  ArcLength(const RescaledCurve& c, int oversample) {
    const int m = static_cast<int>(c.u.size() - 1) * oversample + 1;
    u.resize(m);
    s.resize(m);
    for (int i = 0; i < m; ++i) {
      const int seg = std::min(i / oversample, static_cast<int>(c.u.size()) - 2);
      const double frac = double(i - seg * oversample) / oversample;
      u[i] = c.u[seg] + frac * (c.u[seg + 1] - c.u[seg]);
    }
    u.back() = c.u.back();
    y.resize(m);
    for (int i = 0; i < m; ++i) y[i] = c.f(u[i]);
    s[0] = 0.0;
    for (int i = 1; i < m; ++i) s[i] = s[i - 1] + std::sqrt((u[i] - u[i - 1]) * (u[i] - u[i - 1]) + (y[i] - y[i - 1]) * (y[i] - y[i - 1]));
    length = s.back();
    for (auto& v : s) v /= length;
  }

  double s_of(double x) const { return lerp(u, s, x); }
  double u_of(double t) const { return lerp(s, u, t); }

  static double lerp(const std::vector<double>& a, const std::vector<double>& b, double x) {
    auto it = std::upper_bound(a.begin(), a.end(), x);
    if (it == a.begin()) return b.front();
    if (it == a.end()) return b.back();
    const std::size_t k = it - a.begin();
    const double w = (x - a[k - 1]) / (a[k] - a[k - 1]);
    return b[k - 1] + w * (b[k] - b[k - 1]);
  }
};

struct Point {
  double x, y;
};

double dist(double dx, double dy) { return std::sqrt(dx * dx + dy * dy); }

// Crossing of the line through P with direction normal to T with curve c,
// nearest to P within radius R.
bool intersect(const RescaledCurve& c, const ArcLength& grid, Point P, Point T, double R, Point& hit) {
  auto g = [&](double u) { return (u - P.x) * T.x + (c.f(u) - P.y) * T.y; };
  auto along = [&](double u) { return std::abs(-(u - P.x) * T.y + (c.f(u) - P.y) * T.x); };
  double best = std::numeric_limits<double>::infinity();
  const auto& us = grid.u;
  const auto& ys = grid.y;
  auto gi = [&](std::size_t i) { return (us[i] - P.x) * T.x + (ys[i] - P.y) * T.y; };
  // Only |u - P.x| <= R can hold a crossing within R.
  std::size_t lo = std::lower_bound(us.begin(), us.end(), P.x - R) - us.begin();
  std::size_t hi = std::upper_bound(us.begin(), us.end(), P.x + R) - us.begin();
  lo = lo > 0 ? lo - 1 : 0;
  hi = std::min(hi + 1, us.size());
  if (hi <= lo + 1) return false;
  double g0 = gi(lo);
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const double g1 = gi(i);
    const bool sign_change = (g0 <= 0 && g1 >= 0) || (g0 >= 0 && g1 <= 0);
    // A crossing within R of P needs the segment to come within R of P.
    if (sign_change && dist(us[i] - P.x, ys[i] - P.y) <= R + dist(us[i] - us[i - 1], ys[i] - ys[i - 1])) {
      double r = us[i - 1];
      if (g0 == 0.0) r = us[i - 1];
      else if (g1 == 0.0) r = us[i];
      else {
        std::uintmax_t iters = 60;
        auto br = boost::math::tools::toms748_solve(g, us[i - 1], us[i], g0, g1,
                                                    boost::math::tools::eps_tolerance<double>(50), iters);
        r = 0.5 * (br.first + br.second);
      }
      const double d = along(r);
      if (d <= R && d < best) best = d, hit = {r, c.f(r)};
    }
    g0 = g1;
  }
  return std::isfinite(best);
}

}  // namespace

CostResult collapse_cost(const std::vector<RescaledCurve>& curves, double u_c, const CostOptions& opt) {
  if (curves.size() < 2) throw Error(ErrorKind::domain, "collapse needs at least two curves");
  std::size_t ref = 0;
  for (std::size_t k = 1; k < curves.size(); ++k)
    if (curves[k].n < curves[ref].n) ref = k;
  const auto& c0 = curves[ref];
  if (u_c < c0.u.front() || u_c > c0.u.back()) throw Error(ErrorKind::geometry, "critical point outside the smallest curve");

  std::vector<ArcLength> arcs;
  for (const auto& c : curves) arcs.emplace_back(c, opt.oversample);
  const ArcLength& arc0 = arcs[ref];
  const double s_c = arc0.s_of(u_c);
  const double R = 2 * opt.half_window * arc0.length;

  CostResult r;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < opt.probes; ++i) {
    const double s = s_c - opt.half_window + 2 * opt.half_window * i / (opt.probes - 1);
    std::vector<Point> pts;
    if (s < 0.0 || s > 1.0) {
      r.pairs += static_cast<int>(curves.size()) - 1;
      r.excluded += static_cast<int>(curves.size()) - 1;
      continue;
    }
    const double u = arc0.u_of(s);
    const Point P{u, c0.f(u)};
    const double d = c0.f.prime(u), nrm = std::hypot(1.0, d);
    const Point T{1.0 / nrm, d / nrm};
    pts.push_back(P);
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (k == ref) continue;
      ++r.pairs;
      Point hit;
      if (intersect(curves[k], arcs[k], P, T, R, hit)) pts.push_back(hit);
      else ++r.excluded;
    }
    double mx = 0, my = 0;
    for (const auto& p : pts) mx += p.x, my += p.y;
    mx /= pts.size(), my /= pts.size();
    double vx = 0, vy = 0;
    for (const auto& p : pts) vx += (p.x - mx) * (p.x - mx), vy += (p.y - my) * (p.y - my);
    num += (vx + vy) / pts.size();
    den += P.x * P.x + P.y * P.y;
  }
  if (r.pairs == 0 || r.excluded > opt.max_excluded * r.pairs)
    throw Error(ErrorKind::geometry, "normal lines miss too many curves (" + std::to_string(r.excluded) + " of " +
                                         std::to_string(r.pairs) + ")");
  if (!(den > 0)) throw Error(ErrorKind::geometry, "probe points collapse onto the origin");
  r.eps2 = num / den;
  return r;
}

double Grid::jc(int i) const { return jc_points == 1 ? jc_min : jc_min + (jc_max - jc_min) * i / (jc_points - 1); }
double Grid::beta(int k) const {
  return beta_points == 1 ? beta_min : beta_min + (beta_max - beta_min) * k / (beta_points - 1);
}

Likelihood likelihood(const Grid& g, std::vector<double> eps2) {
  const std::size_t n = static_cast<std::size_t>(g.jc_points) * g.beta_points;
  if (eps2.size() != n) throw Error(ErrorKind::dimension, "cost grid has the wrong size");
  Likelihood L;
  L.grid = g;
  L.eps2 = std::move(eps2);
  double mn = std::numeric_limits<double>::infinity(), mx = -mn;
  for (double e : L.eps2) {
    if (!std::isfinite(e)) {
      ++L.failed_points;
      continue;
    }
    mn = std::min(mn, e), mx = std::max(mx, e);
  }
  if (!std::isfinite(mn)) throw Error(ErrorKind::geometry, "no grid point produced a collapse cost");
  L.eps2_min = mn;
  L.flat = (mn == mx);
  L.W.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = L.eps2[i];
    if (!std::isfinite(e)) continue;
    if (mn > 0) L.W[i] = std::exp(-e / (2 * mn));
    else L.W[i] = (e == 0.0) ? 1.0 : 0.0;
  }
  double sum = 0;
  for (double w : L.W) sum += w;
  for (double& w : L.W) w /= sum;
  for (int i = 0; i < g.jc_points; ++i)
    for (int k = 0; k < g.beta_points; ++k) {
      const double w = L.W[i * g.beta_points + k];
      L.jc_mean += w * g.jc(i);
      L.beta_mean += w * g.beta(k);
    }
  for (int i = 0; i < g.jc_points; ++i)
    for (int k = 0; k < g.beta_points; ++k) {
      const double w = L.W[i * g.beta_points + k];
      L.jc_err += w * (g.jc(i) - L.jc_mean) * (g.jc(i) - L.jc_mean);
      L.beta_err += w * (g.beta(k) - L.beta_mean) * (g.beta(k) - L.beta_mean);
    }
  L.jc_err = std::sqrt(L.jc_err);
  L.beta_err = std::sqrt(L.beta_err);
  return L;
}

Likelihood fit_scaling(const std::vector<Curve>& curves, const Grid& g, double nu, const CostOptions& opt, Exec exec) {
  if (g.jc_points < 1 || g.beta_points < 1) throw Error(ErrorKind::domain, "empty parameter grid");
  const int n = g.jc_points * g.beta_points;
  std::vector<double> eps2(n);
  auto body = [&](int idx) {
    const int i = idx / g.beta_points, k = idx % g.beta_points;
    try {
      eps2[idx] = collapse_cost(rescale(curves, g.jc(i), g.beta(k), nu), 0.0, opt).eps2;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::geometry) throw;
      eps2[idx] = std::numeric_limits<double>::infinity();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < n; ++idx) body(idx);
  } else {
    for (int idx = 0; idx < n; ++idx) body(idx);
  }
  return likelihood(g, std::move(eps2));
}

std::vector<Curve> synthetic_family(const std::vector<double>& ns, double J_min, double J_max, int samples, double Jc,
                                    double beta, double noise, std::uint64_t seed) {
  if (samples < 4 || !(J_max > J_min)) throw Error(ErrorKind::domain, "need at least 4 samples on a non-empty interval");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Curve> out;
  for (double n : ns) {
    Curve c;
    c.n = n;
    for (int i = 0; i < samples; ++i) {
      const double J = J_min + (J_max - J_min) * i / (samples - 1);
      const double G = 0.2 + 1.0 / (1.0 + std::exp(-n * (J - Jc)));
      c.J.push_back(J);
      c.M.push_back(std::pow(n, -beta) * G * (1.0 + noise * gauss(rng)));
    }
    out.push_back(std::move(c));
  }
  return out;
}

EtaFit fit_eta(const std::vector<double>& distance, const std::vector<double>& zz) {
  if (distance.size() != zz.size()) throw Error(ErrorKind::dimension, "distance and correlator lengths differ");
  EtaFit f;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < zz.size(); ++i) {
    if (!(zz[i] > 0) || !(distance[i] > 0)) {
      ++f.masked;
      continue;
    }
    x.push_back(std::log(distance[i]));
    y.push_back(std::log(zz[i]));
  }
  f.used = static_cast<int>(x.size());
  if (f.used < 4) throw Error(ErrorKind::domain, "fit_eta needs at least 4 positive points");
  double mx = 0, my = 0;
  for (int i = 0; i < f.used; ++i) mx += x[i], my += y[i];
  mx /= f.used, my /= f.used;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < f.used; ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  const double slope = sxy / sxx;
  f.eta = -slope;
  double ss = 0;
  for (int i = 0; i < f.used; ++i) {
    const double r = y[i] - (my + slope * (x[i] - mx));
    ss += r * r;
  }
  f.residual = std::sqrt(ss / f.used);
  return f;
}

}  // namespace ppsim::fss
