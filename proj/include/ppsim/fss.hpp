#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ppsim/core.hpp"

namespace ppsim::fss {

// M_n sampled on a sorted J grid.
struct Curve {
  double n = 0.0;
  std::vector<double> J;
  std::vector<double> M;
};

// Shape-preserving cubic through (x, y), x strictly increasing, >= 4 points.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;
  double prime(double x) const;
  double xmin() const { return x0_; }
  double xmax() const { return x1_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> p_;
  double x0_ = 0.0, x1_ = 0.0;
};

// Curve in the collapse plane: u = n^{1/nu} (J - Jc), y = M n^{beta/nu}.
struct RescaledCurve {
  double n = 0.0;
  std::vector<double> u;
  std::vector<double> y;
  MonotoneCubic f;
};

std::vector<RescaledCurve> rescale(const std::vector<Curve>& curves, double Jc, double beta, double nu = 1.0);

struct CostOptions {
  double half_window = 0.1;  // in normalized arc length
  int probes = 101;
  int oversample = 10;
  double max_excluded = 0.2;
};

struct CostResult {
  double eps2 = 0.0;
  int pairs = 0;
  int excluded = 0;
};

// Collapse cost around the point u = u_c of the smallest-n curve. Probe
// points are spread in normalized arc length; each normal line is
// intersected with the other curves.
CostResult collapse_cost(const std::vector<RescaledCurve>& curves, double u_c = 0.0, const CostOptions& opt = {});

struct Grid {
  double jc_min = 0.0, jc_max = 0.0;
  double beta_min = 0.0, beta_max = 0.0;
  int jc_points = 61, beta_points = 61;
  double jc(int i) const;
  double beta(int k) const;
};

struct Likelihood {
  Grid grid;
  std::vector<double> eps2;  // row-major, index i * beta_points + k
  std::vector<double> W;     // normalized to unit sum
  double eps2_min = 0.0;
  double jc_mean = 0.0, jc_err = 0.0;
  double beta_mean = 0.0, beta_err = 0.0;
  bool flat = false;
  int failed_points = 0;  // geometry errors, W = 0
};

// W = exp(-eps2 / (2 eps2_min)), normalized, with weighted moments.
Likelihood likelihood(const Grid& g, std::vector<double> eps2);
Likelihood fit_scaling(const std::vector<Curve>& curves, const Grid& g, double nu = 1.0, const CostOptions& opt = {},
                       Exec exec = Exec::parallel);

// M_n(J) = n^{-beta} G(n (J - Jc)) with G(x) = 0.2 + 1 / (1 + e^{-x}),
// times (1 + noise * gaussian) per sample.
std::vector<Curve> synthetic_family(const std::vector<double>& ns, double J_min, double J_max, int samples, double Jc,
                                    double beta, double noise, std::uint64_t seed);

struct EtaFit {
  double eta = 0.0;
  double residual = 0.0;  // RMS of log residuals
  int used = 0;
  int masked = 0;  // non-positive values dropped
};
// Fits |zz| ~ r^{-eta}, r = distance, by least squares in log-log.
EtaFit fit_eta(const std::vector<double>& distance, const std::vector<double>& zz);

}  // namespace ppsim::fss
