#pragma once

#include <vector>

#include "ppsim/gaussian.hpp"
#include "ppsim/protocol.hpp"

namespace ppsim {

struct LearnedEH {
  std::vector<double> g;  // one coupling per bond of A, max = 1
  double residual = 0.0;  // smallest singular value of g -> [T(g), C_A]
  double gap = 0.0;       // to the next singular value
  double distance = 0.0;  // parabola_distance(g)
};

// Nearest-neighbour hopping T(g) closest to commuting with C_A: the right
// singular vector of the smallest singular value, with the central
// coupling made positive.
LearnedEH learn_eh(const CorrelationMatrix& CA);

// ||g - a p|| / ||g|| with p_j = j (n - j) on the n-1 bonds and a by least squares.
double parabola_distance(const std::vector<double>& g);

struct EhSeries {
  std::vector<double> times;
  std::vector<double> distance;
  std::vector<double> residual;
  std::vector<std::vector<double>> couplings;
};

EhSeries eh_series(const CorrelationMatrix& C0, const QuadraticHamiltonian& H, const Subsystem& A,
                   const std::vector<double>& times, Exec exec = Exec::parallel);

// Interior minimum of the parabola distance, quadratic-refined.
Extremum detect_tpp_by_eh(const EhSeries& s);

}  // namespace ppsim
