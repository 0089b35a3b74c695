#pragma once

#include "ppsim/lattice.hpp"

namespace ppsim::continuum {

enum class Kind { parabolic, ssd };

// Lattice correspondence: L = N, v = 2 (a = J = 1).
struct Params {
  double L = 0.0;
  double v = 2.0;
  Kind kind = Kind::parabolic;
};

Params lattice_params(int N, Kind kind);
Kind kind_from_profile(ProfileKind k);

// Right-moving quasi-particle (p = 3pi/2) starting at x0 in (-L/2, L/2).
double trajectory(const Params& p, double x0, double t);
// Long-time forms, for scaling checks only.
double trajectory_asymptotic(const Params& p, double x0, double t);

// Fraction of right-movers inside the right edge region of width dx.
double edge_weight(const Params& p, double dx, double t);

// p = 3pi/2 moves right, p = pi/2 left (mirror x -> -x).
enum class Branch { left, right };

// X = int_{xa}^{xb} sqrt(d_x w_x) dx. Closed form for the parabola (series
// near t = 0), adaptive Gauss-Kronrod for the SSD.
double subsystem_contribution_X(const Params& p, double xa, double xb, double t, Branch branch);

}  // namespace ppsim::continuum
