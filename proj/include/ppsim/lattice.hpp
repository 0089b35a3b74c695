#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ppsim/core.hpp"

namespace ppsim {

// A bond between two sites (0-based internal indices). (u, v) is the
// coordinate at which the deformation is evaluated; v is unused in 1D.
struct Bond {
  int a = 0;
  int b = 0;
  double u = 0.0;
  double v = 0.0;
};

struct Chain1D {
  int N = 0;
  explicit Chain1D(int n);
  std::vector<Bond> bonds() const;
};

// Sites (x, y) with 1 <= x, y <= N are stored at index (x-1) + N*(y-1).
struct SquareLattice2D {
  int N = 0;
  explicit SquareLattice2D(int n);
  int site(int x, int y) const { return (x - 1) + N * (y - 1); }
  int num_sites() const { return N * N; }
  std::vector<Bond> bonds() const;
};

enum class ProfileKind { flat, parabolic, sine_square, product_parabola_2d, radial_parabola_2d, flat_2d };

const char* to_string(ProfileKind k);
ProfileKind profile_kind_from_string(const std::string& s);

struct DeformationProfile {
  ProfileKind kind = ProfileKind::flat;
  int N = 0;
  int num_sites = 0;
  std::vector<Bond> bonds;
  std::vector<double> weights;
  bool two_dimensional() const;
};

DeformationProfile flat_weights(int N);
DeformationProfile parabolic_weights(int N);
DeformationProfile sine_square_weights(int N);
DeformationProfile flat_2d(int N);
DeformationProfile product_parabola_2d(int N);
DeformationProfile radial_parabola_2d(int N);
DeformationProfile make_profile(ProfileKind kind, int N);

// Parabola (N-j)j/(N/2)^2 at real coordinate j.
double parabola(double j, int N);

struct Subsystem {
  std::vector<int> sites;  // sorted, 0-based
  int size() const { return static_cast<int>(sites.size()); }
  std::vector<int> complement(int num_sites) const;
};

Subsystem interval(int first, int count);  // 0-based first site
Subsystem centered_interval(int N, int n);
Subsystem left_edge(int N, int m);
Subsystem right_edge(int N, int m);
Subsystem centered_square(const SquareLattice2D& lat, int n);
Subsystem corner_rect(const SquareLattice2D& lat, int w, int h);

bool contiguous(const Subsystem& A);

nlohmann::json to_json(const DeformationProfile& p);

}  // namespace ppsim
