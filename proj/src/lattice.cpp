#include "ppsim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ppsim {

namespace {

void require_size(int N) {
  if (N < 2) throw Error(ErrorKind::invalid_lattice, "lattice size must be >= 2, got " + std::to_string(N));
}

DeformationProfile from_bonds(ProfileKind kind, int N, int num_sites, std::vector<Bond> bonds,
                              double (*f)(const Bond&, int)) {
  DeformationProfile p;
  p.kind = kind;
  p.N = N;
  p.num_sites = num_sites;
  p.weights.reserve(bonds.size());
  for (const Bond& b : bonds) p.weights.push_back(f(b, N));
  p.bonds = std::move(bonds);
  return p;
}

}  // namespace

Chain1D::Chain1D(int n) : N(n) { require_size(n); }

// Bond j (1-based) joins sites j and j+1 and carries coordinate u = j.
std::vector<Bond> Chain1D::bonds() const {
  std::vector<Bond> out;
  out.reserve(N - 1);
  for (int j = 1; j < N; ++j) out.push_back({j - 1, j, double(j), 0.0});
  return out;
}

SquareLattice2D::SquareLattice2D(int n) : N(n) { require_size(n); }

// Horizontal bond (x,y)-(x+1,y) sits at (x, y-1/2); vertical bond
// (x,y)-(x,y+1) at (x-1/2, y). Equivalent to placing sites at half-integer
// coordinates, which keeps the profile symmetric under the square's point group.
std::vector<Bond> SquareLattice2D::bonds() const {
  std::vector<Bond> out;
  out.reserve(2 * N * (N - 1));
  for (int y = 1; y <= N; ++y)
    for (int x = 1; x < N; ++x) out.push_back({site(x, y), site(x + 1, y), double(x), y - 0.5});
  for (int y = 1; y < N; ++y)
    for (int x = 1; x <= N; ++x) out.push_back({site(x, y), site(x, y + 1), x - 0.5, double(y)});
  return out;
}

const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::flat: return "flat";
    case ProfileKind::parabolic: return "parabolic";
    case ProfileKind::sine_square: return "sine-square";
    case ProfileKind::product_parabola_2d: return "product-parabola-2d";
    case ProfileKind::radial_parabola_2d: return "radial-parabola-2d";
    case ProfileKind::flat_2d: return "flat-2d";
  }
  return "unknown";
}

ProfileKind profile_kind_from_string(const std::string& s) {
  if (s == "flat") return ProfileKind::flat;
  if (s == "parabolic") return ProfileKind::parabolic;
  if (s == "sine-square" || s == "ssd") return ProfileKind::sine_square;
  if (s == "product-parabola-2d" || s == "product") return ProfileKind::product_parabola_2d;
  if (s == "radial-parabola-2d" || s == "radial") return ProfileKind::radial_parabola_2d;
  if (s == "flat-2d") return ProfileKind::flat_2d;
  throw Error(ErrorKind::config, "unknown profile kind '" + s + "'");
}

bool DeformationProfile::two_dimensional() const {
  return kind == ProfileKind::product_parabola_2d || kind == ProfileKind::radial_parabola_2d ||
         kind == ProfileKind::flat_2d;
}

double parabola(double j, int N) {
  const double h = N / 2.0;
  return (N - j) * j / (h * h);
}

DeformationProfile flat_weights(int N) {
  Chain1D c(N);
  return from_bonds(ProfileKind::flat, N, N, c.bonds(), [](const Bond&, int) { return 1.0; });
}

DeformationProfile parabolic_weights(int N) {
  Chain1D c(N);
  // Integer arithmetic in the numerator keeps j and N-j bit-identical.
  return from_bonds(ProfileKind::parabolic, N, N, c.bonds(), [](const Bond& b, int n) {
    const long j = std::lround(b.u);
    return double((n - j) * j) / (n * n / 4.0);
  });
}

DeformationProfile sine_square_weights(int N) {
  Chain1D c(N);
  return from_bonds(ProfileKind::sine_square, N, N, c.bonds(), [](const Bond& b, int n) {
    const double x = b.u - n / 2.0;
    const double c = std::cos(std::numbers::pi * x / n);
    return c * c;
  });
}

DeformationProfile flat_2d(int N) {
  SquareLattice2D lat(N);
  return from_bonds(ProfileKind::flat_2d, N, lat.num_sites(), lat.bonds(), [](const Bond&, int) { return 1.0; });
}

DeformationProfile product_parabola_2d(int N) {
  SquareLattice2D lat(N);
  return from_bonds(ProfileKind::product_parabola_2d, N, lat.num_sites(), lat.bonds(),
                    [](const Bond& b, int n) { return parabola(b.u, n) * parabola(b.v, n); });
}

// (R - r)^2 / R^2 with r measured from the lattice centre, set to zero for
// r >= R so the weight does not grow again towards the corners.
DeformationProfile radial_parabola_2d(int N) {
  SquareLattice2D lat(N);
  return from_bonds(ProfileKind::radial_parabola_2d, N, lat.num_sites(), lat.bonds(), [](const Bond& b, int n) {
    const double R = n / 2.0;
    const double r = std::hypot(b.u - R, b.v - R);
    const double d = std::max(0.0, R - r);
    return d * d / (R * R);
  });
}

DeformationProfile make_profile(ProfileKind kind, int N) {
  switch (kind) {
    case ProfileKind::flat: return flat_weights(N);
    case ProfileKind::parabolic: return parabolic_weights(N);
    case ProfileKind::sine_square: return sine_square_weights(N);
    case ProfileKind::product_parabola_2d: return product_parabola_2d(N);
    case ProfileKind::radial_parabola_2d: return radial_parabola_2d(N);
    case ProfileKind::flat_2d: return flat_2d(N);
  }
  throw Error(ErrorKind::config, "unknown profile kind");
}

std::vector<int> Subsystem::complement(int num_sites) const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int s = 0; s < num_sites; ++s) {
    if (k < sites.size() && sites[k] == s) {
      ++k;
      continue;
    }
    out.push_back(s);
  }
  return out;
}

Subsystem interval(int first, int count) {
  if (first < 0 || count < 0) throw Error(ErrorKind::domain, "interval out of range");
  Subsystem A;
  for (int i = 0; i < count; ++i) A.sites.push_back(first + i);
  return A;
}

// For N - n odd the extra site goes to the right.
Subsystem centered_interval(int N, int n) {
  if (n < 0 || n > N) throw Error(ErrorKind::domain, "subsystem size " + std::to_string(n) + " not in [0, N]");
  return interval((N - n) / 2, n);
}

Subsystem left_edge(int N, int m) {
  if (m < 0 || m > N) throw Error(ErrorKind::domain, "edge size out of range");
  return interval(0, m);
}

Subsystem right_edge(int N, int m) {
  if (m < 0 || m > N) throw Error(ErrorKind::domain, "edge size out of range");
  return interval(N - m, m);
}

Subsystem centered_square(const SquareLattice2D& lat, int n) {
  if (n < 0 || n > lat.N) throw Error(ErrorKind::domain, "square size out of range");
  const int x0 = (lat.N - n) / 2 + 1;
  Subsystem A;
  for (int y = x0; y < x0 + n; ++y)
    for (int x = x0; x < x0 + n; ++x) A.sites.push_back(lat.site(x, y));
  std::sort(A.sites.begin(), A.sites.end());
  return A;
}

Subsystem corner_rect(const SquareLattice2D& lat, int w, int h) {
  if (w < 0 || h < 0 || w > lat.N || h > lat.N) throw Error(ErrorKind::domain, "corner size out of range");
  Subsystem A;
  for (int y = 1; y <= h; ++y)
    for (int x = 1; x <= w; ++x) A.sites.push_back(lat.site(x, y));
  std::sort(A.sites.begin(), A.sites.end());
  return A;
}

bool contiguous(const Subsystem& A) {
  for (std::size_t i = 1; i < A.sites.size(); ++i)
    if (A.sites[i] != A.sites[i - 1] + 1) return false;
  return true;
}

nlohmann::json to_json(const DeformationProfile& p) {
  nlohmann::json j;
  j["kind"] = to_string(p.kind);
  j["N"] = p.N;
  if (!p.two_dimensional()) {
    j["weights"] = p.weights;
    return j;
  }
  nlohmann::json bonds = nlohmann::json::array();
  for (std::size_t i = 0; i < p.bonds.size(); ++i)
    bonds.push_back({{"a", p.bonds[i].a}, {"b", p.bonds[i].b}, {"u", p.bonds[i].u}, {"v", p.bonds[i].v},
                     {"g", p.weights[i]}});
  j["bonds"] = bonds;
  return j;
}

}  // namespace ppsim
