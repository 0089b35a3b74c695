#include <doctest.h>

#include <cmath>

#include "ppsim/eh_learn.hpp"

using namespace ppsim;

namespace {

QuadraticHamiltonian chain(const std::vector<double>& g) {
  const int n = static_cast<int>(g.size()) + 1;
  QuadraticHamiltonian H{Mat::Zero(n, n)};
  for (int j = 0; j + 1 < n; ++j) H.h(j, j + 1) = H.h(j + 1, j) = g[j];
  return H;
}

}  // namespace

TEST_CASE("segment of the infinite chain has a parabolic commuting hopping") {
  for (int n : {6, 12, 20}) {
    auto eh = learn_eh(infinite_chain_segment(n));
    CHECK(eh.residual < 1e-12);
    CHECK(eh.distance < 1e-10);
    CHECK(eh.g[(n - 2) / 2] > 0);
    double mx = 0;
    for (double v : eh.g) mx = std::max(mx, v);
    CHECK(mx == doctest::Approx(1.0));
  }
}

TEST_CASE("recovers the couplings of a thermal state") {
  std::vector<double> g0{0.3, 0.9, 1.4, 0.7, 1.1, 0.2, 0.5};
  auto C = thermal_state(chain(g0), 0.8);
  auto eh = learn_eh(C);
  CHECK(eh.residual < 1e-12);
  for (std::size_t j = 0; j < g0.size(); ++j) CHECK(eh.g[j] == doctest::Approx(g0[j] / 1.4).epsilon(1e-9));

  // the recovered sign is fixed by the central bond
  std::vector<double> g1(g0);
  for (auto& v : g1) v = -v;
  auto eh1 = learn_eh(thermal_state(chain(g1), 0.8));
  for (std::size_t j = 0; j < g0.size(); ++j) CHECK(eh1.g[j] == doctest::Approx(eh.g[j]).epsilon(1e-9));
}

TEST_CASE("parabola distance") {
  // constant couplings on 5 sites: p = 4, 6, 6, 4
  CHECK(parabola_distance({1, 1, 1, 1}) == doctest::Approx(std::sqrt(1.0 - 400.0 / 416.0)).epsilon(1e-14));
  CHECK(parabola_distance({4, 6, 6, 4}) < 1e-15);
  CHECK(parabola_distance({-2, -3, -3, -2}) < 1e-15);
  CHECK_THROWS_AS(parabola_distance({1, 1}), Error);
  CHECK_THROWS_AS(parabola_distance({0, 0, 0}), Error);
}

TEST_CASE("degenerate and undersized inputs") {
  CorrelationMatrix C{CMat::Identity(5, 5) * 0.5};
  try {
    learn_eh(C);
    FAIL("expected ambiguity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ambiguous);
  }
  CHECK_THROWS_AS(learn_eh(infinite_chain_segment(2)), Error);
}

TEST_CASE("stationary state has no distance minimum") {
  auto H = hopping_hamiltonian(flat_weights(16));
  auto C0 = ground_state(H);
  std::vector<double> t;
  for (int k = 0; k <= 40; ++k) t.push_back(0.25 * k);
  auto s = eh_series(C0, H, centered_interval(16, 8), t);
  try {
    detect_tpp_by_eh(s);
    FAIL("expected no minimum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_minimum);
  }
}

TEST_CASE("distance series: serial and parallel agree, minimum is interior after a quench") {
  const int N = 24;
  auto C0 = ground_state(hopping_hamiltonian(flat_weights(N)));
  auto H = hopping_hamiltonian(parabolic_weights(N));
  std::vector<double> t;
  for (int k = 0; k <= 80; ++k) t.push_back(0.5 * k);
  auto A = centered_interval(N, 12);
  auto a = eh_series(C0, H, A, t, Exec::serial);
  auto b = eh_series(C0, H, A, t, Exec::parallel);
  CHECK(a.distance == b.distance);
  CHECK(a.couplings == b.couplings);
  auto m = detect_tpp_by_eh(a);
  CHECK(m.t > t.front());
  CHECK(m.t < t.back());
  CHECK(m.value < a.distance.front());
}
