#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ppsim/observables.hpp"
#include "random_states.hpp"

using namespace ppsim;
using std::numbers::pi;

namespace {

CorrelationMatrix diag(std::initializer_list<double> l) {
  CorrelationMatrix C;
  C.C = CMat::Zero(l.size(), l.size());
  int k = 0;
  for (double x : l) C.C(k, k) = x, ++k;
  return C;
}

}  // namespace

TEST_CASE("entropies of simple spectra") {
  CHECK(renyi2(diag({0, 1, 1, 0})) == doctest::Approx(0.0));
  CHECK(von_neumann(diag({0, 1, 1, 0})) == doctest::Approx(0.0));
  CHECK(renyi2(diag({0.5})) == doctest::Approx(std::log(2.0)));
  CHECK(von_neumann(diag({0.5})) == doctest::Approx(std::log(2.0)));
  CHECK(renyi2(diag({0.5}), 40) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_neumann(diag({0.5, 1.0}), 40) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(renyi2(diag({1.1})), Error);
  CHECK_THROWS_AS(von_neumann(diag({-0.2})), Error);
}

TEST_CASE("entropy inequalities and pure-state symmetry") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto C = testing::random_gaussian(8, rng);
    auto A = reduce(C, interval(1, 4));
    CHECK(renyi2(A) <= von_neumann(A) + 1e-12);
    CHECK(renyi2(A, 30) == doctest::Approx(renyi2(A)).epsilon(1e-12));
    CHECK(von_neumann(A, 30) == doctest::Approx(von_neumann(A)).epsilon(1e-12));

    auto P = testing::random_gaussian(8, rng, true);
    auto left = reduce(P, interval(0, 3));
    auto right = reduce(P, interval(3, 5));
    CHECK(std::abs(renyi2(left) - renyi2(right)) < 1e-8);
  }
}

TEST_CASE("uhlmann fidelity basics") {
  std::mt19937_64 rng(22);
  auto C = testing::random_gaussian(6, rng);
  CHECK(uhlmann_fidelity(C, C).F == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(uhlmann_fidelity(diag({0.0}), diag({1.0})).F == 0.0);
  CHECK(uhlmann_fidelity(diag({0.0, 0.3}), diag({1.0, 0.3})).F == 0.0);
  // commuting single mode: (sqrt(ab) + sqrt((1-a)(1-b)))^2
  const double a = 0.2, b = 0.7;
  const double ref = std::pow(std::sqrt(a * b) + std::sqrt((1 - a) * (1 - b)), 2);
  CHECK(uhlmann_fidelity(diag({a}), diag({b})).F == doctest::Approx(ref).epsilon(1e-14));
  for (int trial = 0; trial < 10; ++trial) {
    auto X = testing::random_gaussian(6, rng);
    auto Y = testing::random_gaussian(6, rng);
    const double f = uhlmann_fidelity(X, Y).F;
    CHECK(std::abs(f - uhlmann_fidelity(Y, X).F) < 1e-10);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    auto hp = uhlmann_fidelity(X, Y, 40);
    CHECK(hp.digits == 40);
    CHECK(std::abs(hp.F - f) < 1e-12);
  }
  CHECK_THROWS_AS(uhlmann_fidelity(diag({0.5}), diag({0.5, 0.5})), Error);
}

TEST_CASE("fidelity escalates to extended precision near 1") {
  auto S = infinite_chain_segment(24);
  auto G = reduce(ground_state(hopping_hamiltonian(flat_weights(60))), centered_interval(60, 24));
  const double fast = infidelity_fast(G, S);
  auto hp = uhlmann_fidelity(G, S, 48);
  CHECK(std::abs(fast - (1.0 - hp.F)) < 1e-7);
  auto self = uhlmann_fidelity(S, S);
  CHECK(self.digits >= 48);
  CHECK(std::abs(1.0 - self.F) < 1e-14);
  // far from 1 the double result is returned unchanged
  CHECK(uhlmann_fidelity(G, S).digits == 16);
  CHECK(uhlmann_fidelity(G, S, 16, 1.0).digits >= 48);
}

TEST_CASE("energy profile") {
  auto S = infinite_chain_segment(12);
  auto e = energy_profile(S, flat_weights(12));
  CHECK(e.reference == doctest::Approx(-2.0 / pi));
  for (std::size_t k = 0; k < e.h.size(); ++k) {
    CHECK(std::abs(e.deviation[k]) < 1e-12);
    CHECK(std::abs(e.h[k]) == doctest::Approx(2.0 / pi));
  }
  auto G = ground_state(hopping_hamiltonian(flat_weights(36)));
  auto g = energy_profile(G, flat_weights(36));
  CHECK(std::abs(g.deviation.front()) > std::abs(g.deviation[17]));
  CHECK_THROWS_AS(energy_profile(S, flat_weights(10)), Error);
}

TEST_CASE("two-point correlators") {
  auto S = infinite_chain_segment(20);
  auto v = two_point(S, 2, {0, 1, 2, 3});
  for (int l = 0; l < 4; ++l) CHECK(v[l] == doctest::Approx(1.0 / (pi * (2 * l + 1))));
  CHECK(std::abs(S.C(2, 4)) < 1e-16);
  CHECK_THROWS_AS(two_point(S, 18, {1}), Error);
}

TEST_CASE("mode map") {
  const int N = 12;
  auto H = hopping_hamiltonian(parabolic_weights(N));
  auto chi0 = mode_map(H, 0.0);
  for (int p = 0; p < N; ++p)
    for (int j = 0; j < N; ++j)
      CHECK(std::abs(chi0(p, j) - std::polar(1.0 / N, -2 * pi * p * (j + 1) / N)) < 1e-14);
  CHECK(mode_weight_X(chi0, interval(0, N), 3) == doctest::Approx(1.0));
  CHECK(mode_weight_X(chi0, Subsystem{}, 3) == 0.0);
  for (double t : {0.7, 5.0, 30.0}) {
    auto chi = mode_map(H, t);
    for (int p = 0; p < N; ++p) CHECK(std::abs(chi.row(p).squaredNorm() - 1.0 / N) < 1e-12);
  }
  CHECK_THROWS_AS(mode_weight_X(chi0, interval(0, 2), N), Error);
}
