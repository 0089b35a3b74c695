#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <sstream>

#include "ppsim/io.hpp"

using namespace ppsim;

namespace {

CorrelationMatrix sample() {
  CorrelationMatrix C{CMat(3, 3), 40};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) C.C(r, c) = cd(0.1 * r + 1.0 / (3 + c), -0.7 * c + 1e-17 * r);
  return C;
}

}  // namespace

TEST_CASE("json round trip is exact and row-major") {
  auto C = sample();
  auto j = io::to_json(C);
  CHECK(j["n"] == 3);
  CHECK(j["data"][1][0].get<double>() == C.C(0, 1).real());
  CHECK(j["data"][3][1].get<double>() == C.C(1, 0).imag());
  auto back = io::correlation_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.C == C.C);
  CHECK(back.precision == 40);
  j["data"].erase(0);
  CHECK_THROWS_AS(io::correlation_from_json(j), Error);
}

TEST_CASE("PPCM layout") {
  auto C = sample();
  std::stringstream ss;
  io::write_ppcm(ss, C);
  const std::string bytes = ss.str();
  REQUIRE(bytes.size() == 4 + 1 + 8 + 16 * 9);
  CHECK(bytes.substr(0, 4) == "PPCM");
  CHECK(static_cast<unsigned char>(bytes[4]) == io::ppcm_version);
  std::uint64_t n;
  std::memcpy(&n, bytes.data() + 5, 8);
  CHECK(n == 3);
  double re, im;
  std::memcpy(&re, bytes.data() + 13 + 16 * 1, 8);
  std::memcpy(&im, bytes.data() + 13 + 16 * 1 + 8, 8);
  CHECK(re == C.C(0, 1).real());
  CHECK(im == C.C(0, 1).imag());
  auto back = io::read_ppcm(ss);
  CHECK(back.C == C.C);

  std::stringstream bad("PPCX\x01");
  CHECK_THROWS_AS(io::read_ppcm(bad), Error);
  std::stringstream trunc(bytes.substr(0, 30));
  CHECK_THROWS_AS(io::read_ppcm(trunc), Error);
}

TEST_CASE("doubles print in shortest round-trip form") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(io::format_double(v)) == v);
  CHECK(io::format_double(0.25) == "0.25");
}

TEST_CASE("csv round trip") {
  auto dir = std::filesystem::temp_directory_path() / "ppsim_test_io";
  std::filesystem::create_directories(dir);
  io::Csv t{{"t", "value"}};
  t.add(std::vector<double>{0.0, 1.0 / 7.0}).add(std::vector<double>{0.05, -3e-9});
  CHECK_THROWS_AS(t.add(std::vector<double>{1.0}), Error);
  t.write(dir / "a.csv");
  auto r = io::read_csv(dir / "a.csv");
  CHECK(r.header == t.header);
  CHECK(r.rows == t.rows);
  CHECK(std::stod(r.rows[0][1]) == 1.0 / 7.0);
  CHECK(r.column("value") == 1);
  CHECK(r.column("missing") == -1);
  std::filesystem::remove_all(dir);
}
