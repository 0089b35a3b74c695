#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "ppsim/gaussian.hpp"

namespace ppsim::io {

// {"n": n, "precision": p, "data": [[re, im], ...]} in row-major order.
nlohmann::json to_json(const CorrelationMatrix& C);
CorrelationMatrix correlation_from_json(const nlohmann::json& j);

// "PPCM", version byte, n as little-endian uint64, then n*n (re, im) float64
// pairs in row-major order.
inline constexpr std::uint8_t ppcm_version = 1;
void write_ppcm(std::ostream& os, const CorrelationMatrix& C);
CorrelationMatrix read_ppcm(std::istream& is);
void write_ppcm(const std::filesystem::path& p, const CorrelationMatrix& C);
CorrelationMatrix read_ppcm(const std::filesystem::path& p);

// Shortest representation that round-trips.
std::string format_double(double v);

struct Csv {
  Csv() = default;
  explicit Csv(std::vector<std::string> h) : header(std::move(h)) {}
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  Csv& add(const std::vector<double>& values);
  Csv& add(std::vector<std::string> cells);
  int column(const std::string& name) const;  // -1 if absent
  void write(const std::filesystem::path& p) const;
};
Csv read_csv(const std::filesystem::path& p);

void write_json(const std::filesystem::path& p, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& p);

std::string code_version();

}  // namespace ppsim::io
