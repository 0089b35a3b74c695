#include "ppsim/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#ifndef PPSIM_VERSION
#define PPSIM_VERSION "unknown"
#endif

namespace ppsim::io {

namespace {

static_assert(std::endian::native == std::endian::little, "PPCM I/O assumes a little-endian host");

Error bad_input(const std::string& what) { return Error(ErrorKind::config, what); }

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <class T>
T get(std::istream& is) {
  T v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw bad_input("truncated PPCM stream");
  return v;
}

}  // namespace

nlohmann::json to_json(const CorrelationMatrix& C) {
  nlohmann::json data = nlohmann::json::array();
  for (int r = 0; r < C.n(); ++r)
    for (int c = 0; c < C.n(); ++c) data.push_back({C.C(r, c).real(), C.C(r, c).imag()});
  return {{"n", C.n()}, {"precision", C.precision}, {"data", std::move(data)}};
}

CorrelationMatrix correlation_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& data = j.at("data");
    if (n < 0 || data.size() != static_cast<std::size_t>(n) * n)
      throw bad_input("correlation matrix JSON: data size does not match n");
    CorrelationMatrix C{CMat(n, n), j.value("precision", 16)};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const auto& e = data[r * n + c];
        C.C(r, c) = cd(e.at(0).get<double>(), e.at(1).get<double>());
      }
    return C;
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("correlation matrix JSON: ") + e.what());
  }
}

void write_ppcm(std::ostream& os, const CorrelationMatrix& C) {
  os.write("PPCM", 4);
  put<std::uint8_t>(os, ppcm_version);
  put<std::uint64_t>(os, static_cast<std::uint64_t>(C.n()));
  for (int r = 0; r < C.n(); ++r)
    for (int c = 0; c < C.n(); ++c) {
      put<double>(os, C.C(r, c).real());
      put<double>(os, C.C(r, c).imag());
    }
}

CorrelationMatrix read_ppcm(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), 4) || std::memcmp(magic.data(), "PPCM", 4) != 0) throw bad_input("not a PPCM stream");
  const auto version = get<std::uint8_t>(is);
  if (version != ppcm_version) throw bad_input("unsupported PPCM version " + std::to_string(version));
  const auto n64 = get<std::uint64_t>(is);
  if (n64 > 1u << 15) throw bad_input("PPCM dimension too large");
  const int n = static_cast<int>(n64);
  CorrelationMatrix C{CMat(n, n)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double re = get<double>(is);
      C.C(r, c) = cd(re, get<double>(is));
    }
  return C;
}

void write_ppcm(const std::filesystem::path& p, const CorrelationMatrix& C) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw bad_input("cannot write " + p.string());
  write_ppcm(os, C);
}

CorrelationMatrix read_ppcm(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  if (!is) throw bad_input("cannot read " + p.string());
  return read_ppcm(is);
}

std::string format_double(double v) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

Csv& Csv::add(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  return add(std::move(cells));
}

Csv& Csv::add(std::vector<std::string> cells) {
  if (cells.size() != header.size()) throw Error(ErrorKind::dimension, "CSV row width does not match header");
  rows.push_back(std::move(cells));
  return *this;
}

int Csv::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

void Csv::write(const std::filesystem::path& p) const {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw bad_input("cannot write " + p.string());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

Csv read_csv(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) throw bad_input("cannot read " + p.string());
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      out.push_back(cell);
    }
    return out;
  };
  Csv t;
  std::string line;
  if (!std::getline(is, line)) throw bad_input(p.string() + ": empty CSV");
  t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (cells.size() != t.header.size()) throw bad_input(p.string() + ": ragged CSV row");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw bad_input("cannot write " + p.string());
  os << j.dump(2) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) throw bad_input("cannot read " + p.string());
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(p.string() + ": " + e.what());
  }
}

std::string code_version() { return PPSIM_VERSION; }

}  // namespace ppsim::io
