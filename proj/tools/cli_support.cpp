#include "cli_support.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <iostream>
#include <sstream>

namespace ppsim::cli {

namespace {

Error bad(const std::string& key, const std::string& value, const std::string& what) {
  return Error(ErrorKind::config, "--" + key + " '" + value + "': " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

template <class T>
bool parse_number(const std::string& s, T& v) {
  if (s.empty()) return false;
  const char* b = s.data() + (s[0] == '+' ? 1 : 0);
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string config_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return io::format_double(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + config_value(v[i]);
    return s;
  }
  throw Error(ErrorKind::config, "config values must be strings, numbers, booleans or arrays");
}

}  // namespace

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::config:
    case ErrorKind::invalid_lattice:
    case ErrorKind::domain:
    case ErrorKind::dimension:
    case ErrorKind::degeneracy:
    case ErrorKind::size:
    case ErrorKind::feature:
      return config_error;
    case ErrorKind::no_tpp:
    case ErrorKind::no_minimum:
      return detection_failure;
    case ErrorKind::numerical_state:
    case ErrorKind::precision:
    case ErrorKind::ambiguous:
    case ErrorKind::geometry:
      return validation_failure;
  }
  return validation_failure;
}

Command::Command(CLI::App& root, std::string name, std::string description)
    : name_(std::move(name)), app_(root.add_subcommand(name_, description)) {
  app_->add_option("--config", config_file_, "JSON config file (a previous manifest.json also works)");
  param("out", "ppsim-out/" + name_, "output directory");
  param("seed", "0", "random seed");
  param("jobs", "0", "worker threads (0: OpenMP default)");
  param("precision", "", "digit budget for fidelity and entropy kernels (default: PPSIM_PRECISION_DIGITS or 16)");
}

Command& Command::param(const std::string& key, std::string default_value, const std::string& help) {
  auto& p = params_[key];
  p.value = std::move(default_value);
  p.opt = app_->add_option("--" + key, p.value, help)->capture_default_str();
  order_.push_back(key);
  return *this;
}

void Command::merge_config() {
  if (config_file_.empty()) return;
  auto j = io::read_json(config_file_);
  if (!j.is_object()) throw Error(ErrorKind::config, config_file_ + ": expected a JSON object");
  if (j.contains("config") && j.contains("command")) {
    if (j["command"] != name_)
      throw Error(ErrorKind::config, config_file_ + ": manifest belongs to '" + j["command"].get<std::string>() + "'");
    j = j["config"];
  }
  for (auto& [k, v] : j.items()) {
    auto it = params_.find(k);
    if (it == params_.end()) throw Error(ErrorKind::config, config_file_ + ": unknown key '" + k + "'");
    if (it->second.opt->count() == 0) it->second.value = config_value(v);
  }
}

nlohmann::json Command::effective() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& k : order_) j[k] = params_.at(k).value;
  return j;
}

std::string Command::get(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) throw Error(ErrorKind::config, "internal: no parameter '" + key + "'");
  return it->second.value;
}

int Command::get_int(const std::string& key) const {
  const auto s = get(key);
  int v;
  if (!parse_number(s, v)) throw bad(key, s, "expected an integer");
  return v;
}

double Command::get_double(const std::string& key) const {
  const auto s = get(key);
  double v;
  if (!parse_number(s, v) || !std::isfinite(v)) throw bad(key, s, "expected a finite number");
  return v;
}

bool Command::get_bool(const std::string& key) const {
  const auto s = get(key);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw bad(key, s, "expected true or false");
}

std::uint64_t Command::get_seed() const {
  const auto s = get("seed");
  std::uint64_t v;
  if (!parse_number(s, v)) throw bad("seed", s, "expected a non-negative integer");
  return v;
}

std::vector<int> Command::get_ints(const std::string& key) const {
  const auto s = get(key);
  std::vector<int> out;
  if (s.find(':') != std::string::npos) {
    auto p = split(s, ':');
    int a, b, step = 1;
    if (p.size() < 2 || p.size() > 3 || !parse_number(p[0], a) || !parse_number(p[1], b) ||
        (p.size() == 3 && !parse_number(p[2], step)) || step <= 0 || b < a)
      throw bad(key, s, "expected first:last[:step]");
    for (int v = a; v <= b; v += step) out.push_back(v);
    return out;
  }
  for (const auto& part : split(s, ',')) {
    int v;
    if (!parse_number(part, v)) throw bad(key, s, "expected a comma-separated list of integers");
    out.push_back(v);
  }
  return out;
}

std::vector<double> Command::get_doubles(const std::string& key) const {
  const auto s = get(key);
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    double v;
    if (!parse_number(part, v)) throw bad(key, s, "expected a comma-separated list of numbers");
    out.push_back(v);
  }
  return out;
}

std::pair<double, double> Command::get_interval(const std::string& key) const {
  const auto s = get(key);
  auto p = split(s, ':');
  double a, b;
  if (p.size() != 2 || !parse_number(p[0], a) || !parse_number(p[1], b) || !(a < b))
    throw bad(key, s, "expected lo:hi with lo < hi");
  return {a, b};
}

std::pair<int, int> Command::get_grid(const std::string& key) const {
  const auto s = get(key);
  auto p = split(s, 'x');
  int a, b;
  if (p.size() != 2 || !parse_number(p[0], a) || !parse_number(p[1], b) || a < 2 || b < 2)
    throw bad(key, s, "expected AxB with A, B >= 2");
  return {a, b};
}

void Run::write(const std::string& name, const io::Csv& csv) {
  csv.write(out_ / name);
  outputs_.push_back(name);
}

void Run::write(const std::string& name, const nlohmann::json& j) {
  io::write_json(out_ / name, j);
  outputs_.push_back(name);
}

void Run::write(const std::string& name, const CorrelationMatrix& C) {
  io::write_ppcm(out_ / name, C);
  outputs_.push_back(name);
}

int execute(Command& c, const std::vector<std::string>& argv) {
  const auto start = std::chrono::steady_clock::now();
  try {
    c.merge_config();
    if (c.get("precision").empty()) c.params_["precision"].value = std::to_string(default_precision_digits());
    const int digits = c.get_int("precision");
    if (digits < 8 || digits > 2000) throw bad("precision", c.get("precision"), "expected 8..2000");
    c.get_seed();
  } catch (const Error& e) {
    std::cerr << c.name() << ": " << e.what() << '\n';
    return config_error;
  }

  const std::filesystem::path out = c.get("out");
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) {
    std::cerr << c.name() << ": cannot create " << out << ": " << ec.message() << '\n';
    return config_error;
  }

  Run run(c, out);
  std::string error;
  int code = ok;
  try {
    const int jobs = c.get_int("jobs");
    if (jobs < 0) throw bad("jobs", c.get("jobs"), "expected >= 0");
    if (jobs > 0) omp_set_num_threads(jobs);
    c.body(run);
    code = run.exit_code;
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    error = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    code = validation_failure;
    error = e.what();
  }
  if (!error.empty()) std::cerr << c.name() << ": " << error << '\n';

  try {
    run.summary["exit_code"] = code;
    if (!error.empty()) run.summary["error"] = error;
    run.write("summary.json", run.summary);

    auto outputs = run.outputs();
    std::sort(outputs.begin(), outputs.end());
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::json m;
    m["command"] = c.name();
    m["code_version"] = io::code_version();
    m["config"] = c.effective();
    m["config_file"] = c.config_file_.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.config_file_);
    m["argv"] = argv;
    m["outputs"] = outputs;
    m["exit_code"] = code;
    m["wall_time_s"] = wall;
    io::write_json(out / "manifest.json", m);
  } catch (const std::exception& e) {
    std::cerr << c.name() << ": writing outputs failed: " << e.what() << '\n';
    return validation_failure;
  }
  if (code == ok) std::cout << c.name() << ": wrote " << out.string() << '\n';
  return code;
}

}  // namespace ppsim::cli
