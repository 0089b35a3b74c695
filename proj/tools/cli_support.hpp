#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppsim/core.hpp"
#include "ppsim/gaussian.hpp"
#include "ppsim/io.hpp"

namespace ppsim::cli {

enum ExitCode { ok = 0, config_error = 2, detection_failure = 3, validation_failure = 4 };
int exit_code_for(ErrorKind k);

class Run;

// A subcommand whose parameters are all kept as strings, so the effective
// configuration echoes and re-parses exactly.
class Command {
 public:
  Command(CLI::App& root, std::string name, std::string description);
  Command& param(const std::string& key, std::string default_value, const std::string& help);

  // Applies config-file values to parameters not given as flags.
  void merge_config();
  nlohmann::json effective() const;

  std::string get(const std::string& key) const;
  int get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::uint64_t get_seed() const;
  std::vector<int> get_ints(const std::string& key) const;       // "10,30" or "12:60:4"
  std::vector<double> get_doubles(const std::string& key) const;  // "8,12,16"
  std::pair<double, double> get_interval(const std::string& key) const;  // "0.5:0.8"
  std::pair<int, int> get_grid(const std::string& key) const;            // "61x61"

  const std::string& name() const { return name_; }
  CLI::App* app() const { return app_; }
  std::function<void(Run&)> body;

 private:
  struct Param {
    std::string value;
    CLI::Option* opt = nullptr;
  };
  std::string name_;
  CLI::App* app_;
  std::map<std::string, Param> params_;
  std::vector<std::string> order_;
  std::string config_file_;
  friend class Run;
  friend int execute(Command& c, const std::vector<std::string>& argv);
};

// Output directory plus the files a run has written.
class Run {
 public:
  Run(const Command& c, std::filesystem::path out) : cmd(c), out_(std::move(out)) {}
  const Command& cmd;
  nlohmann::json summary = nlohmann::json::object();
  int exit_code = ok;

  void write(const std::string& name, const io::Csv& csv);
  void write(const std::string& name, const nlohmann::json& j);
  void write(const std::string& name, const CorrelationMatrix& C);  // .ppcm
  const std::vector<std::string>& outputs() const { return outputs_; }
  const std::filesystem::path& out() const { return out_; }

 private:
  std::filesystem::path out_;
  std::vector<std::string> outputs_;
};

// Runs the command body and writes summary.json and manifest.json.
int execute(Command& c, const std::vector<std::string>& argv);

}  // namespace ppsim::cli
