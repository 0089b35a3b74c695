#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Purification-preparation simulator"};
  app.require_subcommand(1);
  auto commands = ppsim::cli::make_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ppsim::cli::config_error;
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  for (auto& c : commands)
    if (c->app()->parsed()) return ppsim::cli::execute(*c, args);
  return ppsim::cli::config_error;
}
