#include <iostream>

#include "cli/commands.hpp"
#include "cli/config.hpp"

int main(int argc, char** argv) {
  using namespace mellin::cli;
  try {
    const ParseResult parsed = parse_command_line(argc, argv);
    if (parsed.help_requested) {
      std::cout << parsed.help_text;
      return 0;
    }
    return run(parsed.config, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "mellin: " << e.what() << '\n';
    return 1;
  }
}
