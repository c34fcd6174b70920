#include <iostream>
#include <string>
#include <vector>

#include "etp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto result = etp::cli::run(etp::default_families(), args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return etp::cli::kExitUsage;
  }
}
