#include <iostream>
#include <string>

#include "zkosc/cli.hpp"
#include "zkosc/error.hpp"

int main(int argc, char** argv) {
  using namespace zkosc::cli;
  std::optional<RunConfig> config;
  std::string help;
  try {
    config = parse_args(argc, argv, &help);
  } catch (const zkosc::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
  if (!config) {
    std::cout << help;
    return kExitPass;
  }
  const RunResult result = run(*config);
  (result.exit_code == kExitInputError ? std::cerr : std::cout) << result.document;
  return result.exit_code;
}
