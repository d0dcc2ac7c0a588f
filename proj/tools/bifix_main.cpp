#include <fstream>
#include <iostream>
#include <vector>

#include "bifix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bifix::cli::RunResult result = bifix::cli::run(args);
  std::cout << result.output;
  if (result.exit_code == 0 && result.json && !result.json_path.empty()) {
    std::ofstream out(result.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << result.json_path << "\n";
      return 2;
    }
    out << result.json->dump(2) << "\n";
  }
  return result.exit_code;
}
