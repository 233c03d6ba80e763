#include <vector>

#include "mcgcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcgcert::run_cli(args);
}
