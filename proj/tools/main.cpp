#include "tropigeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropigeo::run_cli(args);
}
