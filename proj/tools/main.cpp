#include <string>
#include <vector>

#include "begraph/scenario.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(std::size_t(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return begraph::run_cli(args);
}
