#include <string>
#include <vector>

#include "lctr/cli.hpp"

int main(int argc, char** argv) {
  return lctr::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
