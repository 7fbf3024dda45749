#include <cstdio>
#include <string>
#include <vector>

#include "stvb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const stvb::cli::RunResult res = stvb::cli::run(std::move(args));
  std::fputs(res.out.c_str(), stdout);
  return res.code;
}
