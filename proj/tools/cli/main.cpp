#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  postage::cli::Terminal terminal;
  terminal.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
  terminal.color = terminal.stdout_is_tty && std::getenv("NO_COLOR") == nullptr;
  return postage::cli::run(args, std::cout, std::cerr, terminal);
}
