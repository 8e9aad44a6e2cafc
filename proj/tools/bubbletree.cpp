#include <iostream>
#include <string>
#include <vector>

#include "bubble/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  auto parsed = bubble::cli::parse_command_line(args);
  const bubble::cli::RunResult result =
      std::holds_alternative<bubble::cli::RunResult>(parsed)
          ? std::get<bubble::cli::RunResult>(parsed)
          : bubble::cli::run(std::get<bubble::cli::JobSpec>(parsed));
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
