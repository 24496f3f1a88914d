#include <iostream>

#include "adtpf_cli/cli.hpp"

int main(int argc, char** argv) {
  return adtpf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
