#include <iostream>
#include <sstream>

#include "cli.hpp"

int main(int argc, char** argv) {
  // Buffer the report so output is emitted in one piece.
  std::ostringstream out;
  const int code = semideriv::cli::run(argc, argv, out, std::cerr);
  std::cout << out.str();
  return code;
}
