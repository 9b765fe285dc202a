#include <iostream>

#include "congrep/cli.hpp"

int main(int argc, char** argv) { return congrep::cli::run(argc, argv, std::cout, std::cerr); }
