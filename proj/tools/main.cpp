#include <iostream>

#include "bggl/cli.hpp"

int main(int argc, char** argv) { return bggl::cli::run(argc, argv, std::cout, std::cerr); }
