#include "svmaj/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return svmaj::run_cli(argc, argv, std::cout, std::cerr); }
