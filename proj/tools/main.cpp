#include <iostream>

#include "tunnelsplit/cli.hpp"

int main(int argc, char** argv) { return tunnelsplit::run_cli(argc, argv, std::cout, std::cerr); }
