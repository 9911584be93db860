#include <iostream>
#include <string>
#include <vector>

#include "gpar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return gpar::cli::run(args, std::cout, std::cerr);
}
