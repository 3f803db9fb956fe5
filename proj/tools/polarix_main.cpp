#include <iostream>
#include <string>
#include <vector>

#include "polarix/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return polarix::cli::run(args, std::cout, std::cerr);
}
