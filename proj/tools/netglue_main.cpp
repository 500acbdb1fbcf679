#include <iostream>
#include <vector>

#include "netglue/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return netglue::run_cli(args, std::cout, std::cerr);
}
