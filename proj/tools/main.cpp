#include <iostream>
#include <string>
#include <vector>

#include "rbdq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rbdq::run_cli(args, std::cout, std::cerr);
}
