#include <iostream>
#include <string>
#include <vector>

#include "nicx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nicx::run_cli(args, std::cout, std::cerr);
}
