#include <iostream>
#include <string>
#include <vector>

#include "qhex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhex::run_cli(args, std::cout, std::cerr);
}
