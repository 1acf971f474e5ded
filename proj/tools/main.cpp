#include <iostream>
#include <string>
#include <vector>

#include "ctw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ctw::run_cli(args, std::cout, std::cerr);
}
