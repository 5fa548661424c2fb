#include <iostream>
#include <vector>

#include "quadnorm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quadnorm::run_subcommand(args, std::cout, std::cerr);
}
