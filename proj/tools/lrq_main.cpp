#include <iostream>
#include <string>
#include <vector>

#include "lrq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lrq::cli::run(args, std::cout, std::cerr);
}
