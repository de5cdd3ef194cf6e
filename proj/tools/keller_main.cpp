#include "keller/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return keller::cli_main(std::move(args), std::cout, std::cerr);
}
