#include <iostream>
#include <vector>

#include "schurcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schurcalc::run_cli(std::move(args), std::cout, std::cerr);
}
