#include <iostream>
#include <string>
#include <vector>

#include "ellpic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ellpic::cli_main(args, std::cout, std::cerr);
}
