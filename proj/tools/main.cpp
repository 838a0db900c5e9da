#include "allz/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    allz::cli::Options options;
    options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return allz::cli::run(args, std::cout, std::cerr, options);
}
