#include <iostream>
#include <string>
#include <vector>

#include "ajulia/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return ajulia::cli::run(args, std::cout, std::cerr);
}
