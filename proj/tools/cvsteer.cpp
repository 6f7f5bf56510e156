// cvsteer.cpp: command-line driver

#include "cvsteer/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cvsteer::cli::run(args, std::cout, std::cerr);
}
