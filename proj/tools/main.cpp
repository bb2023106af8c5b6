#include <unistd.h>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return locmat::cli::run(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
