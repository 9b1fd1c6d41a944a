#include "forkfree/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return forkfree::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
