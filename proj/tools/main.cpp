#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv)
{
    return janus::cli::run(argc, argv, std::cout, std::cerr);
}
