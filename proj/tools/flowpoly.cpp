#include "flowpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return flowpoly::run(argc, argv, std::cout, std::cerr);
}
