#include <iostream>

#include "qseries/cli.hpp"

int main(int argc, char** argv)
{
    return qseries::cli::run(argc, argv, std::cout, std::cerr);
}
